/*
 * Copyright 2026 The idemfact Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef IDEMFACT_IDEMFACT_HPP
#define IDEMFACT_IDEMFACT_HPP

#include "idemfact/curve.hpp"
#include "idemfact/curve_report.hpp"
#include "idemfact/elemfact.hpp"
#include "idemfact/errors.hpp"
#include "idemfact/idfactor.hpp"
#include "idemfact/intz.hpp"
#include "idemfact/mat2.hpp"
#include "idemfact/numeric.hpp"
#include "idemfact/obstruct.hpp"
#include "idemfact/prng.hpp"
#include "idemfact/qpoly.hpp"
#include "idemfact/ring.hpp"
#include "idemfact/serialize.hpp"

#endif
