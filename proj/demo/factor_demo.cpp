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

// Factor a singular integer matrix into idempotents and print the
// certificate.

#include <iostream>

#include "idemfact/idemfact.hpp"

int main() {
    using namespace idemfact;
    Mat2<Int> m{Int(2), Int(2), Int(3), Int(3)};
    auto cert = factor_id2(m);
    auto [ok, reasons] = verify_cert(cert);
    std::cout << idem_cert_to_json(cert).dump(2) << "\n";
    std::cout << "verified: " << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : 1;
}
