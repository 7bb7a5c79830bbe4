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

// Show that the standard witness matrix over Int(Z) has no factorization
// into elementary factors, and verify the refutation trace.

#include <iostream>

#include "idemfact/idemfact.hpp"

int main() {
    using namespace idemfact;
    Mat2<IntZPoly> w{
        IntZPoly({Int(1), Int(2)}), IntZPoly(Int(4)),
        IntZPoly({Int(1), Int(4), Int(2)}), IntZPoly({Int(5), Int(2)})};
    std::cout << "det = " << to_string(det(w)) << "\n";
    auto trace = decide_ge2_dor(w, 8);
    std::cout << "verdict: " << verdict_name(trace.verdict) << "\n";
    auto [ok, reasons] = check_obstruction(trace);
    std::cout << "trace verified: " << (ok ? "yes" : "no") << "\n";
    return (trace.verdict == ObsVerdict::not_factorable && ok) ? 0 : 1;
}
