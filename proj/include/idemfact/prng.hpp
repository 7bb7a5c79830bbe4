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

#ifndef IDEMFACT_PRNG_HPP
#define IDEMFACT_PRNG_HPP

#include <cstdint>
#include <vector>

#include "idemfact/curve.hpp"
#include "idemfact/intz.hpp"
#include "idemfact/numeric.hpp"

namespace idemfact {

/// splitmix64. Self-contained so that seeded outputs are identical across
/// platforms and standard libraries (std distributions are not portable).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish in [0, n); deterministic, bias negligible for small n.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    /// Uniform-ish integer in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(unsigned percent) { return below(100) < percent; }

private:
    std::uint64_t state_;
};

inline Int random_int(SplitMix64& rng, long bound) { return Int(rng.range(-bound, bound)); }

inline IntZPoly random_intz(SplitMix64& rng, long max_deg, long coeff_bound) {
    long d = rng.range(0, max_deg);
    std::vector<Int> coords;
    for (long k = 0; k <= d; ++k) coords.push_back(random_int(rng, coeff_bound));
    return IntZPoly(std::move(coords));
}

inline QPoly random_qpoly(SplitMix64& rng, long max_deg, long coeff_bound) {
    long d = rng.range(0, max_deg);
    std::vector<Rat> coeffs;
    for (long k = 0; k <= d; ++k) {
        Int num = random_int(rng, coeff_bound);
        Int den(rng.range(1, 3));
        coeffs.push_back(make_rat(num, den));
    }
    return QPoly(std::move(coeffs));
}

inline CurveElem random_curve_elem(const CurvePtr& curve, SplitMix64& rng, long max_total_deg,
                                   long coeff_bound) {
    std::vector<QPoly> ycoeffs;
    long max_y = std::min<long>(max_total_deg, curve->n() - 1);
    for (long j = 0; j <= max_y; ++j) {
        std::vector<Rat> xs;
        for (long i = 0; i + j <= max_total_deg; ++i) {
            Int num = random_int(rng, coeff_bound);
            Int den(rng.range(1, 2));
            xs.push_back(make_rat(num, den));
        }
        ycoeffs.emplace_back(std::move(xs));
    }
    return CurveElem(curve, QPoly2(std::move(ycoeffs)));
}

}  // namespace idemfact

#endif
