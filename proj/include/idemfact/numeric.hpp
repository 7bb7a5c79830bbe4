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

#ifndef IDEMFACT_NUMERIC_HPP
#define IDEMFACT_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "idemfact/errors.hpp"

namespace idemfact {

// Arbitrary-precision integers and rationals. GMP supplies the arithmetic;
// everything built on top stays exact.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_from_string(const std::string& s) {
    try {
        if (s.empty()) raise(errc::parse_error, "empty integer literal");
        return Int(s);
    } catch (const std::invalid_argument&) {
        raise(errc::parse_error, "bad integer literal '" + s + "'");
    }
}

/// Canonical rational: reduced, positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
    check(den != 0, errc::parse_error, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num) { return Rat(num); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rat& x) { return sgn(x); }

/// Floor division (round toward -infinity).
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Mathematical mod: result in [0, |b|).
inline Int floor_mod(const Int& a, const Int& b) {
    Int r, ab(abs(b));
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), ab.get_mpz_t());
    return r;
}

/// Exact division; raises internally if the division is not exact.
inline Int exact_div(const Int& a, const Int& b) {
    internal_check(b != 0 && a % b == 0, "non-exact integer division");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(const Int& d, const Int& a) { return d != 0 && a % d == 0; }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int m;
    mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return m;
}

/// Binomial coefficient C(n, k) for n, k >= 0.
inline Int binomial(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

/// All divisors of |n| with both signs, n != 0. Desk-scale helper for the
/// Kronecker factor search.
inline std::vector<Int> signed_divisors(const Int& n) {
    internal_check(n != 0, "divisors of zero requested");
    Int a = abs(n);
    std::vector<Int> out;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            Int e = a / d;
            if (e != d) out.push_back(e);
        }
    }
    const std::size_t m = out.size();
    for (std::size_t i = 0; i < m; ++i) out.push_back(-out[i]);
    return out;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace idemfact

#endif
