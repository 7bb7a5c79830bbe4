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

#ifndef IDEMFACT_MAT2_HPP
#define IDEMFACT_MAT2_HPP

#include <span>
#include <vector>

#include "idemfact/errors.hpp"
#include "idemfact/ring_fwd.hpp"

namespace idemfact {

/// 2x2 matrix (a b; c d) over a ring element type R, row-major.
template <ring_type R>
struct Mat2 {
    R a, b, c, d;

    static Mat2 identity(const R& witness) {
        using T = ring_traits<R>;
        return {T::one_like(witness), T::zero_like(witness), T::zero_like(witness),
                T::one_like(witness)};
    }
    static Mat2 zero(const R& witness) {
        using T = ring_traits<R>;
        return {T::zero_like(witness), T::zero_like(witness), T::zero_like(witness),
                T::zero_like(witness)};
    }

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
                m.c * n.b + m.d * n.d};
    }
    friend Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }
    friend bool operator==(const Mat2& m, const Mat2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
    friend bool operator!=(const Mat2& m, const Mat2& n) { return !(m == n); }
};

template <ring_type R>
R det(const Mat2<R>& m) {
    return m.a * m.d - m.b * m.c;
}

template <ring_type R>
R trace(const Mat2<R>& m) {
    return m.a + m.d;
}

template <ring_type R>
bool is_zero_mat(const Mat2<R>& m) {
    using T = ring_traits<R>;
    return T::is_zero(m.a) && T::is_zero(m.b) && T::is_zero(m.c) && T::is_zero(m.d);
}

template <ring_type R>
bool is_identity(const Mat2<R>& m) {
    using T = ring_traits<R>;
    return m.a == T::one_like(m.a) && T::is_zero(m.b) && T::is_zero(m.c) &&
           m.d == T::one_like(m.a);
}

template <ring_type R>
bool is_singular(const Mat2<R>& m) {
    return ring_traits<R>::is_zero(det(m));
}

template <ring_type R>
bool is_invertible(const Mat2<R>& m) {
    return ring_traits<R>::is_unit(det(m));
}

/// Idempotency, computed by two independent routes: the definition M*M == M,
/// and the 2x2 characterization M in {0, I} or (trace = 1 and det = 0). The
/// routes agree over any integral domain; a mismatch signals a bug.
template <ring_type R>
bool is_idempotent(const Mat2<R>& m) {
    using T = ring_traits<R>;
    bool by_square = (m * m) == m;
    bool by_shape = is_zero_mat(m) || is_identity(m) ||
                    (trace(m) == T::one_like(m.a) && T::is_zero(det(m)));
    internal_check(by_square == by_shape, "idempotency routes disagree");
    return by_square;
}

/// Transvection I + r*E_ij for (i,j) in {(1,2), (2,1)}.
template <ring_type R>
Mat2<R> elem_add(int i, int j, const R& r) {
    check((i == 1 && j == 2) || (i == 2 && j == 1), errc::precondition_violated,
          "transvection index must be (1,2) or (2,1)");
    Mat2<R> m = Mat2<R>::identity(r);
    if (i == 1)
        m.b = r;
    else
        m.c = r;
    return m;
}

template <ring_type R>
Mat2<R> diag(const R& u, const R& v) {
    using T = ring_traits<R>;
    check(T::is_unit(u) && T::is_unit(v), errc::not_a_unit, "diagonal entries must be units");
    return {u, T::zero_like(u), T::zero_like(u), v};
}

/// T(r) = (r 1; 1 0).
template <ring_type R>
Mat2<R> t_mat(const R& r) {
    using T = ring_traits<R>;
    return {r, T::one_like(r), T::one_like(r), T::zero_like(r)};
}

/// Continuant polynomials: p_{-1} = 0, p_0 = 1,
/// p_k(t_1..t_k) = p_{k-1}(t_1..t_{k-1}) * t_k + p_{k-2}(t_1..t_{k-2}).
enum class ContinuantSeed { p0, p_minus_1 };

template <ring_type R>
R continuant(std::span<const R> rs, const R& witness,
             ContinuantSeed seed = ContinuantSeed::p0) {
    using T = ring_traits<R>;
    R prev = T::zero_like(witness);  // p_{-1}
    R cur = T::one_like(witness);    // p_0
    if (seed == ContinuantSeed::p_minus_1) {
        // shift: start the recursion one step earlier
        prev = T::one_like(witness);
        cur = T::zero_like(witness);
    }
    for (const R& t : rs) {
        R next = cur * t + prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

template <ring_type R>
R continuant(const std::vector<R>& rs, const R& witness,
             ContinuantSeed seed = ContinuantSeed::p0) {
    return continuant(std::span<const R>(rs.data(), rs.size()), witness, seed);
}

/// The continuant form of T(r_1)...T(r_k):
///   ( p_k(r_1..r_k)    p_{k-1}(r_1..r_{k-1}) )
///   ( p_{k-1}(r_2..r_k) p_{k-2}(r_2..r_{k-1}) )
/// For k = 1 the bottom-right entry is p_{-1} = 0, and the empty product is
/// the identity; the subword spans cannot express those seeds, so the small
/// cases are written out.
template <ring_type R>
Mat2<R> continuant_matrix(std::span<const R> rs, const R& witness) {
    std::size_t k = rs.size();
    if (k == 0) return Mat2<R>::identity(witness);
    if (k == 1) return t_mat(rs[0]);
    auto sub = [&](std::size_t lo, std::size_t hi) {
        return std::span<const R>(rs.data() + lo, hi > lo ? hi - lo : 0);
    };
    return {continuant(sub(0, k), witness), continuant(sub(0, k - 1), witness),
            continuant(sub(1, k), witness), continuant(sub(1, k - 1), witness)};
}

/// Literal product of T factors, cross-checked against the continuant form.
template <ring_type R>
Mat2<R> t_product(std::span<const R> rs, const R& witness) {
    check(!rs.empty(), errc::precondition_violated, "t_product needs a nonempty list");
    Mat2<R> lit = Mat2<R>::identity(witness);
    for (const R& r : rs) lit = lit * t_mat(r);
    Mat2<R> cont = continuant_matrix(rs, witness);
    internal_check(lit == cont, "T-product disagrees with continuant matrix");
    return lit;
}

template <ring_type R>
Mat2<R> t_product(const std::vector<R>& rs, const R& witness) {
    return t_product(std::span<const R>(rs.data(), rs.size()), witness);
}

/// Idempotent parameters (x, y, z) with x(1-x) = yz, the first row (x, y)
/// being an idempotent pair.
template <ring_type R>
struct IdemParams {
    R x, y, z;

    IdemParams(R xx, R yy, R zz) : x(std::move(xx)), y(std::move(yy)), z(std::move(zz)) {
        using T = ring_traits<R>;
        check(x * (T::one_like(x) - x) == y * z, errc::not_idempotent_pair,
              "x(1-x) != yz");
    }

    Mat2<R> matrix() const {
        using T = ring_traits<R>;
        return {x, y, z, T::one_like(x) - x};
    }
};

/// The idempotent E = (a'm, b'm; a'n, b'n) whose rows are multiples of the
/// direction (a', b'); requires the Bezout relation a'm + b'n = 1.
template <ring_type R>
Mat2<R> slope_idempotent(const R& ap, const R& bp, const R& m, const R& n) {
    using T = ring_traits<R>;
    check(ap * m + bp * n == T::one_like(ap), errc::bad_bezout_pair,
          "a'm + b'n != 1");
    Mat2<R> e{ap * m, bp * m, ap * n, bp * n};
    internal_check(is_idempotent(e), "slope idempotent is not idempotent");
    return e;
}

}  // namespace idemfact

#endif
