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

#ifndef IDEMFACT_ELEMFACT_HPP
#define IDEMFACT_ELEMFACT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idemfact/mat2.hpp"
#include "idemfact/ring.hpp"

namespace idemfact {

// ---------------------------------------------------------------------------
// Elementary factor words
// ---------------------------------------------------------------------------

enum class ElemKind { transvection, diag_units };

template <ring_type R>
struct ElemFactor {
    ElemKind kind;
    int i = 0, j = 0;  // transvection indices
    R r;               // transvection parameter
    R u, v;            // diagonal units

    static ElemFactor transvection(int i, int j, R rr) {
        return ElemFactor{ElemKind::transvection, i, j, std::move(rr), rr_zero(), rr_zero()};
    }
    static ElemFactor diag_units(R uu, R vv) {
        ElemFactor f{ElemKind::diag_units, 0, 0, rr_zero(), std::move(uu), std::move(vv)};
        return f;
    }

    Mat2<R> matrix() const {
        if (kind == ElemKind::transvection) return elem_add<R>(i, j, r);
        return diag<R>(u, v);
    }

private:
    static R rr_zero() { return R{}; }
};

template <ring_type R>
struct ElemCert {
    Mat2<R> input;
    std::vector<ElemFactor<R>> factors;
};

template <ring_type R>
Mat2<R> product_of(const std::vector<ElemFactor<R>>& fs, const R& witness) {
    Mat2<R> acc = Mat2<R>::identity(witness);
    for (const auto& f : fs) acc = acc * f.matrix();
    return acc;
}

template <ring_type R>
std::pair<bool, std::vector<std::string>> verify_elem_cert(const ElemCert<R>& cert) {
    std::vector<std::string> reasons;
    using T = ring_traits<R>;
    for (std::size_t k = 0; k < cert.factors.size(); ++k) {
        const auto& f = cert.factors[k];
        if (f.kind == ElemKind::diag_units && !(T::is_unit(f.u) && T::is_unit(f.v)))
            reasons.push_back("factor " + std::to_string(k + 1) + " diagonal entries not units");
        if (f.kind == ElemKind::transvection &&
            !((f.i == 1 && f.j == 2) || (f.i == 2 && f.j == 1)))
            reasons.push_back("factor " + std::to_string(k + 1) + " bad transvection indices");
    }
    if (product_of(cert.factors, cert.input.a) != cert.input)
        reasons.push_back("product mismatch");
    return {reasons.empty(), reasons};
}

/// 2x2 inverse of an invertible matrix: det is a unit, so the adjugate
/// scaled by the det inverse is exact.
template <ring_type R>
Mat2<R> inverse(const Mat2<R>& m) {
    using T = ring_traits<R>;
    R dt = det(m);
    check(T::is_unit(dt), errc::not_invertible, "matrix is not invertible");
    R di = T::unit_inverse(dt);
    return {di * m.d, -(di * m.b), -(di * m.c), di * m.a};
}

// ---------------------------------------------------------------------------
// Gauss-Euclid elementary factorization over Euclidean rings
// ---------------------------------------------------------------------------

/// Row-reduce with transvections until lower-left is zero, clear the upper
/// right, and read off the diagonal: M = (inverse row ops) * diag(units).
template <euclidean_ring R>
ElemCert<R> factor_ge2_euclid(const Mat2<R>& m) {
    using T = ring_traits<R>;
    check(is_invertible(m), errc::not_invertible, "factor_ge2_euclid needs det a unit");
    Mat2<R> w = m;
    std::vector<ElemFactor<R>> inv_ops;  // inverses of the applied ops, in order

    auto apply_row = [&](int i, int j, const R& r) {
        // left-multiply by elem_add(i, j, r); record the inverse factor
        w = elem_add<R>(i, j, r) * w;
        inv_ops.push_back(ElemFactor<R>::transvection(i, j, -r));
    };

    int guard = 0;
    while (!T::is_zero(w.c)) {
        internal_check(++guard < 4096, "row reduction failed to terminate");
        if (T::is_zero(w.a)) {
            apply_row(1, 2, T::one_like(w.a));  // row1 += row2, making a = c
            continue;
        }
        auto [q, r] = T::divmod(w.c, w.a);
        if (T::is_zero(q) && !T::is_zero(r)) {
            // |c| < |a|: shrink a by c instead
            auto [q2, r2] = T::divmod(w.a, w.c);
            apply_row(1, 2, -q2);
        } else {
            apply_row(2, 1, -q);
        }
    }
    if (!T::is_zero(w.b)) {
        // b -= (b / d) * d; d is a unit here since det = a*d is a unit
        R di = T::unit_inverse(w.d);
        apply_row(1, 2, -(w.b * di));
    }
    internal_check(T::is_unit(w.a) && T::is_unit(w.d), "diagonal not units after reduction");

    std::vector<ElemFactor<R>> factors = std::move(inv_ops);
    bool diag_is_identity = w.a == T::one_like(w.a) && w.d == T::one_like(w.a);
    if (!diag_is_identity || factors.empty())
        factors.push_back(ElemFactor<R>::diag_units(w.a, w.d));
    ElemCert<R> cert{m, std::move(factors)};
    internal_check(product_of(cert.factors, m.a) == m, "elementary product mismatch");
    return cert;
}

// ---------------------------------------------------------------------------
// T-forms over discretely ordered rings
// ---------------------------------------------------------------------------

/// Standard form diag(alpha, beta) * T(r_1) ... T(r_k) with alpha, beta
/// units, r_1 >= 0 (when k >= 2), interior r_i > 0, and for k = 2 the pair
/// (r_1, r_2) not both zero. The final r_k is unconstrained; for k = 1 the
/// single argument is likewise unconstrained (a one-factor word has no other
/// representation, whatever its sign).
template <ring_type R>
struct TForm {
    R alpha, beta;
    std::vector<R> rs;
};

template <ordered_ring R>
bool tform_valid(const TForm<R>& tf, std::string* why = nullptr) {
    using T = ring_traits<R>;
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!T::is_unit(tf.alpha) || !T::is_unit(tf.beta)) return fail("alpha/beta not units");
    const auto& rs = tf.rs;
    std::size_t k = rs.size();
    R zero = T::zero_like(tf.alpha);
    if (k >= 2) {
        if (T::cmp(rs[0], zero) < 0) return fail("r_1 < 0");
        for (std::size_t i = 1; i + 1 < k; ++i)
            if (T::cmp(rs[i], zero) <= 0) return fail("interior r_i <= 0");
        if (k == 2 && T::is_zero(rs[0]) && T::is_zero(rs[1]))
            return fail("k = 2 with both arguments zero");
    }
    return true;
}

template <ring_type R>
Mat2<R> tform_matrix(const TForm<R>& tf) {
    Mat2<R> m = diag(tf.alpha, tf.beta);
    for (const R& r : tf.rs) m = m * t_mat(r);
    return m;
}

namespace detail {

/// Incremental normalizer: maintains lead diag (u, v), a word that already
/// satisfies the standard-form constraints, and a pending diagonal (p, q)
/// sitting between the word and the unread input. Rewriting identities used
/// (all exact):
///   E12(r) = T(r) T(0)                E21(r) = T(0) T(r)
///   T(a) T(0) T(b) = T(a+b)           T(0) T(0) = I
///   D(u,v) T(s) = T(s u v) D(v,u)
///   T(-b) T(c) = D(-1,1) T(b-1) T(1) T(c-1)
///   T(a) T(-b) T(c) = T(a-1) T(1) T(b-1) T(-c) D(1,-1)
///   T(0) T(-b) T(c) = D(1,-1) T(0) T(b-1) T(1) T(c-1)
/// and, for absorbing a trailing sign diagonal at the end of the input,
///   [..., z, x] D(1,-1) = -I [..., z-1, 1, -x-1]
///   [..., z, x] D(-1,1) =    [..., z-1, 1, -x-1]
///   [0, x] D(p,q) = D(p,q) [0, -x]        T(x) D(p,q) = D(q,p) T(-x)
template <ordered_ring R>
class TFold {
public:
    explicit TFold(const R& witness)
        : zero_(ring_traits<R>::zero_like(witness)),
          one_(ring_traits<R>::one_like(witness)),
          u_(one_),
          v_(one_),
          p_(one_),
          q_(one_) {}

    void push_transvection(int i, const R& r) {
        if (ring_traits<R>::is_zero(r)) return;  // identity factor, dropped
        if (i == 1) {  // E12(r) = T(r) T(0)
            push_t(r);
            push_t(zero_);
        } else {  // E21(r) = T(0) T(r)
            push_t(zero_);
            push_t(r);
        }
    }

    void push_diag(const R& du, const R& dv) {
        p_ = p_ * du;
        q_ = q_ * dv;
    }

    TForm<R> finish() {
        absorb_pending();
        cleanup();
        TForm<R> tf{u_, v_, w_};
        std::string why;
        internal_check(tform_valid(tf, &why), "normalizer produced invalid form: " + why);
        return tf;
    }

private:
    using T = ring_traits<R>;

    bool lt(const R& a, const R& b) const { return T::cmp(a, b) < 0; }
    bool gt(const R& a, const R& b) const { return T::cmp(a, b) > 0; }

    void push_t(const R& g) {
        // D(p,q) T(g) = T(g p q^{-1}) D(q,p); units here are self-inverse up
        // to the same formula, so use g * p * q^{-1}.
        R c = g * p_ * T::unit_inverse(q_);
        std::swap(p_, q_);
        append(c);
    }

    void append(const R& c) {
        if (w_.empty()) {
            w_.push_back(c);
            return;
        }
        R L = w_.back();
        if (gt(L, zero_)) {
            w_.push_back(c);
            return;
        }
        if (T::is_zero(L)) {
            if (w_.size() == 1) {
                if (T::is_zero(c))
                    w_.clear();  // T(0) T(0) = I
                else
                    w_.push_back(c);
                return;
            }
            // [..., x, 0] + c -> [..., x + c]
            w_.pop_back();
            R x = w_.back();
            w_.pop_back();
            w_.push_back(x + c);
            return;
        }
        // L < 0
        R b = -L;
        if (w_.size() == 1) {
            // T(-b) T(c) = D(-1,1) T(b-1) T(1) T(c-1)
            u_ = -u_;
            w_.clear();
            w_.push_back(b - one_);
            w_.push_back(one_);
            w_.push_back(c - one_);
            fix_zeros();
            return;
        }
        R a = w_[w_.size() - 2];
        if (T::is_zero(a)) {
            // w = [0, -b]: T(0) T(-b) T(c) = D(1,-1) T(0) T(b-1) T(1) T(c-1)
            v_ = -v_;
            w_.back() = b - one_;
            w_.push_back(one_);
            w_.push_back(c - one_);
            fix_zeros();
            return;
        }
        // T(a) T(-b) T(c) = T(a-1) T(1) T(b-1) T(-c) D(1,-1)
        w_.pop_back();
        w_.back() = a - one_;
        w_.push_back(one_);
        w_.push_back(b - one_);
        w_.push_back(-c);
        q_ = -q_;  // emitted D(1,-1) merges into the pending diagonal
        fix_zeros();
    }

    void absorb_pending() {
        if (p_ == q_) {
            // scalar p*I commutes
            u_ = u_ * p_;
            v_ = v_ * p_;
        } else if (w_.empty()) {
            u_ = u_ * p_;
            v_ = v_ * q_;
        } else if (w_.size() == 1) {
            // T(x) D(p,q) = D(q,p) T(-x)
            u_ = u_ * q_;
            v_ = v_ * p_;
            w_[0] = -w_[0];
        } else {
            R z = w_[w_.size() - 2];
            R x = w_.back();
            if (T::is_zero(z)) {
                // [0, x] D(p,q) = D(p,q) [0, -x]
                u_ = u_ * p_;
                v_ = v_ * q_;
                w_.back() = -x;
            } else {
                // [..., z, x] D(1,-1) = -I [..., z-1, 1, -x-1]
                // [..., z, x] D(-1,1) =    [..., z-1, 1, -x-1]
                if (p_ == one_) {
                    u_ = -u_;
                    v_ = -v_;
                }
                w_.pop_back();
                w_.back() = z - one_;
                w_.push_back(one_);
                w_.push_back(-x - one_);
                fix_zeros();
            }
        }
        p_ = one_;
        q_ = one_;
    }

    void fix_zeros() {
        bool changed = true;
        while (changed && w_.size() >= 2) {
            changed = false;
            for (std::size_t i = 0; i + 1 < w_.size(); ++i) {
                if (T::is_zero(w_[i]) && T::is_zero(w_[i + 1])) {
                    w_.erase(w_.begin() + static_cast<long>(i),
                             w_.begin() + static_cast<long>(i) + 2);
                    changed = true;
                    break;
                }
                if (i >= 1 && i + 1 < w_.size() && T::is_zero(w_[i])) {
                    // T(x) T(0) T(y) = T(x + y)
                    w_[i - 1] = w_[i - 1] + w_[i + 1];
                    w_.erase(w_.begin() + static_cast<long>(i),
                             w_.begin() + static_cast<long>(i) + 2);
                    changed = true;
                    break;
                }
            }
        }
    }

    void cleanup() {
        if (w_.size() == 2 && T::is_zero(w_[0]) && T::is_zero(w_[1])) w_.clear();
    }

    R zero_, one_;
    R u_, v_;          // leading diagonal
    std::vector<R> w_; // word
    R p_, q_;          // pending diagonal on the right
};

}  // namespace detail

/// Rewrites an elementary-factor word into the unique standard form. Over a
/// discretely ordered ring the form exists for every elementary product;
/// failure to reconstruct the input is an internal error.
template <ordered_ring R>
TForm<R> tform_of_elementary_product(const ElemCert<R>& cert) {
    detail::TFold<R> fold(cert.input.a);
    for (const auto& f : cert.factors) {
        if (f.kind == ElemKind::transvection)
            fold.push_transvection(f.i, f.r);
        else
            fold.push_diag(f.u, f.v);
    }
    TForm<R> tf = fold.finish();
    internal_check(tform_matrix(tf) == cert.input,
                   "normal form does not reconstruct the input");
    return tf;
}

// ---------------------------------------------------------------------------
// Integer recovery: standard form from the matrix alone
// ---------------------------------------------------------------------------

namespace detail {

struct RecoverOut {
    Int alpha, beta;
    std::vector<Int> rs;  // in word order r_1 .. r_j
};

/// Depth-first peeling M -> M T(r)^{-1} = (b, a - b r; d, c - d r). At most
/// two candidates per step (0 <= a - b r <= b after sign stripping); the
/// standard form is unique, so exactly one branch survives.
inline std::optional<RecoverOut> recover_int(const Mat2<Int>& m, bool interior, int depth) {
    if (depth <= 0) return std::nullopt;
    const Int &a = m.a, &b = m.b, &c = m.c, &d = m.d;
    auto unit = [](const Int& x) { return x == 1 || x == -1; };
    if (b == 0 && c == 0 && unit(a) && unit(d)) return RecoverOut{a, d, {}};
    if (d == 0 && unit(b) && unit(c)) {
        Int r1 = a * b;  // alpha = b, r_1 = alpha^{-1} a
        if (interior && r1 < 0) return std::nullopt;
        return RecoverOut{b, c, {r1}};
    }
    if (b == 0) {
        // (alpha, 0; beta r, beta): word [0, r]
        if (!(unit(a) && unit(d))) return std::nullopt;
        Int r = c * d;
        if (interior && r <= 0) return std::nullopt;
        if (r == 0) return std::nullopt;  // would be k = 0, caught above
        return RecoverOut{a, d, {Int(0), r}};
    }
    if (d == 0) return std::nullopt;  // d = 0 only happens for k <= 1

    Int sigma = b > 0 ? 1 : -1;
    Int A = sigma * a, B = sigma * b;
    Int q = floor_div(A, B);
    std::vector<Int> cands;
    if (B * q == A) cands.push_back(q - 1);  // boundary a - b r = b
    cands.push_back(q);
    for (const Int& r : cands) {
        if (interior && r <= 0) continue;
        Mat2<Int> child{b, a - b * r, d, c - d * r};
        auto sub = recover_int(child, true, depth - 1);
        if (sub) {
            sub->rs.push_back(r);
            return sub;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Unique standard form of an invertible integer matrix, recovered from the
/// matrix alone by right-division with remainder.
inline TForm<Int> tform_recover_int(const Mat2<Int>& m) {
    check(is_invertible(m), errc::not_invertible, "tform_recover_int needs det = +-1");
    int depth = 64;
    Int mx = std::max({abs(m.a), abs(m.b), abs(m.c), abs(m.d)});
    depth += 4 * static_cast<int>(mpz_sizeinbase(mx.get_mpz_t(), 2));
    auto out = detail::recover_int(m, false, depth);
    internal_check(out.has_value(), "no standard form found for an invertible integer matrix");
    TForm<Int> tf{out->alpha, out->beta, out->rs};
    internal_check(tform_valid(tf), "recovered form violates the invariants");
    internal_check(tform_matrix(tf) == m, "recovered form does not reconstruct the input");
    return tf;
}

}  // namespace idemfact

#endif
