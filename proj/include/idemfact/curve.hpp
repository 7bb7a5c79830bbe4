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

#ifndef IDEMFACT_CURVE_HPP
#define IDEMFACT_CURVE_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idemfact/mat2.hpp"
#include "idemfact/qpoly.hpp"

namespace idemfact {

/// Bivariate polynomial over Q, stored dense by Y-power: y_[j] is the
/// coefficient of Y^j, a polynomial in X. Invariant: top Y-coefficient
/// nonzero; zero is the empty list.
class QPoly2 {
public:
    QPoly2() = default;
    explicit QPoly2(std::vector<QPoly> ycoeffs) : y_(std::move(ycoeffs)) { trim(); }
    explicit QPoly2(const QPoly& xpoly) {
        if (!xpoly.is_zero()) y_.push_back(xpoly);
    }
    explicit QPoly2(const Rat& c) : QPoly2(QPoly(c)) {}

    static QPoly2 x() { return QPoly2(QPoly::x()); }
    static QPoly2 y() { return QPoly2(std::vector<QPoly>{QPoly(), QPoly::one()}); }

    bool is_zero() const { return y_.empty(); }
    bool is_constant() const {
        return y_.empty() || (y_.size() == 1 && y_[0].is_constant());
    }
    long deg_y(long zero_value = -1) const {
        return y_.empty() ? zero_value : static_cast<long>(y_.size()) - 1;
    }
    long total_deg(long zero_value = -1) const {
        long d = zero_value;
        for (std::size_t j = 0; j < y_.size(); ++j)
            if (!y_[j].is_zero()) d = std::max(d, y_[j].deg_or(0) + static_cast<long>(j));
        return d;
    }
    const QPoly& ycoeff_ref(std::size_t j) const {
        static const QPoly kZero;
        return j < y_.size() ? y_[j] : kZero;
    }
    QPoly ycoeff(std::size_t j) const { return j < y_.size() ? y_[j] : QPoly(); }
    const std::vector<QPoly>& ycoeffs() const { return y_; }

    Rat coeff(long i, long j) const {
        if (j < 0 || j > deg_y(-1)) return Rat(0);
        return y_[static_cast<std::size_t>(j)].coeff(static_cast<std::size_t>(i));
    }

    friend QPoly2 operator+(const QPoly2& a, const QPoly2& b) {
        std::vector<QPoly> v(std::max(a.y_.size(), b.y_.size()));
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = a.ycoeff(j) + b.ycoeff(j);
        return QPoly2(std::move(v));
    }
    QPoly2 operator-() const {
        std::vector<QPoly> v(y_);
        for (auto& p : v) p = -p;
        return QPoly2(std::move(v));
    }
    friend QPoly2 operator-(const QPoly2& a, const QPoly2& b) { return a + (-b); }
    friend QPoly2 operator*(const QPoly2& a, const QPoly2& b) {
        if (a.is_zero() || b.is_zero()) return QPoly2();
        std::vector<QPoly> v(a.y_.size() + b.y_.size() - 1);
        for (std::size_t i = 0; i < a.y_.size(); ++i)
            for (std::size_t j = 0; j < b.y_.size(); ++j) v[i + j] = v[i + j] + a.y_[i] * b.y_[j];
        return QPoly2(std::move(v));
    }
    friend QPoly2 operator*(const Rat& s, const QPoly2& a) {
        std::vector<QPoly> v(a.y_);
        for (auto& p : v) p = s * p;
        return QPoly2(std::move(v));
    }
    friend bool operator==(const QPoly2& a, const QPoly2& b) { return a.y_ == b.y_; }
    friend bool operator!=(const QPoly2& a, const QPoly2& b) { return !(a == b); }

    Rat eval(const Rat& xv, const Rat& yv) const {
        Rat acc(0);
        for (auto it = y_.rbegin(); it != y_.rend(); ++it) acc = acc * yv + it->eval(xv);
        return acc;
    }

    /// Division with remainder in Y by a divisor monic in Y (unit leading
    /// Y-coefficient as an element of Q[X]).
    static std::pair<QPoly2, QPoly2> divmod_y(const QPoly2& a, const QPoly2& f) {
        internal_check(!f.is_zero() && f.y_.back().is_constant() && !f.y_.back().is_zero(),
                       "divisor must have constant nonzero top Y-coefficient");
        Rat lead = f.y_.back().coeff(0);
        QPoly2 r = a;
        std::vector<QPoly> q;
        long df = f.deg_y();
        if (a.deg_y() >= df) q.assign(static_cast<std::size_t>(a.deg_y() - df) + 1, QPoly());
        while (!r.is_zero() && r.deg_y() >= df) {
            std::size_t shift = static_cast<std::size_t>(r.deg_y() - df);
            QPoly factor = (Rat(1) / lead) * r.y_.back();
            q[shift] = q[shift] + factor;
            std::vector<QPoly> sub(r.y_.size());
            for (std::size_t j = 0; j <= static_cast<std::size_t>(df); ++j)
                sub[shift + j] = factor * f.y_[j];
            r = r - QPoly2(std::move(sub));
        }
        return {QPoly2(std::move(q)), r};
    }

private:
    void trim() {
        while (!y_.empty() && y_.back().is_zero()) y_.pop_back();
    }
    std::vector<QPoly> y_;
};

inline QPoly2 parse_qpoly2(const std::string& text) {
    detail::MonomialParser p(text, /*with_y=*/true);
    auto terms = p.parse_poly();
    long maxy = 0;
    for (const auto& [e, c] : terms)
        if (c != 0) maxy = std::max(maxy, e.second);
    std::vector<QPoly> v(static_cast<std::size_t>(maxy) + 1);
    for (const auto& [e, c] : terms)
        v[static_cast<std::size_t>(e.second)] =
            v[static_cast<std::size_t>(e.second)] + QPoly::monomial(c, static_cast<std::size_t>(e.first));
    return QPoly2(std::move(v));
}

inline std::string to_string(const QPoly2& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (long j = f.deg_y(); j >= 0; --j) {
        const QPoly& p = f.ycoeff_ref(static_cast<std::size_t>(j));
        for (long i = p.deg_or(-1); i >= 0; --i) {
            Rat c = p.coeff(static_cast<std::size_t>(i));
            if (c == 0) continue;
            bool neg = sign(c) < 0;
            Rat a = abs(c);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            bool unit_coef = (a == 1) && (i > 0 || j > 0);
            if (!unit_coef) out += to_string(a);
            bool first_var = true;
            if (i > 0) {
                if (!unit_coef) out += "*";
                out += "X";
                if (i > 1) out += "^" + std::to_string(i);
                first_var = false;
            }
            if (j > 0) {
                if (!unit_coef || !first_var) out += "*";
                out += "Y";
                if (j > 1) out += "^" + std::to_string(j);
            }
        }
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Resultants
// ---------------------------------------------------------------------------

/// Determinant by fraction-free (Bareiss) elimination; entries live in Q[X]
/// and every division performed is exact.
inline QPoly bareiss_det(std::vector<std::vector<QPoly>> m) {
    std::size_t n = m.size();
    if (n == 0) return QPoly::one();
    QPoly denom = QPoly::one();
    int sgn_flips = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return QPoly();  // zero column -> zero determinant
            std::swap(m[k], m[piv]);
            ++sgn_flips;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                QPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto [q, r] = QPoly::divmod(num, denom);
                internal_check(r.is_zero(), "Bareiss division not exact");
                m[i][j] = q;
            }
            m[i][k] = QPoly();
        }
        denom = m[k][k];
    }
    QPoly d = m[n - 1][n - 1];
    return (sgn_flips % 2) ? -d : d;
}

/// Res_Y(f, g) as an element of Q[X], via the Sylvester matrix.
inline QPoly resultant_y(const QPoly2& f, const QPoly2& g) {
    long df = f.deg_y(), dg = g.deg_y();
    internal_check(df >= 0 && dg >= 0, "resultant of zero polynomial");
    if (df == 0 && dg == 0) return QPoly::one();
    if (dg == 0) {
        // Res(f, c) = c^{deg f}
        QPoly c = g.ycoeff(0), r = QPoly::one();
        for (long i = 0; i < df; ++i) r = r * c;
        return r;
    }
    if (df == 0) {
        QPoly c = f.ycoeff(0), r = QPoly::one();
        for (long i = 0; i < dg; ++i) r = r * c;
        return r;
    }
    std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<QPoly>> m(n, std::vector<QPoly>(n));
    for (long row = 0; row < dg; ++row)
        for (long j = 0; j <= df; ++j)
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] =
                f.ycoeff(static_cast<std::size_t>(df - j));
    for (long row = 0; row < df; ++row)
        for (long j = 0; j <= dg; ++j)
            m[static_cast<std::size_t>(dg + row)][static_cast<std::size_t>(row + j)] =
                g.ycoeff(static_cast<std::size_t>(dg - j));
    return bareiss_det(std::move(m));
}

// ---------------------------------------------------------------------------
// Irreducibility over Q (desk scale)
// ---------------------------------------------------------------------------

/// Rational roots of f (nonzero), by the usual p/q divisor test on a
/// primitive integer form.
inline std::vector<Rat> rational_roots(const QPoly& f) {
    std::vector<Rat> roots;
    if (f.is_zero() || f.is_constant()) return roots;
    auto [g, scale] = primitive_integer_form(f);
    // strip zero roots first
    std::size_t shift = 0;
    auto cs = g.coeffs();
    while (shift < cs.size() && cs[shift] == 0) ++shift;
    if (shift > 0) roots.push_back(Rat(0));
    QPoly h(std::vector<Rat>(cs.begin() + static_cast<long>(shift), cs.end()));
    if (h.is_constant()) return roots;
    Int a0 = h.coeff(0).get_num();
    Int an = h.leading().get_num();
    for (const Int& p : signed_divisors(a0)) {
        for (const Int& q : signed_divisors(an)) {
            if (q < 0) continue;  // signs covered by p
            Rat cand = make_rat(p, q);
            if (h.eval(cand) == 0) {
                bool dup = false;
                for (const auto& r : roots) dup = dup || r == cand;
                if (!dup) roots.push_back(cand);
            }
        }
    }
    return roots;
}

/// Kronecker-style search for a nonconstant factor of degree <= half the
/// degree of f. f must be squarefree, rootless and of degree >= 2. Returns a
/// factor if one exists. Exact but exponential in the divisor counts; fine at
/// the intended degrees (<= 8).
inline std::optional<QPoly> kronecker_factor(const QPoly& f) {
    auto [g, scale] = primitive_integer_form(f);
    long n = g.deg_or(0);
    for (long d = 2; 2 * d <= n; ++d) {
        // interpolation points 0..d with divisor choices of g(j)
        std::vector<Int> values;
        std::vector<std::vector<Int>> choices;
        bool degenerate = false;
        for (long j = 0; j <= d; ++j) {
            Rat v = g.eval(Rat(Int(j)));
            internal_check(is_integer(v), "primitive form must be integral at integers");
            if (v == 0) { degenerate = true; break; }  // would have been a rational root
            choices.push_back(signed_divisors(v.get_num()));
        }
        if (degenerate) continue;
        std::vector<std::size_t> idx(static_cast<std::size_t>(d) + 1, 0);
        for (;;) {
            // candidate values h(j) = choices[j][idx[j]]; Lagrange interpolate
            std::vector<Rat> pts;
            for (long j = 0; j <= d; ++j)
                pts.push_back(Rat(choices[static_cast<std::size_t>(j)]
                                         [idx[static_cast<std::size_t>(j)]]));
            QPoly h;
            for (long j = 0; j <= d; ++j) {
                QPoly basis = QPoly::one();
                Rat denom(1);
                for (long l = 0; l <= d; ++l) {
                    if (l == j) continue;
                    basis = basis * QPoly(std::vector<Rat>{Rat(-Int(l)), Rat(1)});
                    denom *= Rat(Int(j - l));
                }
                h = h + (pts[static_cast<std::size_t>(j)] / denom) * basis;
            }
            if (h.deg_or(0) == d && !h.is_constant()) {
                auto [q, r] = QPoly::divmod(g, h);
                if (r.is_zero()) return h;
            }
            // next divisor combination
            std::size_t pos = 0;
            while (pos < idx.size()) {
                if (++idx[pos] < choices[pos].size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Curve and curve elements
// ---------------------------------------------------------------------------

/// Plane curve F(X, Y) = 0 over Q, monic in Y of Y-degree n = total degree,
/// whose dehomogenized leading form mu(t) = F_n(1, t) is squarefree and
/// irreducible over Q. Irreducibility of mu certifies that the points at
/// infinity are non-rational and mutually conjugate, which is what makes the
/// pseudo-valuation below well behaved.
class Curve {
public:
    /// Validates and normalizes F. Error order: monic-in-Y, rational root,
    /// squarefree, conjugacy (irreducibility).
    static std::shared_ptr<const Curve> make(const QPoly2& f_raw) {
        check(!f_raw.is_zero() && !f_raw.is_constant(), errc::precondition_violated,
              "curve polynomial must be nonconstant");
        long n = f_raw.total_deg();
        long dy = f_raw.deg_y();
        check(dy == n, errc::not_monic_in_y,
              "Y-degree " + std::to_string(dy) + " below total degree " + std::to_string(n));
        const QPoly& top = f_raw.ycoeff_ref(static_cast<std::size_t>(dy));
        check(top.is_constant() && !top.is_zero(), errc::not_monic_in_y,
              "coefficient of Y^" + std::to_string(dy) + " must be a nonzero constant");
        QPoly2 f = (Rat(1) / top.coeff(0)) * f_raw;

        // mu(t) = F_n(1, t): coefficients of the total-degree-n form
        std::vector<Rat> mu_coeffs(static_cast<std::size_t>(n) + 1, Rat(0));
        for (long j = 0; j <= n; ++j) mu_coeffs[static_cast<std::size_t>(j)] = f.coeff(n - j, j);
        QPoly mu{std::move(mu_coeffs)};

        auto roots = rational_roots(mu);
        check(roots.empty(), errc::points_at_infinity_rational,
              "mu has rational root " + (roots.empty() ? std::string() : to_string(roots[0])));
        check(gcd(mu, mu.derivative()).is_one(), errc::not_squarefree_at_infinity,
              "mu is not squarefree");
        if (n >= 4) {
            auto factor = kronecker_factor(mu);
            check(!factor.has_value(), errc::points_at_infinity_not_conjugate,
                  "mu factors as (" + (factor ? to_string(*factor) : std::string()) + ")*(...)");
        }

        auto curve = std::shared_ptr<Curve>(new Curve());
        curve->f_ = std::move(f);
        curve->n_ = n;
        curve->mu_ = std::move(mu);
        curve->smooth_warning_ = !affine_smoothness_spot_check(curve->f_);
        return curve;
    }

    const QPoly2& f() const { return f_; }
    long n() const { return n_; }
    const QPoly& mu() const { return mu_; }
    bool smooth_warning() const { return smooth_warning_; }

    friend bool operator==(const Curve& a, const Curve& b) { return a.f_ == b.f_; }

private:
    Curve() = default;

    /// Best-effort affine smoothness check: the X-resultants of (F, dF/dX)
    /// and (F, dF/dY) must not share a root. Failure only warns; the
    /// pseudo-valuation needs the at-infinity hypotheses, not smoothness.
    static bool affine_smoothness_spot_check(const QPoly2& f) {
        QPoly2 fx, fy;
        {
            std::vector<QPoly> vx, vy;
            for (std::size_t j = 0; j < f.ycoeffs().size(); ++j)
                vx.push_back(f.ycoeffs()[j].derivative());
            for (std::size_t j = 1; j < f.ycoeffs().size(); ++j)
                vy.push_back(Rat(Int(j)) * f.ycoeffs()[j]);
            fx = QPoly2(std::move(vx));
            fy = QPoly2(std::move(vy));
        }
        if (fx.is_zero() || fy.is_zero()) return true;
        QPoly r1 = resultant_y(f, fx);
        QPoly r2 = resultant_y(f, fy);
        if (r1.is_zero() || r2.is_zero()) return false;
        return gcd(r1, r2).is_one();
    }

    QPoly2 f_;
    long n_ = 0;
    QPoly mu_;
    bool smooth_warning_ = false;
};

using CurvePtr = std::shared_ptr<const Curve>;

inline CurvePtr new_curve(const QPoly2& f) { return Curve::make(f); }
inline CurvePtr new_curve(const std::string& f_text) { return Curve::make(parse_qpoly2(f_text)); }

/// Pseudo-valuation value: a natural number, or -infinity exactly for zero.
struct PseudoVal {
    bool is_neg_inf = true;
    Int value = 0;

    static PseudoVal neg_inf() { return PseudoVal{}; }
    static PseudoVal of(Int v) { return PseudoVal{false, std::move(v)}; }

    friend bool operator==(const PseudoVal& a, const PseudoVal& b) {
        return a.is_neg_inf == b.is_neg_inf && (a.is_neg_inf || a.value == b.value);
    }
    friend bool operator<(const PseudoVal& a, const PseudoVal& b) {
        if (a.is_neg_inf) return !b.is_neg_inf;
        if (b.is_neg_inf) return false;
        return a.value < b.value;
    }
    friend bool operator<=(const PseudoVal& a, const PseudoVal& b) { return a < b || a == b; }
    friend PseudoVal max(const PseudoVal& a, const PseudoVal& b) { return a < b ? b : a; }
    friend PseudoVal operator+(const PseudoVal& a, const PseudoVal& b) {
        if (a.is_neg_inf || b.is_neg_inf) return neg_inf();
        return of(a.value + b.value);
    }
};

inline std::string to_string(const PseudoVal& v) {
    return v.is_neg_inf ? std::string("-inf") : to_string(v.value);
}

/// Element of the coordinate ring Q[X,Y]/(F): the canonical representative
/// has Y-degree < n.
class CurveElem {
public:
    CurveElem() = default;
    CurveElem(CurvePtr curve, const QPoly2& rep) : curve_(std::move(curve)) {
        internal_check(static_cast<bool>(curve_), "curve element without a curve");
        rep_ = QPoly2::divmod_y(rep, curve_->f()).second;
    }

    static CurveElem from_text(const CurvePtr& curve, const std::string& text) {
        return CurveElem(curve, parse_qpoly2(text));
    }

    const CurvePtr& curve() const { return curve_; }
    const QPoly2& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_constant() const { return rep_.is_constant(); }

    friend CurveElem operator+(const CurveElem& a, const CurveElem& b) {
        a.same_curve(b);
        return CurveElem(a.curve_, a.rep_ + b.rep_);
    }
    friend CurveElem operator-(const CurveElem& a, const CurveElem& b) {
        a.same_curve(b);
        return CurveElem(a.curve_, a.rep_ - b.rep_);
    }
    CurveElem operator-() const { return CurveElem(curve_, -rep_); }
    friend CurveElem operator*(const CurveElem& a, const CurveElem& b) {
        a.same_curve(b);
        return CurveElem(a.curve_, a.rep_ * b.rep_);
    }
    friend bool operator==(const CurveElem& a, const CurveElem& b) {
        a.same_curve(b);
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const CurveElem& a, const CurveElem& b) { return !(a == b); }

private:
    void same_curve(const CurveElem& other) const {
        check(curve_ && other.curve_ && *curve_ == *other.curve_, errc::ring_mismatch,
              "curve elements over different curves");
    }
    CurvePtr curve_;
    QPoly2 rep_;
};

/// d(z) = n * totaldeg(rep), d(0) = -infinity. For reduced representatives
/// the leading form cannot vanish at any point at infinity: its
/// dehomogenization has degree < n = deg(mu) and mu is irreducible, so every
/// one of the n points contributes pole order totaldeg(rep).
inline PseudoVal d(const CurveElem& z) {
    if (z.is_zero()) return PseudoVal::neg_inf();
    return PseudoVal::of(Int(z.curve()->n()) * Int(z.rep().total_deg()));
}

/// Independent affine zero count: deg_X of Res_Y(F, rep). Test oracle only.
inline Int d_oracle(const CurveElem& z) {
    check(!z.is_zero(), errc::zero_element, "d_oracle of zero");
    QPoly res = resultant_y(z.curve()->f(), z.rep());
    internal_check(!res.is_zero(), "resultant vanished for a reduced representative");
    return Int(res.deg_or(0));
}

/// Units are the nonzero constants; equivalently d(z) = 0. Both routes are
/// computed and must agree.
inline bool curve_is_unit(const CurveElem& z) {
    bool by_rep = !z.is_zero() && z.is_constant();
    bool by_d = (d(z) == PseudoVal::of(Int(0)));
    internal_check(by_rep == by_d, "unit routes disagree");
    return by_rep;
}

}  // namespace idemfact

#endif
