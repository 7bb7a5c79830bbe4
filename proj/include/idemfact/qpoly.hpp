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

#ifndef IDEMFACT_QPOLY_HPP
#define IDEMFACT_QPOLY_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "idemfact/numeric.hpp"

namespace idemfact {

/// Degree with a distinguished -infinity for the zero polynomial.
struct Degree {
    bool finite = false;
    long value = 0;  // meaningful only when finite

    static Degree neg_inf() { return Degree{false, 0}; }
    static Degree of(long v) { return Degree{true, v}; }

    friend bool operator==(const Degree& a, const Degree& b) {
        return a.finite == b.finite && (!a.finite || a.value == b.value);
    }
    friend bool operator<(const Degree& a, const Degree& b) {
        if (!a.finite) return b.finite;
        if (!b.finite) return false;
        return a.value < b.value;
    }
    friend bool operator<=(const Degree& a, const Degree& b) { return a < b || a == b; }
};

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// Invariant: the top coefficient is nonzero; zero is the empty list.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Rat& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly(Rat(1)); }
    static QPoly x() { return QPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
    static QPoly monomial(const Rat& c, std::size_t k) {
        std::vector<Rat> v(k + 1, Rat(0));
        v[k] = c;
        return QPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    Degree degree() const {
        return c_.empty() ? Degree::neg_inf() : Degree::of(static_cast<long>(c_.size()) - 1);
    }
    /// Degree as long with `zero_value` standing in for -infinity.
    long deg_or(long zero_value) const {
        return c_.empty() ? zero_value : static_cast<long>(c_.size()) - 1;
    }

    const Rat& leading() const {
        internal_check(!c_.empty(), "leading coefficient of zero");
        return c_.back();
    }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return QPoly(std::move(v));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
    QPoly operator-() const {
        std::vector<Rat> v(c_);
        for (auto& x : v) x = -x;
        QPoly r;
        r.c_ = std::move(v);
        return r;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return QPoly(std::move(v));
    }
    friend QPoly operator*(const Rat& s, const QPoly& a) {
        if (s == 0) return QPoly();
        std::vector<Rat> v(a.c_);
        for (auto& x : v) x *= s;
        return QPoly(std::move(v));
    }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Division with remainder over the field Q: a = q*b + r, deg r < deg b.
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
        check(!b.is_zero(), errc::precondition_violated, "polynomial division by zero");
        QPoly r = a;
        std::vector<Rat> q(a.c_.size() > b.c_.size() - 1 ? a.c_.size() - b.c_.size() + 1 : 0,
                           Rat(0));
        const Rat& lb = b.leading();
        while (!r.is_zero() && r.c_.size() >= b.c_.size()) {
            std::size_t shift = r.c_.size() - b.c_.size();
            Rat f = r.c_.back() / lb;
            q[shift] = f;
            for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[shift + i] -= f * b.c_[i];
            r.trim();
        }
        return {QPoly(std::move(q)), r};
    }

    QPoly derivative() const {
        if (c_.size() <= 1) return QPoly();
        std::vector<Rat> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rat(Int(i)) * c_[i];
        return QPoly(std::move(v));
    }

    QPoly monic() const {
        internal_check(!is_zero(), "monic of zero polynomial");
        return (Rat(1) / leading()) * (*this);
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = QPoly::divmod(x, y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

/// Clears denominators and divides by integer content: primitive integer
/// polynomial with positive leading coefficient, plus the scaling factor.
inline std::pair<QPoly, Rat> primitive_integer_form(const QPoly& f) {
    internal_check(!f.is_zero(), "primitive form of zero");
    Int den(1);
    for (const auto& c : f.coeffs()) den = lcm(den, Rat(c).get_den());
    Int content(0);
    for (const auto& c : f.coeffs()) {
        Rat scaled = c * Rat(den);
        content = gcd(content, scaled.get_num());
    }
    if (content == 0) content = 1;
    Rat scale = make_rat(den, content);
    QPoly g = scale * f;
    if (sign(g.leading()) < 0) {
        g = Rat(-1) * g;
        scale = -scale;
    }
    return {g, scale};
}

// ---------------------------------------------------------------------------
// Text grammar. Elements are sums of signed monomials: rational coefficients
// "p/q", variables X (and Y for bivariate use), '^' exponents, optional '*'.
// Example: "3*X^2 - X + 1", "1/2*X^4 + Y^4 + 1".
// ---------------------------------------------------------------------------

namespace detail {

struct MonomialParser {
    const std::string& s;
    std::size_t i = 0;
    bool allow_y;

    explicit MonomialParser(const std::string& text, bool with_y) : s(text), allow_y(with_y) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    Int parse_uint() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        check(i > start, errc::parse_error, "expected number in '" + s + "'");
        return Int(s.substr(start, i - start));
    }

    Rat parse_number() {
        Int num = parse_uint();
        skip_ws();
        if (i < s.size() && s[i] == '/') {
            ++i;
            Int den = parse_uint();
            return make_rat(num, den);
        }
        return Rat(num);
    }

    // coefficient [*] var[^e] [*] var[^e] ...
    void parse_term(Rat& coef, long& ex, long& ey) {
        coef = Rat(1);
        ex = ey = 0;
        bool saw_factor = false;
        for (;;) {
            skip_ws();
            if (i >= s.size()) break;
            char c = s[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coef *= parse_number();
                saw_factor = true;
            } else if (c == 'X' || c == 'x' || ((c == 'Y' || c == 'y') && allow_y)) {
                bool is_x = (c == 'X' || c == 'x');
                ++i;
                long e = 1;
                skip_ws();
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    e = static_cast<long>(parse_uint().get_si());
                }
                (is_x ? ex : ey) += e;
                saw_factor = true;
            } else if (c == '*') {
                ++i;
                continue;
            } else {
                break;
            }
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            // implicit product continues only onto a variable
            if (i < s.size() &&
                (s[i] == 'X' || s[i] == 'x' || ((s[i] == 'Y' || s[i] == 'y') && allow_y)))
                continue;
            break;
        }
        check(saw_factor, errc::parse_error, "expected term in '" + s + "'");
    }

    // Full polynomial into (xexp, yexp) -> coefficient.
    std::map<std::pair<long, long>, Rat> parse_poly() {
        std::map<std::pair<long, long>, Rat> terms;
        bool first = true;
        while (!eof()) {
            int sgn = 1;
            skip_ws();
            while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                if (s[i] == '-') sgn = -sgn;
                ++i;
                skip_ws();
            }
            if (i >= s.size()) {
                check(first, errc::parse_error, "dangling sign in '" + s + "'");
                break;
            }
            Rat coef;
            long ex, ey;
            parse_term(coef, ex, ey);
            Rat& slot = terms[{ex, ey}];
            slot += Rat(sgn) * coef;
            first = false;
        }
        check(!first, errc::parse_error, "empty polynomial '" + s + "'");
        return terms;
    }
};

}  // namespace detail

inline QPoly parse_qpoly(const std::string& text) {
    detail::MonomialParser p(text, /*with_y=*/false);
    auto terms = p.parse_poly();
    long maxdeg = 0;
    for (const auto& [e, c] : terms)
        if (c != 0) maxdeg = std::max(maxdeg, e.first);
    std::vector<Rat> v(static_cast<std::size_t>(maxdeg) + 1, Rat(0));
    for (const auto& [e, c] : terms) v[static_cast<std::size_t>(e.first)] += c;
    return QPoly(std::move(v));
}

inline std::string to_string(const QPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (long k = f.deg_or(0); k >= 0; --k) {
        Rat c = f.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        bool neg = sign(c) < 0;
        Rat a = abs(c);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        bool unit_coef = (a == 1) && k > 0;
        if (!unit_coef) out += to_string(a);
        if (k > 0) {
            if (!unit_coef) out += "*";
            out += "X";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace idemfact

#endif
