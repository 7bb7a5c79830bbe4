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

#ifndef IDEMFACT_INTZ_HPP
#define IDEMFACT_INTZ_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "idemfact/qpoly.hpp"

namespace idemfact {

/// Integer-valued polynomial: integer coordinates in the binomial basis
/// C(X,0), C(X,1), ..., C(X,n). The top coordinate is nonzero; zero is the
/// empty list. The ring is discretely ordered by the sign of the leading
/// coordinate: f > 0 iff a_n > 0, and then f >= 1.
class IntZPoly {
public:
    IntZPoly() = default;
    explicit IntZPoly(std::vector<Int> coords) : a_(std::move(coords)) { trim(); }
    explicit IntZPoly(const Int& c) {
        if (c != 0) a_.push_back(c);
    }
    explicit IntZPoly(long c) : IntZPoly(Int(c)) {}

    static IntZPoly zero() { return IntZPoly(); }
    static IntZPoly one() { return IntZPoly(Int(1)); }

    bool is_zero() const { return a_.empty(); }
    bool is_constant() const { return a_.size() <= 1; }
    bool is_unit() const { return a_.size() == 1 && (a_[0] == 1 || a_[0] == -1); }

    long deg_or(long zero_value) const {
        return a_.empty() ? zero_value : static_cast<long>(a_.size()) - 1;
    }
    Degree degree() const {
        return a_.empty() ? Degree::neg_inf() : Degree::of(static_cast<long>(a_.size()) - 1);
    }
    const Int& leading() const {
        internal_check(!a_.empty(), "leading coordinate of zero");
        return a_.back();
    }
    Int coord(std::size_t k) const { return k < a_.size() ? a_[k] : Int(0); }
    const std::vector<Int>& coords() const { return a_; }

    /// The binomial basis element C(X,k) as a rational polynomial.
    static QPoly binom_basis(std::size_t k) {
        QPoly f = QPoly::one();
        for (std::size_t j = 0; j < k; ++j) {
            // multiply by (X - j) / (j + 1)
            f = f * QPoly(std::vector<Rat>{Rat(-Int(j)), Rat(1)});
            f = make_rat(Int(1), Int(j + 1)) * f;
        }
        return f;
    }

    QPoly to_rational_poly() const {
        QPoly f;
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (a_[k] != 0) f = f + Rat(a_[k]) * binom_basis(k);
        return f;
    }

    /// Finite differences: a_k = (Delta^k f)(0). Fails with the first k whose
    /// difference is not an integer.
    static IntZPoly from_rational_poly(const QPoly& f) {
        if (f.is_zero()) return IntZPoly();
        long d = f.deg_or(0);
        std::vector<Rat> row(static_cast<std::size_t>(d) + 1);
        for (long j = 0; j <= d; ++j) row[static_cast<std::size_t>(j)] = f.eval(Rat(Int(j)));
        std::vector<Int> coords;
        for (long k = 0; k <= d; ++k) {
            const Rat& val = row[0];
            if (!is_integer(val))
            raise(errc::not_integer_valued,
                  "difference at k=" + std::to_string(k) + " is " + to_string(val));
            coords.push_back(val.get_num());
            for (std::size_t j = 0; j + 1 < row.size() - static_cast<std::size_t>(k); ++j)
                row[j] = row[j + 1] - row[j];
        }
        return IntZPoly(std::move(coords));
    }

    friend IntZPoly operator+(const IntZPoly& a, const IntZPoly& b) {
        std::vector<Int> v(std::max(a.a_.size(), b.a_.size()), Int(0));
        for (std::size_t i = 0; i < a.a_.size(); ++i) v[i] += a.a_[i];
        for (std::size_t i = 0; i < b.a_.size(); ++i) v[i] += b.a_[i];
        return IntZPoly(std::move(v));
    }
    IntZPoly operator-() const {
        std::vector<Int> v(a_);
        for (auto& x : v) x = -x;
        return IntZPoly(std::move(v));
    }
    friend IntZPoly operator-(const IntZPoly& a, const IntZPoly& b) { return a + (-b); }

    /// Product via the rational-polynomial route. Int(Z) is closed under
    /// multiplication, so the conversion back always succeeds. In debug mode
    /// the leading coordinate is cross-checked against the closed form
    /// lc(fg) = lc(f) * lc(g) * C(m+n, m).
    friend IntZPoly operator*(const IntZPoly& a, const IntZPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntZPoly();
        IntZPoly p = from_rational_poly(a.to_rational_poly() * b.to_rational_poly());
#ifndef NDEBUG
        Int expect = a.leading() * b.leading() *
                     binomial(static_cast<unsigned long>(a.deg_or(0) + b.deg_or(0)),
                              static_cast<unsigned long>(a.deg_or(0)));
        internal_check(p.deg_or(-1) == a.deg_or(0) + b.deg_or(0) && p.leading() == expect,
                       "binomial product leading coordinate mismatch");
#endif
        return p;
    }

    friend bool operator==(const IntZPoly& a, const IntZPoly& b) { return a.a_ == b.a_; }
    friend bool operator!=(const IntZPoly& a, const IntZPoly& b) { return !(a == b); }

private:
    void trim() {
        while (!a_.empty() && a_.back() == 0) a_.pop_back();
    }
    std::vector<Int> a_;
};

/// Discrete order: sign of the leading coordinate of the difference.
inline std::strong_ordering compare(const IntZPoly& f, const IntZPoly& g) {
    IntZPoly d = f - g;
    if (d.is_zero()) return std::strong_ordering::equal;
    return sign(d.leading()) > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

inline bool operator<(const IntZPoly& a, const IntZPoly& b) { return compare(a, b) < 0; }
inline bool operator>(const IntZPoly& a, const IntZPoly& b) { return compare(a, b) > 0; }
inline bool operator<=(const IntZPoly& a, const IntZPoly& b) { return compare(a, b) <= 0; }
inline bool operator>=(const IntZPoly& a, const IntZPoly& b) { return compare(a, b) >= 0; }

/// Grammar: "binom[a0, a1, ..., an]" or any rational-polynomial expression
/// that is integer-valued on the integers.
inline IntZPoly parse_intz(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (text.compare(i, 6, "binom[") == 0) {
        std::size_t close = text.find(']', i);
        check(close != std::string::npos, errc::parse_error, "unterminated binom[");
        std::string body = text.substr(i + 6, close - (i + 6));
        std::vector<Int> coords;
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
            std::size_t b = tok.find_first_not_of(" \t");
            std::size_t e = tok.find_last_not_of(" \t");
            if (b != std::string::npos) coords.push_back(int_from_string(tok.substr(b, e - b + 1)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return IntZPoly(std::move(coords));
    }
    return IntZPoly::from_rational_poly(parse_qpoly(text));
}

inline std::string to_string(const IntZPoly& f) {
    std::string out = "binom[";
    for (std::size_t k = 0; k < f.coords().size(); ++k) {
        if (k) out += ", ";
        out += to_string(f.coords()[k]);
    }
    if (f.coords().empty()) out += "0";
    out += "]";
    return out;
}

}  // namespace idemfact

#endif
