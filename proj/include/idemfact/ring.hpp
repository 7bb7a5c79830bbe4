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

#ifndef IDEMFACT_RING_HPP
#define IDEMFACT_RING_HPP

#include <string>
#include <tuple>
#include <utility>
#include <variant>

#include "idemfact/curve.hpp"
#include "idemfact/intz.hpp"
#include "idemfact/numeric.hpp"
#include "idemfact/qpoly.hpp"
#include "idemfact/ring_fwd.hpp"

namespace idemfact {

// ---------------------------------------------------------------------------
// ring_traits specializations for the five supported rings
// ---------------------------------------------------------------------------

template <>
struct ring_traits<Int> {
    static const char* name() { return "Z"; }
    static Int zero_like(const Int&) { return Int(0); }
    static Int one_like(const Int&) { return Int(1); }
    static Int from_long(long n, const Int&) { return Int(n); }
    static bool is_zero(const Int& a) { return a == 0; }
    static bool is_unit(const Int& a) { return a == 1 || a == -1; }
    static Int unit_inverse(const Int& u) {
        check(is_unit(u), errc::not_a_unit, "inverse of a non-unit integer");
        return u;
    }
    // Euclidean: truncated division, norm |.|
    static std::pair<Int, Int> divmod(const Int& a, const Int& b) {
        check(b != 0, errc::precondition_violated, "division by zero");
        Int q = a / b;  // truncates toward zero
        return {q, a - q * b};
    }
    static bool norm_less(const Int& a, const Int& b) { return abs(a) < abs(b); }
    static int cmp(const Int& a, const Int& b) { return a < b ? -1 : (a == b ? 0 : 1); }
};

template <>
struct ring_traits<Rat> {
    static const char* name() { return "Q"; }
    static Rat zero_like(const Rat&) { return Rat(0); }
    static Rat one_like(const Rat&) { return Rat(1); }
    static Rat from_long(long n, const Rat&) { return Rat(n); }
    static bool is_zero(const Rat& a) { return a == 0; }
    static bool is_unit(const Rat& a) { return a != 0; }
    static Rat unit_inverse(const Rat& u) {
        check(u != 0, errc::not_a_unit, "inverse of zero");
        return Rat(1) / u;
    }
};

template <>
struct ring_traits<QPoly> {
    static const char* name() { return "Q[X]"; }
    static QPoly zero_like(const QPoly&) { return QPoly(); }
    static QPoly one_like(const QPoly&) { return QPoly::one(); }
    static QPoly from_long(long n, const QPoly&) { return QPoly(Rat(n)); }
    static bool is_zero(const QPoly& a) { return a.is_zero(); }
    static bool is_unit(const QPoly& a) { return !a.is_zero() && a.is_constant(); }
    static QPoly unit_inverse(const QPoly& u) {
        check(is_unit(u), errc::not_a_unit, "inverse of a non-constant polynomial");
        return QPoly(Rat(1) / u.coeff(0));
    }
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
        return QPoly::divmod(a, b);
    }
    static bool norm_less(const QPoly& a, const QPoly& b) { return a.degree() < b.degree(); }
};

template <>
struct ring_traits<IntZPoly> {
    static const char* name() { return "IntZ"; }
    static IntZPoly zero_like(const IntZPoly&) { return IntZPoly(); }
    static IntZPoly one_like(const IntZPoly&) { return IntZPoly::one(); }
    static IntZPoly from_long(long n, const IntZPoly&) { return IntZPoly(Int(n)); }
    static bool is_zero(const IntZPoly& a) { return a.is_zero(); }
    static bool is_unit(const IntZPoly& a) { return a.is_unit(); }
    static IntZPoly unit_inverse(const IntZPoly& u) {
        check(u.is_unit(), errc::not_a_unit, "inverse of a non-unit in Int(Z)");
        return u;  // units are +-1
    }
    static int cmp(const IntZPoly& a, const IntZPoly& b) {
        auto c = compare(a, b);
        return c < 0 ? -1 : (c == 0 ? 0 : 1);
    }
};

template <>
struct ring_traits<CurveElem> {
    static const char* name() { return "Curve"; }
    static CurveElem zero_like(const CurveElem& w) { return CurveElem(w.curve(), QPoly2()); }
    static CurveElem one_like(const CurveElem& w) {
        return CurveElem(w.curve(), QPoly2(Rat(1)));
    }
    static CurveElem from_long(long n, const CurveElem& w) {
        return CurveElem(w.curve(), QPoly2(Rat(n)));
    }
    static bool is_zero(const CurveElem& a) { return a.is_zero(); }
    static bool is_unit(const CurveElem& a) { return curve_is_unit(a); }
    static CurveElem unit_inverse(const CurveElem& u) {
        check(curve_is_unit(u), errc::not_a_unit, "inverse of a non-scalar");
        Rat c = u.rep().eval(Rat(0), Rat(0));
        return CurveElem(u.curve(), QPoly2(Rat(1) / c));
    }
};

static_assert(euclidean_ring<Int>);
static_assert(euclidean_ring<QPoly>);
static_assert(ordered_ring<Int>);
static_assert(ordered_ring<IntZPoly>);
static_assert(ring_type<Rat>);
static_assert(ring_type<CurveElem>);

// ---------------------------------------------------------------------------
// Extended Euclid with pinned normalization
// ---------------------------------------------------------------------------

template <euclidean_ring R>
struct BezoutResult {
    R g, s, t;  // s*a + t*b = g
};

namespace detail {

inline void normalize_bezout(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
    if (g < 0) {
        g = -g;
        s = -s;
        t = -t;
    }
    if (b != 0) {
        // minimal s: |s| <= |b/g|/2, ties toward nonnegative s
        Int bb = abs(b / g);
        if (bb > 0) {
            Int r = floor_mod(s, bb);
            // r in [0, bb); shift down when strictly past the midpoint
            if (2 * r > bb) r -= bb;
            s = r;
            t = (g - a * s) / b;
        }
    } else if (a != 0) {
        s = (a > 0) ? Int(1) : Int(-1);
        t = 0;
    }
}

inline void normalize_bezout(const QPoly& a, const QPoly& b, QPoly& g, QPoly& s, QPoly& t) {
    Rat lead = g.leading();
    Rat inv = Rat(1) / lead;
    g = inv * g;
    s = inv * s;
    t = inv * t;
    if (!b.is_zero()) {
        QPoly bb = QPoly::divmod(b, g).first;
        if (!bb.is_constant()) {
            s = QPoly::divmod(s, bb).second;  // degree-minimal representative
            t = QPoly::divmod(g - a * s, b).first;
        }
    }
}

}  // namespace detail

/// Extended Euclid: g = gcd(a, b) normalized (positive integer / monic
/// polynomial) with s*a + t*b = g and the minimal coefficient convention.
template <euclidean_ring R>
BezoutResult<R> gcd_bezout(const R& a, const R& b) {
    using T = ring_traits<R>;
    check(!(T::is_zero(a) && T::is_zero(b)), errc::both_zero, "gcd_bezout(0, 0)");
    R r0 = a, r1 = b;
    R s0 = T::one_like(a), s1 = T::zero_like(a);
    R t0 = T::zero_like(a), t1 = T::one_like(a);
    while (!T::is_zero(r1)) {
        auto [q, r] = T::divmod(r0, r1);
        R s2 = s0 - q * s1;
        R t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    detail::normalize_bezout(a, b, r0, s0, t0);
    internal_check(s0 * a + t0 * b == r0, "Bezout identity violated");
    return {r0, s0, t0};
}

// ---------------------------------------------------------------------------
// Dynamic layer: tagged elements for the CLI and serialization boundary
// ---------------------------------------------------------------------------

enum class RingTag { integer, rational, rational_poly, int_z, curve };

inline const char* ring_tag_name(RingTag t) {
    switch (t) {
        case RingTag::integer: return "Z";
        case RingTag::rational: return "Q";
        case RingTag::rational_poly: return "Q[X]";
        case RingTag::int_z: return "IntZ";
        case RingTag::curve: return "Curve";
    }
    return "?";
}

/// Ring identity: the tag plus, for coordinate rings, the curve itself.
struct RingId {
    RingTag tag = RingTag::integer;
    CurvePtr curve;  // set iff tag == curve

    static RingId Z() { return {RingTag::integer, nullptr}; }
    static RingId Q() { return {RingTag::rational, nullptr}; }
    static RingId QX() { return {RingTag::rational_poly, nullptr}; }
    static RingId IntZ() { return {RingTag::int_z, nullptr}; }
    static RingId of_curve(CurvePtr c) { return {RingTag::curve, std::move(c)}; }

    friend bool operator==(const RingId& a, const RingId& b) {
        if (a.tag != b.tag) return false;
        if (a.tag != RingTag::curve) return true;
        return a.curve && b.curve && *a.curve == *b.curve;
    }
};

/// Parse a ring tag ("Z", "Q", "Q[X]" or "QX", "IntZ").
inline RingId parse_ring_tag(const std::string& s) {
    if (s == "Z") return RingId::Z();
    if (s == "Q") return RingId::Q();
    if (s == "Q[X]" || s == "QX") return RingId::QX();
    if (s == "IntZ") return RingId::IntZ();
    raise(errc::parse_error, "unknown ring tag '" + s + "'");
}

/// Tagged exact element of one supported ring. Cross-ring arithmetic is
/// rejected, never coerced.
class RingElem {
public:
    using Payload = std::variant<Int, Rat, QPoly, IntZPoly, CurveElem>;

    RingElem() : ring_(RingId::Z()), v_(Int(0)) {}
    RingElem(RingId ring, Payload v) : ring_(std::move(ring)), v_(std::move(v)) {}

    static RingElem integer(Int x) { return RingElem(RingId::Z(), Payload(std::move(x))); }
    static RingElem rational(Rat x) { return RingElem(RingId::Q(), Payload(std::move(x))); }
    static RingElem poly(QPoly x) { return RingElem(RingId::QX(), Payload(std::move(x))); }
    static RingElem intz(IntZPoly x) { return RingElem(RingId::IntZ(), Payload(std::move(x))); }
    static RingElem curve_elem(CurveElem x) {
        RingId id = RingId::of_curve(x.curve());
        return RingElem(std::move(id), Payload(std::move(x)));
    }

    const RingId& ring() const { return ring_; }
    const Payload& payload() const { return v_; }

    template <class T>
    const T& as() const {
        const T* p = std::get_if<T>(&v_);
        check(p != nullptr, errc::ring_mismatch, "element is not of the requested ring");
        return *p;
    }

    friend bool operator==(const RingElem& a, const RingElem& b) {
        return a.ring_ == b.ring_ && a.v_ == b.v_;
    }

private:
    RingId ring_;
    Payload v_;
};

namespace detail {

inline void require_same_ring(const RingElem& a, const RingElem& b) {
    check(a.ring() == b.ring(), errc::ring_mismatch,
          std::string("cannot mix ") + ring_tag_name(a.ring().tag) + " and " +
              ring_tag_name(b.ring().tag));
}

template <class F>
auto binop(const RingElem& a, const RingElem& b, F&& f) {
    require_same_ring(a, b);
    return std::visit(
        [&](const auto& x) -> RingElem {
            using T = std::decay_t<decltype(x)>;
            return RingElem(a.ring(), RingElem::Payload(T(f(x, std::get<T>(b.payload())))));
        },
        a.payload());
}

}  // namespace detail

inline RingElem add(const RingElem& a, const RingElem& b) {
    return detail::binop(a, b, [](const auto& x, const auto& y) { return x + y; });
}
inline RingElem sub(const RingElem& a, const RingElem& b) {
    return detail::binop(a, b, [](const auto& x, const auto& y) { return x - y; });
}
inline RingElem mul(const RingElem& a, const RingElem& b) {
    return detail::binop(a, b, [](const auto& x, const auto& y) { return x * y; });
}
inline RingElem neg(const RingElem& a) {
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            return RingElem(a.ring(), RingElem::Payload(T(-x)));
        },
        a.payload());
}

inline bool is_unit(const RingElem& a) {
    return std::visit(
        [](const auto& x) {
            return ring_traits<std::decay_t<decltype(x)>>::is_unit(x);
        },
        a.payload());
}

inline bool is_zero(const RingElem& a) {
    return std::visit(
        [](const auto& x) {
            return ring_traits<std::decay_t<decltype(x)>>::is_zero(x);
        },
        a.payload());
}

/// Dynamic gcd_bezout; only the two Euclidean rings are accepted.
inline std::tuple<RingElem, RingElem, RingElem> gcd_bezout(const RingElem& a,
                                                           const RingElem& b) {
    detail::require_same_ring(a, b);
    switch (a.ring().tag) {
        case RingTag::integer: {
            auto r = gcd_bezout<Int>(a.as<Int>(), b.as<Int>());
            return {RingElem::integer(r.g), RingElem::integer(r.s), RingElem::integer(r.t)};
        }
        case RingTag::rational_poly: {
            auto r = gcd_bezout<QPoly>(a.as<QPoly>(), b.as<QPoly>());
            return {RingElem::poly(r.g), RingElem::poly(r.s), RingElem::poly(r.t)};
        }
        default:
            raise(errc::not_euclidean, std::string(ring_tag_name(a.ring().tag)) +
                                           " has no Euclidean division here");
    }
}

/// Parse an element in the ring's text grammar. Integers: optional-sign
/// decimal. Rationals: "p/q". Polynomials: "3*X^2 - X + 1". IntZ:
/// "binom[a0, a1, ...]" or a rational-polynomial expression. Curve elements:
/// bivariate polynomial expressions in X and Y.
inline RingElem parse_elem(const RingId& ring, const std::string& text) {
    switch (ring.tag) {
        case RingTag::integer: {
            std::string t = text;
            t.erase(0, t.find_first_not_of(" \t"));
            t.erase(t.find_last_not_of(" \t") + 1);
            return RingElem::integer(int_from_string(t));
        }
        case RingTag::rational: {
            auto slash = text.find('/');
            if (slash == std::string::npos) return RingElem::rational(Rat(int_from_string(text)));
            Int num = int_from_string(text.substr(0, slash));
            Int den = int_from_string(text.substr(slash + 1));
            return RingElem::rational(make_rat(num, den));
        }
        case RingTag::rational_poly:
            return RingElem::poly(parse_qpoly(text));
        case RingTag::int_z:
            return RingElem::intz(parse_intz(text));
        case RingTag::curve:
            check(static_cast<bool>(ring.curve), errc::parse_error, "curve ring without a curve");
            return RingElem::curve_elem(CurveElem::from_text(ring.curve, text));
    }
    raise(errc::parse_error, "unknown ring");
}

inline std::string to_string(const CurveElem& z) { return to_string(z.rep()); }

inline std::string to_string(const RingElem& a) {
    return std::visit([](const auto& x) { return to_string(x); }, a.payload());
}

}  // namespace idemfact

#endif
