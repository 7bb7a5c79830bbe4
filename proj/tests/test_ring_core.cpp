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

#include <catch2/catch.hpp>

#include "idemfact/prng.hpp"
#include "idemfact/ring.hpp"

using namespace idemfact;

TEST_CASE("dynamic element arithmetic", "[ring_core]") {
    auto z = [](long v) { return RingElem::integer(Int(v)); };

    CHECK(add(z(2), z(3)) == z(5));
    CHECK(mul(RingElem::rational(make_rat(Int(1), Int(2))),
              RingElem::rational(make_rat(Int(2), Int(3)))) ==
          RingElem::rational(make_rat(Int(1), Int(3))));
    CHECK(mul(RingElem::poly(QPoly::x()), RingElem::poly(QPoly::x())) ==
          RingElem::poly(QPoly::monomial(Rat(1), 2)));
    CHECK(sub(z(2), z(5)) == z(-3));
    CHECK(neg(z(7)) == z(-7));

    SECTION("cross-ring arithmetic is rejected") {
        CHECK_THROWS_MATCHES(add(z(1), RingElem::rational(Rat(1))), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.kind() == errc::ring_mismatch;
                             }));
    }
}

TEST_CASE("units per ring", "[ring_core]") {
    CHECK(is_unit(RingElem::integer(Int(-1))));
    CHECK_FALSE(is_unit(RingElem::integer(Int(2))));
    CHECK(is_unit(RingElem::rational(make_rat(Int(3), Int(7)))));
    CHECK_FALSE(is_unit(RingElem::rational(Rat(0))));
    CHECK(is_unit(RingElem::poly(QPoly(Rat(5)))));
    CHECK_FALSE(is_unit(RingElem::poly(QPoly::x())));
    CHECK(is_unit(RingElem::intz(IntZPoly(Int(1)))));
    CHECK(is_unit(RingElem::intz(IntZPoly(Int(-1)))));
    CHECK_FALSE(is_unit(RingElem::intz(IntZPoly({Int(0), Int(1)}))));
}

TEST_CASE("extended Euclid with pinned minimality", "[ring_core]") {
    auto r1 = gcd_bezout<Int>(Int(2), Int(3));
    CHECK(r1.g == 1);
    CHECK(r1.s == -1);
    CHECK(r1.t == 1);

    auto r2 = gcd_bezout<Int>(Int(4), Int(6));
    CHECK(r2.g == 2);
    CHECK(r2.s == -1);
    CHECK(r2.t == 1);

    auto r3 = gcd_bezout<Int>(Int(7), Int(0));
    CHECK(r3.g == 7);
    CHECK(r3.s == 1);
    CHECK(r3.t == 0);

    CHECK_THROWS_AS(gcd_bezout<Int>(Int(0), Int(0)), error);

    SECTION("polynomial gcd is monic with degree-minimal coefficients") {
        QPoly a = parse_qpoly("X^2 - 1");
        QPoly b = parse_qpoly("X^2 + 2*X + 1");
        auto r = gcd_bezout<QPoly>(a, b);
        CHECK(r.g == parse_qpoly("X + 1"));
        CHECK(r.s * a + r.t * b == r.g);
        CHECK(r.s.deg_or(-1) < 1);
    }

    SECTION("dynamic layer rejects non-Euclidean rings") {
        CHECK_THROWS_MATCHES(
            gcd_bezout(RingElem::rational(Rat(1)), RingElem::rational(Rat(2))), error,
            Catch::Matchers::Predicate<error>(
                [](const error& e) { return e.kind() == errc::not_euclidean; }));
        CHECK_THROWS_AS(
            gcd_bezout(RingElem::intz(IntZPoly(Int(2))), RingElem::intz(IntZPoly(Int(3)))),
            error);
    }
}

TEST_CASE("Bezout identity holds on random pairs", "[ring_core][property]") {
    SplitMix64 rng(101);
    for (int i = 0; i < 300; ++i) {
        Int a = random_int(rng, 100000), b = random_int(rng, 100000);
        if (a == 0 && b == 0) continue;
        auto r = gcd_bezout<Int>(a, b);
        CHECK(r.s * a + r.t * b == r.g);
        CHECK(r.g > 0);
        if (a != 0) CHECK(a % r.g == 0);
        if (b != 0) CHECK(b % r.g == 0);
        if (b != 0 && r.g != 0) {
            Int bound = abs(b / r.g);
            CHECK(2 * abs(r.s) <= bound);
        }
    }
    for (int i = 0; i < 60; ++i) {
        QPoly a = random_qpoly(rng, 4, 6), b = random_qpoly(rng, 4, 6);
        if (a.is_zero() && b.is_zero()) continue;
        auto r = gcd_bezout<QPoly>(a, b);
        CHECK(r.s * a + r.t * b == r.g);
        CHECK(QPoly::divmod(a, r.g).second.is_zero());
        CHECK(QPoly::divmod(b, r.g).second.is_zero());
        CHECK(r.g.leading() == 1);
    }
}

TEST_CASE("normalization is idempotent", "[ring_core][property]") {
    SplitMix64 rng(202);
    for (int i = 0; i < 100; ++i) {
        Int num = random_int(rng, 500), den = random_int(rng, 500);
        if (den == 0) continue;
        Rat r = make_rat(num, den);
        Rat again = make_rat(r.get_num(), r.get_den());
        CHECK(r == again);
        CHECK(r.get_den() > 0);
        CHECK(gcd(Int(r.get_num()), Int(r.get_den())) == 1);
    }
    for (int i = 0; i < 100; ++i) {
        QPoly f = random_qpoly(rng, 6, 20);
        QPoly again(f.coeffs());
        CHECK(f == again);
        if (!f.is_zero()) CHECK(f.coeffs().back() != 0);
    }
    for (int i = 0; i < 100; ++i) {
        IntZPoly f = random_intz(rng, 6, 50);
        IntZPoly again(f.coords());
        CHECK(f == again);
        if (!f.is_zero()) CHECK(f.coords().back() != 0);
    }
}

namespace {

template <class R, class Gen>
void spot_check_axioms(Gen gen, int trials) {
    for (int i = 0; i < trials; ++i) {
        R a = gen(), b = gen(), c = gen();
        CHECK(R((a + b) + c) == R(a + (b + c)));
        CHECK(R((a * b) * c) == R(a * (b * c)));
        CHECK(R(a * (b + c)) == R(a * b + a * c));
        CHECK(R(a + b) == R(b + a));
        CHECK(R(a * b) == R(b * a));
    }
}

}  // namespace

TEST_CASE("ring axioms spot-checked per ring", "[ring_core][property]") {
    SplitMix64 rng(303);
    spot_check_axioms<Int>([&] { return random_int(rng, 1000); }, 50);
    spot_check_axioms<Rat>(
        [&] {
            Int d = random_int(rng, 40);
            return make_rat(random_int(rng, 40), d == 0 ? Int(1) : d);
        },
        50);
    spot_check_axioms<QPoly>([&] { return random_qpoly(rng, 4, 10); }, 30);
    spot_check_axioms<IntZPoly>([&] { return random_intz(rng, 4, 10); }, 30);
    CurvePtr curve = new_curve("X^2+Y^2+1");
    spot_check_axioms<CurveElem>([&] { return random_curve_elem(curve, rng, 2, 5); }, 20);
}

TEST_CASE("curve elements through the dynamic layer", "[ring_core]") {
    CurvePtr curve = new_curve("X^4+Y^4+1");
    RingId ring = RingId::of_curve(curve);
    RingElem a = parse_elem(ring, "X*Y - 1");
    RingElem b = parse_elem(ring, "X*Y + 1");
    RingElem prod = mul(a, b);
    CHECK(prod == parse_elem(ring, "X^2*Y^2 - 1"));
    CHECK_FALSE(is_unit(a));
    CHECK(is_unit(parse_elem(ring, "7")));

    // elements over different curves never mix
    RingId other = RingId::of_curve(new_curve("X^2+Y^2+1"));
    CHECK_THROWS_MATCHES(add(a, parse_elem(other, "X")), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.kind() == errc::ring_mismatch;
                         }));
}

TEST_CASE("element grammar", "[ring_core]") {
    CHECK(parse_elem(RingId::Z(), " -42 ") == RingElem::integer(Int(-42)));
    CHECK(parse_elem(RingId::Q(), "6/4") == RingElem::rational(make_rat(Int(3), Int(2))));
    CHECK(parse_elem(RingId::QX(), "3*X^2 - X + 1") ==
          RingElem::poly(QPoly({Rat(1), Rat(-1), Rat(3)})));
    CHECK(parse_elem(RingId::QX(), "1/2*X") == RingElem::poly(QPoly({Rat(0), make_rat(Int(1), Int(2))})));
    CHECK(to_string(parse_qpoly("3*X^2 - X + 1")) == "3*X^2 - X + 1");
    CHECK_THROWS_AS(parse_elem(RingId::Z(), "zap"), error);
    CHECK_THROWS_AS(parse_qpoly("3*^2"), error);

    SECTION("text roundtrip") {
        SplitMix64 rng(404);
        for (int i = 0; i < 50; ++i) {
            QPoly f = random_qpoly(rng, 5, 30);
            CHECK(parse_qpoly(to_string(f)) == f);
        }
    }
}
