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

#include "idemfact/curve_report.hpp"
#include "idemfact/prng.hpp"
#include "idemfact/ring.hpp"

using namespace idemfact;

namespace {
errc kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.kind();
    }
    return errc::internal_invariant_violation;  // sentinel: no error raised
}
}  // namespace

TEST_CASE("curve validation", "[curve_ring]") {
    SECTION("x^4 + y^4 + 1 is accepted") {
        CurvePtr c = new_curve("X^4+Y^4+1");
        CHECK(c->n() == 4);
        CHECK(c->mu() == parse_qpoly("X^4 + 1"));
        CHECK_FALSE(c->smooth_warning());
    }
    SECTION("x^2 + y^2 + 1 is accepted over Q") {
        CurvePtr c = new_curve("X^2+Y^2+1");
        CHECK(c->n() == 2);
        CHECK(c->mu() == parse_qpoly("X^2 + 1"));
    }
    SECTION("leading-coefficient scaling") {
        CurvePtr c = new_curve("X^2 + 2*Y^2 + 2");
        CHECK(c->n() == 2);
        CHECK(c->f().ycoeff(2) == QPoly::one());
    }
    SECTION("rational point at infinity") {
        CHECK(kind_of([] { new_curve("Y^2 - X"); }) == errc::points_at_infinity_rational);
    }
    SECTION("non-monic in Y") {
        CHECK(kind_of([] { new_curve("X^4 + X*Y^3 + 1"); }) == errc::not_monic_in_y);
    }
    SECTION("non-squarefree leading form") {
        // mu = (t^2+1)^2 = t^4 + 2 t^2 + 1
        CHECK(kind_of([] { new_curve("Y^4 + 2*X^2*Y^2 + X^4 + 1"); }) ==
              errc::not_squarefree_at_infinity);
    }
    SECTION("rootless but reducible leading form") {
        // mu = (t^2+1)(t^2+2) = t^4 + 3 t^2 + 2
        CHECK(kind_of([] { new_curve("Y^4 + 3*X^2*Y^2 + 2*X^4 + 1"); }) ==
              errc::points_at_infinity_not_conjugate);
    }
}

TEST_CASE("quotient-ring reduction", "[curve_ring]") {
    CurvePtr c = new_curve("X^4+Y^4+1");
    auto elem = [&](const std::string& s) { return CurveElem::from_text(c, s); };

    CHECK(elem("Y^4") == elem("-X^4 - 1"));
    CHECK(elem("Y^2") * elem("Y^2") == elem("-X^4 - 1"));
    CHECK(elem("Y").rep() == parse_qpoly2("Y"));

    SECTION("reduction keeps Y-degree below n") {
        SplitMix64 rng(61);
        for (int i = 0; i < 80; ++i) {
            CurveElem z = random_curve_elem(c, rng, 6, 12);
            CHECK(z.rep().deg_y() < 4);
        }
    }
    SECTION("cross-curve arithmetic is rejected") {
        CurvePtr c2 = new_curve("X^2+Y^2+1");
        CHECK_THROWS_MATCHES(CurveElem::from_text(c, "X") + CurveElem::from_text(c2, "X"),
                             error, Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.kind() == errc::ring_mismatch;
                             }));
    }
}

TEST_CASE("pseudo-valuation values", "[curve_ring]") {
    CurvePtr c = new_curve("X^4+Y^4+1");
    auto elem = [&](const std::string& s) { return CurveElem::from_text(c, s); };

    CHECK(d(elem("X")) == PseudoVal::of(Int(4)));
    CHECK(d(elem("Y")) == PseudoVal::of(Int(4)));
    CHECK(d(elem("7")) == PseudoVal::of(Int(0)));
    CHECK(d(elem("X^2*Y")) == PseudoVal::of(Int(12)));
    CHECK(d(CurveElem(c, QPoly2())) == PseudoVal::neg_inf());
}

TEST_CASE("resultant oracle", "[curve_ring]") {
    CurvePtr c = new_curve("X^4+Y^4+1");
    auto elem = [&](const std::string& s) { return CurveElem::from_text(c, s); };

    CHECK(d_oracle(elem("X")) == 4);
    CHECK(d_oracle(elem("Y")) == 4);
    CHECK(d_oracle(elem("1")) == 0);
    CHECK_THROWS_MATCHES(d_oracle(CurveElem(c, QPoly2())), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.kind() == errc::zero_element; }));

    SECTION("d agrees with the oracle on random elements") {
        SplitMix64 rng(62);
        for (int i = 0; i < 100; ++i) {
            CurveElem z = random_curve_elem(c, rng, 4, 10);
            if (z.is_zero()) continue;
            PseudoVal dv = d(z);
            REQUIRE_FALSE(dv.is_neg_inf);
            CHECK(dv.value == d_oracle(z));
        }
    }
}

TEST_CASE("curve units", "[curve_ring]") {
    CurvePtr c = new_curve("X^4+Y^4+1");
    auto elem = [&](const std::string& s) { return CurveElem::from_text(c, s); };
    CHECK(curve_is_unit(elem("5")));
    CHECK_FALSE(curve_is_unit(elem("X")));
    CHECK_FALSE(curve_is_unit(CurveElem(c, QPoly2())));
}

TEST_CASE("pseudo-valuation axioms", "[curve_ring][property]") {
    CurvePtr c = new_curve("X^4+Y^4+1");
    SplitMix64 rng(63);
    for (int i = 0; i < 300; ++i) {
        CurveElem z = random_curve_elem(c, rng, 3, 8);
        CurveElem t = random_curve_elem(c, rng, 3, 8);

        // (d1), (d2)
        CHECK((d(z) == PseudoVal::neg_inf()) == z.is_zero());
        CHECK((d(z) == PseudoVal::of(Int(0))) == curve_is_unit(z));

        // (d4) multiplicativity
        CHECK(d(z * t) == d(z) + d(t));

        // (d3) and (d3')
        PseudoVal dsum = d(z + t);
        PseudoVal m = max(d(z), d(t));
        CHECK(dsum <= m);
        if (!(d(z) == d(t))) CHECK(dsum == m);
    }
}

TEST_CASE("regular rows", "[curve_ring]") {
    SECTION("x^4 + y^4 + 1") {
        CurvePtr c = new_curve("X^4+Y^4+1");
        Mat2<CurveElem> m = coordinate_regular_row(c);
        CHECK(m.a == CurveElem::from_text(c, "X"));
        CHECK(m.b == CurveElem::from_text(c, "Y"));
        CHECK(m.c == CurveElem::from_text(c, "Y^3"));
        CHECK(m.d == CurveElem::from_text(c, "-X^3"));
        CHECK(det(m) == ring_traits<CurveElem>::one_like(m.a));
    }
    SECTION("x^2 + y^2 + 1") {
        CurvePtr c = new_curve("X^2+Y^2+1");
        Mat2<CurveElem> m = coordinate_regular_row(c);
        CHECK(m.c == CurveElem::from_text(c, "Y"));
        CHECK(m.d == CurveElem::from_text(c, "-X"));
        CHECK(det(m) == ring_traits<CurveElem>::one_like(m.a));
    }
    SECTION("origin on the curve") {
        CurvePtr c = new_curve("X^2 + X*Y + Y^2");
        CHECK_THROWS_MATCHES(coordinate_regular_row(c), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.kind() == errc::origin_on_curve;
                             }));
    }
}

TEST_CASE("independence report", "[curve_ring]") {
    SECTION("x^4 + y^4 + 1") {
        CurvePtr c = new_curve("X^4+Y^4+1");
        IndependenceReport rep = independence_cert(c);
        CHECK(rep.n == 4);
        CHECK(rep.ge2_fails);
        for (const auto& item : rep.items) CHECK(item.holds);
    }
    SECTION("x^2 + y^2 + 1") {
        CurvePtr c = new_curve("X^2+Y^2+1");
        IndependenceReport rep = independence_cert(c);
        CHECK(rep.n == 2);
        CHECK(rep.ge2_fails);
    }
}

TEST_CASE("the worked factorization identity", "[curve_ring]") {
    CurvePtr c = new_curve("X^4+Y^4+1");
    auto rep = verify_example_identity(c);
    CHECK(rep.holds);
    CHECK(rep.difference == "0");
    // the four nonscalar factors have d = 8 and are nonunits
    auto elem = [&](const std::string& s) { return CurveElem::from_text(c, s); };
    CHECK(d(elem("X^2+Y^2-1")) == PseudoVal::of(Int(8)));
    CHECK(d(elem("X*Y-1")) == PseudoVal::of(Int(8)));

    CHECK_THROWS_MATCHES(verify_example_identity(new_curve("X^2+Y^2+1")), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.kind() == errc::wrong_curve; }));
}
