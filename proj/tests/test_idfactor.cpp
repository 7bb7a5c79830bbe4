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

#include "idemfact/idfactor.hpp"
#include "idemfact/prng.hpp"

using namespace idemfact;

namespace {
Mat2<Int> zm(long a, long b, long c, long d) {
    return Mat2<Int>{Int(a), Int(b), Int(c), Int(d)};
}

Mat2<Int> product(const std::vector<Mat2<Int>>& fs) {
    Mat2<Int> acc = Mat2<Int>::identity(Int(0));
    for (const auto& f : fs) acc = acc * f;
    return acc;
}

Mat2<Int> random_singular(SplitMix64& rng, long bound) {
    Int v1 = random_int(rng, bound), v2 = random_int(rng, bound);
    Int w1 = random_int(rng, bound), w2 = random_int(rng, bound);
    return Mat2<Int>{v1 * w1, v1 * w2, v2 * w1, v2 * w2};
}
}  // namespace

TEST_CASE("rank-one decomposition", "[idfactor]") {
    SECTION("generic") {
        auto ro = rank_one_decompose(zm(2, 2, 3, 3));
        CHECK(ro.v == std::pair<Int, Int>{Int(2), Int(3)});
        CHECK(ro.w == std::pair<Int, Int>{Int(1), Int(1)});
        CHECK(ro.u.a * Int(2) + ro.u.b * Int(3) == 1);
        CHECK(ro.u.c * Int(2) + ro.u.d * Int(3) == 0);
        auto [ok, reasons] = verify_elem_cert(ro.u_word);
        CHECK(ok);
    }
    SECTION("already top row") {
        auto ro = rank_one_decompose(zm(2, 3, 0, 0));
        CHECK(ro.v == std::pair<Int, Int>{Int(1), Int(0)});
        CHECK(ro.w == std::pair<Int, Int>{Int(2), Int(3)});
    }
    SECTION("negative column direction is normalized") {
        auto ro = rank_one_decompose(zm(-2, -2, -3, -3));
        CHECK(ro.v == std::pair<Int, Int>{Int(2), Int(3)});
        CHECK(ro.w == std::pair<Int, Int>{Int(-1), Int(-1)});
    }
    SECTION("zero first column") {
        auto ro = rank_one_decompose(zm(0, 4, 0, 6));
        CHECK(ro.v == std::pair<Int, Int>{Int(2), Int(3)});
        CHECK(ro.w == std::pair<Int, Int>{Int(0), Int(2)});
    }
    SECTION("errors") {
        CHECK_THROWS_MATCHES(rank_one_decompose(zm(1, 0, 0, 1)), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.kind() == errc::not_singular;
                             }));
        CHECK_THROWS_MATCHES(rank_one_decompose(zm(0, 0, 0, 0)), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.kind() == errc::zero_matrix;
                             }));
    }
}

TEST_CASE("top-row descent matches the pinned choices", "[idfactor]") {
    SECTION("(2, 3)") {
        auto fs = factor_top_row(Int(2), Int(3));
        REQUIRE(fs.size() == 2);
        CHECK(fs[0] == zm(1, 1, 0, 0));
        CHECK(fs[1] == zm(4, 6, -2, -3));
        CHECK(product(fs) == zm(2, 3, 0, 0));
    }
    SECTION("(4, 6)") {
        auto fs = factor_top_row(Int(4), Int(6));
        REQUIRE(fs.size() == 2);
        CHECK(fs[0] == zm(1, 0, 0, 0));
        CHECK(fs[1] == zm(4, 6, -2, -3));
        CHECK(product(fs) == zm(4, 6, 0, 0));
    }
    SECTION("(1, 5) base") {
        auto fs = factor_top_row(Int(1), Int(5));
        REQUIRE(fs.size() == 1);
        CHECK(fs[0] == zm(1, 5, 0, 0));
    }
    SECTION("(7, 0) base") {
        auto fs = factor_top_row(Int(7), Int(0));
        REQUIRE(fs.size() == 2);
        CHECK(fs[0] == zm(1, 1, 0, 0));
        CHECK(fs[1] == zm(1, 0, 6, 0));
        CHECK(product(fs) == zm(7, 0, 0, 0));
    }
    SECTION("(0, b) and (0, 0) bases") {
        auto fs = factor_top_row(Int(0), Int(9));
        CHECK(product(fs) == zm(0, 9, 0, 0));
        auto fz = factor_top_row(Int(0), Int(0));
        REQUIRE(fz.size() == 1);
        CHECK(is_zero_mat(fz[0]));
    }
    SECTION("every factor is idempotent and multiplies back, random pairs") {
        SplitMix64 rng(21);
        for (int i = 0; i < 300; ++i) {
            Int a = random_int(rng, 100000), b = random_int(rng, 100000);
            auto fs = factor_top_row(a, b);
            for (const auto& f : fs) CHECK(is_idempotent(f));
            CHECK(product(fs) == Mat2<Int>{a, b, Int(0), Int(0)});
        }
    }
}

TEST_CASE("full factorization with certificates", "[idfactor]") {
    SECTION("zero matrix") {
        auto cert = factor_id2(zm(0, 0, 0, 0));
        REQUIRE(cert.factors.size() == 1);
        CHECK(is_zero_mat(cert.factors[0]));
        CHECK(verify_cert(cert).first);
    }
    SECTION("top-row input") {
        auto cert = factor_id2(zm(2, 3, 0, 0));
        CHECK(cert.factors.size() == 2);
        CHECK_FALSE(cert.conjugated);
        CHECK(verify_cert(cert).first);
    }
    SECTION("conjugated input") {
        auto cert = factor_id2(zm(2, 2, 3, 3));
        CHECK(cert.conjugated);
        CHECK(product(cert.factors) == zm(2, 2, 3, 3));
        CHECK(verify_cert(cert).first);
    }
    SECTION("identity is rejected") {
        CHECK_THROWS_MATCHES(factor_id2(zm(1, 0, 0, 1)), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.kind() == errc::not_singular;
                             }));
    }
}

TEST_CASE("verify_cert flags corruption", "[idfactor]") {
    auto cert = factor_id2(zm(2, 2, 3, 3));
    REQUIRE(verify_cert(cert).first);

    SECTION("perturbed factor entry") {
        auto bad = cert;
        bad.factors[1].a = bad.factors[1].a + 1;
        auto [ok, reasons] = verify_cert(bad);
        CHECK_FALSE(ok);
        bool saw = false;
        for (const auto& r : reasons) saw = saw || r.find("not idempotent") != std::string::npos;
        CHECK(saw);
    }
    SECTION("reordered non-commuting factors") {
        auto cert2 = factor_id2(zm(2, 3, 0, 0));
        REQUIRE(cert2.factors.size() == 2);
        auto bad = cert2;
        std::swap(bad.factors[0], bad.factors[1]);
        REQUIRE(bad.factors[0] * bad.factors[1] != cert2.factors[0] * cert2.factors[1]);
        auto [ok, reasons] = verify_cert(bad);
        CHECK_FALSE(ok);
        bool saw = false;
        for (const auto& r : reasons) saw = saw || r.find("product mismatch") != std::string::npos;
        CHECK(saw);
    }
}

TEST_CASE("slope relation check", "[idfactor]") {
    CHECK(check_rel(Int(2), Int(3), zm(4, 6, -2, -3)));
    CHECK(check_rel(Int(4), Int(6), zm(4, 6, -2, -3)));
    CHECK_THROWS_MATCHES(check_rel(Int(2), Int(3), zm(1, 1, 0, 0)), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.kind() == errc::precondition_violated;
                         }));
    CHECK_THROWS_AS(check_rel(Int(2), Int(3), zm(1, 2, 3, 4)), error);
    CHECK_FALSE(check_rel(Int(3), Int(2), zm(4, 6, -2, -3)));
}

TEST_CASE("two-generated ideal identity certificates", "[idfactor]") {
    SECTION("worked example") {
        IdemParams<Int> p(Int(2), Int(1), Int(-2));
        auto cert = ideal_identity_cert(p);
        CHECK(cert.gen_xy == 2);
        CHECK(cert.gen_y1mx == -1);
        CHECK(cert.comb_xy * cert.gen_xy + cert.comb_y1mx * cert.gen_y1mx == cert.y);
        CHECK(verify_ideal_identity(cert).first);
    }
    SECTION("x = 1 family") {
        IdemParams<Int> p(Int(1), Int(7), Int(0));
        auto cert = ideal_identity_cert(p);
        CHECK(cert.comb_xy * cert.gen_xy + cert.comb_y1mx * cert.gen_y1mx == Int(7));
        CHECK(verify_ideal_identity(cert).first);
    }
    SECTION("zero pair") {
        IdemParams<Int> p(Int(0), Int(0), Int(5));
        auto cert = ideal_identity_cert(p);
        CHECK(cert.y == 0);
        CHECK(verify_ideal_identity(cert).first);
    }
    SECTION("random idempotent pairs") {
        SplitMix64 rng(22);
        int done = 0;
        while (done < 100) {
            Int x = random_int(rng, 50), y = random_int(rng, 50);
            Int prod = x * (1 - x);
            if (y == 0) {
                if (prod != 0) continue;
                IdemParams<Int> p(x, y, random_int(rng, 50));
                CHECK(verify_ideal_identity(ideal_identity_cert(p)).first);
            } else {
                if (prod % y != 0) continue;
                IdemParams<Int> p(x, y, prod / y);
                CHECK(verify_ideal_identity(ideal_identity_cert(p)).first);
            }
            ++done;
        }
    }
}

TEST_CASE("soundness and conjugation closure on a random corpus", "[idfactor][property]") {
    SplitMix64 rng(23);
    long worst_depth = 0;
    for (int i = 0; i < 200; ++i) {
        Mat2<Int> m = random_singular(rng, 1000);
        auto cert = factor_id2(m);
        auto [ok, reasons] = verify_cert(cert);
        CHECK(ok);
        worst_depth = std::max(worst_depth, static_cast<long>(cert.transcript.size()));

        // conjugating a valid certificate by an elementary product preserves
        // idempotency and the product identity
        Mat2<Int> u = Mat2<Int>::identity(Int(0));
        for (int t = 0; t < 3; ++t) {
            if (rng.chance(50))
                u = u * elem_add(1, 2, Int(rng.range(-3, 3)));
            else
                u = u * elem_add(2, 1, Int(rng.range(-3, 3)));
        }
        Mat2<Int> ui = inverse(u);
        Mat2<Int> conj_input = ui * m * u;
        Mat2<Int> acc = Mat2<Int>::identity(Int(0));
        for (const auto& f : cert.factors) {
            Mat2<Int> g = ui * f * u;
            CHECK(is_idempotent(g));
            acc = acc * g;
        }
        CHECK(acc == conj_input);

        // the rank-normalization conjugator always has an elementary word
        if (cert.conjugated) {
            auto [uok, ureasons] = verify_elem_cert(cert.conjugator_word);
            CHECK(uok);
        }
    }
    // descent depth stays within the advertised logarithmic bound
    CHECK(worst_depth <= 2 * 10 + 4);  // log2(10^6) < 20
    INFO("worst observed descent depth: " << worst_depth);
}

TEST_CASE("descent over rational polynomials", "[idfactor]") {
    QPoly x = QPoly::x();
    SECTION("(X, X^2)") {
        auto fs = factor_top_row(x, x * x);
        Mat2<QPoly> acc = Mat2<QPoly>::identity(x);
        for (const auto& f : fs) {
            CHECK(is_idempotent(f));
            acc = acc * f;
        }
        CHECK(acc == Mat2<QPoly>{x, x * x, QPoly(), QPoly()});
    }
    SECTION("random polynomial pairs") {
        SplitMix64 rng(24);
        for (int i = 0; i < 40; ++i) {
            QPoly a = random_qpoly(rng, 3, 5), b = random_qpoly(rng, 3, 5);
            auto fs = factor_top_row(a, b);
            Mat2<QPoly> acc = Mat2<QPoly>::identity(QPoly::one());
            for (const auto& f : fs) {
                CHECK(is_idempotent(f));
                acc = acc * f;
            }
            CHECK(acc == Mat2<QPoly>{a, b, QPoly(), QPoly()});
        }
    }
    SECTION("random singular polynomial matrices") {
        SplitMix64 rng(25);
        for (int i = 0; i < 20; ++i) {
            QPoly v1 = random_qpoly(rng, 2, 4), v2 = random_qpoly(rng, 2, 4);
            QPoly w1 = random_qpoly(rng, 2, 4), w2 = random_qpoly(rng, 2, 4);
            Mat2<QPoly> m{v1 * w1, v1 * w2, v2 * w1, v2 * w2};
            if (is_zero_mat(m)) continue;
            auto cert = factor_id2(m);
            CHECK(verify_cert(cert).first);
        }
    }
}
