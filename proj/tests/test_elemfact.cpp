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

#include "idemfact/elemfact.hpp"
#include "idemfact/prng.hpp"

using namespace idemfact;

namespace {
Mat2<Int> zm(long a, long b, long c, long d) {
    return Mat2<Int>{Int(a), Int(b), Int(c), Int(d)};
}

TForm<Int> random_valid_tform(SplitMix64& rng, long max_k, long bound) {
    TForm<Int> tf{Int(rng.chance(50) ? 1 : -1), Int(rng.chance(50) ? 1 : -1), {}};
    long k = rng.range(0, max_k);
    for (long t = 0; t < k; ++t) {
        bool first = (t == 0), last = (t + 1 == k);
        long lo = first ? 0 : 1;
        if (last) lo = -bound;
        tf.rs.push_back(Int(rng.range(lo, bound)));
    }
    if (tf.rs.size() == 2 && tf.rs[0] == 0 && tf.rs[1] == 0) tf.rs[1] = Int(rng.range(1, bound));
    return tf;
}

Mat2<Int> random_elementary_product(SplitMix64& rng, long max_factors, long bound) {
    Mat2<Int> m = Mat2<Int>::identity(Int(0));
    long nf = rng.range(1, max_factors);
    for (long t = 0; t < nf; ++t) {
        long which = rng.range(0, 2);
        if (which == 0)
            m = m * elem_add(1, 2, Int(rng.range(-bound, bound)));
        else if (which == 1)
            m = m * elem_add(2, 1, Int(rng.range(-bound, bound)));
        else
            m = m * diag(Int(rng.chance(50) ? 1 : -1), Int(rng.chance(50) ? 1 : -1));
    }
    return m;
}
}  // namespace

TEST_CASE("Gauss-Euclid elementary factorization", "[elemfact]") {
    SECTION("identity") {
        auto cert = factor_ge2_euclid(zm(1, 0, 0, 1));
        REQUIRE(cert.factors.size() == 1);
        CHECK(cert.factors[0].kind == ElemKind::diag_units);
        CHECK(cert.factors[0].u == 1);
        CHECK(cert.factors[0].v == 1);
    }
    SECTION("single transvection") {
        auto cert = factor_ge2_euclid(zm(1, 5, 0, 1));
        REQUIRE(cert.factors.size() == 1);
        CHECK(cert.factors[0].kind == ElemKind::transvection);
        CHECK(cert.factors[0].i == 1);
        CHECK(cert.factors[0].j == 2);
        CHECK(cert.factors[0].r == 5);
    }
    SECTION("continued-fraction shape") {
        auto cert = factor_ge2_euclid(zm(2, 1, 1, 1));
        CHECK(verify_elem_cert(cert).first);
        CHECK(product_of(cert.factors, Int(0)) == zm(2, 1, 1, 1));
    }
    SECTION("not invertible") {
        CHECK_THROWS_MATCHES(factor_ge2_euclid(zm(2, 0, 0, 1)), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.kind() == errc::not_invertible;
                             }));
    }
    SECTION("random invertible matrices over Z") {
        SplitMix64 rng(31);
        for (int i = 0; i < 150; ++i) {
            Mat2<Int> m = random_elementary_product(rng, 8, 20);
            auto cert = factor_ge2_euclid(m);
            CHECK(verify_elem_cert(cert).first);
        }
    }
    SECTION("over rational polynomials") {
        QPoly x = QPoly::x();
        Mat2<QPoly> m = elem_add(1, 2, x) * elem_add(2, 1, x + QPoly::one());
        auto cert = factor_ge2_euclid(m);
        CHECK(verify_elem_cert(cert).first);
    }
}

TEST_CASE("standard forms: validity and construction", "[elemfact]") {
    CHECK(tform_valid(TForm<Int>{Int(1), Int(1), {}}));
    CHECK(tform_valid(TForm<Int>{Int(1), Int(-1), {Int(-3)}}));  // k = 1 unconstrained
    CHECK(tform_valid(TForm<Int>{Int(1), Int(1), {Int(0), Int(5)}}));
    CHECK_FALSE(tform_valid(TForm<Int>{Int(1), Int(1), {Int(0), Int(0)}}));
    CHECK_FALSE(tform_valid(TForm<Int>{Int(1), Int(1), {Int(-1), Int(2)}}));
    CHECK_FALSE(tform_valid(TForm<Int>{Int(1), Int(1), {Int(1), Int(0), Int(2)}}));
    CHECK_FALSE(tform_valid(TForm<Int>{Int(2), Int(1), {}}));
    CHECK(tform_matrix(TForm<Int>{Int(1), Int(1), {Int(1), Int(1)}}) == zm(2, 1, 1, 1));
}

TEST_CASE("normal form of elementary words", "[elemfact]") {
    SECTION("identity word") {
        auto cert = factor_ge2_euclid(zm(1, 0, 0, 1));
        auto tf = tform_of_elementary_product(cert);
        CHECK(tf.alpha == 1);
        CHECK(tf.beta == 1);
        CHECK(tf.rs.empty());
    }
    SECTION("(2,1;1,1) = T(1) T(1)") {
        auto cert = factor_ge2_euclid(zm(2, 1, 1, 1));
        auto tf = tform_of_elementary_product(cert);
        CHECK(tf.alpha == 1);
        CHECK(tf.beta == 1);
        CHECK(tf.rs == std::vector<Int>{Int(1), Int(1)});
    }
    SECTION("T(3) alone") {
        auto cert = factor_ge2_euclid(zm(3, 1, 1, 0));
        auto tf = tform_of_elementary_product(cert);
        CHECK(tf.alpha == 1);
        CHECK(tf.beta == 1);
        CHECK(tf.rs == std::vector<Int>{Int(3)});
    }
    SECTION("agrees with matrix recovery on random words") {
        SplitMix64 rng(32);
        for (int i = 0; i < 700; ++i) {
            ElemCert<Int> cert;
            cert.input = Mat2<Int>::identity(Int(0));
            long nf = rng.range(1, 14);
            for (long t = 0; t < nf; ++t) {
                long which = rng.range(0, 3);  // diag-heavy mix
                ElemFactor<Int> f =
                    which == 0
                        ? ElemFactor<Int>::transvection(1, 2, Int(rng.range(-9, 9)))
                        : (which == 1
                               ? ElemFactor<Int>::transvection(2, 1, Int(rng.range(-9, 9)))
                               : ElemFactor<Int>::diag_units(Int(rng.chance(50) ? 1 : -1),
                                                             Int(rng.chance(50) ? 1 : -1)));
                cert.factors.push_back(f);
                cert.input = cert.input * f.matrix();
            }
            auto tf = tform_of_elementary_product(cert);
            CHECK(tform_valid(tf));
            CHECK(tform_matrix(tf) == cert.input);
            auto back = tform_recover_int(cert.input);
            CHECK(back.alpha == tf.alpha);
            CHECK(back.beta == tf.beta);
            CHECK(back.rs == tf.rs);
        }
    }
    SECTION("over Int(Z)") {
        IntZPoly x({Int(0), Int(1)});
        ElemCert<IntZPoly> cert;
        cert.input = Mat2<IntZPoly>::identity(x);
        for (const auto& f :
             {ElemFactor<IntZPoly>::transvection(1, 2, x),
              ElemFactor<IntZPoly>::transvection(2, 1, IntZPoly(Int(1))),
              ElemFactor<IntZPoly>::diag_units(IntZPoly(Int(-1)), IntZPoly(Int(1)))}) {
            cert.factors.push_back(f);
            cert.input = cert.input * f.matrix();
        }
        auto tf = tform_of_elementary_product(cert);
        CHECK(tform_valid(tf));
        CHECK(tform_matrix(tf) == cert.input);
    }
}

TEST_CASE("integer recovery", "[elemfact]") {
    SECTION("worked examples") {
        auto t1 = tform_recover_int(zm(2, 1, 1, 1));
        CHECK(t1.alpha == 1);
        CHECK(t1.beta == 1);
        CHECK(t1.rs == std::vector<Int>{Int(1), Int(1)});

        auto t2 = tform_recover_int(zm(0, 1, 1, 0));
        CHECK(t2.rs == std::vector<Int>{Int(0)});

        auto t3 = tform_recover_int(zm(1, 0, 0, 1));
        CHECK(t3.rs.empty());

        auto t4 = tform_recover_int(zm(-2, 1, 1, 0));  // T(-2): k = 1, negative argument
        CHECK(t4.alpha == 1);
        CHECK(t4.beta == 1);
        CHECK(t4.rs == std::vector<Int>{Int(-2)});

        CHECK_THROWS_AS(tform_recover_int(zm(2, 0, 0, 1)), error);
    }
    SECTION("roundtrip on random valid forms") {
        SplitMix64 rng(33);
        for (int i = 0; i < 400; ++i) {
            TForm<Int> tf = random_valid_tform(rng, 12, 50);
            REQUIRE(tform_valid(tf));
            Mat2<Int> m = tform_matrix(tf);
            TForm<Int> back = tform_recover_int(m);
            CHECK(back.alpha == tf.alpha);
            CHECK(back.beta == tf.beta);
            CHECK(back.rs == tf.rs);
        }
    }
    SECTION("exhaustive small forms: construction is injective") {
        std::vector<TForm<Int>> forms;
        // k = 0
        for (long u : {-1L, 1L})
            for (long v : {-1L, 1L}) forms.push_back(TForm<Int>{Int(u), Int(v), {}});
        // k = 1, r in [-3, 3]
        for (long u : {-1L, 1L})
            for (long v : {-1L, 1L})
                for (long r = -3; r <= 3; ++r)
                    forms.push_back(TForm<Int>{Int(u), Int(v), {Int(r)}});
        // k = 2, r1 in [0,3], r2 in [-3,3], not both zero
        for (long u : {-1L, 1L})
            for (long v : {-1L, 1L})
                for (long r1 = 0; r1 <= 3; ++r1)
                    for (long r2 = -3; r2 <= 3; ++r2) {
                        if (r1 == 0 && r2 == 0) continue;
                        forms.push_back(TForm<Int>{Int(u), Int(v), {Int(r1), Int(r2)}});
                    }
        // k = 3
        for (long u : {-1L, 1L})
            for (long v : {-1L, 1L})
                for (long r1 = 0; r1 <= 3; ++r1)
                    for (long r2 = 1; r2 <= 3; ++r2)
                        for (long r3 = -3; r3 <= 3; ++r3)
                            forms.push_back(
                                TForm<Int>{Int(u), Int(v), {Int(r1), Int(r2), Int(r3)}});

        std::vector<Mat2<Int>> mats;
        for (const auto& tf : forms) {
            REQUIRE(tform_valid(tf));
            Mat2<Int> m = tform_matrix(tf);
            for (const auto& seen : mats) CHECK_FALSE(seen == m);
            mats.push_back(m);
            TForm<Int> back = tform_recover_int(m);
            CHECK(back.alpha == tf.alpha);
            CHECK(back.beta == tf.beta);
            CHECK(back.rs == tf.rs);
        }
    }
}

TEST_CASE("continuant consistency of recovered forms", "[elemfact][property]") {
    SplitMix64 rng(34);
    Int w(0);
    for (int i = 0; i < 200; ++i) {
        Mat2<Int> m = random_elementary_product(rng, 8, 20);
        TForm<Int> tf = tform_recover_int(m);
        const auto& rs = tf.rs;
        std::size_t k = rs.size();
        auto sub = [&](std::size_t lo, std::size_t hi) {
            return std::vector<Int>(rs.begin() + static_cast<long>(lo),
                                    rs.begin() + static_cast<long>(hi));
        };
        // entries match (alpha p_k, alpha p_{k-1}; beta p_{k-1}(tail),
        // beta p_{k-2}(interior))
        Mat2<Int> cm = continuant_matrix(std::span<const Int>(rs.data(), rs.size()), w);
        CHECK(m.a == tf.alpha * cm.a);
        CHECK(m.b == tf.alpha * cm.b);
        CHECK(m.c == tf.beta * cm.c);
        CHECK(m.d == tf.beta * cm.d);

        // the peel inequality: with k >= 2 and b > 0, b >= a - b r_k >= 0,
        // strict unless the truncated continuants coincide
        if (k >= 2 && m.b > 0) {
            Int y = m.a - m.b * rs[k - 1];
            CHECK(y >= 0);
            CHECK(y <= m.b);
            Int pk1 = continuant(sub(0, k - 1), w);
            Int pk2 = continuant(sub(0, k - 2), w);
            if (pk1 != pk2) CHECK(y < m.b);
            if (pk2 != 0) CHECK(y > 0);
        }
    }
}
