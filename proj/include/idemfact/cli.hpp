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

#ifndef IDEMFACT_CLI_HPP
#define IDEMFACT_CLI_HPP

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "idemfact/prng.hpp"
#include "idemfact/serialize.hpp"

namespace idemfact::cli {

// exit codes: 0 success, 1 failed verification, 2 domain error, 3 parse error
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kDomainError = 2;
inline constexpr int kParseError = 3;

namespace detail {

inline json load_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    check(!j.is_discarded(), errc::parse_error, "malformed JSON");
    return j;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    check(static_cast<bool>(in), errc::parse_error, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_json_text(ss.str());
}

/// --matrix accepts inline JSON (starts with '[' or '{') or a file path.
inline json load_matrix_arg(const std::string& arg, const std::string& ring_flag) {
    json j;
    std::size_t first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{'))
        j = load_json_text(arg);
    else
        j = load_json_file(arg);
    if (j.is_array()) {
        check(!ring_flag.empty(), errc::parse_error,
              "a bare rows array needs --ring");
        return json{{"ring", json(ring_flag)}, {"rows", j}};
    }
    check(j.is_object() && j.contains("rows"), errc::parse_error,
          "matrix document needs rows");
    if (!j.contains("ring")) {
        check(!ring_flag.empty(), errc::parse_error, "matrix document needs a ring");
        j["ring"] = json(ring_flag);
    } else if (!ring_flag.empty()) {
        j["ring"] = json(ring_flag);
    }
    return j;
}

inline void emit(const json& doc, const std::string& out_path) {
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        check(static_cast<bool>(out), errc::parse_error, "cannot write '" + out_path + "'");
        out << text;
    }
}

inline long depth_default() {
    if (const char* env = std::getenv("IDEMFACT_DEPTH")) {
        try {
            long v = std::stol(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return 8;
}

// -- corpus ---------------------------------------------------------------

struct CorpusCase {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline CorpusCase run_case(const std::string& name, const std::function<std::string()>& fn) {
    CorpusCase c;
    c.name = name;
    try {
        c.detail = fn();
        c.pass = true;
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = e.what();
    }
    return c;
}

inline std::vector<CorpusCase> run_corpus(const std::string& data_dir, std::uint64_t seed) {
    std::vector<CorpusCase> out;
    auto expect = [](bool cond, const std::string& msg) {
        if (!cond) throw std::runtime_error(msg);
    };

    out.push_back(run_case("witness-determinant-one", [&] {
        json j = load_json_file(data_dir + "/witness.json");
        Mat2<IntZPoly> w = mat_from_json<IntZPoly>(j);
        expect(det(w) == IntZPoly::one(), "det != 1");
        return std::string("det = 1 exactly");
    }));

    out.push_back(run_case("witness-not-factorable", [&] {
        json j = load_json_file(data_dir + "/witness.json");
        Mat2<IntZPoly> w = mat_from_json<IntZPoly>(j);
        auto trace = decide_ge2_dor(w, depth_default());
        expect(trace.verdict == ObsVerdict::not_factorable, "verdict not NotFactorable");
        auto [ok, reasons] = check_obstruction(trace);
        expect(ok, "trace did not re-verify");
        return std::string("NotFactorable, trace verified");
    }));

    out.push_back(run_case("idfactor-golden-2-3", [&] {
        auto factors = factor_top_row<Int>(Int(2), Int(3));
        expect(factors.size() == 2, "unexpected factor count");
        Mat2<Int> want{Int(4), Int(6), Int(-2), Int(-3)};
        expect(factors[1] == want, "unexpected slope factor");
        return std::string("2 factors, slope factor (4,6;-2,-3)");
    }));

    out.push_back(run_case("idfactor-random", [&] {
        SplitMix64 rng(seed);
        for (int i = 0; i < 100; ++i) {
            Int v1 = random_int(rng, 1000), v2 = random_int(rng, 1000);
            Int w1 = random_int(rng, 1000), w2 = random_int(rng, 1000);
            Mat2<Int> m{v1 * w1, v1 * w2, v2 * w1, v2 * w2};
            auto cert = factor_id2(m);
            auto [ok, reasons] = verify_cert(cert);
            expect(ok, "certificate failed at case " + std::to_string(i));
        }
        return std::string("100 random singular matrices factored and verified");
    }));

    out.push_back(run_case("tform-roundtrip", [&] {
        SplitMix64 rng(seed + 1);
        for (int i = 0; i < 50; ++i) {
            TForm<Int> tf{Int(rng.chance(50) ? 1 : -1), Int(rng.chance(50) ? 1 : -1), {}};
            long k = rng.range(0, 6);
            for (long t = 0; t < k; ++t) {
                bool last = (t + 1 == k), first = (t == 0);
                long lo = first ? 0 : 1;
                if (last) lo = -10;
                tf.rs.push_back(Int(rng.range(lo, 10)));
            }
            if (tf.rs.size() == 2 && tf.rs[0] == 0 && tf.rs[1] == 0) tf.rs[1] = 1;
            if (!tform_valid(tf)) continue;
            Mat2<Int> m = tform_matrix(tf);
            TForm<Int> back = tform_recover_int(m);
            expect(back.alpha == tf.alpha && back.beta == tf.beta && back.rs == tf.rs,
                   "roundtrip mismatch at case " + std::to_string(i));
        }
        return std::string("50 random standard forms round-tripped");
    }));

    out.push_back(run_case("obstruct-complete-over-Z", [&] {
        SplitMix64 rng(seed + 2);
        for (int i = 0; i < 50; ++i) {
            Mat2<Int> m = Mat2<Int>::identity(Int(0));
            long nf = rng.range(1, 6);
            for (long t = 0; t < nf; ++t) {
                long which = rng.range(0, 2);
                if (which == 0)
                    m = m * elem_add(1, 2, Int(rng.range(-8, 8)));
                else if (which == 1)
                    m = m * elem_add(2, 1, Int(rng.range(-8, 8)));
                else
                    m = m * diag(Int(rng.chance(50) ? 1 : -1), Int(rng.chance(50) ? 1 : -1));
            }
            auto trace = decide_ge2_dor(m, 64);
            expect(trace.verdict == ObsVerdict::factored, "elementary product not factored");
            expect(tform_matrix(*trace.tform) == m, "reconstruction mismatch");
        }
        return std::string("50 random elementary products factored");
    }));

    out.push_back(run_case("intz-roundtrip", [&] {
        SplitMix64 rng(seed + 3);
        for (int i = 0; i < 100; ++i) {
            IntZPoly f = random_intz(rng, 8, 100);
            IntZPoly back = IntZPoly::from_rational_poly(f.to_rational_poly());
            expect(back == f, "basis conversion roundtrip failed");
        }
        return std::string("100 basis-conversion roundtrips");
    }));

    out.push_back(run_case("curve-example-identity", [&] {
        CurvePtr curve = new_curve("X^4+Y^4+1");
        auto rep = verify_example_identity(curve);
        expect(rep.holds, "identity failed");
        SplitMix64 rng(seed + 4);
        for (int i = 0; i < 25; ++i) {
            CurveElem z = random_curve_elem(curve, rng, 4, 10);
            if (z.is_zero()) continue;
            expect(Int(curve->n()) * Int(z.rep().total_deg()) == d_oracle(z),
                   "d disagrees with the resultant oracle");
        }
        return std::string("identity verified; d matches the oracle on 25 elements");
    }));

    return out;
}

// -- verify ----------------------------------------------------------------

inline std::pair<bool, std::vector<std::string>> verify_document(const json& doc) {
    check(doc.is_object() && doc.contains("kind"), errc::parse_error,
          "document has no kind field");
    std::string kind = doc["kind"].get<std::string>();
    RingId ring = doc.contains("ring") ? ring_from_json(doc["ring"]) : RingId::Z();

    if (kind == "idem_cert") {
        if (ring.tag == RingTag::integer) return verify_cert(idem_cert_from_json<Int>(doc));
        if (ring.tag == RingTag::rational_poly)
            return verify_cert(idem_cert_from_json<QPoly>(doc));
        raise(errc::not_euclidean, "idem_cert over a non-Euclidean ring");
    }
    if (kind == "elem_cert") {
        if (ring.tag == RingTag::integer) return verify_elem_cert(elem_cert_from_json<Int>(doc));
        if (ring.tag == RingTag::rational_poly)
            return verify_elem_cert(elem_cert_from_json<QPoly>(doc));
        if (ring.tag == RingTag::int_z)
            return verify_elem_cert(elem_cert_from_json<IntZPoly>(doc));
        raise(errc::parse_error, "elem_cert over an unsupported ring");
    }
    if (kind == "tform") {
        std::vector<std::string> reasons;
        auto check_tform = [&](auto tf, auto witness) {
            using R = decltype(witness);
            std::string why;
            if (!tform_valid(tf, &why)) reasons.push_back("invariants: " + why);
            if (doc.contains("matrix")) {
                Mat2<R> m = mat_from_rows<R>(ring, doc["matrix"]);
                if (!(tform_matrix(tf) == m)) reasons.push_back("matrix reconstruction failed");
            }
        };
        if (ring.tag == RingTag::integer)
            check_tform(tform_from_json<Int>(doc), Int());
        else if (ring.tag == RingTag::int_z)
            check_tform(tform_from_json<IntZPoly>(doc), IntZPoly());
        else
            raise(errc::not_discretely_ordered, "tform over an unordered ring");
        return {reasons.empty(), reasons};
    }
    if (kind == "obstruction_trace") {
        if (ring.tag == RingTag::integer) return check_obstruction(trace_from_json<Int>(doc));
        if (ring.tag == RingTag::int_z)
            return check_obstruction(trace_from_json<IntZPoly>(doc));
        raise(errc::not_discretely_ordered, "trace over an unordered ring");
    }
    if (kind == "curve_report") {
        CurvePtr curve = new_curve(doc.at("curve").get<std::string>());
        IndependenceReport fresh = independence_cert(curve);
        std::vector<std::string> reasons;
        if (fresh.ge2_fails != doc.at("ge2_fails").get<bool>())
            reasons.push_back("verdict does not reproduce");
        return {reasons.empty(), reasons};
    }
    if (kind == "example_identity") {
        CurvePtr curve = new_curve("X^4+Y^4+1");
        auto rep = verify_example_identity(curve);
        std::vector<std::string> reasons;
        if (rep.holds != doc.at("holds").get<bool>()) reasons.push_back("verdict mismatch");
        return {reasons.empty(), reasons};
    }
    raise(errc::parse_error, "unknown document kind '" + kind + "'");
}

}  // namespace detail

/// Entry point used by both the binary and the tests.
inline int run(std::vector<std::string> args) {
    CLI::App app{"exact 2x2 matrix factorization over rings, with certificates"};
    app.require_subcommand(1);

    std::string ring_flag, matrix_arg, out_path, cert_path, poly_arg, curve_f, file_arg,
        data_dir = "data";
    long depth = 0;
    std::uint64_t seed = 12345;
    bool example_identity = false;

    auto* c_id2 = app.add_subcommand("factor-id2", "factor a singular matrix into idempotents");
    c_id2->add_option("--ring", ring_flag, "ring tag (Z, Q[X])");
    c_id2->add_option("--matrix", matrix_arg, "inline JSON rows or a file")->required();
    c_id2->add_option("--out", out_path, "output path (default stdout)");

    auto* c_ge2 = app.add_subcommand("factor-ge2",
                                     "factor an invertible matrix into elementary factors");
    c_ge2->add_option("--ring", ring_flag, "ring tag (Z, Q[X])");
    c_ge2->add_option("--matrix", matrix_arg, "inline JSON rows or a file")->required();
    c_ge2->add_option("--out", out_path, "output path");

    auto* c_tform = app.add_subcommand("tform", "standard form of an elementary product");
    c_tform->add_option("--ring", ring_flag, "ring tag (Z, IntZ)");
    c_tform->add_option("--matrix", matrix_arg, "matrix (integer ring only)");
    c_tform->add_option("--cert", cert_path, "elem_cert JSON file to normalize");
    c_tform->add_option("--out", out_path, "output path");

    auto* c_obs = app.add_subcommand("obstruct", "decide elementary factorability");
    c_obs->add_option("--ring", ring_flag, "ring tag (Z, IntZ)");
    c_obs->add_option("--matrix", matrix_arg, "inline JSON rows or a file")->required();
    c_obs->add_option("--depth", depth, "depth limit (default IDEMFACT_DEPTH or 8)");
    c_obs->add_option("--out", out_path, "output path");

    auto* c_intz = app.add_subcommand("intz-convert",
                                      "convert a rational polynomial to the binomial basis");
    c_intz->add_option("--poly", poly_arg, "polynomial or binom[...] text")->required();
    c_intz->add_option("--out", out_path, "output path");

    auto* c_curve = app.add_subcommand("curve-report", "GE2 failure report for a plane curve");
    c_curve->add_option("--F", curve_f, "defining polynomial, e.g. X^4+Y^4+1")->required();
    c_curve->add_flag("--example-identity", example_identity,
                      "also check the x^4+y^4+1 factorization identity");
    c_curve->add_option("--seed", seed, "seed for the spot checks");
    c_curve->add_option("--out", out_path, "output path");

    auto* c_verify = app.add_subcommand("verify", "re-check a certificate document");
    c_verify->add_option("file", file_arg, "certificate JSON file")->required();

    auto* c_corpus = app.add_subcommand("corpus", "run the bundled golden corpus");
    c_corpus->add_option("--data", data_dir, "data directory (default: data)");
    c_corpus->add_option("--seed", seed, "corpus seed");

    try {
        std::vector<const char*> argv;
        argv.push_back("idemfact");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kParseError;
    }

    try {
        if (c_id2->parsed()) {
            json jm = detail::load_matrix_arg(matrix_arg, ring_flag);
            RingId ring = ring_from_json(jm["ring"]);
            json doc;
            if (ring.tag == RingTag::integer) {
                auto cert = factor_id2(mat_from_json<Int>(jm));
                doc = idem_cert_to_json(cert);
            } else if (ring.tag == RingTag::rational_poly) {
                auto cert = factor_id2(mat_from_json<QPoly>(jm));
                doc = idem_cert_to_json(cert);
            } else {
                raise(errc::not_euclidean, "factor-id2 needs a Euclidean ring (Z or Q[X])");
            }
            detail::emit(doc, out_path);
            return kOk;
        }
        if (c_ge2->parsed()) {
            json jm = detail::load_matrix_arg(matrix_arg, ring_flag);
            RingId ring = ring_from_json(jm["ring"]);
            json doc;
            if (ring.tag == RingTag::integer) {
                doc = elem_cert_to_json(factor_ge2_euclid(mat_from_json<Int>(jm)));
            } else if (ring.tag == RingTag::rational_poly) {
                doc = elem_cert_to_json(factor_ge2_euclid(mat_from_json<QPoly>(jm)));
            } else {
                raise(errc::not_euclidean, "factor-ge2 needs a Euclidean ring (Z or Q[X])");
            }
            detail::emit(doc, out_path);
            return kOk;
        }
        if (c_tform->parsed()) {
            json doc;
            if (!cert_path.empty()) {
                json jc = detail::load_json_file(cert_path);
                RingId ring = ring_from_json(jc.at("ring"));
                if (ring.tag == RingTag::integer) {
                    auto cert = elem_cert_from_json<Int>(jc);
                    auto [ok, reasons] = verify_elem_cert(cert);
                    check(ok, errc::precondition_violated, "input cert invalid");
                    auto tf = tform_of_elementary_product(cert);
                    doc = tform_to_json(tf, &cert.input);
                } else if (ring.tag == RingTag::int_z) {
                    auto cert = elem_cert_from_json<IntZPoly>(jc);
                    auto [ok, reasons] = verify_elem_cert(cert);
                    check(ok, errc::precondition_violated, "input cert invalid");
                    auto tf = tform_of_elementary_product(cert);
                    doc = tform_to_json(tf, &cert.input);
                } else {
                    raise(errc::not_discretely_ordered, "tform needs Z or IntZ");
                }
            } else {
                check(!matrix_arg.empty(), errc::parse_error, "tform needs --matrix or --cert");
                json jm = detail::load_matrix_arg(matrix_arg, ring_flag);
                RingId ring = ring_from_json(jm["ring"]);
                check(ring.tag == RingTag::integer, errc::not_discretely_ordered,
                      "matrix recovery is defined over Z");
                Mat2<Int> m = mat_from_json<Int>(jm);
                auto tf = tform_recover_int(m);
                doc = tform_to_json(tf, &m);
            }
            detail::emit(doc, out_path);
            return kOk;
        }
        if (c_obs->parsed()) {
            json jm = detail::load_matrix_arg(matrix_arg, ring_flag);
            RingId ring = ring_from_json(jm["ring"]);
            long d = depth > 0 ? depth : detail::depth_default();
            json doc;
            if (ring.tag == RingTag::integer) {
                doc = trace_to_json(decide_ge2_dor(mat_from_json<Int>(jm), d));
            } else if (ring.tag == RingTag::int_z) {
                doc = trace_to_json(decide_ge2_dor(mat_from_json<IntZPoly>(jm), d));
            } else {
                raise(errc::not_discretely_ordered, "obstruct needs Z or IntZ");
            }
            detail::emit(doc, out_path);
            return kOk;
        }
        if (c_intz->parsed()) {
            IntZPoly f = parse_intz(poly_arg);
            json coords = json::array();
            for (const auto& a : f.coords()) {
                if (a.fits_slong_p())
                    coords.push_back(a.get_si());
                else
                    coords.push_back(to_string(a));
            }
            json doc{{"kind", "intz"},
                     {"binom", coords},
                     {"poly", to_string(f.to_rational_poly())}};
            detail::emit(doc, out_path);
            return kOk;
        }
        if (c_curve->parsed()) {
            CurvePtr curve = new_curve(curve_f);
            json doc = independence_report_to_json(independence_cert(curve, seed));
            if (example_identity) doc["example_identity"] = example_identity_to_json(
                verify_example_identity(curve));
            detail::emit(doc, out_path);
            return kOk;
        }
        if (c_verify->parsed()) {
            json doc = detail::load_json_file(file_arg);
            auto [ok, reasons] = detail::verify_document(doc);
            json outj{{"valid", ok}, {"reasons", reasons}};
            detail::emit(outj, "");
            return ok ? kOk : kInvalid;
        }
        if (c_corpus->parsed()) {
            auto cases = detail::run_corpus(data_dir, seed);
            bool all = true;
            std::size_t width = 0;
            for (const auto& c : cases) width = std::max(width, c.name.size());
            for (const auto& c : cases) {
                all = all && c.pass;
                std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name
                          << std::string(width - c.name.size() + 2, ' ') << c.detail << "\n";
            }
            std::cout << (all ? "corpus: all cases passed\n" : "corpus: FAILURES\n");
            return all ? kOk : kInvalid;
        }
    } catch (const error& e) {
        detail::emit(error_to_json(e), "");
        std::cerr << e.what() << "\n";
        return e.kind() == errc::parse_error ? kParseError : kDomainError;
    } catch (const json::exception& e) {
        json doc{{"error", json{{"kind", "ParseError"}, {"message", e.what()}}}};
        detail::emit(doc, "");
        return kParseError;
    }
    return kParseError;
}

}  // namespace idemfact::cli

#endif
