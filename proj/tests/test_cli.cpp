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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "idemfact/cli.hpp"

using namespace idemfact;

namespace {

struct CliResult {
    int code;
    std::string out;
};

CliResult run_cli(std::vector<std::string> args) {
    std::stringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    int code = cli::run(std::move(args));
    std::cout.rdbuf(old);
    return {code, captured.str()};
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/idemfact_test_") + name;
}

}  // namespace

TEST_CASE("factor-id2 emits a verifiable certificate", "[cli]") {
    auto res = run_cli({"factor-id2", "--ring", "Z", "--matrix", "[[2,3],[0,0]]"});
    REQUIRE(res.code == cli::kOk);
    json doc = json::parse(res.out);
    CHECK(doc["kind"] == "idem_cert");
    CHECK(doc["factors"].size() == 2);
    auto cert = idem_cert_from_json<Int>(doc);
    CHECK(verify_cert(cert).first);

    SECTION("JSON round-trip is the identity") {
        CHECK(idem_cert_to_json(cert) == doc);
    }
    SECTION("deterministic output") {
        auto res2 = run_cli({"factor-id2", "--ring", "Z", "--matrix", "[[2,3],[0,0]]"});
        CHECK(res.out == res2.out);
    }
    SECTION("round-trips through the verify verb") {
        std::string path = temp_path("idem_cert.json");
        std::ofstream(path) << res.out;
        CHECK(run_cli({"verify", path}).code == cli::kOk);

        json bad = json::parse(res.out);
        bad["factors"][0][0][0] = "99";
        std::ofstream(path) << bad.dump();
        CHECK(run_cli({"verify", path}).code == cli::kInvalid);
    }
}

TEST_CASE("factor-id2 over rational polynomials", "[cli]") {
    auto res = run_cli({"factor-id2", "--ring", "Q[X]", "--matrix",
                        R"([["X","X^2"],["0","0"]])"});
    REQUIRE(res.code == cli::kOk);
    json doc = json::parse(res.out);
    auto cert = idem_cert_from_json<QPoly>(doc);
    CHECK(verify_cert(cert).first);

    std::string path = temp_path("idem_cert_qx.json");
    std::ofstream(path) << res.out;
    CHECK(run_cli({"verify", path}).code == cli::kOk);
}

TEST_CASE("factor-ge2 and tform", "[cli]") {
    auto res = run_cli({"factor-ge2", "--ring", "Z", "--matrix", "[[2,1],[1,1]]"});
    REQUIRE(res.code == cli::kOk);
    json doc = json::parse(res.out);
    CHECK(doc["kind"] == "elem_cert");

    std::string path = temp_path("elem_cert.json");
    std::ofstream(path) << res.out;
    CHECK(run_cli({"verify", path}).code == cli::kOk);

    auto tf = run_cli({"tform", "--cert", path});
    REQUIRE(tf.code == cli::kOk);
    json tdoc = json::parse(tf.out);
    CHECK(tdoc["kind"] == "tform");
    CHECK(tdoc["rs"] == json::array({"1", "1"}));

    auto tm = run_cli({"tform", "--ring", "Z", "--matrix", "[[2,1],[1,1]]"});
    REQUIRE(tm.code == cli::kOk);
    CHECK(json::parse(tm.out)["rs"] == json::array({"1", "1"}));

    // the emitted tform document verifies, and a corrupted one does not
    std::string tpath = temp_path("tform.json");
    std::ofstream(tpath) << tm.out;
    CHECK(run_cli({"verify", tpath}).code == cli::kOk);
    json bad = json::parse(tm.out);
    bad["rs"][0] = "-7";
    std::ofstream(tpath) << bad.dump();
    CHECK(run_cli({"verify", tpath}).code == cli::kInvalid);
}

TEST_CASE("obstruct on the bundled witness", "[cli]") {
    auto res = run_cli({"obstruct", "--ring", "IntZ", "--matrix", "data/witness.json",
                        "--depth", "8"});
    REQUIRE(res.code == cli::kOk);
    json doc = json::parse(res.out);
    CHECK(doc["kind"] == "obstruction_trace");
    CHECK(doc["verdict"] == "NotFactorable");

    std::string path = temp_path("trace.json");
    std::ofstream(path) << res.out;
    CHECK(run_cli({"verify", path}).code == cli::kOk);

    SECTION("trace JSON round-trips") {
        auto trace = trace_from_json<IntZPoly>(doc);
        CHECK(check_obstruction(trace).first);
        CHECK(trace_to_json(trace) == doc);
    }
}

TEST_CASE("intz-convert", "[cli]") {
    auto res = run_cli({"intz-convert", "--poly", "X^2"});
    REQUIRE(res.code == cli::kOk);
    json doc = json::parse(res.out);
    CHECK(doc["kind"] == "intz");
    CHECK(doc["binom"] == json::array({0, 1, 2}));

    auto bad = run_cli({"intz-convert", "--poly", "1/2*X"});
    CHECK(bad.code == cli::kDomainError);
    CHECK(json::parse(bad.out)["error"]["kind"] == "NotIntegerValued");
}

TEST_CASE("curve-report", "[cli]") {
    auto res = run_cli({"curve-report", "--F", "X^4+Y^4+1", "--example-identity"});
    REQUIRE(res.code == cli::kOk);
    json doc = json::parse(res.out);
    CHECK(doc["kind"] == "curve_report");
    CHECK(doc["ge2_fails"] == true);
    CHECK(doc["example_identity"]["holds"] == true);

    auto rejected = run_cli({"curve-report", "--F", "Y^2 - X"});
    CHECK(rejected.code == cli::kDomainError);
    CHECK(json::parse(rejected.out)["error"]["kind"] == "PointsAtInfinityRational");
}

TEST_CASE("error handling and exit codes", "[cli]") {
    SECTION("domain error: factoring an invertible matrix as singular") {
        auto res = run_cli({"factor-id2", "--ring", "Z", "--matrix", "[[1,0],[0,1]]"});
        CHECK(res.code == cli::kDomainError);
        CHECK(json::parse(res.out)["error"]["kind"] == "NotSingular");
    }
    SECTION("parse error: malformed matrix") {
        auto res = run_cli({"factor-id2", "--ring", "Z", "--matrix", "[[2,3],[0"});
        CHECK(res.code == cli::kParseError);
    }
    SECTION("parse error: bad element") {
        auto res = run_cli({"factor-id2", "--ring", "Z", "--matrix", "[[\"zap\",3],[0,0]]"});
        CHECK(res.code == cli::kParseError);
    }
    SECTION("unknown flag") {
        auto res = run_cli({"factor-id2", "--frobnicate"});
        CHECK(res.code == cli::kParseError);
    }
}

TEST_CASE("IDEMFACT_DEPTH environment override", "[cli]") {
    // a product of three T factors needs two peels, so depth > 1
    setenv("IDEMFACT_DEPTH", "1", 1);
    auto shallow = run_cli({"obstruct", "--ring", "Z", "--matrix", "[[16,7],[7,3]]"});
    REQUIRE(shallow.code == cli::kOk);
    CHECK(json::parse(shallow.out)["verdict"] == "Unknown");

    setenv("IDEMFACT_DEPTH", "16", 1);
    auto deep = run_cli({"obstruct", "--ring", "Z", "--matrix", "[[16,7],[7,3]]"});
    CHECK(json::parse(deep.out)["verdict"] == "Factored");
    unsetenv("IDEMFACT_DEPTH");

    // the flag wins over the environment
    setenv("IDEMFACT_DEPTH", "1", 1);
    auto flagged = run_cli(
        {"obstruct", "--ring", "Z", "--matrix", "[[16,7],[7,3]]", "--depth", "16"});
    CHECK(json::parse(flagged.out)["verdict"] == "Factored");
    unsetenv("IDEMFACT_DEPTH");
}

TEST_CASE("verify rejects malformed documents without crashing", "[cli]") {
    auto write_and_verify = [&](const std::string& body) {
        std::string path = temp_path("malformed.json");
        std::ofstream(path) << body;
        return run_cli({"verify", path}).code;
    };
    CHECK(write_and_verify("{") == cli::kParseError);
    CHECK(write_and_verify("{\"kind\": \"obstruction_trace\"}") == cli::kParseError);
    CHECK(write_and_verify("{\"kind\": \"mystery\"}") == cli::kParseError);
    CHECK(write_and_verify("{\"kind\": \"tform\", \"ring\": \"Q\"}") == cli::kDomainError);
    CHECK(write_and_verify("[1, 2, 3]") == cli::kParseError);
}

TEST_CASE("corpus runs green", "[cli]") {
    auto res = run_cli({"corpus"});
    CHECK(res.code == cli::kOk);
    CHECK(res.out.find("FAIL") == std::string::npos);
    CHECK(res.out.find("witness-not-factorable") != std::string::npos);
}
