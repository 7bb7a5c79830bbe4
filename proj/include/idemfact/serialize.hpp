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

#ifndef IDEMFACT_SERIALIZE_HPP
#define IDEMFACT_SERIALIZE_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "idemfact/curve_report.hpp"
#include "idemfact/idfactor.hpp"
#include "idemfact/obstruct.hpp"
#include "idemfact/ring.hpp"

namespace idemfact {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Ring ids and elements
// ---------------------------------------------------------------------------

inline json ring_to_json(const RingId& ring) {
    if (ring.tag == RingTag::curve) {
        internal_check(static_cast<bool>(ring.curve), "curve ring without curve");
        return json{{"tag", "Curve"}, {"F", to_string(ring.curve->f())}};
    }
    return json(ring_tag_name(ring.tag));
}

inline RingId ring_from_json(const json& j) {
    if (j.is_string()) return parse_ring_tag(j.get<std::string>());
    check(j.is_object() && j.contains("tag") && j["tag"] == "Curve" && j.contains("F"),
          errc::parse_error, "bad ring descriptor");
    return RingId::of_curve(new_curve(j["F"].get<std::string>()));
}

template <ring_type R>
struct ring_io;

template <>
struct ring_io<Int> {
    static RingId id(const Int&) { return RingId::Z(); }
};
template <>
struct ring_io<Rat> {
    static RingId id(const Rat&) { return RingId::Q(); }
};
template <>
struct ring_io<QPoly> {
    static RingId id(const QPoly&) { return RingId::QX(); }
};
template <>
struct ring_io<IntZPoly> {
    static RingId id(const IntZPoly&) { return RingId::IntZ(); }
};
template <>
struct ring_io<CurveElem> {
    static RingId id(const CurveElem& w) { return RingId::of_curve(w.curve()); }
};

template <ring_type R>
R elem_from_json(const RingId& ring, const json& j) {
    std::string text = j.is_string() ? j.get<std::string>() : j.dump();
    return parse_elem(ring, text).template as<R>();
}

template <ring_type R>
json elem_to_json(const R& x) {
    return json(to_string(x));
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

template <ring_type R>
json mat_to_json(const Mat2<R>& m) {
    return json{{"ring", ring_to_json(ring_io<R>::id(m.a))},
                {"rows", json::array({json::array({elem_to_json(m.a), elem_to_json(m.b)}),
                                      json::array({elem_to_json(m.c), elem_to_json(m.d)})})}};
}

inline void check_rows_shape(const json& rows) {
    check(rows.is_array() && rows.size() == 2 && rows[0].is_array() && rows[0].size() == 2 &&
              rows[1].is_array() && rows[1].size() == 2,
          errc::parse_error, "matrix must be a 2x2 array");
}

template <ring_type R>
Mat2<R> mat_from_rows(const RingId& ring, const json& rows) {
    check_rows_shape(rows);
    return Mat2<R>{elem_from_json<R>(ring, rows[0][0]), elem_from_json<R>(ring, rows[0][1]),
                   elem_from_json<R>(ring, rows[1][0]), elem_from_json<R>(ring, rows[1][1])};
}

template <ring_type R>
Mat2<R> mat_from_json(const json& j) {
    check(j.is_object() && j.contains("ring") && j.contains("rows"), errc::parse_error,
          "matrix object needs ring and rows");
    return mat_from_rows<R>(ring_from_json(j["ring"]), j["rows"]);
}

// ---------------------------------------------------------------------------
// Idempotent-factorization certificates
// ---------------------------------------------------------------------------

template <ring_type R>
json elem_factor_to_json(const ElemFactor<R>& f) {
    if (f.kind == ElemKind::transvection)
        return json{{"type", "transvection"}, {"i", f.i}, {"j", f.j}, {"r", elem_to_json(f.r)}};
    return json{{"type", "diag"}, {"u", elem_to_json(f.u)}, {"v", elem_to_json(f.v)}};
}

template <ring_type R>
ElemFactor<R> elem_factor_from_json(const RingId& ring, const json& j) {
    check(j.is_object() && j.contains("type"), errc::parse_error, "bad elementary factor");
    if (j["type"] == "transvection")
        return ElemFactor<R>::transvection(j["i"].get<int>(), j["j"].get<int>(),
                                           elem_from_json<R>(ring, j["r"]));
    check(j["type"] == "diag", errc::parse_error, "unknown factor type");
    return ElemFactor<R>::diag_units(elem_from_json<R>(ring, j["u"]),
                                     elem_from_json<R>(ring, j["v"]));
}

template <ring_type R>
json elem_cert_to_json(const ElemCert<R>& c) {
    json factors = json::array();
    for (const auto& f : c.factors) factors.push_back(elem_factor_to_json(f));
    return json{{"kind", "elem_cert"},
                {"ring", ring_to_json(ring_io<R>::id(c.input.a))},
                {"input", mat_to_json(c.input)["rows"]},
                {"factors", factors}};
}

template <ring_type R>
ElemCert<R> elem_cert_from_json(const json& j) {
    RingId ring = ring_from_json(j.at("ring"));
    ElemCert<R> c{mat_from_rows<R>(ring, j.at("input")), {}};
    for (const auto& f : j.at("factors")) c.factors.push_back(elem_factor_from_json<R>(ring, f));
    return c;
}

template <ring_type R>
json idem_cert_to_json(const IdemCert<R>& c) {
    json factors = json::array();
    for (const auto& f : c.factors) factors.push_back(mat_to_json(f)["rows"]);
    json transcript = json::array();
    for (const auto& s : c.transcript)
        transcript.push_back(json{{"a", elem_to_json(s.a)},
                                  {"b", elem_to_json(s.b)},
                                  {"g", elem_to_json(s.g)},
                                  {"m", elem_to_json(s.m)},
                                  {"n", elem_to_json(s.n)},
                                  {"p", elem_to_json(s.p)},
                                  {"q", elem_to_json(s.q)}});
    json out{{"kind", "idem_cert"},
             {"ring", ring_to_json(ring_io<R>::id(c.input.a))},
             {"input", mat_to_json(c.input)["rows"]},
             {"factors", factors},
             {"top_row", json::array({elem_to_json(c.top_a), elem_to_json(c.top_b)})},
             {"transcript", transcript}};
    if (c.conjugated) {
        out["conjugator"] = mat_to_json(c.conjugator)["rows"];
        out["conjugator_inv"] = mat_to_json(c.conjugator_inv)["rows"];
        out["conjugator_word"] = elem_cert_to_json(c.conjugator_word);
    } else {
        out["conjugator"] = nullptr;
    }
    return out;
}

template <ring_type R>
IdemCert<R> idem_cert_from_json(const json& j) {
    RingId ring = ring_from_json(j.at("ring"));
    IdemCert<R> c;
    c.input = mat_from_rows<R>(ring, j.at("input"));
    for (const auto& f : j.at("factors")) c.factors.push_back(mat_from_rows<R>(ring, f));
    c.top_a = elem_from_json<R>(ring, j.at("top_row")[0]);
    c.top_b = elem_from_json<R>(ring, j.at("top_row")[1]);
    for (const auto& s : j.at("transcript"))
        c.transcript.push_back(DescentStep<R>{
            elem_from_json<R>(ring, s.at("a")), elem_from_json<R>(ring, s.at("b")),
            elem_from_json<R>(ring, s.at("g")), elem_from_json<R>(ring, s.at("m")),
            elem_from_json<R>(ring, s.at("n")), elem_from_json<R>(ring, s.at("p")),
            elem_from_json<R>(ring, s.at("q"))});
    if (j.contains("conjugator") && !j.at("conjugator").is_null()) {
        c.conjugated = true;
        c.conjugator = mat_from_rows<R>(ring, j.at("conjugator"));
        c.conjugator_inv = mat_from_rows<R>(ring, j.at("conjugator_inv"));
        c.conjugator_word = elem_cert_from_json<R>(j.at("conjugator_word"));
    } else {
        c.conjugated = false;
        c.conjugator = Mat2<R>::identity(c.input.a);
        c.conjugator_inv = c.conjugator;
        c.conjugator_word = ElemCert<R>{c.conjugator, {}};
    }
    return c;
}

// ---------------------------------------------------------------------------
// T-forms
// ---------------------------------------------------------------------------

template <ring_type R>
json tform_to_json(const TForm<R>& tf, const Mat2<R>* matrix = nullptr) {
    json rs = json::array();
    for (const auto& r : tf.rs) rs.push_back(elem_to_json(r));
    json out{{"kind", "tform"},
             {"ring", ring_to_json(ring_io<R>::id(tf.alpha))},
             {"alpha", elem_to_json(tf.alpha)},
             {"beta", elem_to_json(tf.beta)},
             {"rs", rs}};
    if (matrix) out["matrix"] = mat_to_json(*matrix)["rows"];
    return out;
}

template <ring_type R>
TForm<R> tform_from_json(const json& j) {
    RingId ring = ring_from_json(j.at("ring"));
    TForm<R> tf{elem_from_json<R>(ring, j.at("alpha")), elem_from_json<R>(ring, j.at("beta")), {}};
    for (const auto& r : j.at("rs")) tf.rs.push_back(elem_from_json<R>(ring, r));
    return tf;
}

// ---------------------------------------------------------------------------
// Obstruction traces
// ---------------------------------------------------------------------------

template <ordered_ring R>
json comparison_to_json(const Comparison<R>& c) {
    return json{{"label", c.label},
                {"lhs", elem_to_json(c.lhs)},
                {"rel", rel_name(c.rel)},
                {"rhs", elem_to_json(c.rhs)},
                {"holds", c.claimed}};
}

template <ordered_ring R>
Comparison<R> comparison_from_json(const RingId& ring, const json& j) {
    auto rel = rel_from_name(j.at("rel").get<std::string>());
    check(rel.has_value(), errc::parse_error, "bad relation");
    return Comparison<R>{j.at("label").get<std::string>(), elem_from_json<R>(ring, j.at("lhs")),
                         elem_from_json<R>(ring, j.at("rhs")), *rel,
                         j.at("holds").get<bool>()};
}

template <ordered_ring R>
json cands_to_json(const CandidateSet<R>& c) {
    json values = json::array(), comps = json::array();
    for (const auto& v : c.values) values.push_back(elem_to_json(v));
    for (const auto& cc : c.comparisons) comps.push_back(comparison_to_json(cc));
    const char* kind = c.kind == CandKind::finite ? "finite"
                       : c.kind == CandKind::empty ? "empty"
                                                   : "unbounded";
    json cases = json::array();
    for (const auto& v : c.values) cases.push_back(peel_case_name(peel_case_of(v)));
    return json{{"kind", kind},
                {"values", values},
                {"cases", cases},
                {"comparisons", comps},
                {"notes", c.notes}};
}

template <ordered_ring R>
CandidateSet<R> cands_from_json(const RingId& ring, const json& j) {
    CandidateSet<R> c;
    std::string k = j.at("kind").get<std::string>();
    c.kind = k == "finite" ? CandKind::finite : (k == "empty" ? CandKind::empty : CandKind::unbounded);
    for (const auto& v : j.at("values")) c.values.push_back(elem_from_json<R>(ring, v));
    for (const auto& cc : j.at("comparisons")) c.comparisons.push_back(comparison_from_json<R>(ring, cc));
    for (const auto& n : j.at("notes")) c.notes.push_back(n.get<std::string>());
    return c;
}

inline const char* node_state_name(NodeState s) {
    switch (s) {
        case NodeState::factored: return "factored";
        case NodeState::refuted: return "refuted";
        case NodeState::unknown: return "unknown";
    }
    return "?";
}

template <ordered_ring R>
json obs_node_to_json(const ObsNode<R>& n) {
    json word = json::array();
    for (const auto& r : n.word) word.push_back(elem_to_json(r));
    json children = json::array();
    for (std::size_t i = 0; i < n.children.size(); ++i)
        children.push_back(
            json{{"r", elem_to_json(n.child_rs[i])},
                 {"case", peel_case_name(peel_case_of(n.child_rs[i]))},
                 {"node", obs_node_to_json(n.children[i])}});
    return json{{"matrix", mat_to_json(n.m)["rows"]},
                {"interior", n.interior},
                {"kind", node_kind_name(n.kind)},
                {"state", node_state_name(n.state)},
                {"sigma", n.sigma},
                {"note", n.note},
                {"alpha", elem_to_json(n.alpha)},
                {"beta", elem_to_json(n.beta)},
                {"word", word},
                {"candidates", cands_to_json(n.cands)},
                {"skipped", n.skipped},
                {"children", children}};
}

template <ordered_ring R>
ObsNode<R> obs_node_from_json(const RingId& ring, const json& j) {
    ObsNode<R> n;
    n.m = mat_from_rows<R>(ring, j.at("matrix"));
    n.interior = j.at("interior").get<bool>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "base-k0") n.kind = NodeKind::base_k0;
    else if (kind == "base-k1") n.kind = NodeKind::base_k1;
    else if (kind == "base-lower") n.kind = NodeKind::base_lower;
    else if (kind == "refuted-shape") n.kind = NodeKind::refuted_shape;
    else if (kind == "peel") n.kind = NodeKind::peel;
    else if (kind == "depth-cut") n.kind = NodeKind::depth_cut;
    else raise(errc::parse_error, "bad node kind " + kind);
    std::string state = j.at("state").get<std::string>();
    n.state = state == "factored" ? NodeState::factored
              : state == "refuted" ? NodeState::refuted
                                   : NodeState::unknown;
    n.sigma = j.at("sigma").get<int>();
    n.note = j.at("note").get<std::string>();
    n.alpha = elem_from_json<R>(ring, j.at("alpha"));
    n.beta = elem_from_json<R>(ring, j.at("beta"));
    for (const auto& r : j.at("word")) n.word.push_back(elem_from_json<R>(ring, r));
    n.cands = cands_from_json<R>(ring, j.at("candidates"));
    for (const auto& s : j.at("skipped")) n.skipped.push_back(s.get<std::string>());
    for (const auto& ch : j.at("children")) {
        n.child_rs.push_back(elem_from_json<R>(ring, ch.at("r")));
        n.children.push_back(obs_node_from_json<R>(ring, ch.at("node")));
    }
    return n;
}

template <ordered_ring R>
json trace_to_json(const ObstructionTrace<R>& t) {
    json out{{"kind", "obstruction_trace"},
             {"ring", ring_to_json(ring_io<R>::id(t.root.a))},
             {"root", mat_to_json(t.root)["rows"]},
             {"depth_limit", t.depth_limit},
             {"verdict", verdict_name(t.verdict)},
             {"tree", obs_node_to_json(t.tree)}};
    if (t.tform) out["tform"] = tform_to_json(*t.tform);
    if (!t.reason.empty()) out["reason"] = t.reason;
    return out;
}

template <ordered_ring R>
ObstructionTrace<R> trace_from_json(const json& j) {
    RingId ring = ring_from_json(j.at("ring"));
    ObstructionTrace<R> t;
    t.root = mat_from_rows<R>(ring, j.at("root"));
    t.depth_limit = j.at("depth_limit").get<long>();
    std::string v = j.at("verdict").get<std::string>();
    t.verdict = v == "Factored" ? ObsVerdict::factored
                : v == "NotFactorable" ? ObsVerdict::not_factorable
                                       : ObsVerdict::unknown;
    t.tree = obs_node_from_json<R>(ring, j.at("tree"));
    if (j.contains("tform")) t.tform = tform_from_json<R>(j.at("tform"));
    if (j.contains("reason")) t.reason = j.at("reason").get<std::string>();
    return t;
}

// ---------------------------------------------------------------------------
// Curve reports and errors
// ---------------------------------------------------------------------------

inline json report_item_to_json(const ReportItem& it) {
    return json{{"name", it.name}, {"holds", it.holds}, {"detail", it.detail}};
}

inline json independence_report_to_json(const IndependenceReport& r) {
    json items = json::array();
    for (const auto& it : r.items) items.push_back(report_item_to_json(it));
    return json{{"kind", "curve_report"}, {"curve", r.curve_text},
                {"n", r.n},               {"smooth_warning", r.smooth_warning},
                {"items", items},         {"ge2_fails", r.ge2_fails},
                {"conclusion", r.conclusion}};
}

inline json example_identity_to_json(const ExampleIdentityReport& r) {
    json items = json::array();
    for (const auto& it : r.factors) items.push_back(report_item_to_json(it));
    return json{{"kind", "example_identity"},
                {"holds", r.holds},
                {"difference", r.difference},
                {"factors", items}};
}

inline json error_to_json(const error& e) {
    return json{{"error", json{{"kind", errc_name(e.kind())}, {"message", e.what()}}}};
}

}  // namespace idemfact

#endif
