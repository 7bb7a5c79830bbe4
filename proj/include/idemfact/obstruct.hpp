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

#ifndef IDEMFACT_OBSTRUCT_HPP
#define IDEMFACT_OBSTRUCT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idemfact/elemfact.hpp"

namespace idemfact {

// ---------------------------------------------------------------------------
// Recorded order comparisons
// ---------------------------------------------------------------------------

enum class Rel { lt, le, eq, ge, gt, ne };

inline const char* rel_name(Rel r) {
    switch (r) {
        case Rel::lt: return "<";
        case Rel::le: return "<=";
        case Rel::eq: return "=";
        case Rel::ge: return ">=";
        case Rel::gt: return ">";
        case Rel::ne: return "!=";
    }
    return "?";
}

inline std::optional<Rel> rel_from_name(const std::string& s) {
    if (s == "<") return Rel::lt;
    if (s == "<=") return Rel::le;
    if (s == "=") return Rel::eq;
    if (s == ">=") return Rel::ge;
    if (s == ">") return Rel::gt;
    if (s == "!=") return Rel::ne;
    return std::nullopt;
}

/// One order comparison between ring elements, re-verifiable exactly. The
/// recorded outcome lets a checker detect tampering: re-evaluation is the
/// ground truth.
template <ordered_ring R>
struct Comparison {
    std::string label;
    R lhs, rhs;
    Rel rel;
    bool claimed = true;

    bool holds() const {
        int c = ring_traits<R>::cmp(lhs, rhs);
        switch (rel) {
            case Rel::lt: return c < 0;
            case Rel::le: return c <= 0;
            case Rel::eq: return c == 0;
            case Rel::ge: return c >= 0;
            case Rel::gt: return c > 0;
            case Rel::ne: return c != 0;
        }
        return false;
    }
};

// ---------------------------------------------------------------------------
// Candidate sets for the peeling parameter
// ---------------------------------------------------------------------------

enum class CandKind { finite, empty, unbounded };

/// Sign case of a candidate peeling parameter.
enum class PeelCase { i, ii, iii };

inline const char* peel_case_name(PeelCase c) {
    switch (c) {
        case PeelCase::i: return "i";
        case PeelCase::ii: return "ii";
        case PeelCase::iii: return "iii";
    }
    return "?";
}

template <ordered_ring R>
struct CandidateSet {
    CandKind kind = CandKind::empty;
    std::vector<R> values;                    // sorted ascending, when finite
    std::vector<Comparison<R>> comparisons;   // verifications / refutations
    std::vector<std::string> notes;           // per-stratum reasoning
};

template <ordered_ring R>
PeelCase peel_case_of(const R& r) {
    int c = ring_traits<R>::cmp(r, ring_traits<R>::zero_like(r));
    return c > 0 ? PeelCase::i : (c == 0 ? PeelCase::ii : PeelCase::iii);
}

namespace detail {

/// All r with 0 <= a - b*r <= b over the integers (b > 0): at most two,
/// around the floor quotient.
inline CandidateSet<Int> dor_candidates(const Int& a, const Int& b) {
    CandidateSet<Int> out;
    Int q = floor_div(a, b);
    std::vector<Int> cands;
    if (b * q == a) cands.push_back(q - 1);
    cands.push_back(q);
    for (const Int& r : cands) {
        Int y = a - b * r;
        out.comparisons.push_back(
            {"0 <= a - b*r (r = " + to_string(r) + ")", y, Int(0), Rel::ge, y >= 0});
        out.comparisons.push_back(
            {"a - b*r <= b (r = " + to_string(r) + ")", y, b, Rel::le, y <= b});
        if (y >= 0 && y <= b) out.values.push_back(r);
    }
    out.kind = out.values.empty() ? CandKind::empty : CandKind::finite;
    return out;
}

/// All r in Int(Z) with 0 <= a - b*r <= b, for b > 0. Any admissible
/// difference y = a - b*r satisfies deg y <= deg b (a positive leading
/// coordinate at higher degree would push y above b; a negative one below
/// zero). The coefficients of r above degree 0 are therefore forced top-down
/// by exact division, and the remaining constant ranges over a window of at
/// most two integers fixed by the leading coordinates. Discreteness keeps
/// the whole set finite: two solutions differ by at most 1.
inline CandidateSet<IntZPoly> dor_candidates(const IntZPoly& a, const IntZPoly& b) {
    CandidateSet<IntZPoly> out;
    const long db = b.deg_or(0);
    const Int lcb = b.leading();

    IntZPoly rest = a;       // a minus the forced part of b*r
    IntZPoly forced;         // forced coefficients of r (degrees >= 1)
    while (rest.deg_or(-1) > db) {
        long j = rest.deg_or(0);
        long m = j - db;
        Int k = lcb * binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(db));
        Int cj = rest.leading();
        if (!divides(k, cj)) {
            out.kind = CandKind::empty;
            out.notes.push_back(
                "coordinate of C(X," + std::to_string(j) + ") in a - b*r is " + to_string(cj) +
                " - " + to_string(k) + "*r_" + std::to_string(m) +
                ", never zero over the integers; any difference of degree > deg b violates "
                "0 <= a - b*r <= b by its leading coordinate");
            // the two order comparisons for the representative r = forced part
            IntZPoly y = rest;
            bool lo = compare(y, IntZPoly::zero()) >= 0;
            bool hi = compare(y, b) <= 0;
            out.comparisons.push_back({"0 <= a - b*r (representative r = " + to_string(forced) +
                                           ")",
                                       y, IntZPoly::zero(), Rel::ge, lo});
            out.comparisons.push_back(
                {"a - b*r <= b (representative r = " + to_string(forced) + ")", y, b, Rel::le,
                 hi});
            return out;
        }
        Int rho = exact_div(cj, k);
        std::vector<Int> mono(static_cast<std::size_t>(m) + 1, Int(0));
        mono[static_cast<std::size_t>(m)] = rho;
        IntZPoly term{std::move(mono)};
        forced = forced + term;
        rest = rest - b * term;
        out.notes.push_back("degree-" + std::to_string(m) + " coordinate of r forced to " +
                            to_string(rho));
    }

    std::vector<Int> ts;
    if (rest.deg_or(-1) < db) {
        ts = {Int(-1), Int(0)};
        out.notes.push_back("deg(a - b*r_forced) < deg b: only t in {-1, 0} can work");
    } else {
        Int alpha = rest.leading();
        Int lo = floor_div(alpha - lcb, lcb) - 1;
        Int hi = floor_div(alpha, lcb) + 1;
        for (Int t = lo; t <= hi; ++t) ts.push_back(t);
        out.notes.push_back("leading coordinates confine the constant term of r to [" +
                            to_string(lo) + ", " + to_string(hi) + "]");
    }
    for (const Int& t : ts) {
        IntZPoly r = forced + IntZPoly(t);
        IntZPoly y = a - b * r;
        bool ok_lo = compare(y, IntZPoly::zero()) >= 0;
        bool ok_hi = compare(y, b) <= 0;
        out.comparisons.push_back(
            {"0 <= a - b*r (r = " + to_string(r) + ")", y, IntZPoly::zero(), Rel::ge, ok_lo});
        out.comparisons.push_back(
            {"a - b*r <= b (r = " + to_string(r) + ")", y, b, Rel::le, ok_hi});
        if (ok_lo && ok_hi) out.values.push_back(r);
    }
    out.kind = out.values.empty() ? CandKind::empty : CandKind::finite;
    return out;
}

}  // namespace detail

/// The admissible peeling parameters r for a pair (a, b) with b > 0: the set
/// {r : b >= a - b*r >= 0}, each candidate tagged with its sign case
/// (r > 0, r = 0, r < 0). Weak inequalities are deliberate: the boundary
/// configurations (a = b, b | a) occur in genuine standard forms.
template <ordered_ring R>
CandidateSet<R> admissible_rk(const R& a, const R& b) {
    using T = ring_traits<R>;
    check(T::cmp(b, T::zero_like(b)) > 0, errc::precondition_violated,
          "admissible_rk needs b > 0");
    return detail::dor_candidates(a, b);
}

// ---------------------------------------------------------------------------
// Obstruction traces
// ---------------------------------------------------------------------------

enum class NodeKind { base_k0, base_k1, base_lower, refuted_shape, peel, depth_cut };

inline const char* node_kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::base_k0: return "base-k0";
        case NodeKind::base_k1: return "base-k1";
        case NodeKind::base_lower: return "base-lower";
        case NodeKind::refuted_shape: return "refuted-shape";
        case NodeKind::peel: return "peel";
        case NodeKind::depth_cut: return "depth-cut";
    }
    return "?";
}

enum class NodeState { factored, refuted, unknown };

template <ordered_ring R>
struct ObsNode {
    Mat2<R> m;                    // matrix at this node (before sign normalization)
    bool interior = false;        // true once at least one factor was peeled
    NodeKind kind = NodeKind::refuted_shape;
    NodeState state = NodeState::refuted;
    int sigma = 1;                // sign applied so that b > 0 (peel nodes)
    std::string note;
    // base payload (kind base_*): the full remaining word and units
    R alpha, beta;
    std::vector<R> word;
    // peel payload
    CandidateSet<R> cands;
    std::vector<R> child_rs;      // candidates actually descended into
    std::vector<std::string> skipped;  // candidates rejected by the interior sign constraint
    std::vector<ObsNode<R>> children;  // parallel to child_rs
};

enum class ObsVerdict { factored, not_factorable, unknown };

inline const char* verdict_name(ObsVerdict v) {
    switch (v) {
        case ObsVerdict::factored: return "Factored";
        case ObsVerdict::not_factorable: return "NotFactorable";
        case ObsVerdict::unknown: return "Unknown";
    }
    return "?";
}

template <ordered_ring R>
struct ObstructionTrace {
    Mat2<R> root;
    long depth_limit = 8;
    ObsNode<R> tree;
    ObsVerdict verdict = ObsVerdict::unknown;
    std::optional<TForm<R>> tform;  // set when factored
    std::string reason;             // set when unknown
};

/// Detects the k = 0 and k = 1 shapes: diag(alpha, beta) and
/// (alpha r_1, alpha; beta, 0).
template <ordered_ring R>
struct BaseShape {
    enum Kind { none, k0, k1 } kind = none;
    R alpha, beta, r1;
};

template <ordered_ring R>
BaseShape<R> base_check(const Mat2<R>& m) {
    using T = ring_traits<R>;
    BaseShape<R> out;
    out.alpha = m.a;
    out.beta = m.d;
    out.r1 = T::zero_like(m.a);
    if (T::is_zero(m.b) && T::is_zero(m.c) && T::is_unit(m.a) && T::is_unit(m.d)) {
        out.kind = BaseShape<R>::k0;
        return out;
    }
    if (T::is_zero(m.d) && T::is_unit(m.b) && T::is_unit(m.c)) {
        out.kind = BaseShape<R>::k1;
        out.alpha = m.b;
        out.beta = m.c;
        out.r1 = T::unit_inverse(m.b) * m.a;
        return out;
    }
    out.kind = BaseShape<R>::none;
    return out;
}

namespace detail {

template <ordered_ring R>
struct NodeResult {
    NodeState state;
    R alpha, beta;
    std::vector<R> word;  // r_1 .. r_j of the remaining form
    std::string unknown_reason;
};

template <ordered_ring R>
std::pair<ObsNode<R>, NodeResult<R>> obstruct_node(const Mat2<R>& m, bool interior,
                                                   long depth) {
    using T = ring_traits<R>;
    ObsNode<R> node;
    node.m = m;
    node.interior = interior;
    node.alpha = T::zero_like(m.a);
    node.beta = T::zero_like(m.a);
    NodeResult<R> res{NodeState::refuted, T::zero_like(m.a), T::zero_like(m.a), {}, ""};
    R zero = T::zero_like(m.a);

    BaseShape<R> base = base_check(m);
    if (base.kind == BaseShape<R>::k0) {
        node.kind = NodeKind::base_k0;
        node.state = NodeState::factored;
        node.alpha = base.alpha;
        node.beta = base.beta;
        res = {NodeState::factored, base.alpha, base.beta, {}, ""};
        return {std::move(node), std::move(res)};
    }
    if (base.kind == BaseShape<R>::k1) {
        if (interior && T::cmp(base.r1, zero) < 0) {
            node.kind = NodeKind::refuted_shape;
            node.note = "k=1 shape needs r_1 = " + to_string(base.r1) +
                        " < 0 at a non-final position";
            node.state = NodeState::refuted;
            return {std::move(node), std::move(res)};
        }
        node.kind = NodeKind::base_k1;
        node.state = NodeState::factored;
        node.alpha = base.alpha;
        node.beta = base.beta;
        node.word = {base.r1};
        res = {NodeState::factored, base.alpha, base.beta, {base.r1}, ""};
        return {std::move(node), std::move(res)};
    }
    if (T::is_zero(m.b)) {
        // with b = 0 the only remaining shape is diag * T(0) T(r):
        // (alpha, 0; beta r, beta)
        if (T::is_unit(m.a) && T::is_unit(m.d) && !T::is_zero(m.c)) {
            R r = T::unit_inverse(m.d) * m.c;
            if (interior && T::cmp(r, zero) <= 0) {
                node.kind = NodeKind::refuted_shape;
                node.note = "lower-triangular shape needs interior r = " +
                            to_string(r) + " <= 0";
                node.state = NodeState::refuted;
                return {std::move(node), std::move(res)};
            }
            node.kind = NodeKind::base_lower;
            node.state = NodeState::factored;
            node.alpha = m.a;
            node.beta = m.d;
            node.word = {zero, r};
            res = {NodeState::factored, m.a, m.d, {zero, r}, ""};
            return {std::move(node), std::move(res)};
        }
        node.kind = NodeKind::refuted_shape;
        node.note = "b = 0 but the matrix is not diag(units) * T(0) T(r)";
        node.state = NodeState::refuted;
        return {std::move(node), std::move(res)};
    }
    if (T::is_zero(m.d)) {
        node.kind = NodeKind::refuted_shape;
        node.note = "d = 0 occurs only in words of length <= 1";
        node.state = NodeState::refuted;
        return {std::move(node), std::move(res)};
    }

    // peel: normalize sign so that b > 0, then branch on admissible r
    node.kind = NodeKind::peel;
    int sigma = T::cmp(m.b, zero) > 0 ? 1 : -1;
    node.sigma = sigma;
    Mat2<R> n = sigma > 0 ? m : -m;
    if (depth <= 0) {
        node.kind = NodeKind::depth_cut;
        node.note = "depth limit reached before exploring candidates";
        node.state = NodeState::unknown;
        res.state = NodeState::unknown;
        res.unknown_reason = node.note;
        return {std::move(node), std::move(res)};
    }
    node.cands = detail::dor_candidates(n.a, n.b);

    bool any_unknown = node.cands.kind == CandKind::unbounded;
    if (any_unknown) res.unknown_reason = "unbounded candidate stratum";
    for (const R& r : node.cands.values) {
        if (interior && T::cmp(r, zero) <= 0) {
            node.skipped.push_back("candidate r = " + to_string(r) +
                                   " rejected: interior position needs r > 0");
            continue;
        }
        Mat2<R> child{n.b, n.a - n.b * r, n.d, n.c - n.d * r};
        auto [cnode, cres] = obstruct_node<R>(child, true, depth - 1);
        node.child_rs.push_back(r);
        node.children.push_back(std::move(cnode));
        if (cres.state == NodeState::factored) {
            std::vector<R> word = std::move(cres.word);
            word.push_back(r);
            R al = cres.alpha, be = cres.beta;
            if (sigma < 0) {
                al = -al;
                be = -be;
            }
            node.state = NodeState::factored;
            res = {NodeState::factored, al, be, std::move(word), ""};
            return {std::move(node), std::move(res)};
        }
        if (cres.state == NodeState::unknown) {
            any_unknown = true;
            if (res.unknown_reason.empty()) res.unknown_reason = cres.unknown_reason;
        }
    }
    if (any_unknown) {
        node.state = NodeState::unknown;
        res.state = NodeState::unknown;
        if (res.unknown_reason.empty()) res.unknown_reason = "unresolved branch";
    } else {
        node.state = NodeState::refuted;
        res.state = NodeState::refuted;
    }
    return {std::move(node), std::move(res)};
}

}  // namespace detail

/// Breadth-bounded decision: Factored with the unique standard form,
/// NotFactorable when every branch ends in a verified contradiction, Unknown
/// when the depth budget ran out.
template <ordered_ring R>
ObstructionTrace<R> decide_ge2_dor(const Mat2<R>& m, long depth_limit) {
    check(is_invertible(m), errc::not_invertible, "decide_ge2_dor needs an invertible matrix");
    check(depth_limit > 0, errc::precondition_violated, "depth_limit must be positive");
    ObstructionTrace<R> trace;
    trace.root = m;
    trace.depth_limit = depth_limit;
    auto [tree, res] = detail::obstruct_node<R>(m, false, depth_limit);
    trace.tree = std::move(tree);
    switch (res.state) {
        case NodeState::factored: {
            TForm<R> tf{res.alpha, res.beta, res.word};
            internal_check(tform_valid(tf), "engine produced an invalid standard form");
            internal_check(tform_matrix(tf) == m, "engine form does not reconstruct the input");
            trace.verdict = ObsVerdict::factored;
            trace.tform = std::move(tf);
            break;
        }
        case NodeState::refuted:
            trace.verdict = ObsVerdict::not_factorable;
            break;
        case NodeState::unknown:
            trace.verdict = ObsVerdict::unknown;
            trace.reason = res.unknown_reason;
            break;
    }
    return trace;
}

// ---------------------------------------------------------------------------
// Independent trace verification
// ---------------------------------------------------------------------------

namespace detail {

template <ordered_ring R>
void check_node(const ObsNode<R>& node, bool interior, std::vector<std::string>& reasons,
                NodeState& state_out) {
    using T = ring_traits<R>;
    const Mat2<R>& m = node.m;
    R zero = T::zero_like(m.a);
    auto fail = [&](const std::string& msg) { reasons.push_back(msg); };
    state_out = NodeState::refuted;

    if (node.interior != interior) fail("interior flag mismatch");

    switch (node.kind) {
        case NodeKind::base_k0: {
            BaseShape<R> b = base_check(m);
            if (b.kind != BaseShape<R>::k0) fail("claimed k=0 shape does not re-verify");
            state_out = NodeState::factored;
            return;
        }
        case NodeKind::base_k1: {
            BaseShape<R> b = base_check(m);
            if (b.kind != BaseShape<R>::k1) fail("claimed k=1 shape does not re-verify");
            else {
                if (!(node.word.size() == 1 && node.word[0] == b.r1))
                    fail("k=1 word mismatch");
                if (interior && T::cmp(b.r1, zero) < 0)
                    fail("k=1 with negative r_1 at non-final position accepted");
            }
            state_out = NodeState::factored;
            return;
        }
        case NodeKind::base_lower: {
            if (!(T::is_zero(m.b) && T::is_unit(m.a) && T::is_unit(m.d) && !T::is_zero(m.c)))
                fail("claimed lower-triangular shape does not re-verify");
            else {
                R r = T::unit_inverse(m.d) * m.c;
                if (!(node.word.size() == 2 && T::is_zero(node.word[0]) && node.word[1] == r))
                    fail("lower-triangular word mismatch");
                if (interior && T::cmp(r, zero) <= 0) fail("interior r <= 0 accepted");
            }
            state_out = NodeState::factored;
            return;
        }
        case NodeKind::refuted_shape: {
            // the refutation holds iff no base interpretation applies
            BaseShape<R> b = base_check(m);
            bool lower_ok = T::is_zero(m.b) && T::is_unit(m.a) && T::is_unit(m.d) &&
                            !T::is_zero(m.c) &&
                            !(interior && T::cmp(T::unit_inverse(m.d) * m.c, zero) <= 0);
            bool k1_ok = b.kind == BaseShape<R>::k1 &&
                         !(interior && T::cmp(b.r1, zero) < 0);
            bool k0_ok = b.kind == BaseShape<R>::k0;
            bool peel_possible = !T::is_zero(m.b) && !T::is_zero(m.d);
            if (k0_ok || k1_ok || lower_ok || peel_possible)
                fail("shape refutation is not justified");
            state_out = NodeState::refuted;
            return;
        }
        case NodeKind::depth_cut:
            state_out = NodeState::unknown;
            return;
        case NodeKind::peel: {
            if (T::is_zero(m.b)) {
                fail("peel node with b = 0");
                return;
            }
            int sigma = T::cmp(m.b, zero) > 0 ? 1 : -1;
            if (sigma != node.sigma) fail("sign normalization mismatch");
            Mat2<R> n = sigma > 0 ? m : -m;
            CandidateSet<R> cands = detail::dor_candidates(n.a, n.b);
            if (cands.values.size() != node.cands.values.size()) {
                fail("candidate set size mismatch");
            } else {
                for (std::size_t i = 0; i < cands.values.size(); ++i)
                    if (!(cands.values[i] == node.cands.values[i]))
                        fail("candidate set mismatch");
            }
            // every recorded comparison must re-evaluate to its claimed value
            for (const auto& cmp : node.cands.comparisons)
                if (cmp.holds() != cmp.claimed)
                    fail("recorded comparison '" + cmp.label + "' does not re-verify");
            // each accepted candidate must satisfy the interval directly,
            // independent of how the finder derived it
            for (const R& r : node.cands.values) {
                R y = n.a - n.b * r;
                if (T::cmp(y, zero) < 0 || T::cmp(y, n.b) > 0)
                    fail("accepted candidate violates 0 <= a - b*r <= b");
            }
            // children must cover the non-skipped candidates in order,
            // stopping early only at a factored branch
            std::vector<R> expected;
            for (const R& r : cands.values) {
                if (interior && T::cmp(r, zero) <= 0) continue;
                expected.push_back(r);
            }
            if (node.children.size() > expected.size() ||
                node.child_rs.size() != node.children.size()) {
                fail("children exceed the candidate list");
                return;
            }
            bool any_unknown = cands.kind == CandKind::unbounded;
            NodeState st = NodeState::refuted;
            for (std::size_t i = 0; i < node.children.size(); ++i) {
                if (!(node.child_rs[i] == expected[i])) fail("child order mismatch");
                const R& r = node.child_rs[i];
                Mat2<R> want{n.b, n.a - n.b * r, n.d, n.c - n.d * r};
                if (!(node.children[i].m == want)) fail("child matrix is not the peeled matrix");
                NodeState cst;
                check_node(node.children[i], true, reasons, cst);
                if (cst == NodeState::factored) {
                    st = NodeState::factored;
                    if (i + 1 != node.children.size())
                        fail("exploration continued past a factored branch");
                    break;
                }
                if (cst == NodeState::unknown) any_unknown = true;
            }
            if (st != NodeState::factored) {
                if (node.children.size() != expected.size())
                    fail("children do not cover all candidates");
                st = any_unknown ? NodeState::unknown : NodeState::refuted;
            }
            if (st != node.state) fail("node state inconsistent with children");
            state_out = st;
            return;
        }
    }
}

}  // namespace detail

/// Re-verifies every shape claim, order comparison, candidate derivation and
/// peeling product in a trace; true only if the verdict is fully justified.
template <ordered_ring R>
std::pair<bool, std::vector<std::string>> check_obstruction(const ObstructionTrace<R>& trace) {
    std::vector<std::string> reasons;
    if (!is_invertible(trace.root)) reasons.push_back("root determinant is not a unit");
    if (!(trace.tree.m == trace.root)) reasons.push_back("tree root matrix mismatch");
    NodeState st;
    detail::check_node(trace.tree, false, reasons, st);
    switch (trace.verdict) {
        case ObsVerdict::factored: {
            if (st != NodeState::factored)
                reasons.push_back("verdict Factored but tree does not factor");
            if (!trace.tform) {
                reasons.push_back("verdict Factored without a form");
            } else {
                if (!tform_valid(*trace.tform)) reasons.push_back("form violates the invariants");
                if (!(tform_matrix(*trace.tform) == trace.root))
                    reasons.push_back("form does not reconstruct the root");
            }
            break;
        }
        case ObsVerdict::not_factorable:
            if (st != NodeState::refuted)
                reasons.push_back("verdict NotFactorable but some branch is not refuted");
            break;
        case ObsVerdict::unknown:
            if (st != NodeState::unknown)
                reasons.push_back("verdict Unknown but the tree resolves");
            break;
    }
    return {reasons.empty(), reasons};
}

}  // namespace idemfact

#endif
