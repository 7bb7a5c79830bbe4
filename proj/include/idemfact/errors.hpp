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

#ifndef IDEMFACT_ERRORS_HPP
#define IDEMFACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace idemfact {

/// Domain error kinds. Every throwing operation reports one of these so the
/// CLI can map failures to structured error objects instead of stack traces.
enum class errc {
    ring_mismatch,
    not_euclidean,
    both_zero,
    not_a_unit,
    not_singular,
    zero_matrix,
    not_invertible,
    not_discretely_ordered,
    not_idempotent,
    not_idempotent_pair,
    bad_bezout_pair,
    descent_stalled,
    not_integer_valued,
    precondition_violated,
    not_monic_in_y,
    points_at_infinity_rational,
    points_at_infinity_not_conjugate,
    not_squarefree_at_infinity,
    origin_on_curve,
    wrong_curve,
    zero_element,
    parse_error,
    internal_invariant_violation,
};

inline const char* errc_name(errc e) {
    switch (e) {
        case errc::ring_mismatch: return "RingMismatch";
        case errc::not_euclidean: return "NotEuclidean";
        case errc::both_zero: return "BothZero";
        case errc::not_a_unit: return "NotAUnit";
        case errc::not_singular: return "NotSingular";
        case errc::zero_matrix: return "ZeroMatrix";
        case errc::not_invertible: return "NotInvertible";
        case errc::not_discretely_ordered: return "NotDiscretelyOrdered";
        case errc::not_idempotent: return "NotIdempotent";
        case errc::not_idempotent_pair: return "NotIdempotentPair";
        case errc::bad_bezout_pair: return "BadBezoutPair";
        case errc::descent_stalled: return "DescentStalled";
        case errc::not_integer_valued: return "NotIntegerValued";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::not_monic_in_y: return "NotMonicInY";
        case errc::points_at_infinity_rational: return "PointsAtInfinityRational";
        case errc::points_at_infinity_not_conjugate: return "PointsAtInfinityNotConjugate";
        case errc::not_squarefree_at_infinity: return "NotSquarefreeAtInfinity";
        case errc::origin_on_curve: return "OriginOnCurve";
        case errc::wrong_curve: return "WrongCurve";
        case errc::zero_element: return "ZeroElement";
        case errc::parse_error: return "ParseError";
        case errc::internal_invariant_violation: return "InternalInvariantViolation";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& msg)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + msg), kind_(kind) {}

    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void raise(errc kind, const std::string& msg) { throw error(kind, msg); }

inline void check(bool cond, errc kind, const std::string& msg) {
    if (!cond) raise(kind, msg);
}

/// Internal consistency assertion. These guard redundant computation routes
/// (e.g. the two idempotency tests); a failure means a bug, not bad input.
inline void internal_check(bool cond, const std::string& msg) {
    if (!cond) raise(errc::internal_invariant_violation, msg);
}

}  // namespace idemfact

#endif
