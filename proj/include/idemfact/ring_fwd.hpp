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

#ifndef IDEMFACT_RING_FWD_HPP
#define IDEMFACT_RING_FWD_HPP

#include <concepts>
#include <utility>

namespace idemfact {

/// Per-ring operations the generic algorithms need beyond the arithmetic
/// operators. Specialized in ring.hpp for each supported element type.
///
/// Required members:
///   static const char* name();
///   static R zero_like(const R& witness);   // zero in the witness's ring
///   static R one_like(const R& witness);
///   static R from_long(long n, const R& witness);
///   static bool is_zero(const R&);
///   static bool is_unit(const R&);
///   static R unit_inverse(const R& u);   // inverse of a unit
/// Euclidean rings additionally provide:
///   static std::pair<R,R> divmod(const R& a, const R& b);  // a = q*b + r
///   static bool norm_less(const R& a, const R& b);         // |a| < |b|
/// Ordered (here: discretely ordered) rings additionally provide:
///   static int cmp(const R& a, const R& b);                // sign of a - b
template <class R>
struct ring_traits;

template <class R>
concept ring_type = requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { ring_traits<R>::zero_like(a) } -> std::convertible_to<R>;
    { ring_traits<R>::one_like(a) } -> std::convertible_to<R>;
    { ring_traits<R>::from_long(0L, a) } -> std::convertible_to<R>;
    { ring_traits<R>::is_zero(a) } -> std::convertible_to<bool>;
    { ring_traits<R>::is_unit(a) } -> std::convertible_to<bool>;
    { ring_traits<R>::unit_inverse(a) } -> std::convertible_to<R>;
};

template <class R>
concept euclidean_ring = ring_type<R> && requires(const R& a, const R& b) {
    { ring_traits<R>::divmod(a, b) } -> std::convertible_to<std::pair<R, R>>;
    { ring_traits<R>::norm_less(a, b) } -> std::convertible_to<bool>;
};

template <class R>
concept ordered_ring = ring_type<R> && requires(const R& a, const R& b) {
    { ring_traits<R>::cmp(a, b) } -> std::convertible_to<int>;
};

}  // namespace idemfact

#endif
