// Copyright 2026 The oec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OEC_INTEGER_HPP_
#define OEC_INTEGER_HPP_

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "oec/error.hpp"

namespace oec {

/// Unbounded signed integer used for every Euler characteristic and series
/// coefficient.
using Integer = boost::multiprecision::cpp_int;

/// Generalized binomial coefficient top*(top-1)*...*(top-k+1)/k!, valid for
/// negative `top` as well. Each partial quotient is exact.
inline Integer binomial(const Integer& top, std::uint64_t k) {
  Integer result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= (top - i);
    result /= (i + 1);
  }
  return result;
}

inline Integer power(const Integer& base, std::uint64_t exponent) {
  Integer result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline Integer factorial(std::uint64_t n) {
  Integer result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

inline bool fits_int64(const Integer& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Integer& v) {
  if (!fits_int64(v)) {
    throw InvalidArgument("integer " + v.str() + " does not fit in 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

/// Checked 64-bit multiplication.
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw BudgetExceeded("64-bit overflow in size computation");
  }
  return out;
}

/// a^e saturating at `cap + 1`; used for budget pre-checks.
inline std::uint64_t saturating_pow(std::uint64_t a, std::uint64_t e,
                                    std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (a != 0 && result > cap / a) return cap + 1;
    result *= a;
  }
  return result;
}

}  // namespace oec

#endif  // OEC_INTEGER_HPP_
