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

// Exact truncated power series and the two sides of the wreath product
// generating series identity
//
//   sum_n chi^(k)(X^n, G_n) t^n
//     = ( prod_{r_1..r_k >= 1} (1 - t^{r_1...r_k})^{r_2 r_3^2 ... r_k^(k-1)} )^(-chi^(k)(X,G)).
//
// The right side is evaluated by grouping the factors by m = r_1...r_k:
// prod_m (1 - t^m)^(-E w_k(m)) with w_k(m) the sum of r_2 r_3^2 ... r_k^(k-1)
// over ordered factorizations of m into k factors.

#ifndef OEC_SERIES_HPP_
#define OEC_SERIES_HPP_

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "oec/error.hpp"
#include "oec/gspace.hpp"
#include "oec/integer.hpp"
#include "oec/orbifold.hpp"
#include "oec/wreath.hpp"

namespace oec {

inline constexpr std::size_t kDefaultMaxDegree = 64;

/// c_0 + c_1 t + ... + c_N t^N modulo t^(N+1).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t degree_bound) : coeffs_(degree_bound + 1, 0) {}

  explicit TruncatedSeries(std::vector<Integer> coefficients)
      : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw InvalidArgument("series needs at least one coefficient");
  }

  static TruncatedSeries one(std::size_t degree_bound) {
    TruncatedSeries s(degree_bound);
    s.coeffs_[0] = 1;
    return s;
  }

  std::size_t degree_bound() const { return coeffs_.size() - 1; }
  const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }
  Integer& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  /// Product truncated at the smaller of the two degree bounds.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.degree_bound(), b.degree_bound());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  TruncatedSeries& operator*=(const TruncatedSeries& other) { return *this = *this * other; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    return os << '[' << s.to_string() << ']';
  }

 private:
  std::vector<Integer> coeffs_;
};

/// (1 - t^m)^e mod t^(N+1) for any integer e; the coefficient of t^(mj) is
/// (-1)^j binomial(e, j).
inline TruncatedSeries one_minus_pow(std::uint64_t m, const Integer& e, std::size_t n) {
  if (m == 0) throw InvalidArgument("one_minus_pow needs m >= 1");
  TruncatedSeries s(n);
  for (std::uint64_t j = 0; j * m <= n; ++j) {
    Integer c = binomial(e, j);
    s[j * m] = (j % 2 == 0) ? c : Integer(-c);
  }
  return s;
}

/// w_k(m) = sum over r_1 ... r_k = m of r_2 r_3^2 ... r_k^(k-1), computed as
/// w_k(m) = sum_{d | m} d^(k-1) w_(k-1)(m/d) with w_0(m) = [m = 1].
inline Integer weight(unsigned k, std::uint64_t m) {
  if (m == 0) throw InvalidArgument("weight needs m >= 1");
  if (k == 0) return m == 1 ? 1 : 0;
  Integer total = 0;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    total += power(Integer(d), k - 1) * weight(k - 1, m / d);
  }
  return total;
}

/// prod_{m=1..N} (1 - t^m)^(-E w_k(m)) mod t^(N+1).
inline TruncatedSeries rhs_series(unsigned k, const Integer& euler, std::size_t n) {
  TruncatedSeries s = TruncatedSeries::one(n);
  if (euler == 0) return s;
  for (std::uint64_t m = 1; m <= n; ++m) {
    const Integer w = weight(k, m);
    if (w == 0) continue;
    s *= one_minus_pow(m, -euler * w, n);
  }
  return s;
}

/// (1 - t)^(-chi) mod t^(N+1).
inline TruncatedSeries macdonald_series(const Integer& chi, std::size_t n) {
  return one_minus_pow(1, -chi, n);
}

/// Coefficients chi^(k)(X^n, G wr S_n) for n = 0..N.
inline TruncatedSeries lhs_series(const FiniteGSet& x, ChiOrder k, std::size_t n,
                                  const WreathOptions& options = {}) {
  TruncatedSeries s(n);
  for (std::size_t i = 0; i <= n; ++i)
    s[i] = chi_k_wreath(x, static_cast<std::uint32_t>(i), k, options);
  return s;
}

}  // namespace oec

#endif  // OEC_SERIES_HPP_
