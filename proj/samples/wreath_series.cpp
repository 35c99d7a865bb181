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

// Prints chi^(k)(X^n, G wr S_n) next to the product formula for S_3 acting
// on three points.

#include <iostream>

#include "oec/oec.hpp"

int main() {
  const oec::FiniteGroup s3 = oec::symmetric_group(3);
  const oec::FiniteGSet x = oec::gset_from_generator_images(s3, 3, {{1, 0, 2}, {1, 2, 0}});
  const std::size_t degree = 6;
  for (unsigned k = 0; k <= 3; ++k) {
    const oec::Integer e = oec::chi_k(x, k);
    const auto lhs = oec::lhs_series(x, k, degree);
    const auto rhs = oec::rhs_series(k, e, degree);
    std::cout << "k=" << k << "  chi=" << e << "\n  wreath  " << lhs << "\n  product " << rhs
              << (lhs == rhs ? "  ok" : "  MISMATCH") << "\n";
  }
}
