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

// Table of chi^(k) for homogeneous spaces of the circle and of O(2), and the
// integrand behind one of them.

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "oec/oec.hpp"

int main() {
  const char* models[] = {"S1/Z_1", "S1/Z_3", "S1/S1", "O2/Z_2", "O2/Z_5", "O2/SO2",
                          "S1/Z_2 + S1/Z_3"};
  std::cout << std::left << std::setw(18) << "model";
  for (unsigned k = 0; k <= 4; ++k) std::cout << std::setw(8) << ("k=" + std::to_string(k));
  std::cout << "\n";
  for (const char* m : models) {
    const oec::ModelGSpace x = oec::parse_model(m);
    std::cout << std::setw(18) << m;
    for (unsigned k = 0; k <= 4; ++k) std::cout << std::setw(8) << oec::chi_k_model(x, k);
    std::cout << "\n";
  }

  std::cout << "\nintegrand of chi^(1)(O2/Z_3):\n";
  const auto f = oec::chi_k_integrand(oec::parse_model("O2/Z_3"), 1);
  for (const auto& p : f.pieces()) {
    const auto& s = p.stratum;
    std::ostringstream where;
    if (s.kind == oec::StratumKind::point)
      where << "{" << oec::to_string(s.lo) << "}";
    else
      where << (s.lo_closed ? "[" : "(") << oec::to_string(s.lo) << ", " << oec::to_string(s.hi)
            << (s.hi_closed ? "]" : ")");
    std::cout << "  component " << s.component << "  " << std::left << std::setw(12) << where.str()
              << std::right << "chi_c " << std::setw(3) << s.chi_c() << "  value " << p.value << "\n";
  }
  std::cout << "  integral " << oec::integrate(f) << "\n";
}
