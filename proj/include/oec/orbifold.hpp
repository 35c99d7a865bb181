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

// Higher order orbifold Euler characteristics of finite group actions.
//
// Three engines are provided and are expected to agree exactly:
//
//   chi_k                 recursion over conjugacy classes,
//                         chi^(k)(X,G) = sum_[g] chi^(k-1)(X^<g>, C_G(g)),
//                         with chi^(0)(X,G) the number of orbits;
//   chi_k_oracle          (1/|G|) times the sum of |X^<g>| over pairwise
//                         commuting (k+1)-tuples g;
//   chi_k_by_orbit_types  sum over orbit types [H] of
//                         chi(X^([H])/G) * chi^(k)(G/H, G).

#ifndef OEC_ORBIFOLD_HPP_
#define OEC_ORBIFOLD_HPP_

#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "oec/error.hpp"
#include "oec/group.hpp"
#include "oec/gspace.hpp"
#include "oec/hash.hpp"
#include "oec/integer.hpp"

namespace oec {

inline constexpr unsigned kDefaultMaxOrder = 4;
inline constexpr std::uint64_t kDefaultTupleBudget = 100'000'000;

/// Order k of a higher order Euler characteristic, bounded by a configured
/// maximum.
struct ChiOrder {
  ChiOrder(unsigned k, unsigned max = kDefaultMaxOrder) : value(k) {  // NOLINT
    if (k > max) {
      throw InvalidArgument("order k = " + std::to_string(k) +
                            " exceeds the configured maximum " + std::to_string(max));
    }
  }
  unsigned value;
};

namespace detail {

struct MemoKey {
  std::uint64_t tag, a, b, c;
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    return static_cast<std::size_t>(hash_all(k.tag, k.a, k.b, k.c));
  }
};

}  // namespace detail

/// Process-wide memo table keyed by structural hashes. Fills are idempotent,
/// so concurrent writers racing on one key store the same value.
class MemoCache {
 public:
  std::optional<Integer> find(const detail::MemoKey& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!enabled_) return std::nullopt;
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    ++hits_;
    return it->second;
  }
  void store(const detail::MemoKey& key, const Integer& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (enabled_) map_.emplace(key, value);
  }
  void clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    map_.clear();
    hits_ = 0;
  }
  void set_enabled(bool enabled) {
    std::lock_guard<std::mutex> lock(mutex_);
    enabled_ = enabled;
  }
  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return map_.size();
  }
  std::uint64_t hits() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return hits_;
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<detail::MemoKey, Integer, detail::MemoKeyHash> map_;
  mutable std::uint64_t hits_ = 0;
  bool enabled_ = true;
};

inline MemoCache& memo_cache() {
  static MemoCache cache;
  return cache;
}

namespace detail {

inline constexpr std::uint64_t kTagChi = 0x63686931;  // "chi1"

inline Integer chi_k_recursive(const FiniteGSet& x, unsigned k) {
  if (k == 0) return orbit_count(x);
  if (x.empty()) return 0;
  const MemoKey key{kTagChi, x.hash(), k, 0};
  if (auto hit = memo_cache().find(key)) return *hit;
  const FiniteGroup& g = x.group();
  Integer total = 0;
  for (const ConjugacyClass& cls : g.conjugacy_classes()) {
    const ElementIndex rep = cls.representative;
    const ElementIndex one[] = {rep};
    if (fixed_point_set(x, one).empty()) continue;
    FiniteGroup c = centralizer_group(g, rep);
    total += chi_k_recursive(fixed_points(x, one, c), k - 1);
  }
  memo_cache().store(key, total);
  return total;
}

}  // namespace detail

/// chi(X/G).
inline Integer chi0(const FiniteGSet& x) { return orbit_count(x); }

inline Integer chi_k(const FiniteGSet& x, ChiOrder k) {
  return detail::chi_k_recursive(x, k.value);
}

struct OracleResult {
  Integer value;
  Integer tuple_sum;  // sum over commuting tuples of |X^<g>|
  std::uint64_t commuting_tuples = 0;
};

/// Evaluates the commuting-tuple form. Requires k >= 1 and
/// |G|^(k+1) <= budget. Throws InternalError if the tuple sum is not
/// divisible by |G|.
inline OracleResult chi_k_oracle(const FiniteGSet& x, ChiOrder k,
                                 std::uint64_t budget = kDefaultTupleBudget) {
  if (k.value == 0) throw InvalidArgument("the tuple form is defined for k >= 1");
  const FiniteGroup& g = x.group();
  const unsigned length = k.value + 1;
  if (saturating_pow(g.order(), length, budget) > budget) {
    throw BudgetExceeded("|G|^(k+1) = " + std::to_string(g.order()) + "^" +
                         std::to_string(length) + " exceeds the tuple budget " +
                         std::to_string(budget));
  }
  std::vector<ElementIndex> all(g.order());
  std::iota(all.begin(), all.end(), ElementIndex{0});
  std::vector<PointIndex> points(x.size());
  std::iota(points.begin(), points.end(), PointIndex{0});

  std::uint64_t tuples = 0;
  std::uint64_t sum = 0;
  // depth-first over tuples whose entries pairwise commute
  auto visit = [&](auto&& self, unsigned depth, const std::vector<ElementIndex>& candidates,
                   const std::vector<PointIndex>& fixed) -> void {
    if (depth == length) {
      ++tuples;
      sum += fixed.size();
      return;
    }
    for (ElementIndex h : candidates) {
      std::vector<ElementIndex> next;
      if (depth + 1 < length) {
        next.reserve(candidates.size());
        for (ElementIndex c : candidates)
          if (g.commute(c, h)) next.push_back(c);
      }
      std::vector<PointIndex> still;
      still.reserve(fixed.size());
      for (PointIndex p : fixed)
        if (x.act(h, p) == p) still.push_back(p);
      self(self, depth + 1, next, still);
    }
  };
  visit(visit, 0, all, points);

  OracleResult out;
  out.tuple_sum = sum;
  out.commuting_tuples = tuples;
  if (sum % g.order() != 0) {
    throw InternalError("commuting tuple sum " + std::to_string(sum) +
                        " is not divisible by |G| = " + std::to_string(g.order()));
  }
  out.value = out.tuple_sum / g.order();
  return out;
}

/// Sum over orbit types; needs the subgroup lattice of G (|G| <= bound).
inline Integer chi_k_by_orbit_types(const FiniteGSet& x, ChiOrder k,
                                    std::uint32_t bound = kDefaultSubgroupBound) {
  if (x.empty()) return 0;
  const auto classes = subgroup_conjugacy_classes(x.group(), bound);
  Integer total = 0;
  for (const IsotropyStratum& s : isotropy_strata(x, classes)) {
    total += Integer(s.orbit_count) * chi_k(coset_gset(s.subgroup), k);
  }
  return total;
}

}  // namespace oec

#endif  // OEC_ORBIFOLD_HPP_
