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

// Finite G-sets. The Euler characteristic of a finite discrete space is its
// cardinality, so every Euler characteristic computed over a FiniteGSet is a
// count of points or of orbits.

#ifndef OEC_GSPACE_HPP_
#define OEC_GSPACE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oec/error.hpp"
#include "oec/group.hpp"
#include "oec/hash.hpp"
#include "oec/integer.hpp"

namespace oec {

using PointIndex = std::uint32_t;

inline constexpr std::uint64_t kMaxActionTable = 1u << 26;

/// A finite set with a left action of a finite group, stored as the full
/// table act(g, x) = table[g * size + x].
class FiniteGSet {
 public:
  /// Takes a complete action table. When `validate` is set the table is
  /// checked to be an action: every row a permutation, the identity acting
  /// trivially and act(s h, x) = act(s, act(h, x)) for every generator s.
  FiniteGSet(FiniteGroup group, std::uint32_t points,
             std::vector<PointIndex> table, bool validate = true)
      : group_(std::move(group)), points_(points), table_(std::move(table)) {
    if (table_.size() != std::size_t{group_.order()} * points_) {
      throw InvalidSpec("action table has " + std::to_string(table_.size()) +
                        " entries, expected " +
                        std::to_string(std::size_t{group_.order()} * points_));
    }
    if (validate) check_action();
    hash_ = detail::hash_span<PointIndex>(
        detail::hash_all(detail::hash_string("gset"), group_.hash(), points_), table_);
  }

  const FiniteGroup& group() const { return group_; }
  std::uint32_t size() const { return points_; }
  bool empty() const { return points_ == 0; }
  PointIndex act(ElementIndex g, PointIndex x) const {
    return table_[std::size_t{g} * points_ + x];
  }
  std::span<const PointIndex> table() const { return table_; }
  std::uint64_t hash() const { return hash_; }

  /// Compactly supported Euler characteristic of the underlying set.
  Integer euler_characteristic() const { return points_; }

 private:
  void check_action() const {
    const std::uint32_t n = group_.order();
    for (ElementIndex g = 0; g < n; ++g) {
      std::vector<char> hit(points_, 0);
      for (PointIndex x = 0; x < points_; ++x) {
        PointIndex y = act(g, x);
        if (y >= points_ || hit[y]) {
          throw InvalidSpec("action of element " + std::to_string(g) +
                            " is not a permutation of the points");
        }
        hit[y] = 1;
      }
    }
    for (PointIndex x = 0; x < points_; ++x) {
      if (act(group_.identity(), x) != x) {
        throw InvalidSpec("identity does not act trivially");
      }
    }
    for (ElementIndex s : group_.generators())
      for (ElementIndex h = 0; h < n; ++h)
        for (PointIndex x = 0; x < points_; ++x)
          if (act(group_.mul(s, h), x) != act(s, act(h, x))) {
            throw InvalidSpec("action is not compatible with multiplication (element " +
                              std::to_string(s) + " * " + std::to_string(h) + ")");
          }
  }

  FiniteGroup group_;
  std::uint32_t points_;
  std::vector<PointIndex> table_;
  std::uint64_t hash_ = 0;
};

namespace detail {

inline void check_table_budget(const FiniteGroup& g, std::uint64_t points) {
  if (checked_mul(g.order(), points) > kMaxActionTable) {
    throw BudgetExceeded("action table of " + std::to_string(g.order()) + " x " +
                         std::to_string(points) + " entries exceeds the budget");
  }
}

/// Maps elements of `acting` to elements of `base`: the identity when they are
/// the same group, the parent embedding when `acting` is a subgroup group.
inline std::vector<ElementIndex> embedding_into(const FiniteGroup& acting,
                                                const FiniteGroup& base) {
  std::vector<ElementIndex> map(acting.order());
  if (same_group(acting, base)) {
    std::iota(map.begin(), map.end(), ElementIndex{0});
    return map;
  }
  if (acting.representation() == Representation::subgroup &&
      same_group(acting.parent(), base)) {
    for (ElementIndex h = 0; h < acting.order(); ++h) map[h] = acting.to_parent(h);
    return map;
  }
  throw InvalidArgument("acting group is not a subgroup of the space's group");
}

}  // namespace detail

inline FiniteGSet gset_from_table(const FiniteGroup& g, std::uint32_t points,
                                  std::vector<PointIndex> table) {
  return FiniteGSet(g, points, std::move(table), true);
}

/// Action determined by the images of the group's distinguished generators.
/// The map is extended along words in the generators and then validated, so
/// images that do not define a homomorphism are rejected.
inline FiniteGSet gset_from_generator_images(
    const FiniteGroup& g, std::uint32_t points,
    const std::vector<std::vector<PointIndex>>& images) {
  auto gens = g.generators();
  if (images.size() != gens.size()) {
    throw InvalidSpec("action lists " + std::to_string(images.size()) +
                      " generator images but the group has " +
                      std::to_string(gens.size()) + " generators");
  }
  for (const auto& p : images) {
    if (p.size() != points) throw InvalidSpec("generator image has wrong length");
    std::vector<char> hit(points, 0);
    for (PointIndex v : p) {
      if (v >= points || hit[v]) throw InvalidSpec("generator image is not a bijection");
      hit[v] = 1;
    }
  }
  detail::check_table_budget(g, points);
  const std::uint32_t n = g.order();
  std::vector<PointIndex> table(std::size_t{n} * points);
  std::vector<char> done(n, 0);
  std::vector<ElementIndex> queue{g.identity()};
  done[g.identity()] = 1;
  for (PointIndex x = 0; x < points; ++x) table[std::size_t{g.identity()} * points + x] = x;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const ElementIndex u = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const ElementIndex v = g.mul(gens[j], u);
      if (done[v]) continue;
      done[v] = 1;
      for (PointIndex x = 0; x < points; ++x)
        table[std::size_t{v} * points + x] = images[j][table[std::size_t{u} * points + x]];
      queue.push_back(v);
    }
  }
  if (queue.size() != n) throw InvalidSpec("group generators do not generate the group");
  // validation walks the same generator list
  FiniteGSet out(g, points, std::move(table), true);
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (PointIndex x = 0; x < points; ++x)
      if (out.act(gens[j], x) != images[j][x]) {
        throw InvalidSpec("generator images do not define an action");
      }
  return out;
}

inline FiniteGSet trivial_gset(const FiniteGroup& g, std::uint32_t points) {
  detail::check_table_budget(g, points);
  std::vector<PointIndex> table(std::size_t{g.order()} * points);
  for (ElementIndex h = 0; h < g.order(); ++h)
    for (PointIndex x = 0; x < points; ++x) table[std::size_t{h} * points + x] = x;
  return FiniteGSet(g, points, std::move(table), false);
}

inline FiniteGSet empty_gset(const FiniteGroup& g) { return FiniteGSet(g, 0, {}, false); }

/// Left multiplication of G on itself.
inline FiniteGSet regular_gset(const FiniteGroup& g) {
  detail::check_table_budget(g, g.order());
  std::vector<PointIndex> table(std::size_t{g.order()} * g.order());
  for (ElementIndex h = 0; h < g.order(); ++h)
    for (ElementIndex x = 0; x < g.order(); ++x)
      table[std::size_t{h} * g.order() + x] = g.mul(h, x);
  return FiniteGSet(g, g.order(), std::move(table), false);
}

/// Left cosets G/H with g.(xH) = (gx)H; cosets numbered by least element.
inline FiniteGSet coset_gset(const Subgroup& h) {
  const FiniteGroup& g = h.parent;
  std::vector<std::uint32_t> coset_of(g.order(), ~0u);
  std::uint32_t count = 0;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (coset_of[x] != ~0u) continue;
    for (ElementIndex a : h.members) coset_of[g.mul(x, a)] = count;
    ++count;
  }
  std::vector<ElementIndex> rep(count);
  for (ElementIndex x = g.order(); x-- > 0;) rep[coset_of[x]] = x;
  detail::check_table_budget(g, count);
  std::vector<PointIndex> table(std::size_t{g.order()} * count);
  for (ElementIndex y = 0; y < g.order(); ++y)
    for (std::uint32_t c = 0; c < count; ++c)
      table[std::size_t{y} * count + c] = coset_of[g.mul(y, rep[c])];
  return FiniteGSet(g, count, std::move(table), true);
}

/// Points of X followed by points of Y.
inline FiniteGSet disjoint_union(const FiniteGSet& x, const FiniteGSet& y) {
  if (!same_group(x.group(), y.group())) {
    throw InvalidArgument("disjoint union needs both spaces over the same group");
  }
  const std::uint32_t m = x.size() + y.size();
  const FiniteGroup& g = x.group();
  detail::check_table_budget(g, m);
  std::vector<PointIndex> table(std::size_t{g.order()} * m);
  for (ElementIndex h = 0; h < g.order(); ++h) {
    for (PointIndex p = 0; p < x.size(); ++p) table[std::size_t{h} * m + p] = x.act(h, p);
    for (PointIndex p = 0; p < y.size(); ++p)
      table[std::size_t{h} * m + x.size() + p] = x.size() + y.act(h, p);
  }
  return FiniteGSet(g, m, std::move(table), false);
}

/// The same points acted on through `to_base`, a map from elements of `acting`
/// to elements of X's group. The result is validated as an action.
inline FiniteGSet pullback(const FiniteGSet& x, const FiniteGroup& acting,
                           std::span<const ElementIndex> to_base) {
  if (to_base.size() != acting.order()) throw InvalidArgument("pullback map has wrong size");
  detail::check_table_budget(acting, x.size());
  std::vector<PointIndex> table(std::size_t{acting.order()} * x.size());
  for (ElementIndex h = 0; h < acting.order(); ++h)
    for (PointIndex p = 0; p < x.size(); ++p)
      table[std::size_t{h} * x.size() + p] = x.act(to_base[h], p);
  return FiniteGSet(acting, x.size(), std::move(table), true);
}

/// Restriction of the action to a subgroup group of X's group.
inline FiniteGSet restrict_action(const FiniteGSet& x, const FiniteGroup& acting) {
  auto map = detail::embedding_into(acting, x.group());
  std::vector<PointIndex> table(std::size_t{acting.order()} * x.size());
  for (ElementIndex h = 0; h < acting.order(); ++h)
    for (PointIndex p = 0; p < x.size(); ++p)
      table[std::size_t{h} * x.size() + p] = x.act(map[h], p);
  return FiniteGSet(acting, x.size(), std::move(table), false);
}

/// Points fixed by every element of `elements` (equivalently, by the
/// subgroup they generate).
inline std::vector<PointIndex> fixed_point_set(const FiniteGSet& x,
                                               std::span<const ElementIndex> elements) {
  std::vector<PointIndex> out;
  for (PointIndex p = 0; p < x.size(); ++p) {
    bool fixed = true;
    for (ElementIndex g : elements) {
      if (g >= x.group().order()) throw InvalidArgument("element not in group");
      if (x.act(g, p) != p) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(p);
  }
  return out;
}

/// X^<S> as a space over `acting`, which must be X's group or a subgroup
/// group of it and must preserve the fixed set. Points keep their relative
/// order.
inline FiniteGSet fixed_points(const FiniteGSet& x, std::span<const ElementIndex> elements,
                               const FiniteGroup& acting) {
  const auto fixed = fixed_point_set(x, elements);
  const auto map = detail::embedding_into(acting, x.group());
  std::vector<std::uint32_t> local(x.size(), ~0u);
  for (std::uint32_t i = 0; i < fixed.size(); ++i) local[fixed[i]] = i;
  const auto m = static_cast<std::uint32_t>(fixed.size());
  std::vector<PointIndex> table(std::size_t{acting.order()} * m);
  for (ElementIndex h = 0; h < acting.order(); ++h)
    for (std::uint32_t i = 0; i < m; ++i) {
      const std::uint32_t y = local[x.act(map[h], fixed[i])];
      if (y == ~0u) {
        throw InvalidArgument("acting group does not preserve the fixed point set");
      }
      table[std::size_t{h} * m + i] = y;
    }
  return FiniteGSet(acting, m, std::move(table), false);
}

inline FiniteGSet fixed_points(const FiniteGSet& x, std::initializer_list<ElementIndex> elements,
                               const FiniteGroup& acting) {
  std::vector<ElementIndex> v(elements);
  return fixed_points(x, std::span<const ElementIndex>(v), acting);
}

/// Orbits of the subgroup generated by `elements` (the whole group when
/// `elements` is empty), each sorted, ordered by least point.
inline std::vector<std::vector<PointIndex>> orbits(const FiniteGSet& x,
                                                   std::span<const ElementIndex> elements) {
  std::vector<ElementIndex> all;
  if (elements.empty()) {
    auto gens = x.group().generators();
    all.assign(gens.begin(), gens.end());
    elements = all;
  }
  std::vector<std::vector<PointIndex>> out;
  std::vector<char> seen(x.size(), 0);
  for (PointIndex p = 0; p < x.size(); ++p) {
    if (seen[p]) continue;
    std::vector<PointIndex> orbit{p};
    seen[p] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (ElementIndex g : elements) {
        PointIndex q = x.act(g, orbit[i]);
        if (!seen[q]) {
          seen[q] = 1;
          orbit.push_back(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

inline std::vector<std::vector<PointIndex>> orbits(const FiniteGSet& x) {
  return orbits(x, std::span<const ElementIndex>{});
}

/// Number of orbits of the whole group: chi(X/G) in the finite model.
inline std::uint64_t orbit_count(const FiniteGSet& x) { return orbits(x).size(); }

inline std::uint64_t orbit_count(const FiniteGSet& x, const Subgroup& h) {
  if (!same_group(h.parent, x.group())) throw InvalidArgument("subgroup of a different group");
  return orbits(x, h.members).size();
}

/// (1/|H|) sum_h |X^h|; an independent route to the orbit count.
inline Integer burnside_orbit_count(const FiniteGSet& x, const Subgroup& h) {
  Integer total = 0;
  for (ElementIndex g : h.members) {
    std::uint64_t fixed = 0;
    for (PointIndex p = 0; p < x.size(); ++p) fixed += (x.act(g, p) == p);
    total += fixed;
  }
  if (total % h.order() != 0) throw InternalError("Burnside sum not divisible by |H|");
  return total / h.order();
}

inline Subgroup stabilizer(const FiniteGSet& x, PointIndex p) {
  if (p >= x.size()) throw InvalidArgument("point out of range");
  Subgroup out{x.group(), {}};
  for (ElementIndex g = 0; g < x.group().order(); ++g)
    if (x.act(g, p) == p) out.members.push_back(g);
  return out;
}

/// X1 x X2 over G1 x G2 with componentwise action; point (p1, p2) has index
/// p1 * |X2| + p2.
inline FiniteGSet product_space(const FiniteGSet& x1, const FiniteGSet& x2) {
  FiniteGroup p = direct_product(x1.group(), x2.group());
  const std::uint64_t m64 = checked_mul(x1.size(), x2.size());
  detail::check_table_budget(p, m64);
  const auto m = static_cast<std::uint32_t>(m64);
  std::vector<PointIndex> table(std::size_t{p.order()} * m);
  for (ElementIndex g = 0; g < p.order(); ++g) {
    auto [a, b] = p.components(g);
    for (PointIndex u = 0; u < x1.size(); ++u)
      for (PointIndex v = 0; v < x2.size(); ++v)
        table[std::size_t{g} * m + u * x2.size() + v] = x1.act(a, u) * x2.size() + x2.act(b, v);
  }
  return FiniteGSet(p, m, std::move(table), false);
}

/// Points whose isotropy subgroup is conjugate to one fixed subgroup H.
struct IsotropyStratum {
  std::size_t class_index;  // into subgroup_conjugacy_classes(G)
  Subgroup subgroup;        // canonical representative H
  std::vector<PointIndex> points;
  std::uint64_t orbit_count;  // chi(X^([H]) / G)
};

/// Partition of the points by orbit type, non-empty strata only, ordered by
/// subgroup class.
inline std::vector<IsotropyStratum> isotropy_strata(
    const FiniteGSet& x, const std::vector<SubgroupClass>& classes) {
  std::vector<std::vector<PointIndex>> by_class(classes.size());
  for (PointIndex p = 0; p < x.size(); ++p) {
    auto idx = find_subgroup_class(classes, stabilizer(x, p).members);
    if (!idx) throw InternalError("stabilizer missing from the subgroup lattice");
    by_class[*idx].push_back(p);
  }
  std::vector<IsotropyStratum> out;
  const auto all_orbits = orbits(x);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (by_class[c].empty()) continue;
    std::uint64_t count = 0;
    for (const auto& orbit : all_orbits)
      if (std::binary_search(by_class[c].begin(), by_class[c].end(), orbit.front())) ++count;
    out.push_back(IsotropyStratum{c, classes[c].representative, by_class[c], count});
  }
  return out;
}

inline std::vector<IsotropyStratum> isotropy_strata(
    const FiniteGSet& x, std::uint32_t bound = kDefaultSubgroupBound) {
  return isotropy_strata(x, subgroup_conjugacy_classes(x.group(), bound));
}

/// Disjoint union of `orbit_count` coset spaces G/H, each H generated by at
/// most two elements drawn from a generator seeded with `seed`.
inline FiniteGSet random_gset(const FiniteGroup& g, std::uint32_t orbit_count,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElementIndex> pick(0, g.order() - 1);
  std::uniform_int_distribution<int> gens_count(0, 2);
  FiniteGSet out = empty_gset(g);
  for (std::uint32_t i = 0; i < orbit_count; ++i) {
    std::vector<ElementIndex> gens;
    for (int j = gens_count(rng); j > 0; --j) gens.push_back(pick(rng));
    out = disjoint_union(out, coset_gset(generated_subgroup(g, std::span<const ElementIndex>(gens))));
  }
  return out;
}

}  // namespace oec

#endif  // OEC_GSPACE_HPP_
