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

// Finite groups with densely indexed elements.
//
// Every group is an immutable value shared through a reference counted
// handle. Elements are indices 0..order-1 into the group's enumeration; the
// multiplication rule depends on how the group was built (a Cayley table, a
// permutation closure, a product, a quotient, ...) but the public surface is
// the same for all of them. Groups of order at most kTableLimit carry a
// materialized multiplication table.

#ifndef OEC_GROUP_HPP_
#define OEC_GROUP_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oec/error.hpp"
#include "oec/hash.hpp"

namespace oec {

using ElementIndex = std::uint32_t;

inline constexpr std::uint32_t kTableLimit = 2048;
inline constexpr std::uint32_t kExhaustiveAxiomLimit = 512;
inline constexpr std::uint32_t kDefaultSubgroupBound = 24;
inline constexpr std::uint64_t kMaxGroupOrder = 1u << 22;

enum class Representation {
  cayley_table,
  permutation,
  direct_product,
  quotient,
  wreath,
  adjoined_root,
  subgroup,
};

inline const char* to_string(Representation r) {
  switch (r) {
    case Representation::cayley_table: return "cayley";
    case Representation::permutation: return "perm";
    case Representation::direct_product: return "product";
    case Representation::quotient: return "quotient";
    case Representation::wreath: return "wreath";
    case Representation::adjoined_root: return "adjoined-root";
    case Representation::subgroup: return "subgroup";
  }
  return "?";
}

/// An element tagged with the identity of its owning group. Elements of
/// distinct group objects never compare equal.
class GroupElement {
 public:
  GroupElement(std::uint64_t group_uid, ElementIndex index)
      : group_uid_(group_uid), index_(index) {}

  ElementIndex index() const { return index_; }
  std::uint64_t group_uid() const { return group_uid_; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::uint64_t group_uid_;
  ElementIndex index_;
};

struct ConjugacyClass {
  ElementIndex representative;       // least index in the class
  std::vector<ElementIndex> members;  // sorted

  std::size_t size() const { return members.size(); }
};

namespace detail {
struct GroupData;
}

class FiniteGroup {
 public:
  explicit FiniteGroup(std::shared_ptr<const detail::GroupData> data)
      : data_(std::move(data)) {}

  std::uint32_t order() const;
  ElementIndex identity() const;
  ElementIndex mul(ElementIndex a, ElementIndex b) const;
  ElementIndex inv(ElementIndex a) const;
  ElementIndex pow(ElementIndex a, std::uint64_t e) const;
  // h g h^-1
  ElementIndex conjugate(ElementIndex g, ElementIndex h) const {
    return mul(mul(h, g), inv(h));
  }
  bool commute(ElementIndex a, ElementIndex b) const {
    return mul(a, b) == mul(b, a);
  }
  std::uint32_t element_order(ElementIndex a) const;
  bool is_abelian() const;

  GroupElement element(ElementIndex i) const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  bool owns(const GroupElement& a) const;

  std::uint64_t uid() const;
  std::uint64_t hash() const;
  Representation representation() const;
  const std::string& label() const;

  /// Distinguished generating list. For permutation, product and quotient
  /// groups this is the list the group was built from; otherwise a greedy
  /// generating set is computed on first use.
  std::span<const ElementIndex> generators() const;

  const std::vector<ConjugacyClass>& conjugacy_classes() const;
  std::uint32_t class_of(ElementIndex g) const;

  /// Permutation images of an element of a permutation group.
  std::span<const std::uint32_t> permutation(ElementIndex g) const;
  std::uint32_t degree() const;

  /// Factor groups of a direct product and the component decomposition.
  const FiniteGroup& factor(std::size_t i) const;
  std::pair<ElementIndex, ElementIndex> components(ElementIndex g) const;
  ElementIndex from_components(ElementIndex a, ElementIndex b) const;

  /// For subgroup and quotient groups: the group they were derived from.
  bool has_parent() const;
  const FiniteGroup& parent() const;
  /// Subgroup groups: local index -> index in parent.
  ElementIndex to_parent(ElementIndex g) const;
  /// Subgroup groups: index in parent -> local index, or nullopt.
  std::optional<ElementIndex> from_parent(ElementIndex g) const;
  /// Quotient groups: parent element -> coset index.
  ElementIndex project(ElementIndex parent_element) const;
  /// Quotient groups: least parent element of a coset.
  ElementIndex coset_representative(ElementIndex coset) const;

  const detail::GroupData& data() const { return *data_; }

  friend bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    return a.data_ == b.data_;
  }

 private:
  std::shared_ptr<const detail::GroupData> data_;
};

struct Subgroup {
  FiniteGroup parent;
  std::vector<ElementIndex> members;  // sorted ascending

  std::size_t order() const { return members.size(); }
  bool contains(ElementIndex g) const {
    return std::binary_search(members.begin(), members.end(), g);
  }
};

namespace detail {

struct GroupData {
  std::uint64_t uid = 0;
  std::uint64_t hash = 0;
  Representation representation = Representation::cayley_table;
  std::string label;
  std::uint32_t order = 0;
  ElementIndex identity = 0;
  std::vector<ElementIndex> inverse;
  std::vector<ElementIndex> table;  // order*order when materialized
  std::function<ElementIndex(ElementIndex, ElementIndex)> multiply;
  std::vector<ElementIndex> generators;
  bool has_generators = false;

  // permutation representation
  std::uint32_t degree = 0;
  std::vector<std::vector<std::uint32_t>> permutations;

  // direct product
  std::vector<FiniteGroup> factors;

  // subgroup / quotient
  std::optional<FiniteGroup> parent;
  std::vector<ElementIndex> parent_index;  // subgroup: local -> parent
  std::vector<ElementIndex> local_index;   // subgroup: parent -> local or npos
  std::vector<ElementIndex> projection;    // quotient: parent -> coset
  std::vector<ElementIndex> coset_rep;     // quotient: coset -> least parent

  mutable std::once_flag classes_once;
  mutable std::vector<ConjugacyClass> classes;
  mutable std::vector<std::uint32_t> class_index;
  mutable std::once_flag generators_once;
  mutable std::vector<ElementIndex> lazy_generators;

  ElementIndex mul(ElementIndex a, ElementIndex b) const {
    if (!table.empty()) return table[std::size_t{a} * order + b];
    return multiply(a, b);
  }
};

inline constexpr ElementIndex kNoElement = ~ElementIndex{0};

inline std::uint64_t next_group_uid() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

/// Closure of `gens` (together with the identity) under multiplication.
inline std::vector<ElementIndex> closure(const GroupData& g,
                                         std::span<const ElementIndex> gens) {
  std::vector<char> seen(g.order, 0);
  std::vector<ElementIndex> out{g.identity};
  seen[g.identity] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (ElementIndex s : gens) {
      ElementIndex v = g.mul(s, out[i]);
      if (!seen[v]) {
        seen[v] = 1;
        out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Checks the group axioms. Associativity is exhaustive when `exhaustive` is
/// set and the order is at most kExhaustiveAxiomLimit, sampled otherwise.
inline void verify_axioms(const GroupData& g, bool exhaustive) {
  const std::uint32_t n = g.order;
  for (ElementIndex a = 0; a < n; ++a) {
    if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a) {
      throw InvalidSpec("identity axiom fails for element " + std::to_string(a));
    }
    if (g.mul(a, g.inverse[a]) != g.identity || g.mul(g.inverse[a], a) != g.identity) {
      throw InvalidSpec("inverse axiom fails for element " + std::to_string(a));
    }
  }
  auto check = [&](ElementIndex a, ElementIndex b, ElementIndex c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
      throw InvalidSpec("multiplication is not associative at (" +
                        std::to_string(a) + ", " + std::to_string(b) + ", " +
                        std::to_string(c) + ")");
    }
  };
  if (exhaustive && n <= kExhaustiveAxiomLimit) {
    for (ElementIndex a = 0; a < n; ++a)
      for (ElementIndex b = 0; b < n; ++b)
        for (ElementIndex c = 0; c < n; ++c) check(a, b, c);
    return;
  }
  std::mt19937_64 rng(g.hash);
  std::uniform_int_distribution<ElementIndex> pick(0, n - 1);
  for (int i = 0; i < 256; ++i) check(pick(rng), pick(rng), pick(rng));
}

/// Fills the derived fields (table, inverses), validates and freezes.
inline FiniteGroup finalize(std::shared_ptr<GroupData> g, bool exhaustive) {
  g->uid = next_group_uid();
  const std::uint32_t n = g->order;
  if (n == 0) throw InvalidSpec("a group must have at least one element");
  if (g->table.empty() && n <= kTableLimit) {
    g->table.resize(std::size_t{n} * n);
    for (ElementIndex a = 0; a < n; ++a)
      for (ElementIndex b = 0; b < n; ++b) {
        ElementIndex v = g->multiply(a, b);
        if (v >= n) throw InternalError("product out of range");
        g->table[std::size_t{a} * n + b] = v;
      }
  }
  g->inverse.assign(n, kNoElement);
  for (ElementIndex a = 0; a < n; ++a) {
    if (g->inverse[a] != kNoElement) continue;
    // a^(ord-1) is the inverse
    ElementIndex prev = g->identity;
    ElementIndex cur = a;
    std::uint32_t steps = 0;
    while (cur != g->identity) {
      prev = cur;
      cur = g->mul(cur, a);
      if (++steps > n) throw InvalidSpec("element of infinite order");
    }
    g->inverse[a] = (a == g->identity) ? g->identity : prev;
    g->inverse[g->inverse[a]] = a;
  }
  verify_axioms(*g, exhaustive);
  return FiniteGroup(std::move(g));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FiniteGroup members

inline std::uint32_t FiniteGroup::order() const { return data_->order; }
inline ElementIndex FiniteGroup::identity() const { return data_->identity; }
inline ElementIndex FiniteGroup::mul(ElementIndex a, ElementIndex b) const {
  return data_->mul(a, b);
}
inline ElementIndex FiniteGroup::inv(ElementIndex a) const {
  return data_->inverse[a];
}
inline ElementIndex FiniteGroup::pow(ElementIndex a, std::uint64_t e) const {
  ElementIndex result = identity();
  ElementIndex base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}
inline std::uint32_t FiniteGroup::element_order(ElementIndex a) const {
  std::uint32_t k = 1;
  for (ElementIndex cur = a; cur != identity(); cur = mul(cur, a)) ++k;
  return k;
}
inline bool FiniteGroup::is_abelian() const {
  for (ElementIndex g : generators())
    for (ElementIndex h : generators())
      if (!commute(g, h)) return false;
  return true;
}
inline GroupElement FiniteGroup::element(ElementIndex i) const {
  if (i >= order()) {
    throw InvalidArgument("element index " + std::to_string(i) +
                          " out of range for group of order " +
                          std::to_string(order()));
  }
  return GroupElement(uid(), i);
}
inline bool FiniteGroup::owns(const GroupElement& a) const {
  return a.group_uid() == uid() && a.index() < order();
}
inline GroupElement FiniteGroup::multiply(const GroupElement& a,
                                          const GroupElement& b) const {
  if (!owns(a) || !owns(b)) {
    throw InvalidArgument("element does not belong to this group");
  }
  return GroupElement(uid(), mul(a.index(), b.index()));
}
inline GroupElement FiniteGroup::inverse(const GroupElement& a) const {
  if (!owns(a)) throw InvalidArgument("element does not belong to this group");
  return GroupElement(uid(), inv(a.index()));
}
inline std::uint64_t FiniteGroup::uid() const { return data_->uid; }
inline std::uint64_t FiniteGroup::hash() const { return data_->hash; }
inline Representation FiniteGroup::representation() const {
  return data_->representation;
}
inline const std::string& FiniteGroup::label() const { return data_->label; }

inline std::span<const ElementIndex> FiniteGroup::generators() const {
  if (data_->has_generators) return data_->generators;
  std::call_once(data_->generators_once, [this] {
    const auto& g = *data_;
    std::vector<ElementIndex> gens;
    std::vector<ElementIndex> span = detail::closure(g, gens);
    for (ElementIndex a = 0; a < g.order; ++a) {
      if (std::binary_search(span.begin(), span.end(), a)) continue;
      gens.push_back(a);
      span = detail::closure(g, gens);
    }
    g.lazy_generators = std::move(gens);
  });
  return data_->lazy_generators;
}

inline const std::vector<ConjugacyClass>& FiniteGroup::conjugacy_classes() const {
  std::call_once(data_->classes_once, [this] {
    const std::uint32_t n = order();
    std::vector<std::uint32_t> index(n, ~0u);
    std::vector<ConjugacyClass> classes;
    for (ElementIndex g = 0; g < n; ++g) {
      if (index[g] != ~0u) continue;
      ConjugacyClass cls{g, {}};
      const auto id = static_cast<std::uint32_t>(classes.size());
      for (ElementIndex h = 0; h < n; ++h) {
        ElementIndex c = conjugate(g, h);
        if (index[c] == ~0u) {
          index[c] = id;
          cls.members.push_back(c);
        }
      }
      std::sort(cls.members.begin(), cls.members.end());
      classes.push_back(std::move(cls));
    }
    data_->classes = std::move(classes);
    data_->class_index = std::move(index);
  });
  return data_->classes;
}

inline std::uint32_t FiniteGroup::class_of(ElementIndex g) const {
  conjugacy_classes();
  return data_->class_index[g];
}

inline std::span<const std::uint32_t> FiniteGroup::permutation(ElementIndex g) const {
  if (data_->representation != Representation::permutation) {
    throw InvalidArgument("not a permutation group");
  }
  return data_->permutations[g];
}
inline std::uint32_t FiniteGroup::degree() const { return data_->degree; }

inline const FiniteGroup& FiniteGroup::factor(std::size_t i) const {
  if (i >= data_->factors.size()) throw InvalidArgument("no such factor");
  return data_->factors[i];
}
inline std::pair<ElementIndex, ElementIndex> FiniteGroup::components(
    ElementIndex g) const {
  if (data_->factors.size() != 2) throw InvalidArgument("not a direct product");
  const std::uint32_t n2 = data_->factors[1].order();
  return {g / n2, g % n2};
}
inline ElementIndex FiniteGroup::from_components(ElementIndex a,
                                                 ElementIndex b) const {
  if (data_->factors.size() != 2) throw InvalidArgument("not a direct product");
  return a * data_->factors[1].order() + b;
}
inline bool FiniteGroup::has_parent() const { return data_->parent.has_value(); }
inline const FiniteGroup& FiniteGroup::parent() const {
  if (!data_->parent) throw InvalidArgument("group has no parent");
  return *data_->parent;
}
inline ElementIndex FiniteGroup::to_parent(ElementIndex g) const {
  if (data_->parent_index.empty()) throw InvalidArgument("not a subgroup group");
  return data_->parent_index[g];
}
inline std::optional<ElementIndex> FiniteGroup::from_parent(ElementIndex g) const {
  if (data_->local_index.empty()) throw InvalidArgument("not a subgroup group");
  ElementIndex v = data_->local_index[g];
  if (v == detail::kNoElement) return std::nullopt;
  return v;
}
inline ElementIndex FiniteGroup::project(ElementIndex parent_element) const {
  if (data_->projection.empty()) throw InvalidArgument("not a quotient group");
  return data_->projection[parent_element];
}
inline ElementIndex FiniteGroup::coset_representative(ElementIndex coset) const {
  if (data_->coset_rep.empty()) throw InvalidArgument("not a quotient group");
  return data_->coset_rep[coset];
}

// ---------------------------------------------------------------------------
// Constructors

namespace detail {

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    return static_cast<std::size_t>(
        hash_span<std::uint32_t>(0, std::span<const std::uint32_t>(v)));
  }
};

}  // namespace detail

/// Permutation group generated by `gens` acting on {0..degree-1}. Element 0
/// is the identity; the rest are numbered in breadth-first order of
/// discovery. The product gh acts as g(h(i)).
inline FiniteGroup from_permutations(std::uint32_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& gens,
                                     std::string label = {}) {
  for (const auto& p : gens) {
    if (p.size() != degree) {
      throw InvalidSpec("generator has " + std::to_string(p.size()) +
                        " images, expected degree " + std::to_string(degree));
    }
    std::vector<char> hit(degree, 0);
    for (std::uint32_t v : p) {
      if (v >= degree || hit[v]) {
        throw InvalidSpec("generator is not a permutation of 0.." +
                          std::to_string(degree == 0 ? 0 : degree - 1));
      }
      hit[v] = 1;
    }
  }
  auto g = std::make_shared<detail::GroupData>();
  g->representation = Representation::permutation;
  g->degree = degree;
  std::vector<std::uint32_t> id(degree);
  std::iota(id.begin(), id.end(), 0u);
  auto lookup = std::make_shared<
      std::unordered_map<std::vector<std::uint32_t>, ElementIndex, detail::VectorHash>>();
  g->permutations.push_back(id);
  (*lookup)[id] = 0;
  std::vector<std::uint32_t> gen_index;
  for (std::size_t i = 0; i < g->permutations.size(); ++i) {
    for (const auto& s : gens) {
      std::vector<std::uint32_t> v(degree);
      for (std::uint32_t j = 0; j < degree; ++j) v[j] = s[g->permutations[i][j]];
      if (lookup->find(v) == lookup->end()) {
        if (g->permutations.size() >= kMaxGroupOrder) {
          throw BudgetExceeded("permutation group exceeds the maximum order");
        }
        (*lookup)[v] = static_cast<ElementIndex>(g->permutations.size());
        g->permutations.push_back(std::move(v));
      }
    }
  }
  g->order = static_cast<std::uint32_t>(g->permutations.size());
  g->identity = 0;
  for (const auto& s : gens) g->generators.push_back(lookup->at(s));
  g->has_generators = true;
  g->hash = detail::hash_all(detail::hash_string("perm"), degree, gens.size());
  for (const auto& s : gens)
    g->hash = detail::hash_span<std::uint32_t>(g->hash, std::span<const std::uint32_t>(s));
  g->label = label.empty() ? "perm(" + std::to_string(degree) + ")" : std::move(label);
  const auto* perms = &g->permutations;
  g->multiply = [perms, lookup, degree](ElementIndex a, ElementIndex b) {
    std::vector<std::uint32_t> v(degree);
    const auto& pa = (*perms)[a];
    const auto& pb = (*perms)[b];
    for (std::uint32_t j = 0; j < degree; ++j) v[j] = pa[pb[j]];
    return lookup->at(v);
  };
  return detail::finalize(std::move(g), false);
}

/// Group given by a full multiplication table: table[a][b] = a*b.
inline FiniteGroup from_cayley_table(const std::vector<std::vector<std::uint32_t>>& rows,
                                     std::string label = {}) {
  const auto n = static_cast<std::uint32_t>(rows.size());
  if (n == 0) throw InvalidSpec("Cayley table is empty");
  if (n > kMaxGroupOrder) throw BudgetExceeded("Cayley table too large");
  auto g = std::make_shared<detail::GroupData>();
  g->representation = Representation::cayley_table;
  g->order = n;
  g->table.resize(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) {
      throw InvalidSpec("Cayley table row " + std::to_string(a) + " has " +
                        std::to_string(rows[a].size()) + " entries, expected " +
                        std::to_string(n));
    }
    std::vector<char> hit(n, 0);
    for (std::uint32_t b = 0; b < n; ++b) {
      std::uint32_t v = rows[a][b];
      if (v >= n) throw InvalidSpec("Cayley table entry out of range");
      if (hit[v]) {
        throw InvalidSpec("Cayley table row " + std::to_string(a) + " is not a bijection");
      }
      hit[v] = 1;
      g->table[std::size_t{a} * n + b] = v;
    }
  }
  for (std::uint32_t b = 0; b < n; ++b) {
    std::vector<char> hit(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
      std::uint32_t v = rows[a][b];
      if (hit[v]) {
        throw InvalidSpec("Cayley table column " + std::to_string(b) +
                          " is not a bijection");
      }
      hit[v] = 1;
    }
  }
  std::optional<ElementIndex> identity;
  for (ElementIndex e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (ElementIndex a = 0; a < n && ok; ++a)
      ok = rows[e][a] == a && rows[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw InvalidSpec("Cayley table has no identity element");
  g->identity = *identity;
  g->hash = detail::hash_span<ElementIndex>(detail::hash_string("cayley"), g->table);
  g->label = label.empty() ? "cayley(" + std::to_string(n) + ")" : std::move(label);
  return detail::finalize(std::move(g), true);
}

inline FiniteGroup cyclic_group(std::uint32_t n) {
  if (n == 0) throw InvalidArgument("cyclic group of order 0");
  std::vector<std::vector<std::uint32_t>> gens;
  if (n > 1) {
    std::vector<std::uint32_t> shift(n);
    for (std::uint32_t i = 0; i < n; ++i) shift[i] = (i + 1) % n;
    gens.push_back(std::move(shift));
  }
  return from_permutations(n, gens, "Z_" + std::to_string(n));
}

inline FiniteGroup symmetric_group(std::uint32_t n) {
  if (n == 0 || n > 7) throw InvalidArgument("symmetric group degree must be 1..7");
  std::vector<std::vector<std::uint32_t>> gens;
  if (n >= 2) {
    std::vector<std::uint32_t> swap(n);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    gens.push_back(swap);
  }
  if (n >= 3) {
    std::vector<std::uint32_t> cycle(n);
    for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens.push_back(std::move(cycle));
  }
  return from_permutations(n, gens, "S_" + std::to_string(n));
}

/// Symmetry group of the regular n-gon, order 2n.
inline FiniteGroup dihedral_group(std::uint32_t n) {
  if (n < 3) throw InvalidArgument("dihedral group needs n >= 3");
  std::vector<std::uint32_t> rot(n), ref(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return from_permutations(n, {rot, ref}, "D_" + std::to_string(n));
}

/// Quaternion group as its left regular representation on
/// {1,-1,i,-i,j,-j,k,-k}, generated by i and j.
inline FiniteGroup quaternion_group() {
  // unit index u in 0..3 = (1,i,j,k), sign s; element = 2u + s
  static constexpr int kUnitMul[4][4][2] = {
      // {unit, sign} for unit_a * unit_b
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  auto mulq = [](std::uint32_t a, std::uint32_t b) {
    const auto& r = kUnitMul[a / 2][b / 2];
    std::uint32_t sign = (a % 2) ^ (b % 2) ^ static_cast<std::uint32_t>(r[1]);
    return static_cast<std::uint32_t>(2 * r[0]) + sign;
  };
  std::vector<std::uint32_t> left_i(8), left_j(8);
  for (std::uint32_t x = 0; x < 8; ++x) {
    left_i[x] = mulq(2, x);
    left_j[x] = mulq(4, x);
  }
  return from_permutations(8, {left_i, left_j}, "Q_8");
}

inline FiniteGroup alternating_group_4() {
  return from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A_4");
}

inline FiniteGroup trivial_group() { return cyclic_group(1); }

/// Direct product with elements indexed a*|G2| + b. The generators are those
/// of G1 paired with the identity, followed by those of G2.
inline FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const std::uint64_t order = std::uint64_t{g1.order()} * g2.order();
  if (order > kMaxGroupOrder) throw BudgetExceeded("direct product too large");
  auto g = std::make_shared<detail::GroupData>();
  g->representation = Representation::direct_product;
  g->order = static_cast<std::uint32_t>(order);
  g->factors = {g1, g2};
  const std::uint32_t n2 = g2.order();
  g->identity = g1.identity() * n2 + g2.identity();
  for (ElementIndex a : g1.generators()) g->generators.push_back(a * n2 + g2.identity());
  for (ElementIndex b : g2.generators()) g->generators.push_back(g1.identity() * n2 + b);
  g->has_generators = true;
  g->hash = detail::hash_all(detail::hash_string("product"), g1.hash(), g2.hash());
  g->label = g1.label() + "x" + g2.label();
  g->multiply = [g1, g2, n2](ElementIndex x, ElementIndex y) {
    return g1.mul(x / n2, y / n2) * n2 + g2.mul(x % n2, y % n2);
  };
  return detail::finalize(std::move(g), false);
}

inline FiniteGroup klein_four_group() {
  return direct_product(cyclic_group(2), cyclic_group(2));
}

/// Builds a group from its conventional name: Z_n, S_n (n <= 5), D_n, Q_8,
/// A_4, Z_2xZ_2 (alias V_4).
inline FiniteGroup named_group(const std::string& name) {
  auto number_after = [&](std::size_t prefix) -> std::uint32_t {
    const std::string digits = name.substr(prefix);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits.size() > 6) {
      throw InvalidSpec("malformed group name '" + name + "'");
    }
    return static_cast<std::uint32_t>(std::stoul(digits));
  };
  if (name == "Z_2xZ_2" || name == "V_4" || name == "Z_2×Z_2") return klein_four_group();
  if (name == "Q_8") return quaternion_group();
  if (name == "A_4") return alternating_group_4();
  if (name.rfind("Z_", 0) == 0 || name.rfind("C_", 0) == 0) {
    std::uint32_t n = number_after(2);
    if (n == 0) throw InvalidSpec("Z_0 is not a finite group");
    return cyclic_group(n);
  }
  if (name.rfind("S_", 0) == 0) {
    std::uint32_t n = number_after(2);
    if (n == 0 || n > 5) throw InvalidSpec("named symmetric groups are S_1..S_5");
    return symmetric_group(n);
  }
  if (name.rfind("D_", 0) == 0) {
    std::uint32_t n = number_after(2);
    if (n < 3) throw InvalidSpec("named dihedral groups are D_n with n >= 3");
    return dihedral_group(n);
  }
  throw InvalidSpec("unknown group name '" + name + "'");
}

// ---------------------------------------------------------------------------
// Subgroups

inline Subgroup generated_subgroup(const FiniteGroup& g,
                                   std::span<const ElementIndex> gens) {
  for (ElementIndex s : gens) {
    if (s >= g.order()) throw InvalidArgument("generator not in group");
  }
  return Subgroup{g, detail::closure(g.data(), gens)};
}

inline Subgroup generated_subgroup(const FiniteGroup& g,
                                   std::initializer_list<ElementIndex> gens) {
  std::vector<ElementIndex> v(gens);
  return generated_subgroup(g, std::span<const ElementIndex>(v));
}

inline Subgroup centralizer(const FiniteGroup& g, ElementIndex x) {
  if (x >= g.order()) throw InvalidArgument("element not in group");
  Subgroup out{g, {}};
  for (ElementIndex h = 0; h < g.order(); ++h)
    if (g.commute(h, x)) out.members.push_back(h);
  return out;
}

inline Subgroup whole_group(const FiniteGroup& g) {
  Subgroup out{g, std::vector<ElementIndex>(g.order())};
  std::iota(out.members.begin(), out.members.end(), ElementIndex{0});
  return out;
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup{g, {g.identity()}};
}

inline bool is_subgroup(const Subgroup& h) {
  const FiniteGroup& g = h.parent;
  if (!h.contains(g.identity())) return false;
  for (ElementIndex a : h.members) {
    if (a >= g.order() || !h.contains(g.inv(a))) return false;
    for (ElementIndex b : h.members)
      if (!h.contains(g.mul(a, b))) return false;
  }
  return true;
}

inline bool is_normal(const Subgroup& h) {
  const FiniteGroup& g = h.parent;
  for (ElementIndex x = 0; x < g.order(); ++x)
    for (ElementIndex a : h.members)
      if (!h.contains(g.conjugate(a, x))) return false;
  return true;
}

/// The subgroup as a group in its own right. Local element i corresponds to
/// members[i] of the parent.
inline FiniteGroup subgroup_group(const Subgroup& h) {
  const FiniteGroup& parent = h.parent;
  if (h.members.empty() || !std::is_sorted(h.members.begin(), h.members.end())) {
    throw InvalidArgument("subgroup members must be sorted and non-empty");
  }
  auto g = std::make_shared<detail::GroupData>();
  g->representation = Representation::subgroup;
  g->order = static_cast<std::uint32_t>(h.members.size());
  g->parent = parent;
  g->parent_index = h.members;
  g->local_index.assign(parent.order(), detail::kNoElement);
  for (ElementIndex i = 0; i < g->order; ++i) g->local_index[h.members[i]] = i;
  if (g->local_index[parent.identity()] == detail::kNoElement) {
    throw InvalidArgument("subgroup does not contain the identity");
  }
  g->identity = g->local_index[parent.identity()];
  g->hash = detail::hash_span<ElementIndex>(
      detail::hash_all(detail::hash_string("subgroup"), parent.hash()), h.members);
  g->label = "subgroup(" + parent.label() + ", " + std::to_string(g->order) + ")";
  const auto* local = &g->local_index;
  const auto* up = &g->parent_index;
  g->multiply = [parent, local, up](ElementIndex a, ElementIndex b) {
    ElementIndex v = (*local)[parent.mul((*up)[a], (*up)[b])];
    if (v == detail::kNoElement) throw InvalidArgument("subset is not closed under multiplication");
    return v;
  };
  return detail::finalize(std::move(g), false);
}

inline FiniteGroup centralizer_group(const FiniteGroup& g, ElementIndex x) {
  return subgroup_group(centralizer(g, x));
}

namespace detail {

inline FiniteGroup make_quotient(const FiniteGroup& parent, const Subgroup& n,
                                 Representation rep, std::uint64_t hash,
                                 std::string label) {
  if (!same_group(n.parent, parent)) throw InvalidArgument("subgroup of a different group");
  if (!is_subgroup(n)) throw InvalidArgument("not a subgroup");
  if (!is_normal(n)) throw InvalidArgument("subgroup is not normal");
  auto g = std::make_shared<GroupData>();
  g->representation = rep;
  g->parent = parent;
  g->projection.assign(parent.order(), kNoElement);
  for (ElementIndex x = 0; x < parent.order(); ++x) {
    if (g->projection[x] != kNoElement) continue;
    const auto coset = static_cast<ElementIndex>(g->coset_rep.size());
    g->coset_rep.push_back(x);
    for (ElementIndex a : n.members) g->projection[parent.mul(x, a)] = coset;
  }
  g->order = static_cast<std::uint32_t>(g->coset_rep.size());
  g->identity = g->projection[parent.identity()];
  for (ElementIndex s : parent.generators()) g->generators.push_back(g->projection[s]);
  g->has_generators = true;
  g->hash = hash;
  g->label = std::move(label);
  const auto* proj = &g->projection;
  const auto* reps = &g->coset_rep;
  g->multiply = [parent, proj, reps](ElementIndex a, ElementIndex b) {
    return (*proj)[parent.mul((*reps)[a], (*reps)[b])];
  };
  return finalize(std::move(g), false);
}

}  // namespace detail

/// G/N on left cosets; coset i is represented by its least element.
inline FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& n) {
  return detail::make_quotient(
      g, n, Representation::quotient,
      detail::hash_span<ElementIndex>(
          detail::hash_all(detail::hash_string("quotient"), g.hash()), n.members),
      g.label() + "/" + std::to_string(n.order()));
}

/// G.<a> with a central, a^r = c, <a> meet G = <c>; realized as
/// (G x Z_{r*d}) / <(c, -r)> with d the order of c.
struct RootExtension {
  FiniteGroup group;
  std::vector<ElementIndex> embedding;       // G element -> extension element
  std::vector<ElementIndex> base_component;  // extension element -> G part of its least representative
  ElementIndex root;                         // the adjoined element a
  ElementIndex central;                      // c, as an element of G
  std::uint32_t r;
};

inline RootExtension adjoin_root(const FiniteGroup& g, ElementIndex c, std::uint32_t r) {
  if (c >= g.order()) throw InvalidArgument("element not in group");
  if (r == 0) throw InvalidArgument("root degree must be positive");
  for (ElementIndex h = 0; h < g.order(); ++h) {
    if (!g.commute(c, h)) throw InvalidArgument("element is not central");
  }
  const std::uint32_t d = g.element_order(c);
  const std::uint32_t cyc = r * d;
  FiniteGroup z = cyclic_group(cyc);  // element k is the k-th power of the generator
  FiniteGroup p = direct_product(g, z);
  const ElementIndex kernel_gen = p.from_components(c, (cyc - r % cyc) % cyc);
  Subgroup n = generated_subgroup(p, {kernel_gen});
  const std::uint64_t hash =
      detail::hash_all(detail::hash_string("adjoin"), g.hash(), c, r);
  FiniteGroup e = detail::make_quotient(p, n, Representation::adjoined_root, hash,
                                        g.label() + ".<a^" + std::to_string(r) + ">");
  RootExtension out{e, {}, {}, e.project(p.from_components(g.identity(), 1 % cyc)),
                    c, r};
  out.embedding.resize(g.order());
  for (ElementIndex x = 0; x < g.order(); ++x)
    out.embedding[x] = e.project(p.from_components(x, z.identity()));
  out.base_component.resize(e.order());
  for (ElementIndex q = 0; q < e.order(); ++q)
    out.base_component[q] = p.components(e.coset_representative(q)).first;
  return out;
}

// ---------------------------------------------------------------------------
// Subgroup lattice up to conjugacy

struct SubgroupClass {
  Subgroup representative;  // lexicographically least member list among conjugates
  std::vector<std::vector<ElementIndex>> conjugates;  // sorted, includes representative
};

/// All subgroups up to conjugacy, ordered by (order, representative members).
/// Candidates are the subgroups generated by at most two elements, closed
/// under pairwise joins.
inline std::vector<SubgroupClass> subgroup_conjugacy_classes(
    const FiniteGroup& g, std::uint32_t bound = kDefaultSubgroupBound) {
  if (g.order() > bound) {
    throw BudgetExceeded("subgroup enumeration limited to groups of order <= " +
                         std::to_string(bound) + " (got " + std::to_string(g.order()) + ")");
  }
  std::set<std::vector<ElementIndex>> all;
  for (ElementIndex a = 0; a < g.order(); ++a)
    for (ElementIndex b = a; b < g.order(); ++b)
      all.insert(generated_subgroup(g, {a, b}).members);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<ElementIndex>> current(all.begin(), all.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<ElementIndex> gens = current[i];
        gens.insert(gens.end(), current[j].begin(), current[j].end());
        if (all.insert(generated_subgroup(g, std::span<const ElementIndex>(gens)).members).second)
          grew = true;
      }
  }
  std::vector<SubgroupClass> classes;
  std::set<std::vector<ElementIndex>> placed;
  for (const auto& h : all) {
    if (placed.count(h)) continue;
    std::set<std::vector<ElementIndex>> conj;
    for (ElementIndex x = 0; x < g.order(); ++x) {
      std::vector<ElementIndex> image;
      image.reserve(h.size());
      for (ElementIndex a : h) image.push_back(g.conjugate(a, x));
      std::sort(image.begin(), image.end());
      conj.insert(std::move(image));
    }
    placed.insert(conj.begin(), conj.end());
    classes.push_back(SubgroupClass{Subgroup{g, *conj.begin()},
                                    {conj.begin(), conj.end()}});
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.order() != b.representative.order())
      return a.representative.order() < b.representative.order();
    return a.representative.members < b.representative.members;
  });
  return classes;
}

/// Index of the class containing the subgroup with the given sorted members.
inline std::optional<std::size_t> find_subgroup_class(
    const std::vector<SubgroupClass>& classes, const std::vector<ElementIndex>& members) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].representative.order() != members.size()) continue;
    const auto& c = classes[i].conjugates;
    if (std::find(c.begin(), c.end(), members) != c.end()) return i;
  }
  return std::nullopt;
}

}  // namespace oec

#endif  // OEC_GROUP_HPP_
