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

// Wreath products G wr S_n, their action on X^n and the type-driven
// evaluation of chi^(k)(X^n, G wr S_n).
//
// An element is a pair (g, s) of an n-tuple of elements of G and a
// permutation s of {0..n-1}, multiplied as
//
//   (g, s)(h, t) = (g . s(h), s t),   s(h)_i = h_{s^-1(i)},
//
// and acting on X^n by (g, s)(x)_i = g_i x_{s^-1(i)}. Two elements are
// conjugate iff they have the same type: the multiset of pairs (cycle length
// r, conjugacy class of the cycle product g_{i_r} ... g_{i_1}) over the cycles
// i_1 -> i_2 -> ... -> i_r of s.

#ifndef OEC_WREATH_HPP_
#define OEC_WREATH_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "oec/error.hpp"
#include "oec/group.hpp"
#include "oec/gspace.hpp"
#include "oec/hash.hpp"
#include "oec/integer.hpp"
#include "oec/orbifold.hpp"

namespace oec {

inline constexpr std::uint64_t kDefaultExplicitBudget = 100'000;
inline constexpr std::uint32_t kMaxWreathDegree = 12;

struct WreathElement {
  std::vector<ElementIndex> tuple;
  std::vector<std::uint32_t> perm;  // images s(i)

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// Lazy G wr S_n: elements are explicit (tuple, perm) pairs and nothing is
/// enumerated unless asked for.
class WreathProduct {
 public:
  WreathProduct(FiniteGroup base, std::uint32_t n) : base_(std::move(base)), n_(n) {
    if (n > kMaxWreathDegree) {
      throw BudgetExceeded("wreath degree " + std::to_string(n) + " exceeds " +
                           std::to_string(kMaxWreathDegree));
    }
    base_power_ = saturating_pow(base_.order(), n, ~std::uint64_t{0} - 1);
  }

  const FiniteGroup& base() const { return base_; }
  std::uint32_t degree() const { return n_; }
  Integer order() const { return power(Integer(base_.order()), n_) * factorial(n_); }

  WreathElement identity() const {
    WreathElement e{std::vector<ElementIndex>(n_, base_.identity()),
                    std::vector<std::uint32_t>(n_)};
    std::iota(e.perm.begin(), e.perm.end(), 0u);
    return e;
  }

  WreathElement mul(const WreathElement& a, const WreathElement& b) const {
    WreathElement out{std::vector<ElementIndex>(n_), std::vector<std::uint32_t>(n_)};
    // s(h)_{s(j)} = h_j
    for (std::uint32_t j = 0; j < n_; ++j) {
      const std::uint32_t i = a.perm[j];
      out.tuple[i] = base_.mul(a.tuple[i], b.tuple[j]);
    }
    for (std::uint32_t i = 0; i < n_; ++i) out.perm[i] = a.perm[b.perm[i]];
    return out;
  }

  WreathElement inv(const WreathElement& a) const {
    // (g, s)^-1 = (s^-1(g^-1), s^-1), s^-1(h)_i = h_{s(i)}
    WreathElement out{std::vector<ElementIndex>(n_), std::vector<std::uint32_t>(n_)};
    for (std::uint32_t i = 0; i < n_; ++i) {
      out.perm[a.perm[i]] = i;
      out.tuple[i] = base_.inv(a.tuple[a.perm[i]]);
    }
    return out;
  }

  /// (g, s)(x)_i = g_i x_{s^-1(i)}.
  std::vector<PointIndex> act(const WreathElement& a, const FiniteGSet& x,
                              const std::vector<PointIndex>& point) const {
    std::vector<PointIndex> out(n_);
    for (std::uint32_t j = 0; j < n_; ++j) {
      const std::uint32_t i = a.perm[j];
      out[i] = x.act(a.tuple[i], point[j]);
    }
    return out;
  }

  /// Dense index: rank(perm) * |G|^n + sum_i tuple_i |G|^i.
  std::uint64_t encode(const WreathElement& a) const {
    std::uint64_t t = 0;
    for (std::uint32_t i = n_; i-- > 0;) t = t * base_.order() + a.tuple[i];
    return permutation_rank(a.perm) * base_power_ + t;
  }

  WreathElement decode(std::uint64_t index) const {
    WreathElement out{std::vector<ElementIndex>(n_), {}};
    std::uint64_t t = index % base_power_;
    for (std::uint32_t i = 0; i < n_; ++i) {
      out.tuple[i] = static_cast<ElementIndex>(t % base_.order());
      t /= base_.order();
    }
    out.perm = permutation_unrank(index / base_power_);
    return out;
  }

  std::uint64_t permutation_rank(const std::vector<std::uint32_t>& p) const {
    std::uint64_t rank = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
      std::uint64_t smaller = 0;
      for (std::uint32_t j = i + 1; j < n_; ++j) smaller += p[j] < p[i];
      rank = rank * (n_ - i) + smaller;
    }
    return rank;
  }

  std::vector<std::uint32_t> permutation_unrank(std::uint64_t rank) const {
    std::vector<std::uint32_t> digits(n_);
    for (std::uint32_t i = n_; i-- > 0;) {
      digits[i] = static_cast<std::uint32_t>(rank % (n_ - i));
      rank /= (n_ - i);
    }
    std::vector<std::uint32_t> pool(n_);
    std::iota(pool.begin(), pool.end(), 0u);
    std::vector<std::uint32_t> p(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      p[i] = pool[digits[i]];
      pool.erase(pool.begin() + digits[i]);
    }
    return p;
  }

 private:
  FiniteGroup base_;
  std::uint32_t n_;
  std::uint64_t base_power_ = 1;
};

/// G wr S_n as an enumerated group; element i is WreathProduct(G, n).decode(i).
/// Generators: the generators of G in coordinate 0, then the transposition
/// (0 1) and the cycle (0 1 ... n-1).
inline FiniteGroup wreath_group(const FiniteGroup& g, std::uint32_t n,
                                std::uint64_t budget = kDefaultExplicitBudget) {
  if (n == 0) throw InvalidArgument("wreath degree must be positive");
  WreathProduct w(g, n);
  const Integer order = w.order();
  if (order > budget) {
    throw BudgetExceeded("|G wr S_n| = " + order.str() +
                         " exceeds the explicit enumeration budget " + std::to_string(budget));
  }
  auto data = std::make_shared<detail::GroupData>();
  data->representation = Representation::wreath;
  data->order = order.convert_to<std::uint32_t>();
  data->identity = static_cast<ElementIndex>(w.encode(w.identity()));
  for (ElementIndex s : g.generators()) {
    WreathElement e = w.identity();
    e.tuple[0] = s;
    data->generators.push_back(static_cast<ElementIndex>(w.encode(e)));
  }
  if (n >= 2) {
    WreathElement t = w.identity();
    std::swap(t.perm[0], t.perm[1]);
    data->generators.push_back(static_cast<ElementIndex>(w.encode(t)));
    WreathElement c = w.identity();
    for (std::uint32_t i = 0; i < n; ++i) c.perm[i] = (i + 1) % n;
    data->generators.push_back(static_cast<ElementIndex>(w.encode(c)));
  }
  data->has_generators = true;
  data->hash = detail::hash_all(detail::hash_string("wreath"), g.hash(), n);
  data->label = g.label() + " wr S_" + std::to_string(n);
  data->multiply = [w](ElementIndex a, ElementIndex b) {
    return static_cast<ElementIndex>(w.encode(w.mul(w.decode(a), w.decode(b))));
  };
  return detail::finalize(std::move(data), false);
}

/// X^n over the explicit wreath group `gn` = wreath_group(G, n). Point
/// (x_0, ..., x_{n-1}) has index sum_i x_i |X|^i.
inline FiniteGSet wreath_gset(const FiniteGSet& x, const FiniteGroup& gn, std::uint32_t n) {
  WreathProduct w(x.group(), n);
  if (Integer(gn.order()) != w.order()) throw InvalidArgument("group is not G wr S_n");
  const std::uint64_t points = saturating_pow(x.size(), n, kMaxActionTable);
  detail::check_table_budget(gn, points);
  const auto m = static_cast<std::uint32_t>(points);
  std::vector<PointIndex> table(std::size_t{gn.order()} * m);
  std::vector<PointIndex> coords(n);
  for (ElementIndex a = 0; a < gn.order(); ++a) {
    const WreathElement e = w.decode(a);
    for (PointIndex p = 0; p < m; ++p) {
      PointIndex rest = p;
      for (std::uint32_t i = 0; i < n; ++i) {
        coords[i] = rest % x.size();
        rest /= x.size();
      }
      const auto image = w.act(e, x, coords);
      PointIndex q = 0;
      for (std::uint32_t i = n; i-- > 0;) q = q * x.size() + image[i];
      table[std::size_t{a} * m + p] = q;
    }
  }
  return FiniteGSet(gn, m, std::move(table), true);
}

inline FiniteGSet wreath_gset(const FiniteGSet& x, std::uint32_t n,
                              std::uint64_t budget = kDefaultExplicitBudget) {
  return wreath_gset(x, wreath_group(x.group(), n, budget), n);
}

// ---------------------------------------------------------------------------
// Types

struct CycleProduct {
  std::uint32_t length;
  std::uint32_t class_index;
  ElementIndex product;
};

/// One entry per cycle of w.perm, sorted by (length, class).
inline std::vector<CycleProduct> cycle_products(const FiniteGroup& g, const WreathElement& w) {
  const auto n = static_cast<std::uint32_t>(w.perm.size());
  std::vector<char> seen(n, 0);
  std::vector<CycleProduct> out;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ElementIndex product = g.identity();
    std::uint32_t length = 0;
    for (std::uint32_t i = start; !seen[i]; i = w.perm[i]) {
      seen[i] = 1;
      product = g.mul(w.tuple[i], product);
      ++length;
    }
    out.push_back(CycleProduct{length, g.class_of(product), product});
  }
  std::sort(out.begin(), out.end(), [](const CycleProduct& a, const CycleProduct& b) {
    return std::tie(a.length, a.class_index) < std::tie(b.length, b.class_index);
  });
  return out;
}

struct TypeEntry {
  std::uint32_t class_index;  // into G.conjugacy_classes(), ordered by representative
  std::uint32_t cycle_length;
  std::uint32_t multiplicity;

  friend auto operator<=>(const TypeEntry&, const TypeEntry&) = default;
};

/// {m_r(c)}: the non-zero multiplicities, sorted by (class, r).
struct WreathType {
  std::vector<TypeEntry> entries;

  std::uint32_t degree() const {
    std::uint32_t n = 0;
    for (const auto& e : entries) n += e.cycle_length * e.multiplicity;
    return n;
  }

  std::uint32_t multiplicity(std::uint32_t class_index, std::uint32_t r) const {
    for (const auto& e : entries)
      if (e.class_index == class_index && e.cycle_length == r) return e.multiplicity;
    return 0;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) os << ' ';
      os << "m_" << entries[i].cycle_length << "[" << entries[i].class_index
         << "]=" << entries[i].multiplicity;
    }
    return os.str();
  }

  friend auto operator<=>(const WreathType&, const WreathType&) = default;
};

inline WreathType type_of(const FiniteGroup& g, const WreathElement& w) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> counts;
  for (const auto& cp : cycle_products(g, w)) ++counts[{cp.class_index, cp.length}];
  WreathType t;
  for (const auto& [key, m] : counts) t.entries.push_back(TypeEntry{key.first, key.second, m});
  return t;
}

inline void validate_type(const FiniteGroup& g, std::uint32_t n, const WreathType& t) {
  const auto classes = g.conjugacy_classes().size();
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    const auto& e = t.entries[i];
    if (e.class_index >= classes || e.cycle_length == 0 || e.multiplicity == 0) {
      throw InvalidArgument("invalid type entry");
    }
    if (i > 0 && !(std::tie(t.entries[i - 1].class_index, t.entries[i - 1].cycle_length) <
                   std::tie(e.class_index, e.cycle_length))) {
      throw InvalidArgument("type entries are not in canonical order");
    }
  }
  if (t.degree() != n) {
    throw InvalidArgument("type has sum r*m_r = " + std::to_string(t.degree()) +
                          ", expected " + std::to_string(n));
  }
}

/// Every type with sum r*m_r(c) = n.
inline std::vector<WreathType> enumerate_types(const FiniteGroup& g, std::uint32_t n) {
  const auto classes = static_cast<std::uint32_t>(g.conjugacy_classes().size());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;  // (class, r)
  for (std::uint32_t c = 0; c < classes; ++c)
    for (std::uint32_t r = 1; r <= n; ++r) slots.emplace_back(c, r);
  std::vector<WreathType> out;
  WreathType current;
  auto dfs = [&](auto&& self, std::size_t slot, std::uint32_t remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    if (slot == slots.size()) return;
    const auto [c, r] = slots[slot];
    self(self, slot + 1, remaining);
    for (std::uint32_t m = 1; m * r <= remaining; ++m) {
      current.entries.push_back(TypeEntry{c, r, m});
      self(self, slot + 1, remaining - m * r);
      current.entries.pop_back();
    }
  };
  dfs(dfs, 0, n);
  return out;
}

struct TypeClassData {
  Integer class_size;
  Integer centralizer_order;
};

/// Centralizer order prod m_r(c)! (r |C_G(c)|)^m_r(c); class size |G_n| / that.
inline TypeClassData type_class_data(const FiniteGroup& g, std::uint32_t n, const WreathType& t) {
  validate_type(g, n, t);
  Integer cent = 1;
  for (const auto& e : t.entries) {
    const auto& cls = g.conjugacy_classes()[e.class_index];
    const Integer c_order = g.order() / cls.size();
    cent *= factorial(e.multiplicity) * power(Integer(e.cycle_length) * c_order, e.multiplicity);
  }
  const Integer total = power(Integer(g.order()), n) * factorial(n);
  if (total % cent != 0) throw InternalError("centralizer order does not divide |G_n|");
  return TypeClassData{total / cent, cent};
}

/// An element of the given type: each r-cycle (p p+1 ... p+r-1) carries the
/// class representative at position p and the identity elsewhere.
inline WreathElement type_representative(const FiniteGroup& g, std::uint32_t n,
                                         const WreathType& t) {
  validate_type(g, n, t);
  WreathProduct w(g, n);
  WreathElement e = w.identity();
  std::uint32_t p = 0;
  for (const auto& entry : t.entries) {
    const ElementIndex rep = g.conjugacy_classes()[entry.class_index].representative;
    for (std::uint32_t j = 0; j < entry.multiplicity; ++j) {
      for (std::uint32_t i = 0; i < entry.cycle_length; ++i)
        e.perm[p + i] = p + (i + 1) % entry.cycle_length;
      e.tuple[p] = rep;
      p += entry.cycle_length;
    }
  }
  return e;
}

struct FixedSpaceFactor {
  std::uint32_t class_index;
  std::uint32_t cycle_length;
  std::uint32_t multiplicity;
  FiniteGSet fixed;  // X^<c> over C_G(c)
};

/// prod_{c,r} (X^<c>)^{m_r(c)}, kept as a list of factors.
struct FixedSpaceOfType {
  std::vector<FixedSpaceFactor> factors;

  Integer cardinality() const {
    Integer total = 1;
    for (const auto& f : factors) total *= power(Integer(f.fixed.size()), f.multiplicity);
    return total;
  }
};

inline FixedSpaceOfType fixed_space_of_type(const FiniteGSet& x, const WreathType& t) {
  const FiniteGroup& g = x.group();
  validate_type(g, t.degree(), t);
  FixedSpaceOfType out;
  for (const auto& e : t.entries) {
    const ElementIndex rep = g.conjugacy_classes()[e.class_index].representative;
    const ElementIndex one[] = {rep};
    out.factors.push_back(FixedSpaceFactor{e.class_index, e.cycle_length, e.multiplicity,
                                           fixed_points(x, one, centralizer_group(g, rep))});
  }
  return out;
}

struct CentralizerFactor {
  std::uint32_t class_index;
  std::uint32_t cycle_length;
  std::uint32_t multiplicity;
  FiniteGroup centralizer;  // C_G(c)
  RootExtension extension;  // C_G(c).<a>, a^r = c

  /// |(C_G(c).<a>) wr S_m|.
  Integer order() const {
    return power(Integer(extension.group.order()), multiplicity) * factorial(multiplicity);
  }
};

/// prod_{c,r} (C_G(c).<a_{r,c}>) wr S_{m_r(c)}, each factor acting on the
/// matching factor of the fixed space with a_{r,c} acting trivially.
struct CentralizerOfType {
  std::vector<CentralizerFactor> factors;

  Integer order() const {
    Integer total = 1;
    for (const auto& f : factors) total *= f.order();
    return total;
  }
};

inline CentralizerOfType centralizer_of_type(const FiniteGroup& g, const WreathType& t) {
  validate_type(g, t.degree(), t);
  CentralizerOfType out;
  for (const auto& e : t.entries) {
    const ElementIndex rep = g.conjugacy_classes()[e.class_index].representative;
    FiniteGroup c = centralizer_group(g, rep);
    const ElementIndex local = *c.from_parent(rep);
    out.factors.push_back(CentralizerFactor{e.class_index, e.cycle_length, e.multiplicity, c,
                                            adjoin_root(c, local, e.cycle_length)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// chi^(k)(X^n, G_n)

struct WreathOptions {
  /// Replace the explicit C_G(c).<a> groups by their class structure: every
  /// class of K.A (A central, acting trivially, [A : A meet K] = s) is a class
  /// of K repeated s times, with the same fixed set and centralizer C_K(c).A.
  bool use_lemma3_shortcut = false;
};

namespace detail {

inline constexpr std::uint64_t kTagWreath = 0x77726531;         // "wre1"
inline constexpr std::uint64_t kTagWreathShortcut = 0x77726532;  // "wre2"

struct ClassSlot {
  ElementIndex representative;
  FiniteGroup centralizer;
  FiniteGSet fixed;  // over centralizer
};

inline std::vector<ClassSlot> nonempty_class_slots(const FiniteGSet& x) {
  const FiniteGroup& g = x.group();
  std::vector<ClassSlot> slots;
  for (const ConjugacyClass& cls : g.conjugacy_classes()) {
    const ElementIndex one[] = {cls.representative};
    if (fixed_point_set(x, one).empty()) continue;
    FiniteGroup c = centralizer_group(g, cls.representative);
    FiniteGSet fixed = fixed_points(x, one, c);
    slots.push_back(ClassSlot{cls.representative, c, std::move(fixed)});
  }
  return slots;
}

inline Integer chi_wreath_default(const FiniteGSet& x, std::uint32_t n, unsigned k) {
  if (n == 0) return 1;
  if (k == 0) return binomial(Integer(orbit_count(x)) + n - 1, n);
  const MemoKey key{kTagWreath, x.hash(), n, k};
  if (auto hit = memo_cache().find(key)) return *hit;

  const auto slots = nonempty_class_slots(x);
  // factor(slot, r, m) = chi^(k-1)((X^<c>)^m, (C_G(c).<a>) wr S_m)
  std::map<std::tuple<std::size_t, std::uint32_t, std::uint32_t>, Integer> factors;
  std::map<std::pair<std::size_t, std::uint32_t>, FiniteGSet> lifted;
  auto factor = [&](std::size_t s, std::uint32_t r, std::uint32_t m) -> Integer {
    if (m == 0) return 1;
    auto key3 = std::make_tuple(s, r, m);
    if (auto it = factors.find(key3); it != factors.end()) return it->second;
    auto it = lifted.find({s, r});
    if (it == lifted.end()) {
      const ClassSlot& slot = slots[s];
      RootExtension ext =
          adjoin_root(slot.centralizer, *slot.centralizer.from_parent(slot.representative), r);
      it = lifted.emplace(std::make_pair(s, r),
                          pullback(slot.fixed, ext.group, ext.base_component)).first;
    }
    Integer v = chi_wreath_default(it->second, m, k - 1);
    factors.emplace(key3, v);
    return v;
  };

  std::vector<std::pair<std::size_t, std::uint32_t>> pairs;
  for (std::size_t s = 0; s < slots.size(); ++s)
    for (std::uint32_t r = 1; r <= n; ++r) pairs.emplace_back(s, r);

  // sum over types of the product of per-(c, r) factors
  Integer total = 0;
  auto dfs = [&](auto&& self, std::size_t i, std::uint32_t remaining, const Integer& acc) -> void {
    if (remaining == 0) {
      total += acc;
      return;
    }
    if (i == pairs.size()) return;
    const auto [s, r] = pairs[i];
    self(self, i + 1, remaining, acc);
    for (std::uint32_t m = 1; m * r <= remaining; ++m) {
      Integer f = factor(s, r, m);
      if (f == 0) continue;
      self(self, i + 1, remaining - m * r, acc * f);
    }
  };
  dfs(dfs, 0, n, Integer(1));
  memo_cache().store(key, total);
  return total;
}

using Poly = std::vector<Integer>;

inline Poly poly_mul(const Poly& a, const Poly& b, std::size_t degree) {
  Poly out(degree + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Poly poly_pow(Poly base, std::uint64_t e, std::size_t degree) {
  Poly result(degree + 1, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = poly_mul(result, base, degree);
    e >>= 1;
    if (e) base = poly_mul(base, base, degree);
  }
  return result;
}

/// chi^(k)((X)^n, (K.A) wr S_n) with X a K-space, A central and trivially
/// acting, s = [A : A meet K].
inline Integer chi_wreath_shortcut(const FiniteGSet& x, std::uint64_t s, std::uint32_t n,
                                   unsigned k) {
  if (n == 0) return 1;
  if (k == 0) return binomial(Integer(orbit_count(x)) + n - 1, n);
  const MemoKey key{kTagWreathShortcut, x.hash(), hash_all(s, n), k};
  if (auto hit = memo_cache().find(key)) return *hit;

  Poly product(n + 1, 0);
  product[0] = 1;
  for (const ClassSlot& slot : nonempty_class_slots(x)) {
    for (std::uint32_t r = 1; r <= n; ++r) {
      Poly series(n + 1, 0);
      for (std::uint32_t m = 0; m * r <= n; ++m)
        series[m * r] = chi_wreath_shortcut(slot.fixed, checked_mul(s, r), m, k - 1);
      // the s copies of the class contribute identical factors
      product = poly_mul(product, poly_pow(series, s, n), n);
    }
  }
  memo_cache().store(key, product[n]);
  return product[n];
}

}  // namespace detail

/// chi^(k)(X^n, G wr S_n) by summing over types; n = 0 gives 1.
inline Integer chi_k_wreath(const FiniteGSet& x, std::uint32_t n, ChiOrder k,
                            const WreathOptions& options = {}) {
  if (n > 64) throw BudgetExceeded("wreath degree above 64");
  if (options.use_lemma3_shortcut) return detail::chi_wreath_shortcut(x, 1, n, k.value);
  return detail::chi_wreath_default(x, n, k.value);
}

/// The same quantity on the explicitly enumerated group and space.
inline Integer chi_k_wreath_explicit(const FiniteGSet& x, std::uint32_t n, ChiOrder k,
                                     std::uint64_t budget = kDefaultExplicitBudget) {
  if (n == 0) return 1;
  return chi_k(wreath_gset(x, n, budget), k);
}

/// One conjugacy class of an explicit wreath group, described by its type.
struct BruteForceClass {
  WreathType type;
  Integer class_size;
  Integer centralizer_order;
};

struct TypeCheckReport {
  std::vector<WreathType> types;             // enumerate_types
  std::vector<TypeClassData> data;           // type_class_data, aligned with types
  std::vector<BruteForceClass> brute_force;  // explicit conjugacy classes, sorted by type
  bool classes_are_types = true;  // every class has one type; distinct classes differ
  bool agree = true;
};

/// Compares the type-based class data with brute-force conjugation on the
/// explicit group G wr S_n.
inline TypeCheckReport check_types_against_brute_force(
    const FiniteGroup& g, std::uint32_t n, std::uint64_t budget = kDefaultExplicitBudget) {
  TypeCheckReport report;
  report.types = enumerate_types(g, n);
  for (const auto& t : report.types) report.data.push_back(type_class_data(g, n, t));

  FiniteGroup gn = wreath_group(g, n, budget);
  WreathProduct w(g, n);
  std::set<WreathType> seen;
  for (const ConjugacyClass& cls : gn.conjugacy_classes()) {
    const WreathType t = type_of(g, w.decode(cls.representative));
    for (ElementIndex e : cls.members)
      if (type_of(g, w.decode(e)) != t) report.classes_are_types = false;
    if (!seen.insert(t).second) report.classes_are_types = false;
    report.brute_force.push_back(
        BruteForceClass{t, Integer(cls.size()), Integer(gn.order() / cls.size())});
  }
  std::sort(report.brute_force.begin(), report.brute_force.end(),
            [](const BruteForceClass& a, const BruteForceClass& b) { return a.type < b.type; });

  report.agree = report.classes_are_types && report.brute_force.size() == report.types.size();
  if (report.agree) {
    std::vector<std::size_t> order(report.types.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return report.types[a] < report.types[b]; });
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto& bf = report.brute_force[i];
      const std::size_t j = order[i];
      if (bf.type != report.types[j] || bf.class_size != report.data[j].class_size ||
          bf.centralizer_order != report.data[j].centralizer_order) {
        report.agree = false;
      }
    }
  }
  return report;
}

}  // namespace oec

#endif  // OEC_WREATH_HPP_
