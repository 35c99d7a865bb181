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

// Reference computations for the tests. Nothing here calls into the
// library: groups are plain permutation lists, actions are permutations of
// points paired with them, and every count is made by direct enumeration.

#ifndef OEC_TESTS_ORACLES_HPP_
#define OEC_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Perm = std::vector<std::uint32_t>;

/// (a*b)(i) = a(b(i)).
inline Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline Perm inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint32_t>(i);
  return out;
}

inline Perm identity(std::size_t n) {
  Perm out(n);
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

/// A permutation group together with an action on points: every element is
/// a pair (group permutation, point permutation).
struct Element {
  Perm g;
  Perm x;
  friend bool operator<(const Element& a, const Element& b) { return a.g < b.g; }
};

struct ActionGroup {
  std::vector<Element> elements;  // sorted by group permutation
  std::size_t points = 0;

  std::size_t order() const { return elements.size(); }
};

/// Closes the generator pairs under composition.
inline ActionGroup close(std::size_t degree, std::size_t points, const std::vector<Element>& gens) {
  std::set<Element> seen{Element{identity(degree), identity(points)}};
  std::vector<Element> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& u : frontier)
      for (const auto& s : gens) {
        Element v{compose(s.g, u.g), compose(s.x, u.x)};
        if (seen.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return ActionGroup{std::vector<Element>(seen.begin(), seen.end()), points};
}

/// Elements of the group generated by `gens` (no action).
inline std::vector<Perm> group_elements(std::size_t degree, const std::vector<Perm>& gens) {
  std::vector<Element> pairs;
  for (const auto& p : gens) pairs.push_back(Element{p, {}});
  std::vector<Perm> out;
  for (const auto& e : close(degree, 0, pairs).elements) out.push_back(e.g);
  return out;
}

inline bool commute(const Perm& a, const Perm& b) { return compose(a, b) == compose(b, a); }

inline std::size_t fixed_count(const std::vector<const Perm*>& xs, std::size_t points) {
  std::size_t n = 0;
  for (std::uint32_t p = 0; p < points; ++p) {
    bool fixed = true;
    for (const Perm* x : xs)
      if ((*x)[p] != p) fixed = false;
    n += fixed;
  }
  return n;
}

/// sum over pairwise commuting (k+1)-tuples of |X^<g>|, by enumerating all
/// tuples.
inline Big commuting_tuple_sum(const ActionGroup& a, unsigned k) {
  const std::size_t n = a.order();
  const unsigned len = k + 1;
  std::vector<std::size_t> idx(len, 0);
  Big total = 0;
  while (true) {
    bool ok = true;
    for (unsigned i = 0; i < len && ok; ++i)
      for (unsigned j = i + 1; j < len && ok; ++j)
        ok = commute(a.elements[idx[i]].g, a.elements[idx[j]].g);
    if (ok) {
      std::vector<const Perm*> xs;
      for (auto i : idx) xs.push_back(&a.elements[i].x);
      total += fixed_count(xs, a.points);
    }
    unsigned pos = 0;
    while (pos < len && ++idx[pos] == n) idx[pos++] = 0;
    if (pos == len) break;
  }
  return total;
}

inline Big chi_by_tuples(const ActionGroup& a, unsigned k) {
  return commuting_tuple_sum(a, k) / a.order();
}

/// Number of orbits by union-find over all element actions.
inline std::size_t orbit_count(const ActionGroup& a) {
  std::vector<std::size_t> parent(a.points);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : a.elements)
    for (std::size_t p = 0; p < a.points; ++p) parent[find(p)] = find(e.x[p]);
  std::size_t n = 0;
  for (std::size_t p = 0; p < a.points; ++p) n += find(p) == p;
  return n;
}

/// Sizes of the conjugacy classes, sorted.
inline std::vector<std::size_t> class_sizes(const std::vector<Perm>& group) {
  std::set<Perm> done;
  std::vector<std::size_t> out;
  for (const auto& g : group) {
    if (done.count(g)) continue;
    std::set<Perm> cls;
    for (const auto& h : group) cls.insert(compose(compose(h, g), inverse(h)));
    out.push_back(cls.size());
    done.insert(cls.begin(), cls.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Regular action: g acts on the list of elements by left multiplication.
inline ActionGroup regular(std::size_t degree, const std::vector<Perm>& gens) {
  const auto elems = group_elements(degree, gens);
  std::map<Perm, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  std::vector<Element> pairs;
  for (const auto& s : gens) {
    Perm x(elems.size());
    for (std::uint32_t i = 0; i < elems.size(); ++i) x[i] = index.at(compose(s, elems[i]));
    pairs.push_back(Element{s, x});
  }
  return close(degree, elems.size(), pairs);
}

inline ActionGroup trivial(std::size_t degree, const std::vector<Perm>& gens, std::size_t points) {
  std::vector<Element> pairs;
  for (const auto& s : gens) pairs.push_back(Element{s, identity(points)});
  return close(degree, points, pairs);
}

/// Action on the left cosets gH of the subgroup generated by `h_gens`.
inline ActionGroup cosets(std::size_t degree, const std::vector<Perm>& gens,
                          const std::vector<Perm>& h_gens) {
  const auto elems = group_elements(degree, gens);
  const auto h = group_elements(degree, h_gens);
  std::vector<std::set<Perm>> cs;
  std::map<Perm, std::uint32_t> coset_of;
  for (const auto& g : elems) {
    if (coset_of.count(g)) continue;
    std::set<Perm> c;
    for (const auto& x : h) c.insert(compose(g, x));
    for (const auto& y : c) coset_of[y] = static_cast<std::uint32_t>(cs.size());
    cs.push_back(std::move(c));
  }
  std::vector<Element> pairs;
  for (const auto& s : gens) {
    Perm x(cs.size());
    for (std::uint32_t i = 0; i < cs.size(); ++i) x[i] = coset_of.at(compose(s, *cs[i].begin()));
    pairs.push_back(Element{s, x});
  }
  return close(degree, cs.size(), pairs);
}

/// Product group on degree d1 + d2 acting on X1 x X2, point p1 * |X2| + p2.
inline ActionGroup product(const ActionGroup& a, std::size_t d1, const ActionGroup& b,
                           std::size_t d2) {
  ActionGroup out;
  out.points = a.points * b.points;
  for (const auto& u : a.elements)
    for (const auto& v : b.elements) {
      Element e;
      e.g = u.g;
      for (auto i : v.g) e.g.push_back(static_cast<std::uint32_t>(i + d1));
      e.x.resize(out.points);
      for (std::size_t p = 0; p < a.points; ++p)
        for (std::size_t q = 0; q < b.points; ++q)
          e.x[p * b.points + q] = static_cast<std::uint32_t>(u.x[p] * b.points + v.x[q]);
      out.elements.push_back(std::move(e));
    }
  (void)d2;
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

// ---------------------------------------------------------------------------
// Wreath products, element by element

struct WreathElt {
  std::vector<Perm> tuple;  // one element of G per coordinate
  Perm s;                   // permutation of coordinates
  friend bool operator<(const WreathElt& a, const WreathElt& b) {
    return a.s != b.s ? a.s < b.s : a.tuple < b.tuple;
  }
};

/// (g, s)(h, t) = (g * s(h), s t) with s(h)_i = h_{s^-1(i)}.
inline WreathElt wreath_mul(const WreathElt& a, const WreathElt& b) {
  const std::size_t n = a.s.size();
  const Perm sinv = inverse(a.s);
  WreathElt out;
  out.tuple.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.tuple[i] = compose(a.tuple[i], b.tuple[sinv[i]]);
  out.s = compose(a.s, b.s);
  return out;
}

inline WreathElt wreath_inv(const WreathElt& a) {
  const std::size_t n = a.s.size();
  WreathElt out;
  out.s = inverse(a.s);
  out.tuple.resize(n);
  // (g, s)^-1 = (s^-1(g^-1), s^-1)
  for (std::size_t i = 0; i < n; ++i) out.tuple[i] = inverse(a.tuple[a.s[i]]);
  return out;
}

inline std::vector<WreathElt> wreath_elements(const std::vector<Perm>& group, std::size_t n) {
  std::vector<Perm> perms;
  Perm s = identity(n);
  do perms.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  std::vector<std::vector<Perm>> tuples{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Perm>> next;
    for (const auto& t : tuples)
      for (const auto& g : group) {
        auto u = t;
        u.push_back(g);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }
  std::vector<WreathElt> out;
  for (const auto& p : perms)
    for (const auto& t : tuples) out.push_back(WreathElt{t, p});
  return out;
}

/// Conjugacy class sizes of G wr S_n, sorted.
inline std::vector<std::size_t> wreath_class_sizes(const std::vector<Perm>& group, std::size_t n) {
  const auto elems = wreath_elements(group, n);
  std::set<WreathElt> done;
  std::vector<std::size_t> out;
  for (const auto& w : elems) {
    if (done.count(w)) continue;
    std::set<WreathElt> cls;
    for (const auto& h : elems) cls.insert(wreath_mul(wreath_mul(h, w), wreath_inv(h)));
    out.push_back(cls.size());
    done.insert(cls.begin(), cls.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of x in X^n with (g, s) x = x, where (g, s) x_i = g_i x_{s^-1(i)}
/// and g_i acts on X through `act` (group permutation -> point permutation).
inline std::size_t wreath_fixed_count(const WreathElt& w, const std::map<Perm, Perm>& act,
                                      std::size_t points) {
  const std::size_t n = w.s.size();
  const Perm sinv = inverse(w.s);
  std::vector<std::uint32_t> x(n, 0);
  std::size_t count = 0;
  while (true) {
    bool fixed = true;
    for (std::size_t i = 0; i < n && fixed; ++i) fixed = act.at(w.tuple[i])[x[sinv[i]]] == x[i];
    count += fixed;
    std::size_t pos = 0;
    while (pos < n && ++x[pos] == points) x[pos++] = 0;
    if (pos == n || points == 0) break;
  }
  return points == 0 ? (n == 0 ? 1 : 0) : count;
}

/// The explicit action of G wr S_n on X^n as an ActionGroup (group part on
/// n * degree points).
inline ActionGroup wreath_action(const ActionGroup& a, std::size_t degree, std::size_t n) {
  std::vector<Perm> group;
  std::map<Perm, Perm> act;
  for (const auto& e : a.elements) {
    group.push_back(e.g);
    act[e.g] = e.x;
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= a.points;
  ActionGroup out;
  out.points = total;
  for (const auto& w : wreath_elements(group, n)) {
    Element e;
    // faithful encoding of (g, s) on n blocks of `degree` points
    e.g.resize(n * degree);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t p = 0; p < degree; ++p)
        e.g[i * degree + p] = static_cast<std::uint32_t>(w.s[i] * degree + w.tuple[w.s[i]][p]);
    e.x.resize(total);
    const Perm sinv = inverse(w.s);
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::size_t> x(n);
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= a.points) x[i] = c % a.points;
      std::size_t image = 0;
      for (std::size_t i = n; i-- > 0;) image = image * a.points + act.at(w.tuple[i])[x[sinv[i]]];
      e.x[code] = static_cast<std::uint32_t>(image);
    }
    out.elements.push_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Number theory and series

inline Big divisor_sum(std::uint64_t m) {
  Big s = 0;
  for (std::uint64_t d = 1; d <= m; ++d)
    if (m % d == 0) s += d;
  return s;
}

/// p(0..n) by counting partitions into parts of bounded size.
inline std::vector<Big> partitions(std::size_t n) {
  std::vector<Big> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t part = 1; part <= n; ++part)
    for (std::size_t i = part; i <= n; ++i) p[i] += p[i - part];
  return p;
}

inline Big pascal_binomial(std::size_t top, std::size_t k) {
  std::vector<std::vector<Big>> rows(top + 1);
  for (std::size_t i = 0; i <= top; ++i) {
    rows[i].assign(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
  }
  return k > top ? Big(0) : rows[top][k];
}

/// prod over (r_1..r_k), r_1...r_k <= N, of (1 - t^{r_1...r_k})^(-E r_2 r_3^2 ... r_k^(k-1)),
/// one factor at a time: (1 - t^m)^-1 is a running sum with stride m and
/// (1 - t^m) a difference with stride m.
inline std::vector<Big> literal_product(unsigned k, long long euler, std::size_t n) {
  std::vector<Big> s(n + 1, 0);
  s[0] = 1;
  auto apply = [&](std::size_t m, Big e) {
    if (m > n) return;
    const bool invert = e > 0;
    if (e < 0) e = -e;
    for (Big i = 0; i < e; ++i) {
      if (invert) {
        for (std::size_t j = m; j <= n; ++j) s[j] += s[j - m];
      } else {
        for (std::size_t j = n; j >= m; --j) s[j] -= s[j - m];
      }
    }
  };
  if (k == 0) {
    apply(1, Big(euler));
    return s;
  }
  std::vector<std::size_t> r(k, 1);
  while (true) {
    std::size_t m = 1;
    Big w = 1;
    for (unsigned i = 0; i < k; ++i) {
      m *= r[i];
      for (unsigned e = 0; e < i; ++e) w *= r[i];
    }
    if (m <= n) apply(m, Big(euler) * w);
    unsigned pos = 0;
    // odometer over tuples with product <= n
    while (pos < k) {
      ++r[pos];
      std::size_t prod = 1;
      for (auto v : r) prod *= v;
      if (prod <= n) break;
      r[pos] = 1;
      ++pos;
    }
    if (pos == k) break;
  }
  return s;
}

}  // namespace oracle

#endif  // OEC_TESTS_ORACLES_HPP_
