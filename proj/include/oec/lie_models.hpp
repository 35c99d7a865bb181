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

// Stratified models of the circle group S1 and of O(2), and chi^(k) of finite
// unions of their homogeneous spaces by integration over the space of
// conjugacy classes:
//
//   chi^(k)(X, G) = integral over G_* of chi^(k-1)(X^<g>, C_G(g)) dchi,
//   chi^(0)(X, G) = chi(X/G).
//
// Class spaces (positions in full turns):
//   S1    a circle of rotations;
//   O(2)  rotation classes T_a, a in [0, 1/2] (T_a ~ T_-a), plus one point
//         for the class of reflections.
//
// Centralizers: S1 everywhere for S1. For O(2): O(2) at a = 0 and a = 1/2,
// SO(2) = S1 for 0 < a < 1/2, and the Klein four-group {1, S, T_1/2, T_1/2 S}
// at a reflection S.

#ifndef OEC_LIE_MODELS_HPP_
#define OEC_LIE_MODELS_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oec/error.hpp"
#include "oec/euler_calc.hpp"
#include "oec/group.hpp"
#include "oec/gspace.hpp"
#include "oec/integer.hpp"
#include "oec/orbifold.hpp"

namespace oec {

enum class CompactKind { circle, o2, finite };

class CompactGroupModel {
 public:
  static CompactGroupModel circle() { return CompactGroupModel(CompactKind::circle, std::nullopt); }
  static CompactGroupModel o2() { return CompactGroupModel(CompactKind::o2, std::nullopt); }
  static CompactGroupModel finite(FiniteGroup g) {
    return CompactGroupModel(CompactKind::finite, std::move(g));
  }

  CompactKind kind() const { return kind_; }
  const FiniteGroup& finite_group() const {
    if (!group_) throw InvalidArgument("not a finite group model");
    return *group_;
  }
  std::string name() const {
    switch (kind_) {
      case CompactKind::circle: return "S1";
      case CompactKind::o2: return "O2";
      case CompactKind::finite: return group_->label();
    }
    return "?";
  }

 private:
  CompactGroupModel(CompactKind kind, std::optional<FiniteGroup> g)
      : kind_(kind), group_(std::move(g)) {}

  CompactKind kind_;
  std::optional<FiniteGroup> group_;
};

enum class StabilizerKind { cyclic, so2, full, dihedral };

struct Stabilizer {
  StabilizerKind kind = StabilizerKind::cyclic;
  std::uint32_t m = 1;  // order of Z_m or D_m

  friend auto operator<=>(const Stabilizer&, const Stabilizer&) = default;
};

/// G/H for G the circle or O(2).
struct HomogeneousSpace {
  CompactKind group;
  Stabilizer stabilizer;

  std::string name() const {
    std::string g = group == CompactKind::circle ? "S1" : "O2";
    switch (stabilizer.kind) {
      case StabilizerKind::cyclic: return g + "/Z_" + std::to_string(stabilizer.m);
      case StabilizerKind::so2: return g + "/SO2";
      case StabilizerKind::full: return g + "/" + g;
      case StabilizerKind::dihedral: return g + "/D_" + std::to_string(stabilizer.m);
    }
    return "?";
  }

  friend auto operator<=>(const HomogeneousSpace&, const HomogeneousSpace&) = default;
};

/// A finite disjoint union of homogeneous spaces of S1 or O(2), or a finite
/// G-set when the group is finite.
class ModelGSpace {
 public:
  static ModelGSpace homogeneous(CompactGroupModel g, std::vector<HomogeneousSpace> pieces) {
    if (g.kind() == CompactKind::finite) {
      throw InvalidArgument("finite group models carry a FiniteGSet");
    }
    for (const auto& p : pieces) {
      if (p.group != g.kind()) throw InvalidArgument("all pieces must share the acting group");
    }
    std::sort(pieces.begin(), pieces.end());
    return ModelGSpace(std::move(g), std::move(pieces), std::nullopt);
  }
  static ModelGSpace finite(FiniteGSet x) {
    CompactGroupModel g = CompactGroupModel::finite(x.group());
    return ModelGSpace(std::move(g), {}, std::move(x));
  }

  const CompactGroupModel& group() const { return group_; }
  const std::vector<HomogeneousSpace>& pieces() const { return pieces_; }
  const FiniteGSet& finite_space() const {
    if (!finite_) throw InvalidArgument("not a finite model space");
    return *finite_;
  }

  std::string name() const {
    if (finite_) {
      return group_.name() + "-set(" + std::to_string(finite_->size()) + ")";
    }
    if (pieces_.empty()) return "empty(" + group_.name() + ")";
    std::string out;
    for (std::size_t i = 0; i < pieces_.size(); ++i) out += (i ? " + " : "") + pieces_[i].name();
    return out;
  }

  friend ModelGSpace operator+(const ModelGSpace& a, const ModelGSpace& b) {
    if (a.group_.kind() != b.group_.kind()) {
      throw InvalidArgument("disjoint union of spaces over different groups");
    }
    if (a.finite_) return finite(disjoint_union(*a.finite_, *b.finite_));
    std::vector<HomogeneousSpace> pieces = a.pieces_;
    pieces.insert(pieces.end(), b.pieces_.begin(), b.pieces_.end());
    return homogeneous(a.group_, std::move(pieces));
  }

 private:
  ModelGSpace(CompactGroupModel g, std::vector<HomogeneousSpace> pieces,
              std::optional<FiniteGSet> finite)
      : group_(std::move(g)), pieces_(std::move(pieces)), finite_(std::move(finite)) {}

  CompactGroupModel group_;
  std::vector<HomogeneousSpace> pieces_;
  std::optional<FiniteGSet> finite_;
};

/// Parses "S1/Z_m", "S1/S1", "O2/Z_m", "O2/SO2" (also "O2/D_m", "O2/O2",
/// which parse but are rejected when evaluated), joined by " + ".
inline ModelGSpace parse_model(const std::string& text) {
  std::vector<HomogeneousSpace> pieces;
  std::optional<CompactKind> kind;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    if (plus == std::string::npos) plus = text.size();
    std::string token = text.substr(start, plus - start);
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    const auto slash = token.find('/');
    if (token.empty() || slash == std::string::npos) {
      throw InvalidSpec("malformed model '" + text + "'");
    }
    const std::string g = token.substr(0, slash);
    const std::string h = token.substr(slash + 1);
    HomogeneousSpace piece{};
    if (g == "S1") {
      piece.group = CompactKind::circle;
    } else if (g == "O2") {
      piece.group = CompactKind::o2;
    } else {
      throw InvalidSpec("unknown group '" + g + "' in model (expected S1 or O2)");
    }
    auto number = [&](std::size_t prefix) {
      const std::string digits = h.substr(prefix);
      if (digits.empty() || digits.size() > 6 ||
          !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw InvalidSpec("malformed stabilizer '" + h + "'");
      }
      const auto m = static_cast<std::uint32_t>(std::stoul(digits));
      if (m == 0) throw InvalidSpec("stabilizer order must be positive");
      return m;
    };
    if (h.rfind("Z_", 0) == 0) {
      piece.stabilizer = {StabilizerKind::cyclic, number(2)};
    } else if (h.rfind("D_", 0) == 0) {
      piece.stabilizer = {StabilizerKind::dihedral, number(2)};
    } else if (h == "SO2") {
      piece.stabilizer = {piece.group == CompactKind::circle ? StabilizerKind::full
                                                             : StabilizerKind::so2,
                          1};
    } else if (h == g) {
      piece.stabilizer = {StabilizerKind::full, 1};
    } else {
      throw InvalidSpec("unknown stabilizer '" + h + "'");
    }
    if (kind && *kind != piece.group) throw InvalidSpec("model mixes S1 and O2 pieces");
    kind = piece.group;
    pieces.push_back(piece);
    start = plus + 1;
  }
  return ModelGSpace::homogeneous(
      *kind == CompactKind::circle ? CompactGroupModel::circle() : CompactGroupModel::o2(),
      std::move(pieces));
}

/// A point of the class space.
struct ClassPoint {
  enum class Kind { rotation, reflection, finite_class };
  Kind kind = Kind::rotation;
  Angle angle = 0;               // rotation classes, in turns
  std::uint32_t class_index = 0;  // finite groups

  static ClassPoint rotation(Angle a) { return ClassPoint{Kind::rotation, a, 0}; }
  static ClassPoint reflection() { return ClassPoint{Kind::reflection, 0, 0}; }
  static ClassPoint finite_class(std::uint32_t i) { return ClassPoint{Kind::finite_class, 0, i}; }
};

inline constexpr int kReflectionComponent = 1;

/// Circle: one circle. O(2): the closed interval [0, 1/2] of rotation classes
/// plus the reflection class (component 1). Finite G: one point per class.
inline std::vector<Stratum> class_space(const CompactGroupModel& g) {
  switch (g.kind()) {
    case CompactKind::circle: return {Stratum::circle(0)};
    case CompactKind::o2:
      return {Stratum::closed_interval(0, Angle(1, 2), 0),
              Stratum::point(0, kReflectionComponent)};
    case CompactKind::finite:
      return {Stratum::finite_set(
          static_cast<std::int64_t>(g.finite_group().conjugacy_classes().size()))};
  }
  return {};
}

namespace detail {

/// Rotation class of O(2) folded into [0, 1/2].
inline Angle fold_o2(Angle a) {
  a = wrap_turn(a);
  return std::min(a, Angle(1) - a);
}

inline bool in_cyclic(Angle a, std::uint32_t m) { return (a * Angle(m)).denominator() == 1; }

}  // namespace detail

inline CompactGroupModel centralizer_model(const CompactGroupModel& g, const ClassPoint& p) {
  switch (g.kind()) {
    case CompactKind::circle:
      if (p.kind != ClassPoint::Kind::rotation) throw InvalidArgument("S1 has only rotation classes");
      return CompactGroupModel::circle();
    case CompactKind::o2: {
      if (p.kind == ClassPoint::Kind::reflection) {
        return CompactGroupModel::finite(klein_four_group());
      }
      if (p.kind != ClassPoint::Kind::rotation) throw InvalidArgument("not a class of O(2)");
      const Angle a = detail::fold_o2(p.angle);
      if (a == Angle(0) || a == Angle(1, 2)) return CompactGroupModel::o2();
      return CompactGroupModel::circle();
    }
    case CompactKind::finite: {
      if (p.kind != ClassPoint::Kind::finite_class) throw InvalidArgument("not a finite class");
      const FiniteGroup& fg = g.finite_group();
      if (p.class_index >= fg.conjugacy_classes().size()) throw InvalidArgument("no such class");
      return CompactGroupModel::finite(
          centralizer_group(fg, fg.conjugacy_classes()[p.class_index].representative));
    }
  }
  throw InternalError("unreachable");
}

namespace detail {

inline void require_supported(const HomogeneousSpace& piece) {
  const auto k = piece.stabilizer.kind;
  if (piece.group == CompactKind::circle &&
      (k == StabilizerKind::cyclic || k == StabilizerKind::full)) {
    return;
  }
  if (piece.group == CompactKind::o2 && (k == StabilizerKind::cyclic || k == StabilizerKind::so2)) {
    return;
  }
  throw Unsupported("no fixed-set rule for " + piece.name() +
                    " (supported: S1/Z_m, S1/S1, O2/Z_m, O2/SO2)");
}

}  // namespace detail

/// X^<g> as a space over the centralizer of g.
inline ModelGSpace fixed_space_model(const ModelGSpace& x, const ClassPoint& p) {
  const CompactGroupModel centralizer = centralizer_model(x.group(), p);
  if (x.group().kind() == CompactKind::finite) {
    const FiniteGroup& g = x.group().finite_group();
    const ElementIndex rep = g.conjugacy_classes()[p.class_index].representative;
    const ElementIndex one[] = {rep};
    return ModelGSpace::finite(fixed_points(x.finite_space(), one, centralizer.finite_group()));
  }
  for (const auto& piece : x.pieces()) detail::require_supported(piece);

  if (x.group().kind() == CompactKind::circle) {
    std::vector<HomogeneousSpace> kept;
    for (const auto& piece : x.pieces()) {
      if (piece.stabilizer.kind == StabilizerKind::full ||
          detail::in_cyclic(wrap_turn(p.angle), piece.stabilizer.m)) {
        kept.push_back(piece);
      }
    }
    return ModelGSpace::homogeneous(centralizer, std::move(kept));
  }

  // O(2)
  if (p.kind == ClassPoint::Kind::reflection) {
    // Z_m holds no reflection and a reflection swaps the two cosets of SO(2)
    return ModelGSpace::finite(empty_gset(centralizer.finite_group()));
  }
  const Angle a = detail::fold_o2(p.angle);
  const bool full_centralizer = centralizer.kind() == CompactKind::o2;
  std::vector<HomogeneousSpace> kept;
  for (const auto& piece : x.pieces()) {
    const bool fixed = piece.stabilizer.kind == StabilizerKind::so2 ||
                       detail::in_cyclic(a, piece.stabilizer.m);
    if (!fixed) continue;
    if (full_centralizer) {
      kept.push_back(piece);
      continue;
    }
    // restricted to SO(2): one copy per coset of SO(2)
    const Stabilizer restricted = piece.stabilizer.kind == StabilizerKind::so2
                                      ? Stabilizer{StabilizerKind::full, 1}
                                      : piece.stabilizer;
    kept.push_back(HomogeneousSpace{CompactKind::circle, restricted});
    kept.push_back(HomogeneousSpace{CompactKind::circle, restricted});
  }
  return ModelGSpace::homogeneous(centralizer, std::move(kept));
}

/// O2/Z_m -> 2 x S1/Z_m and O2/SO2 -> 2 x S1/S1.
inline ModelGSpace restrict_to_circle(const ModelGSpace& x) {
  if (x.group().kind() != CompactKind::o2) throw InvalidArgument("restriction needs an O(2)-space");
  std::vector<HomogeneousSpace> pieces;
  for (const auto& piece : x.pieces()) {
    detail::require_supported(piece);
    const Stabilizer s = piece.stabilizer.kind == StabilizerKind::so2
                             ? Stabilizer{StabilizerKind::full, 1}
                             : piece.stabilizer;
    pieces.push_back(HomogeneousSpace{CompactKind::circle, s});
    pieces.push_back(HomogeneousSpace{CompactKind::circle, s});
  }
  return ModelGSpace::homogeneous(CompactGroupModel::circle(), std::move(pieces));
}

namespace detail {

/// Positions where the integrand can change: the rotations j/m of every
/// cyclic stabilizer, plus 0 and 1/2 for O(2) where the centralizer jumps.
inline std::vector<Angle> breakpoints(const ModelGSpace& x) {
  std::vector<Angle> out;
  const bool o2 = x.group().kind() == CompactKind::o2;
  if (o2) {
    out.push_back(0);
    out.push_back(Angle(1, 2));
  }
  for (const auto& piece : x.pieces()) {
    if (piece.stabilizer.kind != StabilizerKind::cyclic) continue;
    const std::uint32_t m = piece.stabilizer.m;
    for (std::uint32_t j = 0; j < m; ++j) {
      const Angle a(j, m);
      if (!o2 || a <= Angle(1, 2)) out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using ModelMemo = std::map<std::pair<std::string, unsigned>, Integer>;

inline Integer chi_k_model_impl(const ModelGSpace& x, unsigned k, ModelMemo& memo);

/// The integrand class point -> chi^(k-1)(X^<g>, C(g)) as a constructible
/// function on the refined class space.
inline ConstructibleFunction integrand(const ModelGSpace& x, unsigned k, ModelMemo& memo) {
  const auto strata = class_space(x.group());
  const auto cuts = breakpoints(x);
  std::vector<Piece> pieces;
  for (const Stratum& s : strata) {
    std::vector<Angle> inside;
    if (s.component != kReflectionComponent)
      for (const Angle& a : cuts)
        if (s.contains(a)) inside.push_back(a);
    for (const Stratum& piece : refine_at_points(s, inside)) {
      const ClassPoint p = piece.component == kReflectionComponent
                               ? ClassPoint::reflection()
                               : ClassPoint::rotation(piece.sample());
      pieces.push_back(Piece{piece, chi_k_model_impl(fixed_space_model(x, p), k - 1, memo)});
    }
  }
  return ConstructibleFunction(euler_char(strata), std::move(pieces));
}

inline Integer chi_k_model_impl(const ModelGSpace& x, unsigned k, ModelMemo& memo) {
  if (x.group().kind() == CompactKind::finite) return chi_k(x.finite_space(), ChiOrder(k, k));
  for (const auto& piece : x.pieces()) require_supported(piece);
  if (k == 0) return x.pieces().size();
  const auto key = std::make_pair(x.group().name() + ":" + x.name(), k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Integer value = integrate(integrand(x, k, memo));
  memo.emplace(key, value);
  return value;
}

}  // namespace detail

/// The constructible integrand of chi^(k) (k >= 1) over the class space.
inline ConstructibleFunction chi_k_integrand(const ModelGSpace& x, ChiOrder k) {
  if (k.value == 0) throw InvalidArgument("the integrand is defined for k >= 1");
  if (x.group().kind() == CompactKind::finite) {
    throw InvalidArgument("finite groups use the class sum directly");
  }
  detail::ModelMemo memo;
  return detail::integrand(x, k.value, memo);
}

inline Integer chi_k_model(const ModelGSpace& x, ChiOrder k) {
  detail::ModelMemo memo;
  return detail::chi_k_model_impl(x, k.value, memo);
}

struct PaperCheckRow {
  std::string space;
  std::uint32_t m = 0;
  unsigned k = 0;
  Integer computed;
  Integer closed_form;
  bool agrees = false;
  bool known_deviation = false;  // O2/SO2, k >= 1: closed form 2^k, integral 0
};

struct PaperCheckReport {
  std::vector<PaperCheckRow> rows;

  /// Every row agrees or is the known O2/SO2 deviation.
  bool consistent() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const PaperCheckRow& r) { return r.agrees || r.known_deviation; });
  }
  std::size_t deviations() const {
    return static_cast<std::size_t>(std::count_if(
        rows.begin(), rows.end(), [](const PaperCheckRow& r) { return !r.agrees; }));
  }
};

/// Compares chi_k_model with the closed forms m^k (S1/Z_m, O2/Z_m), 0 for
/// S1/S1 at k >= 1, and 2^k for O2/SO2.
inline PaperCheckReport check_paper_examples(std::uint32_t m_max, unsigned k_max) {
  PaperCheckReport report;
  auto add = [&](const std::string& model, std::uint32_t m, unsigned k, const Integer& closed) {
    PaperCheckRow row;
    row.space = model;
    row.m = m;
    row.k = k;
    row.computed = chi_k_model(parse_model(model), ChiOrder(k, k_max));
    row.closed_form = closed;
    row.agrees = row.computed == closed;
    row.known_deviation = !row.agrees && model == "O2/SO2" && k >= 1;
    report.rows.push_back(std::move(row));
  };
  for (std::uint32_t m = 1; m <= m_max; ++m)
    for (unsigned k = 0; k <= k_max; ++k)
      add("S1/Z_" + std::to_string(m), m, k, power(Integer(m), k));
  for (unsigned k = 1; k <= k_max; ++k) add("S1/S1", 0, k, 0);
  for (std::uint32_t m = 2; m <= m_max; ++m)
    for (unsigned k = 0; k <= k_max; ++k)
      add("O2/Z_" + std::to_string(m), m, k, power(Integer(m), k));
  for (unsigned k = 0; k <= k_max; ++k) add("O2/SO2", 0, k, power(Integer(2), k));
  return report;
}

}  // namespace oec

#endif  // OEC_LIE_MODELS_HPP_
