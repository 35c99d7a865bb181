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

// Compactly supported Euler characteristics of one-dimensional strata and
// integration of constructible functions against them.
//
// Positions are exact rationals measured in full turns. A stratum lives on a
// numbered component; strata on a circle component wrap at 1.

#ifndef OEC_EULER_CALC_HPP_
#define OEC_EULER_CALC_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "oec/error.hpp"
#include "oec/integer.hpp"

namespace oec {

using Angle = boost::rational<std::int64_t>;

inline std::string to_string(const Angle& a) {
  if (a.denominator() == 1) return std::to_string(a.numerator());
  return std::to_string(a.numerator()) + "/" + std::to_string(a.denominator());
}

/// a mod 1, in [0, 1).
inline Angle wrap_turn(Angle a) {
  const std::int64_t n = a.numerator();
  const std::int64_t d = a.denominator();
  std::int64_t q = n / d;
  if (n < 0 && n % d != 0) --q;
  return a - q;
}

enum class StratumKind {
  point,
  open_interval,
  half_open_interval,
  closed_interval,
  circle,
  finite_set,
  cofinite_complement,
};

struct Stratum {
  StratumKind kind = StratumKind::point;
  int component = 0;
  bool on_circle = false;  // the component is a circle; positions wrap at 1
  Angle lo = 0, hi = 0;
  bool lo_closed = false, hi_closed = false;
  std::int64_t count = 0;      // finite_set: size; cofinite_complement: excluded points
  std::int64_t whole_chi = 0;  // cofinite_complement: chi_c of the whole space

  static Stratum point(Angle at, int component = 0, bool on_circle = false) {
    Stratum s;
    s.kind = StratumKind::point;
    s.component = component;
    s.on_circle = on_circle;
    s.lo = s.hi = on_circle ? wrap_turn(at) : at;
    s.lo_closed = s.hi_closed = true;
    return s;
  }
  static Stratum open_interval(Angle lo, Angle hi, int component = 0, bool on_circle = false) {
    return interval(StratumKind::open_interval, lo, hi, false, false, component, on_circle);
  }
  static Stratum closed_interval(Angle lo, Angle hi, int component = 0) {
    return interval(StratumKind::closed_interval, lo, hi, true, true, component, false);
  }
  static Stratum half_open_interval(Angle lo, Angle hi, bool closed_at_lo, int component = 0,
                                    bool on_circle = false) {
    return interval(StratumKind::half_open_interval, lo, hi, closed_at_lo, !closed_at_lo,
                    component, on_circle);
  }
  static Stratum circle(int component = 0) {
    Stratum s;
    s.kind = StratumKind::circle;
    s.component = component;
    s.on_circle = true;
    s.lo = 0;
    s.hi = 1;
    return s;
  }
  static Stratum finite_set(std::int64_t size, int component = 0) {
    if (size < 0) throw InvalidArgument("finite set of negative size");
    Stratum s;
    s.kind = StratumKind::finite_set;
    s.component = component;
    s.count = size;
    return s;
  }
  static Stratum cofinite_complement(std::int64_t whole_chi, std::int64_t excluded,
                                     int component = 0) {
    if (excluded < 0) throw InvalidArgument("negative excluded count");
    Stratum s;
    s.kind = StratumKind::cofinite_complement;
    s.component = component;
    s.whole_chi = whole_chi;
    s.count = excluded;
    return s;
  }

  /// point 1, open -1, half-open 0, closed 1, circle 0, finite set its size,
  /// cofinite complement chi_c(whole) - excluded.
  std::int64_t chi_c() const {
    switch (kind) {
      case StratumKind::point: return 1;
      case StratumKind::open_interval: return -1;
      case StratumKind::half_open_interval: return 0;
      case StratumKind::closed_interval: return 1;
      case StratumKind::circle: return 0;
      case StratumKind::finite_set: return count;
      case StratumKind::cofinite_complement: return whole_chi - count;
    }
    return 0;
  }

  bool geometric() const {
    return kind != StratumKind::finite_set && kind != StratumKind::cofinite_complement;
  }

  bool contains(Angle a) const {
    if (!geometric()) throw InvalidArgument("membership is undefined for abstract strata");
    if (kind == StratumKind::circle) return true;
    if (on_circle) {
      // bring a into [lo, lo + 1)
      a = lo + wrap_turn(a - lo);
    }
    if (a > lo && a < hi) return true;
    return (a == lo && lo_closed) || (a == hi && hi_closed);
  }

  /// A position inside the stratum.
  Angle sample() const {
    if (!geometric()) throw InvalidArgument("abstract strata have no sample position");
    if (kind == StratumKind::circle) return 0;
    if (kind == StratumKind::point) return lo;
    Angle mid = (lo + hi) / 2;
    return on_circle ? wrap_turn(mid) : mid;
  }

 private:
  static Stratum interval(StratumKind kind, Angle lo, Angle hi, bool lo_closed, bool hi_closed,
                          int component, bool on_circle) {
    if (!(lo < hi)) throw InvalidArgument("interval needs lo < hi");
    if (on_circle && hi - lo > Angle(1)) throw InvalidArgument("arc longer than a full turn");
    Stratum s;
    s.kind = kind;
    s.component = component;
    s.on_circle = on_circle;
    s.lo = lo;
    s.hi = hi;
    s.lo_closed = lo_closed;
    s.hi_closed = hi_closed;
    return s;
  }
};

inline std::int64_t euler_char(const std::vector<Stratum>& strata) {
  std::int64_t total = 0;
  for (const auto& s : strata) total += s.chi_c();
  return total;
}

namespace detail {

inline Stratum piece_between(Angle lo, bool lo_closed, Angle hi, bool hi_closed, int component,
                             bool on_circle) {
  if (lo_closed && hi_closed) return Stratum::closed_interval(lo, hi, component);
  if (lo_closed || hi_closed)
    return Stratum::half_open_interval(lo, hi, lo_closed, component, on_circle);
  return Stratum::open_interval(lo, hi, component, on_circle);
}

}  // namespace detail

/// Splits `s` into the given points and the open (or half-open) pieces
/// between them. chi_c is preserved.
inline std::vector<Stratum> refine_at_points(const Stratum& s, std::vector<Angle> points) {
  if (points.empty()) return {s};
  if (!s.geometric()) throw InvalidArgument("abstract strata cannot be refined at positions");
  for (const Angle& p : points) {
    if (!s.contains(p)) throw InvalidArgument("point " + to_string(p) + " lies outside the stratum");
  }
  if (s.on_circle) {
    const Angle base = s.kind == StratumKind::circle ? Angle(0) : s.lo;
    for (Angle& p : points) p = base + wrap_turn(p - base);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (s.kind == StratumKind::point) return {s};

  std::vector<Stratum> out;
  if (s.kind == StratumKind::circle) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      out.push_back(Stratum::point(points[i], s.component, true));
      const Angle next = i + 1 < points.size() ? points[i + 1] : points[0] + 1;
      out.push_back(Stratum::open_interval(points[i], next, s.component, true));
    }
    return out;
  }
  Angle cursor = s.lo;
  bool cursor_closed = s.lo_closed;
  for (const Angle& p : points) {
    if (p > cursor) {
      out.push_back(detail::piece_between(cursor, cursor_closed, p, false, s.component, s.on_circle));
    }
    out.push_back(Stratum::point(p, s.component, s.on_circle));
    cursor = p;
    cursor_closed = false;
  }
  if (s.hi > cursor) {
    out.push_back(detail::piece_between(cursor, cursor_closed, s.hi, s.hi_closed, s.component,
                                        s.on_circle));
  }
  return out;
}

struct Piece {
  Stratum stratum;
  Integer value;
};

namespace detail {

struct Segment {
  Angle lo, hi;
  bool lo_closed, hi_closed;

  bool contains(const Angle& a) const {
    return (a > lo && a < hi) || (a == lo && lo_closed) || (a == hi && hi_closed);
  }
};

inline std::vector<Segment> segments_of(const Stratum& s) {
  if (s.kind == StratumKind::circle) return {Segment{0, 1, true, false}};
  if (!s.on_circle || s.hi <= Angle(1)) return {Segment{s.lo, s.hi, s.lo_closed, s.hi_closed}};
  // arc crossing the base point
  std::vector<Segment> out{Segment{s.lo, 1, s.lo_closed, false}};
  out.push_back(Segment{0, s.hi - 1, true, s.hi_closed});
  return out;
}

inline bool intersects(const Segment& a, const Segment& b) {
  const Angle l = std::max(a.lo, b.lo);
  const Angle h = std::min(a.hi, b.hi);
  if (l < h) return true;
  if (l == h) return a.contains(l) && b.contains(l);
  return false;
}

}  // namespace detail

/// Piecewise constant integer function on a stratified space. The pieces
/// must be pairwise disjoint and their chi_c must add up to the ambient
/// space's chi_c.
class ConstructibleFunction {
 public:
  ConstructibleFunction(std::int64_t ambient_chi, std::vector<Piece> pieces)
      : ambient_chi_(ambient_chi), pieces_(std::move(pieces)) {
    std::int64_t total = 0;
    for (const auto& p : pieces_) total += p.stratum.chi_c();
    if (total != ambient_chi_) {
      throw InvalidArgument("pieces have total chi_c " + std::to_string(total) +
                            " but the ambient space has " + std::to_string(ambient_chi_));
    }
    for (std::size_t i = 0; i < pieces_.size(); ++i)
      for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
        const Stratum& a = pieces_[i].stratum;
        const Stratum& b = pieces_[j].stratum;
        if (a.component != b.component || !a.geometric() || !b.geometric()) continue;
        for (const auto& sa : detail::segments_of(a))
          for (const auto& sb : detail::segments_of(b))
            if (detail::intersects(sa, sb)) {
              throw InvalidArgument("pieces " + std::to_string(i) + " and " + std::to_string(j) +
                                    " overlap");
            }
      }
  }

  std::int64_t ambient_chi() const { return ambient_chi_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

 private:
  std::int64_t ambient_chi_;
  std::vector<Piece> pieces_;
};

/// sum over pieces of value * chi_c(stratum).
inline Integer integrate(const ConstructibleFunction& f) {
  Integer total = 0;
  for (const auto& p : f.pieces()) total += p.value * p.stratum.chi_c();
  return total;
}

}  // namespace oec

#endif  // OEC_EULER_CALC_HPP_
