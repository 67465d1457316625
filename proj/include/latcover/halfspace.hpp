#pragma once

#include <string>

#include "latcover/linalg.hpp"

namespace latcover {

/// Closed halfspace {x : normal . x <= offset}.
struct Halfspace {
  Vec normal;
  Rat offset;

  Halfspace() = default;
  Halfspace(Vec n, Rat b) : normal(std::move(n)), offset(std::move(b)) {}

  int dim() const { return normal.dim(); }
  /// normal . x - offset; <= 0 inside, 0 on the boundary plane.
  Rat eval(const Vec& x) const { return normal.dot(x) - offset; }
  bool contains(const Vec& x) const { return eval(x).sign() <= 0; }
  bool strictly_contains(const Vec& x) const { return eval(x).sign() < 0; }

  /// Same halfspace with the boundary plane reversed: {x : -normal.x <= -offset}.
  Halfspace flipped() const { return Halfspace(-normal, -offset); }
  /// Halfspace shifted so it bounds the translate body+t.
  Halfspace translated(const Vec& t) const { return Halfspace(normal, offset + normal.dot(t)); }

  friend bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
  /// Lexicographic on (normal, offset); canonical facet order.
  friend bool operator<(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }

  std::string str() const;
};

/// Rescales by the unique positive rational making the normal a coprime
/// integer vector. Preserves the point set exactly; idempotent.
/// Throws ZeroNormal.
Halfspace canonicalize(const Halfspace& h);

}  // namespace latcover
