#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "latcover/halfspace.hpp"
#include "latcover/lp.hpp"

namespace latcover {

/// Edge/facet incidence of a 3-polytope.
struct FaceData {
  std::vector<std::array<int, 2>> edges;        // vertex index pairs, i < j, sorted
  std::vector<std::array<int, 2>> edge_facets;  // the two facets sharing each edge
  std::vector<std::vector<int>> facet_edges;    // per facet, edge ids in cycle order
};

struct Containment {
  bool inside = false;
  bool on_boundary = false;
};

/// Bounded full-dimensional convex polytope with synchronized vertex and
/// halfspace representations.
///
/// dim 1: a segment. dim 2: vertices stored as the CCW boundary cycle
/// starting at the lexicographically smallest vertex; facets are the edges in
/// the same order. dim 3: vertices lex-sorted; facets carry CCW-from-outside
/// vertex cycles. dim > 3 (products): V-rep, H-rep and exact volume only, no
/// facet cycles.
class Polytope {
 public:
  /// Convex hull, dim in {1,2,3}. Non-extreme input points are dropped;
  /// coplanar facets are merged. Throws DegenerateInput, DimensionUnsupported.
  static Polytope hull(std::vector<Vec> points);
  /// Bounded intersection of halfspaces, dim in {1,2,3}.
  /// Throws Empty, Unbounded, DegenerateInput.
  static Polytope from_halfspaces(const std::vector<Halfspace>& hs);
  static Polytope segment(const Rat& lo, const Rat& hi);
  static Polytope box(const std::vector<Rat>& lo, const std::vector<Rat>& hi);
  /// Cartesian product; full combinatorics when dim <= 3, reduced otherwise.
  static Polytope product(const Polytope& p, const Polytope& q);

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  /// Per-facet vertex cycles; empty when dim > 3.
  const std::vector<std::vector<int>>& facet_cycles() const { return cycles_; }
  bool has_cycles() const { return !cycles_.empty(); }

  const Rat& volume() const { return volume_; }
  Vec vertex_barycenter() const;
  /// Componentwise bounding box.
  void bounding_box(Vec& lo, Vec& hi) const;

  Containment contains(const Vec& x) const;
  /// True iff every vertex of inner satisfies every facet of this.
  bool contains_polytope(const Polytope& inner) const;

  /// Center of symmetry if the vertex set is invariant under x -> 2c - x.
  std::optional<Vec> symmetry_center() const;

  /// Image under x -> m x + t. Throws SingularMatrix.
  Polytope affine_image(const Mat& m, const Vec& t) const;
  /// Fast translate (combinatorics unchanged).
  Polytope translated(const Vec& t) const;

  /// The two closed halves cut by h's boundary plane; parts[0] is the <= side.
  /// Requires vertices strictly on both sides (a genuine straddle) and
  /// facet cycles (dim 2 or 3).
  std::array<Polytope, 2> split(const Halfspace& h) const;

  /// Edge incidence structure; dim 3 only. Throws DimensionUnsupported.
  FaceData face_data() const;

  /// Recheck all representation invariants; throws AuditFailure.
  void validate() const;

 private:
  Polytope() = default;
  static Polytope hull2(std::vector<Vec> pts);
  static Polytope hull3(std::vector<Vec> pts);
  static Polytope from_cycle2(std::vector<Vec> ccw);
  void compute_volume();

  int dim_ = 0;
  std::vector<Vec> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<std::vector<int>> cycles_;
  Rat volume_;
};

/// sign of det(b-a, c-a): >0 iff a,b,c is a CCW turn.
int orient2(const Vec& a, const Vec& b, const Vec& c);
/// sign of det(b-a, c-a, d-a): >0 iff d is on the positive side of plane abc.
int orient3(const Vec& a, const Vec& b, const Vec& c, const Vec& d);

}  // namespace latcover
