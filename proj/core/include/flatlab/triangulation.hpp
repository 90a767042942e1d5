#pragma once

#include "flatlab/surface.hpp"

namespace flatlab {

// One triangle of a glued triangulation.  side[i] runs from corner i to
// corner i+1; the three sides sum to zero.  nbr/nside give the glued partner
// of each directed side.
struct Triangle {
  Vec2 side[3];
  int nbr[3] = {-1, -1, -1};
  int nside[3] = {-1, -1, -1};
  int corner_class[3] = {-1, -1, -1};
};

// Triangulation of a translation surface with every vertex a cone point or
// marked point.  Carries the vertex-class marking of the surface it came
// from, so period coordinates (side holonomies) are comparable across
// linear images of the same surface.
class MarkedTriangulation {
 public:
  // Fan-triangulates every polygon.
  static MarkedTriangulation from_surface(const TranslationSurface& s);

  // Lawson flips with the exact incircle predicate until every interior
  // edge is Delaunay.
  void make_delaunay();

  bool delaunay_flag() const { return delaunay_flag_; }
  int size() const { return (int)tris_.size(); }
  const Triangle& tri(int t) const { return tris_[t]; }
  long field_disc() const { return field_d_; }
  int class_count() const { return class_count_; }

  Vec2 corner_position(int t, int i) const;
  // incircle of the developed partner apex against triangle t (> 0 means the
  // edge (t,s) is not Delaunay).
  int edge_incircle(int t, int s) const;
  bool is_delaunay_edge(int t, int s) const { return edge_incircle(t, s) <= 0; }
  bool is_cocircular_edge(int t, int s) const { return edge_incircle(t, s) == 0; }

  // Rotate counter-clockwise around the vertex at corner (t,i).
  std::pair<int, int> next_corner_ccw(int t, int i) const;

  // Directed sides of minimal length (the shortest is a saddle connection).
  ExactReal min_side_length_sq() const;
  ExactReal max_side_length_sq() const;

  void flip(int t, int s);  // exposed for randomized canonicalization tests
  bool check_consistent() const;

 private:
  std::vector<Triangle> tris_;
  long field_d_ = 0;
  int class_count_ = 0;
  bool delaunay_flag_ = false;
};

MarkedTriangulation delaunay(const TranslationSurface& s);

}  // namespace flatlab
