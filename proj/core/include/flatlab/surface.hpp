#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flatlab/mat2.hpp"
#include "flatlab/vec2.hpp"

namespace flatlab {

struct GluedEdge {
  int poly = -1;
  int edge = -1;
  bool operator==(const GluedEdge& o) const { return poly == o.poly && edge == o.edge; }
};

// Vertex class of the glued complex.  Cone angle is 2*pi*angle_multiple;
// order 0 classes are marked points.
struct ConePoint {
  std::vector<std::pair<int, int>> corners;  // (polygon, vertex) incidences
  int angle_multiple = 0;
  int order() const { return angle_multiple - 1; }
};

// A translation surface presented as strictly convex polygons (vertex lists,
// counter-clockwise) glued edge-to-edge by translations.  Glued edge pairs
// have exactly opposite holonomy; the gluing is a fixed-point-free involution
// covering every directed edge.  Immutable after construction.
class TranslationSurface {
 public:
  // Validates every invariant; computes cone points, genus, field tag.
  static TranslationSurface build(std::vector<std::vector<Vec2>> polygons,
                                  std::vector<std::vector<GluedEdge>> gluing);

  // Builders.
  static TranslationSurface torus();
  static TranslationSurface octagon();
  static TranslationSurface golden_l();
  // right[i] / up[i]: square glued to the right/top of square i (0-based).
  static TranslationSurface origami(const std::vector<int>& right, const std::vector<int>& up);
  // Cycle notation with 1-based labels, e.g. "(1 2)" "(1 3)".
  static TranslationSurface origami_cycles(const std::string& right, const std::string& up,
                                           int squares = 0);
  // L over [0,1+ex]x[0,1+ey] union column of width 1+ex, height 1 above it.
  static TranslationSurface perturbed_l(const Rational& ex, const Rational& ey);
  // Builder by name with space-separated arguments, e.g.
  // "torus", "golden-l", "origami (1 2) (1 3)", "perturbed-l 1/3 0".
  static TranslationSurface from_builder_spec(const std::string& spec);

  int polygon_count() const { return (int)polys_.size(); }
  const std::vector<Vec2>& polygon(int p) const { return polys_[p]; }
  const std::vector<Vec2d>& polygon_approx(int p) const { return polys_f_[p]; }
  int edge_count(int p) const { return (int)polys_f_[p].size(); }
  GluedEdge partner(int p, int e) const { return glue_[p][e]; }
  const std::vector<std::vector<GluedEdge>>& gluing() const { return glue_; }
  Vec2 edge_vector(int p, int e) const;
  Vec2d edge_vector_approx(int p, int e) const;

  bool float_mode() const { return float_mode_; }
  long field_disc() const { return field_d_; }

  const std::vector<ConePoint>& cone_points() const { return cones_; }
  int cone_class(int p, int v) const { return corner_class_[corner_index(p, v)]; }
  int genus() const { return genus_; }
  // Positive cone orders, descending.
  std::vector<int> stratum_orders() const;
  int marked_point_count() const;

  ExactReal area() const;
  double area_approx() const;
  double diameter_upper_bound() const;

  // Post-composition of charts with a matrix: exact matrices keep exact mode,
  // float matrices produce a float-mode surface.  det must be positive.
  TranslationSurface apply(const Mat2& m) const;

  // Literal identity of the presentation (same polygons, same gluing).
  bool same_presentation(const TranslationSurface& o) const;

 private:
  int corner_index(int p, int v) const;
  void compute_cones();

  std::vector<std::vector<Vec2>> polys_;
  std::vector<std::vector<Vec2d>> polys_f_;
  std::vector<std::vector<GluedEdge>> glue_;
  bool float_mode_ = false;
  long field_d_ = 0;
  std::vector<ConePoint> cones_;
  std::vector<int> corner_class_;
  std::vector<int> corner_offset_;
  int genus_ = 0;
};

// Next corner counter-clockwise around the glued vertex: crossing the
// incoming edge of the corner.
std::pair<int, int> next_corner_ccw(const TranslationSurface& s, int p, int v);

}  // namespace flatlab
