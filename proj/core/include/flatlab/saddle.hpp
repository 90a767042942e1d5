#pragma once

#include <cstddef>
#include <optional>

#include "flatlab/triangulation.hpp"

namespace flatlab {

// Oriented saddle connection: straight segment between cone points (marked
// points included) with no cone point in its interior.
struct SaddleConnection {
  Vec2 holonomy;
  ExactReal length_sq;
  int start_class, end_class;
  int start_corner, end_corner;  // global corner id 3*tri + corner
};

struct SearchOptions {
  std::size_t max_frontier = 4000000;  // work-item cap; exceeded -> BoundTooLargeForMemory
  int workers = 0;                     // 0 = hardware default
};

// Complete multiset of saddle connections with length <= bound, ordered by
// (length_sq, direction angle, start corner, end corner).
std::vector<SaddleConnection> saddle_connections(const TranslationSurface& s, double bound,
                                                 const SearchOptions& opt = {});
std::vector<SaddleConnection> saddle_connections_sq(const MarkedTriangulation& tri,
                                                    const ExactReal& bound_sq,
                                                    const SearchOptions& opt = {});

struct Systole {
  ExactReal length_sq;
  std::optional<ExactReal> length;  // present when representable in the field
  double approx;
};
Systole systole(const TranslationSurface& s);

struct ThickPartQuery {
  double epsilon;
  ExactReal systole_sq;
  bool member;  // systole >= epsilon, compared exactly on squares
};
ThickPartQuery in_thick_part(const TranslationSurface& s, double epsilon);

// Min over pairs of non-parallel saddle connections within the bound of
// |cross(v, w)| / 2.
ExactReal min_virtual_triangle_area(const TranslationSurface& s, double bound,
                                    const SearchOptions& opt = {});

}  // namespace flatlab
