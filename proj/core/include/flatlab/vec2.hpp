#pragma once

#include <string>

#include "flatlab/exact_real.hpp"

namespace flatlab {

struct Vec2 {
  ExactReal x, y;

  Vec2() = default;
  Vec2(ExactReal px, ExactReal py) : x(std::move(px)), y(std::move(py)) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  ExactReal length_sq() const { return x * x + y * y; }
  std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline Vec2 operator*(const ExactReal& s, const Vec2& v) { return {s * v.x, s * v.y}; }

inline ExactReal cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline ExactReal dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

// Sign of the signed area of triangle (a, b, c): > 0 for counter-clockwise.
inline int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
  return cross(b - a, c - a).sign();
}

// > 0 iff p lies strictly inside the circumcircle of the CCW triangle (a,b,c),
// 0 on the circle, < 0 outside.  Exact.
int incircle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& p);

// Half-plane index for the circular order on directions starting at (1,0):
// 0 for y > 0 or (y == 0 and x > 0), else 1.  v must be nonzero.
int dir_half(const Vec2& v);

// Strict circular order on nonzero directions, angle measured from (1,0).
bool dir_less(const Vec2& u, const Vec2& v);

// Same ray (positive multiples).
inline bool dir_equal(const Vec2& u, const Vec2& v) {
  return cross(u, v).is_zero() && dot(u, v).sign() > 0;
}

struct Vec2d {
  double x = 0, y = 0;
};

inline Vec2d approx(const Vec2& v) { return {v.x.approx(), v.y.approx()}; }

}  // namespace flatlab
