#include "flatlab/vec2.hpp"

namespace flatlab {

int incircle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& p) {
  Vec2 u = a - p, v = b - p, w = c - p;
  ExactReal lu = u.length_sq(), lv = v.length_sq(), lw = w.length_sq();
  ExactReal det = lu * cross(v, w) - lv * cross(u, w) + lw * cross(u, v);
  return det.sign();
}

int dir_half(const Vec2& v) {
  int sy = v.y.sign();
  if (sy > 0) return 0;
  if (sy < 0) return 1;
  return v.x.sign() > 0 ? 0 : 1;
}

bool dir_less(const Vec2& u, const Vec2& v) {
  int hu = dir_half(u), hv = dir_half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v).sign() > 0;
}

}  // namespace flatlab
