#include "flatlab/mat2.hpp"

#include <cmath>

namespace flatlab {

Mat2 Mat2::from_exact(ExactReal a, ExactReal b, ExactReal c, ExactReal d) {
  Mat2 m;
  m.exact_ = true;
  m.e_ = {std::move(a), std::move(b), std::move(c), std::move(d)};
  for (int i = 0; i < 4; ++i) m.f_[i] = m.e_[i].approx();
  return m;
}

Mat2 Mat2::from_double(double a, double b, double c, double d) {
  Mat2 m;
  m.exact_ = false;
  m.f_ = {a, b, c, d};
  return m;
}

Mat2 Mat2::geodesic(double t) { return from_double(std::exp(t), 0, 0, std::exp(-t)); }

Mat2 Mat2::rotation(double theta) {
  double c = std::cos(theta), s = std::sin(theta);
  return from_double(c, -s, s, c);
}

const ExactReal& Mat2::e(int i) const {
  if (!exact_) fail(Errc::float_mode_unsupported, "exact entry of a float-mode matrix");
  return e_[i];
}

ExactReal Mat2::det_exact() const {
  if (!exact_) fail(Errc::float_mode_unsupported, "exact determinant of a float-mode matrix");
  return e_[0] * e_[3] - e_[1] * e_[2];
}

bool Mat2::is_identity() const {
  if (exact_)
    return e_[0] == ExactReal(1) && e_[1].is_zero() && e_[2].is_zero() && e_[3] == ExactReal(1);
  return f_[0] == 1 && f_[1] == 0 && f_[2] == 0 && f_[3] == 1;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  if (exact_ && o.exact_) {
    return from_exact(e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
                      e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3]);
  }
  return from_double(f_[0] * o.f_[0] + f_[1] * o.f_[2], f_[0] * o.f_[1] + f_[1] * o.f_[3],
                     f_[2] * o.f_[0] + f_[3] * o.f_[2], f_[2] * o.f_[1] + f_[3] * o.f_[3]);
}

Mat2 Mat2::inverse() const {
  if (exact_) {
    ExactReal d = det_exact();
    if (d.is_zero()) fail(Errc::singular_matrix, "inverse of a singular matrix");
    return from_exact(e_[3] / d, -e_[1] / d, -e_[2] / d, e_[0] / d);
  }
  double d = det_approx();
  if (d == 0) fail(Errc::singular_matrix, "inverse of a singular matrix");
  return from_double(f_[3] / d, -f_[1] / d, -f_[2] / d, f_[0] / d);
}

Mat2 Mat2::transpose() const {
  if (exact_) return from_exact(e_[0], e_[2], e_[1], e_[3]);
  return from_double(f_[0], f_[2], f_[1], f_[3]);
}

Vec2 Mat2::apply(const Vec2& v) const {
  if (!exact_) fail(Errc::float_mode_unsupported, "exact apply of a float-mode matrix");
  return {e_[0] * v.x + e_[1] * v.y, e_[2] * v.x + e_[3] * v.y};
}

Vec2d Mat2::apply(const Vec2d& v) const {
  return {f_[0] * v.x + f_[1] * v.y, f_[2] * v.x + f_[3] * v.y};
}

double Mat2::frobenius_dist(const Mat2& o) const {
  double s = 0;
  for (int i = 0; i < 4; ++i) {
    double d = f_[i] - o.f_[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double Mat2::frobenius_norm() const {
  double s = 0;
  for (int i = 0; i < 4; ++i) s += f_[i] * f_[i];
  return std::sqrt(s);
}

std::string Mat2::str() const {
  if (exact_)
    return "[[" + e_[0].str() + "," + e_[1].str() + "],[" + e_[2].str() + "," + e_[3].str() + "]]";
  char buf[160];
  std::snprintf(buf, sizeof buf, "[[%.17g,%.17g],[%.17g,%.17g]]", f_[0], f_[1], f_[2], f_[3]);
  return buf;
}

}  // namespace flatlab
