#pragma once

#include <array>

#include "flatlab/vec2.hpp"

namespace flatlab {

// 2x2 matrix [[a,b],[c,d]] with exact or floating entries.  Exact matrices
// always carry a floating shadow; float-mode matrices have no exact entries
// and propagate float mode through products.
class Mat2 {
 public:
  Mat2() = default;  // float-mode zero matrix; assign before use

  static Mat2 from_exact(ExactReal a, ExactReal b, ExactReal c, ExactReal d);
  static Mat2 from_double(double a, double b, double c, double d);
  static Mat2 identity() { return from_exact(1, 0, 0, 1); }

  // Flow parameterizations: g_t = diag(e^t, e^-t), h_s upper unipotent,
  // hhat_s lower unipotent, r_theta the standard rotation.
  static Mat2 geodesic(double t);
  static Mat2 shear(const ExactReal& s) { return from_exact(1, s, 0, 1); }
  static Mat2 shear(double s) { return from_double(1, s, 0, 1); }
  static Mat2 vshear(const ExactReal& s) { return from_exact(1, 0, s, 1); }
  static Mat2 vshear(double s) { return from_double(1, 0, s, 1); }
  static Mat2 rotation(double theta);

  bool exact() const { return exact_; }
  const ExactReal& e(int i) const;   // entries in row-major order, exact mode only
  double f(int i) const { return f_[i]; }

  ExactReal det_exact() const;
  double det_approx() const { return f_[0] * f_[3] - f_[1] * f_[2]; }
  bool is_identity() const;

  Mat2 operator*(const Mat2& o) const;
  Mat2 inverse() const;
  Mat2 transpose() const;

  Vec2 apply(const Vec2& v) const;   // exact mode only
  Vec2d apply(const Vec2d& v) const;

  double frobenius_dist(const Mat2& o) const;
  double frobenius_norm() const;
  std::string str() const;

 private:
  bool exact_ = false;
  std::array<ExactReal, 4> e_;
  std::array<double, 4> f_{};
};

}  // namespace flatlab
