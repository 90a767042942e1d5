#include "flatlab/sl2.hpp"

#include <cmath>
#include <map>

namespace flatlab {

namespace {

void require_unimodular(const Mat2& m) {
  if (m.exact()) {
    if (m.det_exact() != ExactReal(1)) fail(Errc::not_unimodular, "determinant != 1");
  } else if (std::fabs(m.det_approx() - 1.0) > 1e-9) {
    fail(Errc::not_unimodular, "determinant != 1");
  }
}

}  // namespace

IwasawaFactors iwasawa(const Mat2& m) {
  require_unimodular(m);
  double a = m.f(0), b = m.f(1), c = m.f(2), d = m.f(3);
  double r = std::hypot(a, c);
  double theta = std::atan2(c, a);
  // k^-1 m = [[r, (ab+cd)/r], [0, 1/r]] = g_t h_s
  double t = std::log(r);
  double s = (a * b + c * d) / (r * r);
  IwasawaFactors out;
  out.theta = theta;
  out.t = t;
  out.s = s;
  out.k = Mat2::rotation(theta);
  out.a = Mat2::geodesic(t);
  out.n = Mat2::shear(s);
  return out;
}

CartanFactors cartan(const Mat2& m) {
  require_unimodular(m);
  double a = m.f(0), b = m.f(1), c = m.f(2), d = m.f(3);
  // B = m^T m is symmetric positive definite with det 1.
  double b11 = a * a + c * c, b12 = a * b + c * d, b22 = b * b + d * d;
  double tr = b11 + b22;
  CartanFactors out;
  if (tr <= 2 + 1e-14) {
    // Numerically a rotation.
    out.sigma = 1;
    out.k1 = m;
    out.a = Mat2::identity();
    out.k2 = Mat2::identity();
    return out;
  }
  double lam = (tr + std::sqrt(tr * tr - 4)) / 2;
  out.sigma = std::sqrt(lam);
  // Eigenvector of B for lam; pick the better-conditioned formula.
  double vx, vy;
  if (std::fabs(lam - b11) > std::fabs(lam - b22)) {
    vx = b12;
    vy = lam - b11;
  } else {
    vx = lam - b22;
    vy = b12;
  }
  double n = std::hypot(vx, vy);
  if (n == 0) {
    vx = 1;
    vy = 0;
    n = 1;
  }
  double cphi = vx / n, sphi = vy / n;
  Mat2 v = Mat2::from_double(cphi, -sphi, sphi, cphi);
  out.k2 = v.transpose();
  out.a = Mat2::from_double(out.sigma, 0, 0, 1 / out.sigma);
  out.k1 = m * v * Mat2::from_double(1 / out.sigma, 0, 0, out.sigma);
  return out;
}

BruhatFactors bruhat(const Mat2& m) {
  require_unimodular(m);
  BruhatFactors out;
  if (m.exact()) {
    const ExactReal &a = m.e(0), &b = m.e(1), &c = m.e(2), &d = m.e(3);
    if (!a.is_zero()) {
      out.iota_branch = false;
      out.first = Mat2::from_exact(1, 0, c / a, 1);
      out.a = Mat2::from_exact(a, 0, 0, ExactReal(1) / a);
      out.n = Mat2::from_exact(1, b / a, 0, 1);
    } else {
      out.iota_branch = true;
      out.first = Mat2::from_exact(0, -1, 1, 0);
      out.a = Mat2::from_exact(c, 0, 0, ExactReal(1) / c);
      out.n = Mat2::from_exact(1, d / c, 0, 1);
    }
    return out;
  }
  double a = m.f(0), b = m.f(1), c = m.f(2), d = m.f(3);
  if (a != 0) {
    out.iota_branch = false;
    out.first = Mat2::vshear(c / a);
    out.a = Mat2::from_double(a, 0, 0, 1 / a);
    out.n = Mat2::shear(b / a);
  } else {
    out.iota_branch = true;
    out.first = Mat2::from_double(0, -1, 1, 0);
    out.a = Mat2::from_double(c, 0, 0, 1 / c);
    out.n = Mat2::shear(d / c);
  }
  return out;
}

namespace {

// Entries as integer-coefficient polynomials in {e^t, u}: (k, p) -> coeff
// stands for coeff * e^{k t} * u^p.
using Poly = std::map<std::pair<int, int>, long>;

Poly mono(int k, int p, long c) { return {{{k, p}, c}}; }

Poly mul(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      auto key = std::make_pair(mx.first + my.first, mx.second + my.second);
      out[key] += cx * cy;
      if (out[key] == 0) out.erase(key);
    }
  return out;
}

struct PolyMat {
  Poly m[4];
  PolyMat operator*(const PolyMat& o) const {
    PolyMat r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Poly acc;
        for (int k = 0; k < 2; ++k)
          for (const auto& [mm, c] : mul(m[2 * i + k], o.m[2 * k + j])) {
            acc[mm] += c;
            if (acc[mm] == 0) acc.erase(mm);
          }
        r.m[2 * i + j] = acc;
      }
    return r;
  }
};

}  // namespace

ShearConjugation conj_shear(double t, double u) {
  ShearConjugation out;
  out.lhs = Mat2::geodesic(t) * Mat2::shear(u) * Mat2::geodesic(-t);
  out.rhs = Mat2::shear(u * std::exp(2 * t));
  out.residual = out.lhs.frobenius_dist(out.rhs);

  PolyMat gt{{mono(1, 0, 1), {}, {}, mono(-1, 0, 1)}};
  PolyMat hu{{mono(0, 0, 1), mono(0, 1, 1), {}, mono(0, 0, 1)}};
  PolyMat gmt{{mono(-1, 0, 1), {}, {}, mono(1, 0, 1)}};
  PolyMat prod = gt * hu * gmt;
  out.holds_symbolic = prod.m[0] == mono(0, 0, 1) && prod.m[1] == mono(2, 1, 1) &&
                       prod.m[2] == Poly{} && prod.m[3] == mono(0, 0, 1);
  out.holds = out.holds_symbolic && out.residual <= 1e-12 * (1 + out.rhs.frobenius_norm());
  return out;
}

}  // namespace flatlab
