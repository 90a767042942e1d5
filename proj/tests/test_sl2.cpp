#include <doctest.h>

#include <cmath>
#include <random>

#include "flatlab/sl2.hpp"

using namespace flatlab;

namespace {

Mat2 random_exact_unimodular(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 9);
  Rational a, b, c;
  do {
    a = Rational(num(rng), den(rng));
    a.canonicalize();
  } while (sgn(a) == 0);
  b = Rational(num(rng), den(rng));
  c = Rational(num(rng), den(rng));
  b.canonicalize();
  c.canonicalize();
  Rational d = (1 + b * c) / a;
  return Mat2::from_exact(ExactReal(a), ExactReal(b), ExactReal(c), ExactReal(d));
}

double recomposition_residual(const Mat2& m, const Mat2& x, const Mat2& y, const Mat2& z) {
  return (x * y * z).frobenius_dist(m);
}

}  // namespace

TEST_CASE("iwasawa") {
  auto id = iwasawa(Mat2::identity());
  CHECK(id.k.is_identity());
  CHECK(id.a.is_identity());
  CHECK(id.n.is_identity());

  // h_s is already of the form n
  auto hs = iwasawa(Mat2::shear(3.75));
  CHECK(hs.t == doctest::Approx(0.0));
  CHECK(hs.theta == doctest::Approx(0.0));
  CHECK(hs.s == doctest::Approx(3.75));

  Mat2 m = Mat2::from_double(2, 3, 1, 2);
  auto f = iwasawa(m);
  CHECK(recomposition_residual(m, f.k, f.a, f.n) < 1e-14);
}

TEST_CASE("cartan") {
  // rotations: a-part is the identity
  auto rot = cartan(Mat2::rotation(0.83));
  CHECK(rot.sigma == doctest::Approx(1.0));
  CHECK(rot.a.is_identity());

  // h_1: sigma^2 = (3+sqrt5)/2, the top eigenvalue of h_1^T h_1
  auto h1 = cartan(Mat2::shear(1.0));
  CHECK(h1.sigma * h1.sigma == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-12));
  Mat2 m = Mat2::shear(1.0);
  CHECK(recomposition_residual(m, h1.k1, h1.a, h1.k2) < 1e-13);

  // the a-part leaves every compact set as s grows
  double last = 1;
  for (double s : {10.0, 100.0, 1000.0}) {
    auto f = cartan(Mat2::shear(s));
    CHECK(f.sigma > last);
    CHECK(f.sigma > s);  // sigma = (s + sqrt(s^2+4))/2 > s
    last = f.sigma;
  }
}

TEST_CASE("cartan a-part is monotone in |s|") {
  double prev = 0;
  for (double s = 0.5; s < 64; s *= 2) {
    auto f = cartan(Mat2::shear(s));
    CHECK(f.sigma > prev);
    prev = f.sigma;
    auto g = cartan(Mat2::shear(-s));
    CHECK(g.sigma == doctest::Approx(f.sigma));
  }
}

TEST_CASE("bruhat explicit formulas") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Mat2 m = random_exact_unimodular(rng);
    auto f = bruhat(m);
    REQUIRE(!f.iota_branch);
    const ExactReal &a = m.e(0), &b = m.e(1), &c = m.e(2);
    // factors match the two-case formula symbolically
    CHECK(f.first.e(0) == ExactReal(1));
    CHECK(f.first.e(1).is_zero());
    CHECK(f.first.e(2) == c / a);
    CHECK(f.a.e(0) == a);
    CHECK(f.a.e(3) == ExactReal(1) / a);
    CHECK(f.n.e(1) == b / a);
    // exact recomposition
    Mat2 re = f.first * f.a * f.n;
    for (int k = 0; k < 4; ++k) CHECK(re.e(k) == m.e(k));
  }

  // the a = 0 branch: iota itself
  Mat2 iota = Mat2::from_exact(0, -1, 1, 0);
  auto f = bruhat(iota);
  CHECK(f.iota_branch);
  CHECK(f.a.e(0) == ExactReal(1));
  CHECK(f.a.e(3) == ExactReal(1));
  CHECK(f.n.e(1).is_zero());
  Mat2 re = f.first * f.a * f.n;
  for (int k = 0; k < 4; ++k) CHECK(re.e(k) == iota.e(k));
}

TEST_CASE("bruhat of a rotation and the NAN sign convention") {
  // bruhat(r_{pi/4}) = hhat_{+1} g_{log(sqrt2/2)} h_{-1}, recomposing exactly.
  Mat2 r = Mat2::rotation(M_PI / 4);
  auto f = bruhat(r);
  CHECK(!f.iota_branch);
  CHECK(f.first.f(2) == doctest::Approx(1.0));
  CHECK(f.a.f(0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(f.n.f(1) == doctest::Approx(-1.0));
  CHECK((f.first * f.a * f.n).frobenius_dist(r) < 1e-14);

  // The product hhat_{-tan t} g_{log cos t} h_{tan t} is the rotation by -t,
  // not by t; recorded here as the resolved sign convention.
  for (double t : {0.3, M_PI / 4, 1.1}) {
    Mat2 claimed = Mat2::vshear(-std::tan(t)) * Mat2::from_double(std::cos(t), 0, 0, 1 / std::cos(t)) *
                   Mat2::shear(std::tan(t));
    CHECK(claimed.frobenius_dist(Mat2::rotation(-t)) < 1e-13);
    CHECK(claimed.frobenius_dist(Mat2::rotation(t)) > 0.1);
  }
}

TEST_CASE("decomposition round trips on random unimodular matrices") {
  std::mt19937 rng(20250810);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 2000; ++i) {
    Mat2 m = Mat2::rotation(u(rng) * M_PI) * Mat2::geodesic(u(rng)) * Mat2::shear(u(rng));
    double norm = 1 + m.frobenius_norm();
    auto iw = iwasawa(m);
    CHECK(recomposition_residual(m, iw.k, iw.a, iw.n) < 1e-12 * norm);
    auto ca = cartan(m);
    CHECK(recomposition_residual(m, ca.k1, ca.a, ca.k2) < 1e-12 * norm);
    if (std::fabs(m.f(0)) > 1e-6) {
      auto br = bruhat(m);
      CHECK(recomposition_residual(m, br.first, br.a, br.n) < 1e-10 * norm);
    }
  }
}

TEST_CASE("not unimodular is rejected") {
  CHECK_THROWS_AS(iwasawa(Mat2::from_double(2, 0, 0, 1)), Error);
  CHECK_THROWS_AS(cartan(Mat2::from_exact(2, 0, 0, 1)), Error);
  CHECK_THROWS_AS(bruhat(Mat2::from_double(1, 1, 1, 1)), Error);
}

TEST_CASE("conj_shear identity g_t h_u g_-t = h_{u e^2t}") {
  auto c0 = conj_shear(0, 0.7);
  CHECK(c0.holds);
  CHECK(c0.rhs.f(1) == doctest::Approx(0.7));

  auto cu0 = conj_shear(1.3, 0);
  CHECK(cu0.holds);
  CHECK(cu0.lhs.frobenius_dist(Mat2::identity()) < 1e-14);

  auto c11 = conj_shear(1, 1);
  CHECK(c11.holds_symbolic);
  CHECK(c11.residual <= 1e-14);
  CHECK(c11.rhs.f(1) == doctest::Approx(std::exp(2.0)));
}
