#include <doctest.h>
#include <gmpxx.h>

#include <random>

#include "flatlab/exact_real.hpp"
#include "flatlab/qspan.hpp"

using namespace flatlab;

namespace {

ExactReal phi() { return ExactReal(Rational(1, 2), Rational(1, 2), 5); }

ExactReal random_value(std::mt19937& rng, long d) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  Rational a(num(rng), den(rng)), b(num(rng), den(rng));
  a.canonicalize();
  b.canonicalize();
  return ExactReal(a, b, d);
}

// 120-bit floating evaluation, the independent comparison oracle.
mpf_class mpf_of(const ExactReal& x) {
  mpf_class a(x.rat(), 400), out(0, 400);
  out = a;
  if (x.disc() != 0) {
    mpf_class b(x.irr(), 400), s(x.disc(), 400);
    out += b * sqrt(s);
  }
  return out;
}

}  // namespace

TEST_CASE("exact arithmetic basics") {
  ExactReal s5 = ExactReal::sqrt_int(5);
  // (1 + sqrt5)(1 - sqrt5) = -4, the norm identity
  CHECK((ExactReal(1) + s5) * (ExactReal(1) - s5) == ExactReal(-4));

  // phi^2 = phi + 1, expanded by hand: (1/2 + sqrt5/2)^2 = 3/2 + (1/2) sqrt5
  ExactReal p = phi();
  ExactReal p2 = p * p;
  CHECK(p2.rat() == Rational(3, 2));
  CHECK(p2.irr() == Rational(1, 2));
  CHECK(p2 == p + ExactReal(1));

  // x / x = 1
  CHECK(p / p == ExactReal(1));
  CHECK(ExactReal(Rational(-7, 3)) / ExactReal(Rational(-7, 3)) == ExactReal(1));

  CHECK_THROWS_AS(p / ExactReal(0), Error);
  CHECK_THROWS_AS(p + ExactReal::sqrt_int(2), Error);
  // one rational operand is fine across fields
  CHECK((p + ExactReal(Rational(1, 3))).disc() == 5);
}

TEST_CASE("canonical normalization") {
  // sqrt(8) = 2 sqrt(2)
  ExactReal r = ExactReal::sqrt_int(8);
  CHECK(r.disc() == 2);
  CHECK(r.irr() == Rational(2));
  // sqrt(9) = 3
  CHECK(ExactReal::sqrt_int(9) == ExactReal(3));
  CHECK(ExactReal::sqrt_int(9).disc() == 0);
  // b = 0 collapses the field tag
  CHECK((ExactReal::sqrt_int(5) - ExactReal::sqrt_int(5)).disc() == 0);
}

TEST_CASE("signs and comparisons are exact") {
  // sqrt(2) - 1.41421356... requires the conjugate argument
  ExactReal x = ExactReal::sqrt_int(2) - ExactReal(Rational(141421356, 100000000));
  CHECK(x.sign() > 0);
  ExactReal y = ExactReal::sqrt_int(2) - ExactReal(Rational(141421357, 100000000));
  CHECK(y.sign() < 0);
  CHECK(ExactReal(Rational(1, 2)) < ExactReal(1));
  CHECK(phi() > ExactReal(Rational(8, 5)));
  CHECK(phi() < ExactReal(Rational(13, 8)));
}

TEST_CASE("exact comparison agrees with high-precision floating on random samples") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 10000; ++i) {
    long d = (i % 3 == 0) ? 0 : (i % 3 == 1 ? 2 : 5);
    ExactReal x = random_value(rng, d), y = random_value(rng, d);
    int exact = (x - y).sign();
    int flt = cmp(mpf_of(x), mpf_of(y));
    CHECK(exact == flt);
  }
}

TEST_CASE("scalar grammar round trip") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    long d = (i % 4 == 0) ? 0 : (i % 4 == 1 ? 2 : (i % 4 == 2 ? 5 : 13));
    ExactReal x = random_value(rng, d);
    ExactReal back = ExactReal::parse(x.str());
    CHECK(back == x);
    CHECK(back.str() == x.str());
  }
  CHECK(ExactReal::parse("1/2+1/2*sqrt(5)") == phi());
  CHECK(ExactReal::parse("-3/4") == ExactReal(Rational(-3, 4)));
  CHECK(ExactReal::parse("0-1*sqrt(2)") == -ExactReal::sqrt_int(2));
  CHECK(ExactReal::parse("7") == ExactReal(7));
  CHECK_THROWS_AS(ExactReal::parse("1+sqrt(5)"), Error);  // b must be explicit
  CHECK_THROWS_AS(ExactReal::parse("1/0"), Error);
  CHECK_THROWS_AS(ExactReal::parse(""), Error);
}

TEST_CASE("sqrt_in_field") {
  CHECK(*ExactReal(Rational(9, 4)).sqrt_in_field() == ExactReal(Rational(3, 2)));
  CHECK(!ExactReal(2).sqrt_in_field().has_value());
  // sqrt(sqrt(2)) is a fourth root, not in Q(sqrt2)
  CHECK(!ExactReal(0, 1, 2).sqrt_in_field().has_value());
  // 8 is rational but sqrt(8) = 2 sqrt(2) lives in the ambient field
  CHECK(!ExactReal(8).sqrt_in_field().has_value());
  CHECK(*ExactReal(8).sqrt_in_field(2) == ExactReal(0, 2, 2));
  // (1 + sqrt2)^2 = 3 + 2 sqrt2
  ExactReal sq = ExactReal(3, 2, 2);
  CHECK(*sq.sqrt_in_field() == ExactReal(1, 1, 2));
  // phi^2 = phi + 1 has the root phi in Q(sqrt5)
  ExactReal root = *(phi() + ExactReal(1)).sqrt_in_field();
  CHECK(root == phi());
}

TEST_CASE("qspan dimensions") {
  // rationals span one dimension
  auto r1 = qspan_dim({ExactReal(Rational(1, 2)), ExactReal(1)});
  CHECK(r1.dimension == 1);
  // {1, sqrt2} spans two
  auto r2 = qspan_dim({ExactReal(1), ExactReal::sqrt_int(2)});
  CHECK(r2.dimension == 2);
  // {1, phi, phi^2} has dimension 2 with relation (1, 1, -1)
  auto r3 = qspan_dim({ExactReal(1), phi(), phi() * phi()});
  CHECK(r3.dimension == 2);
  REQUIRE(r3.relations.size() == 1);
  CHECK(r3.relations[0] == std::vector<Rational>{1, 1, -1});
  CHECK(r3.basis_indices == std::vector<int>{0, 1});
}

TEST_CASE("qspan relations annihilate the input") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    long d = trial % 2 ? 5 : 2;
    std::vector<ExactReal> vals;
    int n = 2 + (int)(rng() % 5);
    for (int i = 0; i < n; ++i) vals.push_back(random_value(rng, d));
    auto rep = qspan_dim(vals);
    CHECK(rep.dimension + (int)rep.relations.size() == n);
    CHECK((int)rep.basis_indices.size() == rep.dimension);
    for (const auto& rel : rep.relations) {
      ExactReal acc;
      for (int i = 0; i < n; ++i) acc += ExactReal(rel[i]) * vals[i];
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("qspan is stable under rational multiples and linear combinations") {
  std::mt19937 rng(2023);
  for (int trial = 0; trial < 100; ++trial) {
    ExactReal v = random_value(rng, 5);
    if (v.is_zero()) continue;
    std::uniform_int_distribution<long> num(-20, 20);
    Rational q(num(rng), 1 + (long)(rng() % 9));
    q.canonicalize();
    if (sgn(q) == 0) continue;
    CHECK(qspan_dim({v, ExactReal(q) * v}).dimension == 1);

    // appending a linear combination never changes the dimension
    std::vector<ExactReal> vals{random_value(rng, 5), random_value(rng, 5), random_value(rng, 5)};
    int dim = qspan_dim(vals).dimension;
    ExactReal combo = ExactReal(Rational(2, 3)) * vals[0] - ExactReal(5) * vals[2];
    vals.push_back(combo);
    CHECK(qspan_dim(vals).dimension == dim);
  }
}

TEST_CASE("commensurable") {
  CHECK(*commensurable(ExactReal(Rational(1, 2)), ExactReal(1)) == Rational(1, 2));
  CHECK(*commensurable(phi(), phi()) == Rational(1));
  CHECK(!commensurable(ExactReal(1), ExactReal::sqrt_int(2)).has_value());
  CHECK_THROWS_AS(commensurable(ExactReal(0), ExactReal(1)), Error);

  // present iff qspan dimension 1
  std::mt19937 rng(4242);
  for (int i = 0; i < 200; ++i) {
    ExactReal x = random_value(rng, 2), y = random_value(rng, 2);
    if (x.is_zero() || y.is_zero()) continue;
    bool comm = commensurable(x, y).has_value();
    CHECK(comm == (qspan_dim({x, y}).dimension == 1));
    if (auto r = commensurable(x, y)) {
      CHECK(x * ExactReal(r->get_den()) == y * ExactReal(r->get_num()));
    }
  }
}
