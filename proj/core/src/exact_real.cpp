#include "flatlab/exact_real.hpp"

#include <cctype>
#include <cmath>

namespace flatlab {

Rational parse_rational(std::string_view text) {
  if (text.empty()) fail(Errc::syntax_error, "empty rational");
  std::string s(text);
  for (char c : s) {
    if (!(std::isdigit((unsigned char)c) || c == '-' || c == '+' || c == '/'))
      fail(Errc::syntax_error, "bad character in rational '" + s + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail(Errc::syntax_error, "unparsable rational '" + s + "'");
  if (sgn(q.get_den()) == 0) fail(Errc::syntax_error, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

namespace {

// Extract the square part of d: d = s^2 * f with f square-free.
void squarefree_split(long d, long& s, long& f) {
  s = 1;
  f = 1;
  for (long p = 2; p * p <= d; ++p) {
    long e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    for (long i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2) f *= p;
  }
  f *= d;
}

}  // namespace

ExactReal::ExactReal(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ < 0) fail(Errc::syntax_error, "negative discriminant");
  if (d_ == 0) {
    b_ = 0;
    return;
  }
  if (sgn(b_) == 0) {
    d_ = 0;
    return;
  }
  long s, f;
  squarefree_split(d_, s, f);
  if (s != 1) {
    b_ *= s;
    d_ = f;
  }
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  } else if (d_ == 0) {
    b_ = 0;
  }
}

long ExactReal::join_field(const ExactReal& x, const ExactReal& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  fail(Errc::mixed_field, "cannot combine sqrt(" + std::to_string(x.d_) + ") with sqrt(" +
                              std::to_string(y.d_) + ")");
}

int ExactReal::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(D), squared.  Equality would force
  // sqrt(D) rational, impossible for square-free D > 1.
  int c = cmp(a_ * a_, b_ * b_ * d_);
  if (c == 0) fail(Errc::internal, "sqrt(D) behaved rationally");
  return c > 0 ? sa : sb;
}

double ExactReal::approx() const {
  double v = a_.get_d();
  if (d_ != 0) v += b_.get_d() * std::sqrt((double)d_);
  return v;
}

ExactReal ExactReal::operator+(const ExactReal& o) const {
  long d = join_field(*this, o);
  return ExactReal(a_ + o.a_, b_ + o.b_, d);
}

ExactReal ExactReal::operator-(const ExactReal& o) const {
  long d = join_field(*this, o);
  return ExactReal(a_ - o.a_, b_ - o.b_, d);
}

ExactReal ExactReal::operator*(const ExactReal& o) const {
  long d = join_field(*this, o);
  return ExactReal(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d);
}

ExactReal ExactReal::operator/(const ExactReal& o) const {
  if (o.is_zero()) fail(Errc::division_by_zero, "division by zero");
  long d = join_field(*this, o);
  Rational n = o.field_norm();
  // x / y = x * conj(y) / norm(y)
  return ExactReal((a_ * o.a_ - b_ * o.b_ * d) / n, (b_ * o.a_ - a_ * o.b_) / n, d);
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace

std::optional<ExactReal> ExactReal::sqrt_in_field(long ambient_disc) const {
  if (sign() < 0) return std::nullopt;
  if (is_zero()) return ExactReal();
  if (d_ == 0) {
    if (auto r = rational_sqrt(a_)) return ExactReal(*r);
    if (ambient_disc > 1) {
      if (auto r = rational_sqrt(a_ / ambient_disc)) return ExactReal(0, *r, ambient_disc);
    }
    return std::nullopt;
  }
  // (x + y sqrt(D))^2 = a + b sqrt(D): x^2 = (a +- s)/2 with s = sqrt(norm).
  auto s = rational_sqrt(field_norm());
  if (!s) return std::nullopt;
  for (int sig : {1, -1}) {
    Rational x2 = (a_ + sig * *s) / 2;
    if (auto x = rational_sqrt(x2)) {
      if (sgn(*x) == 0) continue;
      Rational y = b_ / (2 * *x);
      ExactReal root(*x, y, d_);
      if (root.sign() < 0) root = -root;
      if (root * root == *this) return root;
    }
  }
  return std::nullopt;
}

std::string ExactReal::str() const {
  if (d_ == 0) return a_.get_str();
  std::string out = a_.get_str();
  out += sgn(b_) < 0 ? '-' : '+';
  Rational ab = abs(b_);
  out += ab.get_str();
  out += "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

ExactReal ExactReal::parse(std::string_view text) {
  // Strip surrounding whitespace.
  size_t lo = 0, hi = text.size();
  while (lo < hi && std::isspace((unsigned char)text[lo])) ++lo;
  while (hi > lo && std::isspace((unsigned char)text[hi - 1])) --hi;
  text = text.substr(lo, hi - lo);
  if (text.empty()) fail(Errc::syntax_error, "empty scalar");

  size_t star = text.find("*sqrt(");
  if (star == std::string_view::npos) return ExactReal(parse_rational(text));

  if (text.back() != ')') fail(Errc::syntax_error, "missing ')' in scalar");
  std::string_view dpart = text.substr(star + 6, text.size() - star - 7);
  long d = 0;
  for (char c : dpart) {
    if (!std::isdigit((unsigned char)c)) fail(Errc::syntax_error, "bad discriminant");
    d = d * 10 + (c - '0');
    if (d > 2000000000L) fail(Errc::syntax_error, "discriminant too large");
  }

  // Split a +- b at the sign separating the two rational parts: the last
  // '+'/'-' before the '*' that is not a leading sign and not after '/'.
  std::string_view head = text.substr(0, star);
  size_t split = std::string_view::npos;
  for (size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
        head[i - 1] != '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) fail(Errc::syntax_error, "expected a+b*sqrt(D) form");
  Rational a = parse_rational(head.substr(0, split));
  Rational b = parse_rational(head.substr(split + 1));
  if (head[split] == '-') b = -b;
  return ExactReal(a, b, d);
}

}  // namespace flatlab
