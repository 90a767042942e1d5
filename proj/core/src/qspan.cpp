#include "flatlab/qspan.hpp"

namespace flatlab {

QSpanReport qspan_dim(const std::vector<ExactReal>& values) {
  if (values.empty()) fail(Errc::zero_input, "qspan_dim of empty list");
  long d = 0;
  for (const auto& v : values) {
    if (v.disc() != 0) {
      if (d != 0 && d != v.disc()) fail(Errc::mixed_field, "qspan_dim across fields");
      d = v.disc();
    }
  }

  QSpanReport rep;
  // Values live in Q^2 with basis {1, sqrt(D)}.  Keep reduced pivot rows
  // together with their expression in terms of the input indices.
  struct Pivot {
    Rational a, b;
    int col;  // 0 -> pivot on a, 1 -> pivot on b
    std::vector<std::pair<int, Rational>> combo;
  };
  std::vector<Pivot> pivots;

  for (int i = 0; i < (int)values.size(); ++i) {
    Rational a = values[i].rat(), b = values[i].irr();
    std::vector<std::pair<int, Rational>> combo;
    for (const auto& p : pivots) {
      Rational coef = p.col == 0 ? a : b;
      if (sgn(coef) == 0) continue;
      a -= coef * p.a;
      b -= coef * p.b;
      for (const auto& [j, c] : p.combo) combo.emplace_back(j, coef * c);
    }
    if (sgn(a) != 0 || sgn(b) != 0) {
      int col = sgn(a) != 0 ? 0 : 1;
      Rational lead = col == 0 ? a : b;
      Pivot p{a / lead, b / lead, col, {{i, Rational(1) / lead}}};
      // The new row may include older pivot contributions gathered above.
      for (auto& [j, c] : combo) p.combo.emplace_back(j, -c / lead);
      // Back-substitute into existing pivots to keep them reduced.
      for (auto& q : pivots) {
        Rational coef = p.col == 0 ? q.a : q.b;
        if (sgn(coef) == 0) continue;
        q.a -= coef * p.a;
        q.b -= coef * p.b;
        for (const auto& [j, c] : p.combo) q.combo.emplace_back(j, -coef * c);
      }
      pivots.push_back(std::move(p));
      rep.basis_indices.push_back(i);
    } else {
      // Dependent: values[i] == sum combo_j * values[basis_j].
      std::vector<Rational> rel(values.size(), Rational(0));
      for (const auto& [j, c] : combo) rel[j] += c;
      rel[i] = -1;
      rep.relations.push_back(std::move(rel));
    }
  }
  rep.dimension = (int)pivots.size();
  return rep;
}

std::optional<Rational> commensurable(const ExactReal& x, const ExactReal& y) {
  if (x.is_zero() || y.is_zero()) fail(Errc::zero_input, "commensurable with zero input");
  ExactReal r = x / y;
  if (!r.is_rational()) return std::nullopt;
  return r.rat();
}

}  // namespace flatlab
