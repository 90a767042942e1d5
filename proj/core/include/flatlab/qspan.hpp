#pragma once

#include <optional>
#include <vector>

#include "flatlab/exact_real.hpp"

namespace flatlab {

// Q-linear structure of a list of field elements.
//
// dimension == input count minus the number of independent relations, and
// every relation vector annihilates the input list exactly.  Relations are
// normalized with coefficient -1 at the dependent index.
struct QSpanReport {
  int dimension = 0;
  std::vector<int> basis_indices;
  std::vector<std::vector<Rational>> relations;
};

// Dimension of the Q-vector space spanned by the values (all in one field).
QSpanReport qspan_dim(const std::vector<ExactReal>& values);

// p/q with x*q == y*p exactly, or nullopt when x/y is irrational.
std::optional<Rational> commensurable(const ExactReal& x, const ExactReal& y);

}  // namespace flatlab
