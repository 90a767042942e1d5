#pragma once

#include "flatlab/mat2.hpp"

namespace flatlab {

// A = k * a * n with k a rotation, a = g_t, n = h_s.  Unique for det A = 1.
struct IwasawaFactors {
  Mat2 k, a, n;
  double theta, t, s;
};
IwasawaFactors iwasawa(const Mat2& m);

// A = k1 * a * k2 with rotations k1, k2 and a = diag(sigma, 1/sigma),
// sigma the largest singular value.
struct CartanFactors {
  Mat2 k1, a, k2;
  double sigma;
};
CartanFactors cartan(const Mat2& m);

// Bruhat: A = nbar * a * n when the top-left entry is nonzero, else
// A = iota * a * n with iota = [[0,-1],[1,0]].  Exact on exact input.
struct BruhatFactors {
  bool iota_branch;
  Mat2 first, a, n;  // first is nbar or iota
};
BruhatFactors bruhat(const Mat2& m);

// Checks g_t h_u g_{-t} = h_{u e^{2t}}: symbolically (Laurent monomials in
// e^t with exact coefficients) and numerically in doubles.
struct ShearConjugation {
  Mat2 lhs, rhs;
  double residual;
  bool holds_symbolic;
  bool holds;
};
ShearConjugation conj_shear(double t, double u);

}  // namespace flatlab
