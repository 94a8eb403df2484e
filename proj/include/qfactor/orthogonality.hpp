#pragma once

#include "qfactor/family.hpp"

#include <vector>

namespace qfactor {

struct QuadratureSpec {
  double tol = 1e-9;
  int max_terms = 200000; // discrete-sum cutoff guard
};

struct GramResult {
  std::vector<std::vector<double>> G;
  double max_err = 0.0; // max |G - I|
  int terms_used = 0;   // discrete terms or quadrature evaluations
  double tail_bound = 0.0;
};

// Gram matrix of the normalized eigenfunctions, (n_max+1)^2.
// DiscreteSum supports use the truncated sum with a geometric tail bound
// (bilateral families extend in both directions); continuous supports use
// adaptive Gauss-Legendre panels in theta (q-quadratic) or along the s-line.
GramResult gram(const FamilySpec& fam, int n_max, QuadratureSpec spec = {});

// Adaptive panel integration of f over [lo, hi] (doubling the panel count
// until two refinements agree to tol).
cplx integrate(const std::function<cplx(double)>& f, double lo, double hi,
               double tol, int max_doublings = 12);

} // namespace qfactor
