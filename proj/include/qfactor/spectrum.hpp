#pragma once

#include "qfactor/family.hpp"

namespace qfactor {

// Coefficients of lambda_n = C1 q^n + C2 q^-n + C3 derived from the Taylor
// data (sigma'', tau') of the difference equation.
struct SpectrumCoeffs {
  double sigma_tilde_pp = 0.0;
  double tau_tilde_p = 0.0;
  QBase q;
  double C1 = 0.0, C2 = 0.0, C3 = 0.0, L_q = 0.0;

  SpectrumCoeffs(double stpp, double ttp, QBase q_);
};

double eigenvalue_general(const SpectrumCoeffs& c, int n);

// Verifies that lambda_{n+2} - (q + 1/q) lambda_{n+1} + lambda_n is
// n-independent up to tol (relative to its magnitude) for n = 0..n_max-2
// and returns the constant; throws on a non-constant defect.
double ttrr_constant(const std::function<double(int)>& lambda, QBase q,
                     int n_max, double tol);

// The TTRR constant predicted by the Taylor data:
// C = (tau' k_q^2 - sigma'' [2]_q) / 2.
double ttrr_constant_predicted(double sigma_tilde_pp, double tau_tilde_p,
                               QBase q);

enum class QLinClass { QLinear, QInverseLinear, Neither };

std::string to_string(QLinClass c);

// Classifies lambda_n as q-linear / q^{-1}-linear / neither.
// On q-linear lattices this evaluates the Delta^(2) criterion on sigma and
// sigma_plus (with the roles of the two swapped on x = c2 q^{-s} lattices)
// and cross-checks against a direct fit of lambda_n to A vs^n + D; the two
// must agree.  On q-quadratic lattices only the fit is available.
QLinClass q_linearity_class(const FamilySpec& fam, double tol = 1e-10);

// Least-squares residual of fitting lambda_n ~ A vs^n + D over n = 0..n_max.
double lambda_fit_residual(const std::function<double(int)>& lambda, double vs,
                           int n_max);

} // namespace qfactor
