#include "qfactor/spectrum.hpp"

#include <cmath>

namespace qfactor {

SpectrumCoeffs::SpectrumCoeffs(double stpp, double ttp, QBase q_)
    : sigma_tilde_pp(stpp), tau_tilde_p(ttp), q(q_) {
  const double qq = q.value();
  const double kq = k_q(q);
  C1 = (tau_tilde_p + sigma_tilde_pp / kq) / (2.0 * (1.0 - qq));
  C2 = (tau_tilde_p - sigma_tilde_pp / kq) / (2.0 * (1.0 - 1.0 / qq));
  C3 = -sigma_tilde_pp * (1.0 + qq) / (2.0 * kq * (1.0 - qq)) -
       tau_tilde_p / 2.0;
  L_q = (std::pow(sigma_tilde_pp / kq, 2) - tau_tilde_p * tau_tilde_p) /
        (4.0 * kq * kq);
}

double eigenvalue_general(const SpectrumCoeffs& c, int n) {
  const double qq = c.q.value();
  return c.C1 * std::pow(qq, n) + c.C2 * std::pow(qq, -n) + c.C3;
}

double ttrr_constant(const std::function<double(int)>& lambda, QBase q,
                     int n_max, double tol) {
  if (n_max < 3)
    throw std::invalid_argument("ttrr_constant: n_max must be >= 3");
  const double qq = q.value();
  std::vector<double> defects;
  for (int n = 0; n + 2 <= n_max; ++n)
    defects.push_back(lambda(n + 2) - (qq + 1.0 / qq) * lambda(n + 1) +
                      lambda(n));
  double mean = 0.0;
  for (double d : defects)
    mean += d;
  mean /= static_cast<double>(defects.size());
  double scale = std::max(1.0, std::abs(mean));
  for (double d : defects)
    if (std::abs(d - mean) > tol * scale)
      throw error("ttrr_constant: defect is not n-independent (lambda_n does "
                  "not solve a hypergeometric-type equation)");
  return mean;
}

double ttrr_constant_predicted(double sigma_tilde_pp, double tau_tilde_p,
                               QBase q) {
  const double kq = k_q(q);
  const double two_q = q_number(2.0, q); // q^{1/2} + q^{-1/2}
  return 0.5 * (tau_tilde_p * kq * kq - sigma_tilde_pp * two_q);
}

std::string to_string(QLinClass c) {
  switch (c) {
  case QLinClass::QLinear:
    return "QLinear";
  case QLinClass::QInverseLinear:
    return "QInverseLinear";
  case QLinClass::Neither:
    return "Neither";
  }
  return "?";
}

double lambda_fit_residual(const std::function<double(int)>& lambda, double vs,
                           int n_max) {
  // least squares for lambda_n = A vs^n + D
  double sxx = 0, sx = 0, s1 = 0, sxy = 0, sy = 0;
  for (int n = 0; n <= n_max; ++n) {
    double x = std::pow(vs, n), y = lambda(n);
    sxx += x * x;
    sx += x;
    s1 += 1;
    sxy += x * y;
    sy += y;
  }
  double det = sxx * s1 - sx * sx;
  double A = (sxy * s1 - sx * sy) / det;
  double D = (sxx * sy - sx * sxy) / det;
  double res = 0.0, scale = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    res = std::max(res, std::abs(lambda(n) - A * std::pow(vs, n) - D));
    scale = std::max(scale, std::abs(lambda(n)));
  }
  return res / scale;
}

namespace {

// Delta^(2) = [Delta/Delta x1(s)] [Delta/Delta x(s)] applied numerically.
cplx delta2(const coef_fn& f, const Lattice& lat, cplx s) {
  auto g = [&](cplx t) {
    return (f(t + 1.0) - f(t)) / (lat.x(t + 1.0) - lat.x(t));
  };
  cplx x1a = lat.x(s + 1.5), x1b = lat.x(s + 0.5);
  return (g(s + 1.0) - g(s)) / (x1a - x1b);
}

} // namespace

QLinClass q_linearity_class(const FamilySpec& fam, double tol) {
  QBase q = fam.lattice.q;
  const double qq = q.value();
  double fit_lin = lambda_fit_residual(fam.lambda_n, qq, 10);
  double fit_inv = lambda_fit_residual(fam.lambda_n, 1.0 / qq, 10);
  QLinClass by_fit = QLinClass::Neither;
  if (fit_lin <= tol)
    by_fit = QLinClass::QLinear;
  else if (fit_inv <= tol)
    by_fit = QLinClass::QInverseLinear;

  if (fam.quadratic())
    return by_fit; // Delta^(2) criterion needs a q-linear lattice

  double d2s = 0.0, d2p = 0.0, scale = 0.0;
  for (double s0 : {0.35, 0.85, 1.45, 2.15}) {
    cplx a = delta2(fam.sigma, fam.lattice, cplx(s0));
    cplx b = delta2(fam.sigma_plus, fam.lattice, cplx(s0));
    d2s = std::max(d2s, std::abs(a));
    d2p = std::max(d2p, std::abs(b));
    scale = std::max({scale, std::abs(fam.sigma(cplx(s0))),
                      std::abs(fam.sigma_plus(cplx(s0))), 1.0});
  }
  // On x = c2 q^{-s} lattices the roles of sigma and sigma_plus swap.
  if (fam.lattice.kind == LatticeKind::QLinearDown)
    std::swap(d2s, d2p);
  bool lin = d2s <= tol * scale;
  bool inv = d2p <= tol * scale;
  if (lin && inv && fam.sigma_tilde_pp == 0.0 && fam.tau_tilde_p == 0.0)
    throw error("q_linearity_class: degenerate family (sigma''=tau'=0)");
  QLinClass by_lemma = lin   ? QLinClass::QLinear
                       : inv ? QLinClass::QInverseLinear
                             : QLinClass::Neither;
  if (by_lemma != by_fit)
    throw error("q_linearity_class: Delta^(2) criterion and lambda fit "
                "disagree for " + fam.name);
  return by_lemma;
}

} // namespace qfactor
