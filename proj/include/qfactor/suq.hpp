#pragma once

#include "qfactor/factor.hpp"

#include <map>
#include <string>
#include <vector>

namespace qfactor {

// Small dense real matrix, enough for the truncated-representation audits.
struct Mat {
  int dim = 0;
  std::vector<double> v;

  Mat() = default;
  explicit Mat(int d) : dim(d), v(static_cast<std::size_t>(d) * d, 0.0) {}
  double& at(int i, int j) { return v[static_cast<std::size_t>(i) * dim + j]; }
  double at(int i, int j) const {
    return v[static_cast<std::size_t>(i) * dim + j];
  }
  static Mat eye(int d);
  static Mat diag(const std::vector<double>& entries);
  Mat transpose() const;
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  Mat scaled(double f) const;
  // max |entry| over the leading interior block [0, cut) x [0, cut)
  double interior_max(int cut) const;
};

// Truncated eigenbasis representation of the dynamical algebra:
// a e_n = sqrt(lam_n) e_{n-1}, adag = a^T, lam_n = (1-base^{2n})/(1-base^2).
struct TruncatedRep {
  int dim = 0;
  double base = 0.0; // plays the role of q, with varsigma = base^2
  bool inverse_mapped = false;
  Mat a, adag, N, b, bdag, K0, Kplus, Kminus;
  std::vector<std::string> notes;
};

TruncatedRep build_rep(QBase q, int dim);

// Builds the representation from a Solved factorization report: the
// reported varsigma plays the base^2 role; varsigma > 1 is mapped through
// q <-> 1/q (lambda_n(q,-) = lambda_n(1/q,+)) and flagged.
TruncatedRep from_family(const FactorizationReport& rep, int dim);

// Interior max-norm residuals (relative to the relation's magnitude) of the
// defining relations; the top two basis indices are excluded as the
// truncation edge.
std::map<std::string, double> check_relations(const TruncatedRep& rep,
                                              double tol = 1e-10);

} // namespace qfactor
