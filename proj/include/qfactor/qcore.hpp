#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfactor {

using cplx = std::complex<double>;
using coef_fn = std::function<cplx(cplx)>;

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Base of the q-deformation. Primary regime is 0<q<1; q>1 is accepted but
// flagged so callers can warn about convergence-sensitive operations.
class QBase {
public:
  explicit QBase(double q) : q_(q) {
    if (!(q > 0.0) || q == 1.0)
      throw std::invalid_argument("QBase: q must be positive and != 1");
  }
  double value() const { return q_; }
  bool greater_than_one() const { return q_ > 1.0; }
  operator double() const { return q_; }

private:
  double q_;
};

// k_q = q^{1/2} - q^{-1/2}, the symmetric deformation constant.
// Fixed so that k_q^2 = -(2 - q - 1/q) and the TTRR constant of eq-level
// tests comes out right; see the spectrum test suite.
inline double k_q(QBase q) {
  double r = std::sqrt(q.value());
  return r - 1.0 / r;
}

// Symmetric q-number [n]_q = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2}).
inline double q_number(double n, QBase q) {
  double lq = std::log(q.value());
  return std::sinh(0.5 * n * lq) / std::sinh(0.5 * lq);
}

// Symmetric bracket in the other common convention:
// [x]_Q = (Q^x - Q^-x)/(Q - Q^-1).  Used by the su_q(1,1) relations.
inline double q_bracket(double x, double base) {
  double lb = std::log(base);
  return std::sinh(x * lb) / std::sinh(lb);
}

// (a;q)_n, finite product.
cplx qpoch(cplx a, QBase q, int n);

// (a;q)_inf for |q|<1, truncated at |a q^k| < tol; the geometric remainder
// bound is written to *tail when provided.
cplx qpoch_inf(cplx a, QBase q, double tol = 1e-16, double* tail = nullptr);

// (c;q)_s = (c;q)_inf / (c q^s;q)_inf for complex s.  When the denominator
// vanishes (weight boundary) the result is a complex infinity.
cplx qpoch_s(cplx c, QBase q, cplx s);

// Basic hypergeometric series rφs(nums; dens; q, z) with the standard
// [(-1)^k q^(k choose 2)]^(1+s-r) factor.  Terminates exactly when some
// numerator parameter hits q^{-m}; otherwise truncates at relative tol.
// Throws on a vanishing denominator Pochhammer (pole) and on a series that
// neither terminates nor converges within max_terms.
cplx basic_hypergeometric(const std::vector<cplx>& nums,
                          const std::vector<cplx>& dens, QBase q, cplx z,
                          int max_terms = 600, double tol = 1e-15);

inline cplx qpow(QBase q, cplx e) {
  return std::exp(e * std::log(cplx(q.value())));
}

} // namespace qfactor
