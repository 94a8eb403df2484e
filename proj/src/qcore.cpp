#include "qfactor/qcore.hpp"

#include <cmath>

namespace qfactor {

cplx qpoch(cplx a, QBase q, int n) {
  if (n < 0)
    throw std::invalid_argument("qpoch: n must be >= 0");
  cplx p = 1.0;
  cplx ak = a;
  for (int k = 0; k < n; ++k) {
    p *= (1.0 - ak);
    ak *= q.value();
  }
  return p;
}

cplx qpoch_inf(cplx a, QBase q, double tol, double* tail) {
  if (q.greater_than_one())
    throw error("qpoch_inf: infinite product requires q < 1");
  cplx p = 1.0;
  cplx ak = a;
  int k = 0;
  const int kmax = 100000;
  while (std::abs(ak) > tol && k < kmax) {
    p *= (1.0 - ak);
    ak *= q.value();
    ++k;
  }
  if (tail) {
    // |log prod_{j>=k}(1-a q^j)| <= sum |a q^j| / (1-|a q^j|)
    double r = std::abs(ak);
    *tail = (r < 0.5) ? std::abs(p) * (r / (1.0 - q.value())) / (1.0 - r)
                      : std::abs(p);
  }
  return p;
}

cplx qpoch_s(cplx c, QBase q, cplx s) {
  cplx den = qpoch_inf(c * qpow(q, s), q);
  cplx num = qpoch_inf(c, q);
  if (std::abs(den) == 0.0) {
    double inf = std::numeric_limits<double>::infinity();
    return {inf, 0.0};
  }
  return num / den;
}

cplx basic_hypergeometric(const std::vector<cplx>& nums,
                          const std::vector<cplx>& dens, QBase q, cplx z,
                          int max_terms, double tol) {
  const int e = 1 + static_cast<int>(dens.size()) - static_cast<int>(nums.size());
  const double qq = q.value();
  cplx total = 0.0;
  cplx term = 1.0;
  double qk = 1.0; // q^k
  for (int k = 0; k < max_terms; ++k) {
    total += term;
    cplx num = 1.0;
    bool terminated = false;
    for (const cplx& a : nums) {
      cplx f = 1.0 - a * qk;
      if (std::abs(f) <= 1e-12 * (1.0 + std::abs(a * qk)))
        terminated = true;
      num *= f;
    }
    if (terminated)
      return total;
    cplx den = 1.0 - std::pow(qq, k + 1);
    for (const cplx& b : dens)
      den *= (1.0 - b * qk);
    if (std::abs(den) <= 1e-300 * (1.0 + std::abs(num)))
      throw error("basic_hypergeometric: denominator Pochhammer vanished "
                  "(pole) at term " +
                  std::to_string(k + 1));
    cplx ratio = num / den * z;
    if (e != 0)
      ratio *= std::pow(-qk, e);
    term *= ratio;
    if (std::abs(term) < tol * (1.0 + std::abs(total)) && k > 2 &&
        std::abs(ratio) < 0.75) {
      total += term / (1.0 - ratio); // geometric tail estimate
      return total;
    }
    qk *= qq;
  }
  throw error("basic_hypergeometric: series neither terminated nor converged");
}

} // namespace qfactor
