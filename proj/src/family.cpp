#include "qfactor/family.hpp"

#include <cmath>

namespace qfactor {

static bool finite(cplx v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

cplx FamilySpec::phi(int n, cplx s) const {
  if (n < 0)
    throw std::invalid_argument("FamilySpec::phi: n must be >= 0");
  cplx w = phiA(s);
  if (!finite(w) || std::abs(w) == 0.0)
    return 0.0; // weight boundary / overflow of a vanishing weight
  return w * Pn(n, s) / d_n(n);
}

cplx FamilySpec::rho(cplx s) const {
  cplx w = phiA(s);
  cplx r = w * w;
  if (A == AType::SqrtNablaX1)
    r /= lattice.nx1(s);
  return r;
}

cplx FamilySpec::pearson_residual(cplx s) const {
  return sigma(s + 1.0) * rho(s + 1.0) - sigma_plus(s) * rho(s);
}

std::vector<cplx> FamilySpec::default_grid(std::size_t count) const {
  std::vector<cplx> g;
  g.reserve(count);
  if (quadratic()) {
    const double lo = 0.1, hi = M_PI - 0.1;
    const double lq = std::log(lattice.q.value());
    for (std::size_t j = 0; j < count; ++j) {
      double th = lo + (hi - lo) * static_cast<double>(j) /
                           static_cast<double>(count - 1);
      g.emplace_back(0.0, th / lq);
    }
  } else {
    for (std::size_t j = 0; j < count; ++j)
      g.emplace_back(0.3 + 0.4 * static_cast<double>(j), 0.0);
  }
  return g;
}

} // namespace qfactor
