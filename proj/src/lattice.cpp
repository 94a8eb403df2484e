#include "qfactor/lattice.hpp"

#include <cmath>

namespace qfactor {

Lattice::Lattice(double c1_, double c2_, double c3_, QBase q_)
    : c1(c1_), c2(c2_), c3(c3_), q(q_) {
  const bool up = c1 != 0.0, down = c2 != 0.0;
  if (up && down)
    kind = LatticeKind::QQuadratic;
  else if (up)
    kind = LatticeKind::QLinearUp;
  else if (down)
    kind = LatticeKind::QLinearDown;
  else
    throw std::invalid_argument("Lattice: c1 and c2 cannot both vanish");
}

double Lattice::mu() const {
  if (!quadratic())
    throw error("Lattice::mu: defined only on q-quadratic lattices");
  return std::log(c1 / c2) / std::log(q.value());
}

cplx Lattice::x(cplx s) const {
  cplx v = c3;
  if (c1 != 0.0)
    v += c1 * qpow(q, s);
  if (c2 != 0.0)
    v += c2 * qpow(q, -s);
  return v;
}

cplx Lattice::sqrt_dx(cplx s) const {
  const double qq = q.value();
  switch (kind) {
  case LatticeKind::QLinearUp:
    // Δx = c1 q^s (q-1)
    return std::sqrt(cplx(c1 * (qq - 1.0))) * qpow(q, s / 2.0);
  case LatticeKind::QLinearDown:
    // Δx = c2 q^{-s-1} (1-q)
    return std::sqrt(cplx(c2 * (1.0 - qq) / qq)) * qpow(q, -s / 2.0);
  case LatticeKind::QQuadratic:
    // Δx = c1 q^s (q-1) (1 - (c2/c1) q^{-2s-1})
    return std::sqrt(cplx(c1 * (qq - 1.0))) * qpow(q, s / 2.0) *
           std::sqrt(1.0 - (c2 / c1) * qpow(q, -2.0 * s - 1.0));
  }
  throw error("unreachable");
}

cplx Lattice::sqrt_nx1(cplx s) const {
  const double kq = k_q(q);
  switch (kind) {
  case LatticeKind::QLinearUp:
    // ∇x₁ = c1 k_q q^s
    return std::sqrt(cplx(c1 * kq)) * qpow(q, s / 2.0);
  case LatticeKind::QLinearDown:
    // ∇x₁ = -c2 k_q q^{-s}
    return std::sqrt(cplx(-c2 * kq)) * qpow(q, -s / 2.0);
  case LatticeKind::QQuadratic:
    // ∇x₁ = c1 k_q q^s (1 - (c2/c1) q^{-2s})
    return std::sqrt(cplx(c1 * kq)) * qpow(q, s / 2.0) *
           std::sqrt(1.0 - (c2 / c1) * qpow(q, -2.0 * s));
  }
  throw error("unreachable");
}

} // namespace qfactor
