#pragma once

#include "qfactor/qcore.hpp"
#include "qfactor/rational.hpp"

namespace qfactor {

enum class LatticeKind { QLinearUp, QLinearDown, QQuadratic };

// The non-uniform grid x(s) = c1 q^s + c2 q^-s + c3.
//
// Besides the plain difference quotients the lattice exposes square roots
// of them as branch-coherent atoms: each root is built factor-by-factor
// (constant * q^{s/2} * sqrt(1 - r q^{+-2s+..})), which keeps the branch
// continuous across the strip used for Askey-Wilson grids, where a naive
// principal root of the assembled value would jump.
struct Lattice {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
  QBase q;
  LatticeKind kind;

  Lattice(double c1_, double c2_, double c3_, QBase q_);

  static Lattice q_linear_up(QBase q, double c1 = 1.0, double c3 = 0.0) {
    return Lattice(c1, 0.0, c3, q);
  }
  static Lattice q_linear_down(QBase q, double c2 = 1.0, double c3 = 0.0) {
    return Lattice(0.0, c2, c3, q);
  }
  static Lattice q_quadratic(QBase q, double c1, double c2, double c3 = 0.0) {
    return Lattice(c1, c2, c3, q);
  }

  bool quadratic() const { return kind == LatticeKind::QQuadratic; }

  // mu with q^mu = c1/c2 (QQuadratic only).
  double mu() const;

  cplx x(cplx s) const;
  // x_k(s) = x(s + k/2)
  cplx xk(Rational k, cplx s) const { return x(s + cplx(k.to_double() / 2.0)); }

  cplx dx(cplx s) const { return x(s + 1.0) - x(s); }         // Δx(s)
  cplx nx(cplx s) const { return x(s) - x(s - 1.0); }         // ∇x(s)
  cplx nx1(cplx s) const { return x(s + 0.5) - x(s - 0.5); }  // ∇x₁(s)

  cplx sqrt_dx(cplx s) const;
  cplx sqrt_nx(cplx s) const { return sqrt_dx(s - 1.0); }
  cplx sqrt_nx1(cplx s) const;
};

} // namespace qfactor
