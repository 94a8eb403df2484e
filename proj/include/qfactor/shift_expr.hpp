#pragma once

#include "qfactor/qcore.hpp"
#include "qfactor/rational.hpp"

#include <optional>
#include <vector>

namespace qfactor {

// Finite sum  Σ_j c_j(s) e^{α_j ∂s}  of shift operators with evaluable
// coefficient functions.  Terms are kept sorted by shift and merged, so a
// shift appears at most once.  A term acts as (c e^{α∂}) f (s) = c(s) f(s+α).
class ShiftExpr {
public:
  struct Term {
    Rational shift;
    coef_fn coef;
  };

  ShiftExpr() = default;

  static ShiftExpr zero() { return ShiftExpr(); }
  static ShiftExpr identity() {
    return term(Rational(0), [](cplx) { return cplx(1.0); });
  }
  static ShiftExpr term(Rational shift, coef_fn coef);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  std::vector<Rational> shifts() const;
  // Coefficient of e^{shift ∂} evaluated at s (0 when the shift is absent).
  cplx coefficient(Rational shift, cplx s) const;

  cplx apply(const std::function<cplx(cplx)>& f, cplx s) const;

  // Operator product  this ∘ rhs, using
  // c(s) e^{α∂} · d(s) e^{β∂} = c(s) d(s+α) e^{(α+β)∂}.
  ShiftExpr compose(const ShiftExpr& rhs) const;

  ShiftExpr scaled(cplx factor) const;
  friend ShiftExpr operator+(const ShiftExpr& a, const ShiftExpr& b);

private:
  void insert(Rational shift, coef_fn coef);
  std::vector<Term> terms_;
};

ShiftExpr linear_combine(const std::vector<std::pair<cplx, ShiftExpr>>& parts);

// [A,B]_ς = A∘B − ς B∘A
ShiftExpr sigma_commutator(const ShiftExpr& A, const ShiftExpr& B, cplx vs);

enum class IdentityVerdict {
  IdentityMultiple,
  NonConstantIdentityCoeff,
  ResidualShiftTerms,
};

struct ClassifyResult {
  IdentityVerdict verdict = IdentityVerdict::ResidualShiftTerms;
  std::optional<cplx> Lambda;
  double max_residual = 0.0;
  std::vector<cplx> excluded_points;
};

// Decides whether expr is Λ·I on the grid: all non-zero-shift coefficients
// below tol and the zero-shift coefficient with spread below tol.  Grid
// points where any coefficient exceeds the pole threshold are excluded and
// reported; fewer than 4 usable points is an error.
ClassifyResult classify_identity_multiple(const ShiftExpr& expr,
                                          const std::vector<cplx>& grid,
                                          double tol,
                                          double pole_threshold = 1e12);

} // namespace qfactor
