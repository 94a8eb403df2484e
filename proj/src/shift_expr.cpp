#include "qfactor/shift_expr.hpp"

#include <algorithm>

namespace qfactor {

ShiftExpr ShiftExpr::term(Rational shift, coef_fn coef) {
  ShiftExpr e;
  e.terms_.push_back({shift, std::move(coef)});
  return e;
}

void ShiftExpr::insert(Rational shift, coef_fn coef) {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), shift,
      [](const Term& t, const Rational& r) { return t.shift < r; });
  if (it != terms_.end() && it->shift == shift) {
    coef_fn prev = it->coef;
    it->coef = [prev, c = std::move(coef)](cplx s) { return prev(s) + c(s); };
  } else {
    terms_.insert(it, {shift, std::move(coef)});
  }
}

std::vector<Rational> ShiftExpr::shifts() const {
  std::vector<Rational> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_)
    out.push_back(t.shift);
  return out;
}

cplx ShiftExpr::coefficient(Rational shift, cplx s) const {
  for (const Term& t : terms_)
    if (t.shift == shift)
      return t.coef(s);
  return 0.0;
}

cplx ShiftExpr::apply(const std::function<cplx(cplx)>& f, cplx s) const {
  cplx acc = 0.0;
  for (const Term& t : terms_)
    acc += t.coef(s) * f(s + cplx(t.shift.to_double()));
  return acc;
}

ShiftExpr ShiftExpr::compose(const ShiftExpr& rhs) const {
  ShiftExpr out;
  for (const Term& a : terms_) {
    const double da = a.shift.to_double();
    for (const Term& b : rhs.terms_) {
      coef_fn ca = a.coef, cb = b.coef;
      out.insert(a.shift + b.shift,
                 [ca, cb, da](cplx s) { return ca(s) * cb(s + da); });
    }
  }
  return out;
}

ShiftExpr ShiftExpr::scaled(cplx factor) const {
  ShiftExpr out;
  for (const Term& t : terms_) {
    coef_fn c = t.coef;
    out.terms_.push_back({t.shift, [c, factor](cplx s) { return factor * c(s); }});
  }
  return out;
}

ShiftExpr operator+(const ShiftExpr& a, const ShiftExpr& b) {
  ShiftExpr out = a;
  for (const ShiftExpr::Term& t : b.terms())
    out.insert(t.shift, t.coef);
  return out;
}

ShiftExpr linear_combine(const std::vector<std::pair<cplx, ShiftExpr>>& parts) {
  ShiftExpr out;
  for (const auto& [factor, expr] : parts)
    out = out + expr.scaled(factor);
  return out;
}

ShiftExpr sigma_commutator(const ShiftExpr& A, const ShiftExpr& B, cplx vs) {
  return A.compose(B) + B.compose(A).scaled(-vs);
}

ClassifyResult classify_identity_multiple(const ShiftExpr& expr,
                                          const std::vector<cplx>& grid,
                                          double tol, double pole_threshold) {
  if (grid.size() < 8)
    throw std::invalid_argument(
        "classify_identity_multiple: need a grid of at least 8 points");
  ClassifyResult res;
  std::vector<cplx> id_vals;
  double max_shift_mag = 0.0;
  for (cplx s : grid) {
    bool pole = false;
    cplx id_val = 0.0;
    double shift_mag = 0.0;
    for (const ShiftExpr::Term& t : expr.terms()) {
      cplx v = t.coef(s);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) ||
          std::abs(v) > pole_threshold) {
        pole = true;
        break;
      }
      if (t.shift.is_zero())
        id_val = v;
      else
        shift_mag = std::max(shift_mag, std::abs(v));
    }
    if (pole) {
      res.excluded_points.push_back(s);
      continue;
    }
    id_vals.push_back(id_val);
    max_shift_mag = std::max(max_shift_mag, shift_mag);
  }
  if (id_vals.size() < 4)
    throw error("classify_identity_multiple: fewer than 4 usable grid points");

  cplx mean = 0.0;
  for (cplx v : id_vals)
    mean += v;
  mean /= static_cast<double>(id_vals.size());
  double spread = 0.0;
  for (cplx v : id_vals)
    spread = std::max(spread, std::abs(v - mean));

  if (max_shift_mag > tol) {
    res.verdict = IdentityVerdict::ResidualShiftTerms;
    res.max_residual = max_shift_mag;
    return res;
  }
  if (spread > tol) {
    res.verdict = IdentityVerdict::NonConstantIdentityCoeff;
    res.max_residual = spread;
    return res;
  }
  res.verdict = IdentityVerdict::IdentityMultiple;
  res.Lambda = mean;
  res.max_residual = std::max(spread, max_shift_mag);
  return res;
}

} // namespace qfactor
