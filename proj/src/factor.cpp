#include "qfactor/factor.hpp"

#include <algorithm>
#include <cmath>

namespace qfactor {

namespace {

bool finite(cplx v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

coef_fn a_ratio(const FamilySpec& fam, double shift) {
  if (fam.A == AType::One || shift == 0.0)
    return [](cplx) { return cplx(1.0); };
  Lattice lat = fam.lattice;
  return [lat, shift](cplx s) {
    return lat.sqrt_nx1(s) / lat.sqrt_nx1(s + shift);
  };
}

} // namespace

ShiftExpr hamiltonian(const FamilySpec& fam) {
  Lattice lat = fam.lattice;
  coef_fn ss = fam.sqrt_sigma_h, ssp = fam.sqrt_sigma_plus_h;
  cplx scale = fam.ham_scale;
  coef_fn sg = fam.sigma, sgp = fam.sigma_plus;
  coef_fn arp = a_ratio(fam, +1.0), arm = a_ratio(fam, -1.0);
  ShiftExpr h = ShiftExpr::term(Rational(1), [lat, ss, ssp, arp](cplx s) {
    return -arp(s) * ssp(s) * ss(s + 1.0) / (lat.dx(s) * lat.nx1(s));
  });
  h = h + ShiftExpr::term(Rational(-1), [lat, ss, ssp, arm](cplx s) {
        return -arm(s) * ssp(s - 1.0) * ss(s) / (lat.nx(s) * lat.nx1(s));
      });
  h = h + ShiftExpr::term(Rational(0), [lat, sg, sgp, scale](cplx s) {
        return scale * (sg(s) / lat.nx(s) + sgp(s) / lat.dx(s)) / lat.nx1(s);
      });
  return h;
}

ShiftExpr alpha_down(const FamilySpec& fam, Rational alpha) {
  Lattice lat = fam.lattice;
  coef_fn ss = fam.sqrt_sigma_h, ssp = fam.sqrt_sigma_plus_h;
  const double ad = alpha.to_double();
  coef_fn ar1 = a_ratio(fam, 1.0 - ad), ar2 = a_ratio(fam, -ad);
  ShiftExpr e = ShiftExpr::term(
      Rational(1) - alpha, [lat, ss, ar1, ad](cplx s) {
        return ar1(s) * ss(s + 1.0 - ad) /
               (lat.sqrt_nx(s + 1.0 - ad) * lat.sqrt_nx1(s));
      });
  return e + ShiftExpr::term(-alpha, [lat, ssp, ar2, ad](cplx s) {
           return -ar2(s) * ssp(s - ad) /
                  (lat.sqrt_dx(s - ad) * lat.sqrt_nx1(s));
         });
}

ShiftExpr alpha_up(const FamilySpec& fam, Rational alpha) {
  Lattice lat = fam.lattice;
  coef_fn ss = fam.sqrt_sigma_h, ssp = fam.sqrt_sigma_plus_h;
  const double ad = alpha.to_double();
  coef_fn ar1 = a_ratio(fam, ad - 1.0), ar2 = a_ratio(fam, ad);
  ShiftExpr e = ShiftExpr::term(
      alpha - Rational(1), [lat, ss, ar1, ad](cplx s) {
        return ar1(s) * ss(s) * lat.sqrt_nx1(s + ad - 1.0) /
               (lat.sqrt_nx(s) * lat.nx1(s));
      });
  return e + ShiftExpr::term(alpha, [lat, ssp, ar2, ad](cplx s) {
           return -ar2(s) * ssp(s) * lat.sqrt_nx1(s + ad) /
                  (lat.sqrt_dx(s) * lat.nx1(s));
         });
}

double verify_factorization(const FamilySpec& fam, Rational alpha,
                            const std::vector<cplx>& grid, double /*tol*/) {
  ShiftExpr H = hamiltonian(fam);
  ShiftExpr C = alpha_up(fam, alpha).compose(alpha_down(fam, alpha));
  double worst = 0.0;
  for (cplx s : grid) {
    bool usable = true;
    double local = 0.0;
    for (int sh : {-1, 0, 1}) {
      cplx hc = H.coefficient(Rational(sh), s);
      cplx cc = C.coefficient(Rational(sh), s);
      if (!finite(hc) || !finite(cc) || std::abs(hc) > 1e12) {
        usable = false;
        break;
      }
      local = std::max(local, std::abs(hc - cc));
    }
    if (usable)
      worst = std::max(worst, local);
  }
  return worst;
}

cplx condition_one(const FamilySpec& fam, Rational alpha, cplx s) {
  Lattice lat = fam.lattice;
  const double ad = alpha.to_double();
  cplx e = (lat.nx(s) / lat.nx1(s - ad)) * lat.sqrt_nx1(s - 1.0) *
           lat.sqrt_nx1(s) / (lat.sqrt_nx(s - ad) * lat.sqrt_dx(s - ad));
  return e * fam.sqrt_sigma_h(s - ad) * fam.sqrt_sigma_plus_h(s - ad) /
         (fam.sqrt_sigma_h(s) * fam.sqrt_sigma_plus_h(s - 1.0));
}

cplx condition_two(const FamilySpec& fam, Rational alpha, cplx varsigma,
                   cplx s) {
  Lattice lat = fam.lattice;
  const double ad = alpha.to_double();
  cplx A3 = (fam.sigma_h(s - ad + 1.0) / lat.nx1(s - ad + 1.0) +
             fam.sigma_plus_h(s - ad) / lat.nx1(s - ad)) /
            lat.dx(s - ad);
  cplx B3 = (fam.sigma_h(s) / lat.nx(s) + fam.sigma_plus_h(s) / lat.dx(s)) /
            lat.nx1(s);
  return A3 - varsigma * B3;
}

std::string to_string(FactorStatus st) {
  switch (st) {
  case FactorStatus::Solved:
    return "Solved";
  case FactorStatus::NoConstantVarsigma:
    return "NoConstantVarsigma";
  case FactorStatus::Condition2Fails:
    return "Condition2Fails";
  case FactorStatus::Commuting:
    return "Commuting";
  }
  return "?";
}

std::vector<Rational> default_alpha_candidates() {
  std::vector<Rational> out;
  for (int k = -12; k <= 18; ++k)
    out.emplace_back(k, 6);
  return out;
}

namespace {

struct GridStat {
  bool ok = false;
  cplx mean;
  double spread = 0.0;
  int excluded = 0;
};

GridStat grid_constancy(const std::function<cplx(cplx)>& f,
                        const std::vector<cplx>& grid,
                        std::vector<cplx>* excluded_out) {
  GridStat st;
  std::vector<cplx> vals;
  for (cplx s : grid) {
    cplx v = f(s);
    if (!finite(v) || std::abs(v) > 1e12) {
      ++st.excluded;
      if (excluded_out)
        excluded_out->push_back(s);
      continue;
    }
    vals.push_back(v);
  }
  if (vals.size() < 4)
    return st;
  cplx mean = 0.0;
  for (cplx v : vals)
    mean += v;
  mean /= static_cast<double>(vals.size());
  double spread = 0.0;
  for (cplx v : vals)
    spread = std::max(spread, std::abs(v - mean));
  st.ok = true;
  st.mean = mean;
  st.spread = spread;
  return st;
}

std::optional<Rational> recognize_gamma(double vs, double q) {
  if (vs <= 0.0)
    return std::nullopt;
  double g = std::log(vs) / std::log(q);
  long k = std::lround(g * 6.0);
  if (std::abs(g - static_cast<double>(k) / 6.0) < 1e-8)
    return Rational(k, 6);
  return std::nullopt;
}

} // namespace

FactorizationReport search_factorization(const FamilySpec& fam,
                                         const std::vector<Rational>& alphas,
                                         const std::vector<cplx>& grid,
                                         double tol) {
  if (alphas.empty())
    throw std::invalid_argument("search_factorization: empty candidate list");
  FactorizationReport rep;
  rep.family = fam.name;
  rep.params = fam.params;
  rep.q = fam.lattice.q.value();
  rep.residual_cond1 = std::numeric_limits<double>::infinity();
  rep.residual_cond2 = std::numeric_limits<double>::infinity();
  bool cond1_passed_somewhere = false;

  for (Rational alpha : alphas) {
    GridStat c1 = grid_constancy(
        [&](cplx s) { return condition_one(fam, alpha, s); }, grid,
        &rep.excluded_points);
    if (!c1.ok)
      continue;
    double scale1 = std::max(1.0, std::abs(c1.mean));
    rep.residual_cond1 = std::min(rep.residual_cond1, c1.spread / scale1);
    if (c1.spread > tol * scale1)
      continue;
    cond1_passed_somewhere = true;
    if (std::abs(c1.mean.imag()) > tol * scale1)
      continue; // varsigma must be real
    double vs = c1.mean.real();

    GridStat c2 = grid_constancy(
        [&](cplx s) { return condition_two(fam, alpha, vs, s); }, grid,
        &rep.excluded_points);
    if (!c2.ok)
      continue;
    double scale2 = std::max(1.0, std::abs(c2.mean));
    rep.residual_cond2 = std::min(rep.residual_cond2, c2.spread / scale2);
    if (c2.spread > tol * scale2)
      continue;

    double Lambda = c2.mean.real();
    rep.alpha = alpha;
    rep.varsigma = vs;
    rep.gamma = recognize_gamma(vs, fam.lattice.q.value());
    rep.Lambda = Lambda;
    rep.residual_cond1 = c1.spread / scale1;
    rep.residual_cond2 = c2.spread / scale2;
    rep.status = (std::abs(Lambda) <= tol) ? FactorStatus::Commuting
                                           : FactorStatus::Solved;
    // cross-validate via the sigma-commutator classifier
    ShiftExpr comm =
        sigma_commutator(alpha_down(fam, alpha), alpha_up(fam, alpha), vs);
    ClassifyResult cl = classify_identity_multiple(comm, grid, 1e-6);
    if (cl.verdict == IdentityVerdict::IdentityMultiple && cl.Lambda)
      rep.cross_residual = std::abs(*cl.Lambda - cplx(Lambda));
    else
      rep.notes.push_back("cross-validation through the commutator "
                          "classifier did not confirm the constant");
    return rep;
  }
  rep.status = cond1_passed_somewhere ? FactorStatus::Condition2Fails
                                      : FactorStatus::NoConstantVarsigma;
  return rep;
}

namespace {

struct Fit {
  cplx coeff;
  double residual = 0.0;
};

Fit fit_ratio(const std::vector<cplx>& v, const std::vector<cplx>& w) {
  cplx num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    num += v[i] * std::conj(w[i]);
    den += std::norm(w[i]);
  }
  Fit f;
  f.coeff = num / den;
  double scale = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    f.residual = std::max(f.residual, std::abs(v[i] - f.coeff * w[i]));
    scale = std::max(scale, std::abs(v[i]));
  }
  if (scale > 0.0)
    f.residual /= scale;
  return f;
}

std::vector<cplx> apply_all(const ShiftExpr& op, const FamilySpec& fam, int n,
                            const std::vector<cplx>& grid) {
  std::vector<cplx> out;
  out.reserve(grid.size());
  for (cplx s : grid)
    out.push_back(op.apply([&](cplx t) { return fam.phi(n, t); }, s));
  return out;
}

std::vector<cplx> phi_all(const FamilySpec& fam, int n,
                          const std::vector<cplx>& grid) {
  std::vector<cplx> out;
  out.reserve(grid.size());
  for (cplx s : grid)
    out.push_back(fam.phi(n, s));
  return out;
}

} // namespace

LadderResult ladder_check(const FamilySpec& fam, Rational alpha, double vs,
                          int n, const std::vector<cplx>& grid, double tol) {
  if (n < 1)
    throw std::invalid_argument("ladder_check: n must be >= 1");
  ShiftExpr down = alpha_down(fam, alpha);
  ShiftExpr up = alpha_up(fam, alpha);
  LadderResult r;
  Fit fd = fit_ratio(apply_all(down, fam, n, grid), phi_all(fam, n - 1, grid));
  Fit fu = fit_ratio(apply_all(up, fam, n - 1, grid), phi_all(fam, n, grid));
  r.coeff_down = fd.coeff;
  r.coeff_up_prev = fu.coeff;
  r.residual_down = fd.residual;
  r.residual_up = fu.residual;
  double lam1 = fam.lambda_n(1), lamn = fam.lambda_n(n),
         lamn1 = fam.lambda_n(n + 1);
  double scale = std::max({1.0, std::abs(lamn), std::abs(lamn1)});
  r.relation_residual =
      std::max(std::abs(fd.coeff * fu.coeff - cplx(lamn)),
               std::abs(lam1 + vs * lamn - lamn1)) /
      scale;
  r.is_ladder = fd.residual <= tol && fu.residual <= tol;
  return r;
}

namespace {

// The designated parameter-shifting operators of the wall,
// discrete-q-laguerre and q-meixner families.
ShiftExpr wall_op_down(QBase q, double a) {
  const double qq = q.value();
  (void)a;
  return ShiftExpr::term(Rational(1),
                         [q, qq](cplx s) {
                           cplx x = qpow(q, s);
                           return std::sqrt((1.0 - qq * x) / ((1.0 - qq) * x));
                         }) +
         ShiftExpr::term(Rational(0), [q, qq, a](cplx s) {
           cplx x = qpow(q, s);
           return -std::sqrt(cplx(a * qq)) / std::sqrt((1.0 - qq) * x);
         });
}

ShiftExpr wall_op_up(QBase q, double a) {
  const double qq = q.value();
  return ShiftExpr::term(Rational(-1),
                         [q, qq](cplx s) {
                           cplx x = qpow(q, s);
                           return std::sqrt(qq * (1.0 - x) / ((1.0 - qq) * x));
                         }) +
         ShiftExpr::term(Rational(0), [q, qq, a](cplx s) {
           cplx x = qpow(q, s);
           return -std::sqrt(cplx(a * qq)) / std::sqrt((1.0 - qq) * x);
         });
}

ShiftExpr dql_op_down(QBase q, double alpha) {
  const double qq = q.value();
  return ShiftExpr::term(Rational(0),
                         [q, qq, alpha](cplx s) {
                           return std::pow(qq, -alpha / 2.0) *
                                  qpow(q, -s / 2.0) / std::sqrt(1.0 - qq);
                         }) +
         ShiftExpr::term(Rational(-1), [q, qq](cplx s) {
           return -std::sqrt(1.0 + qpow(q, s - 1.0)) *
                  qpow(q, -(s - 1.0) / 2.0) / std::sqrt(1.0 - qq);
         });
}

ShiftExpr dql_op_up(QBase q, double alpha) {
  const double qq = q.value();
  return ShiftExpr::term(Rational(0),
                         [q, qq, alpha](cplx s) {
                           return qpow(q, -s / 2.0) *
                                  std::pow(qq, -alpha / 2.0) /
                                  std::sqrt(1.0 - qq);
                         }) +
         ShiftExpr::term(Rational(1), [q, qq](cplx s) {
           return -qpow(q, -s / 2.0) * std::sqrt(1.0 + qpow(q, s)) /
                  std::sqrt(1.0 - qq);
         });
}

ShiftExpr qmx_op_down(QBase q, double b, double c) {
  const double qq = q.value();
  auto D = [q, qq, b, c](cplx s) {
    cplx t = qpow(q, s);
    return (1.0 - t) * (1.0 + b * c * t);
  };
  auto B = [q, qq, b, c](cplx s) {
    cplx t = qpow(q, s);
    return c * t * (1.0 - b * qq * t);
  };
  return ShiftExpr::term(Rational(1),
                         [D, qq](cplx s) {
                           return std::sqrt(D(s + 1.0)) / std::sqrt(1.0 - qq);
                         }) +
         ShiftExpr::term(Rational(0), [B, qq](cplx s) {
           return -std::sqrt(B(s)) / std::sqrt(1.0 - qq);
         });
}

ShiftExpr qmx_op_up(QBase q, double b, double c) {
  const double qq = q.value();
  auto D = [q, b, c](cplx s) {
    cplx t = qpow(q, s);
    return (1.0 - t) * (1.0 + b * c * t);
  };
  auto B = [q, qq, b, c](cplx s) {
    cplx t = qpow(q, s);
    return c * t * (1.0 - b * qq * t);
  };
  return ShiftExpr::term(Rational(-1),
                         [D, qq](cplx s) {
                           return std::sqrt(D(s)) / std::sqrt(1.0 - qq);
                         }) +
         ShiftExpr::term(Rational(0), [B, qq](cplx s) {
           return -std::sqrt(B(s)) / std::sqrt(1.0 - qq);
         });
}

} // namespace

ParamLadderResult param_ladder_check(const std::string& family,
                                     const std::map<std::string, double>& params,
                                     QBase q, int n,
                                     const std::vector<cplx>& grid,
                                     double tol) {
  const double qq = q.value();
  FamilySpec fam = make_family(family, params, q);
  ShiftExpr op_down, op_up;
  FamilySpec down_target = fam, up_target = fam;
  double pred_down = 0.0, pred_up = 0.0;
  if (fam.id == FamilyId::Wall) {
    double a = fam.params.at("a");
    op_down = wall_op_down(q, a);
    op_up = wall_op_up(q, a / qq);
    down_target = make_family(family, {{"a", a * qq}}, q);
    up_target = make_family(family, {{"a", a / qq}}, q);
    pred_down = std::sqrt((1.0 - std::pow(qq, -n)) / (1.0 - 1.0 / qq));
    pred_up = std::sqrt((1.0 - std::pow(qq, -n - 1)) / (1.0 - 1.0 / qq));
  } else if (fam.id == FamilyId::DiscreteQLaguerre) {
    double al = fam.params.at("alpha");
    op_down = dql_op_down(q, al);
    op_up = dql_op_up(q, al - 1.0);
    down_target = make_family(family, {{"alpha", al + 1.0}}, q);
    up_target = make_family(family, {{"alpha", al - 1.0}}, q);
    pred_down = std::sqrt((1.0 - std::pow(qq, n)) / (1.0 - qq));
    pred_up = std::sqrt((1.0 - std::pow(qq, n + 1)) / (1.0 - qq));
  } else if (fam.id == FamilyId::QMeixner || fam.id == FamilyId::QCharlier) {
    double b = fam.params.count("b") ? fam.params.at("b") : 0.0;
    double c = fam.params.at("c");
    op_down = qmx_op_down(q, b, c);
    op_up = qmx_op_up(q, b / qq, c * qq);
    std::map<std::string, double> pd{{"c", c / qq}}, pu{{"c", c * qq}};
    if (fam.id == FamilyId::QMeixner) {
      pd["b"] = b * qq;
      pu["b"] = b / qq;
    }
    down_target = make_family(family, pd, q);
    up_target = make_family(family, pu, q);
    pred_down = std::sqrt((1.0 - std::pow(qq, n)) / (1.0 - qq));
    pred_up = std::sqrt((1.0 - std::pow(qq, n + 1)) / (1.0 - qq));
  } else {
    throw error("param_ladder_check: family '" + family +
                "' has no parameter-shifting ladder");
  }
  ParamLadderResult r;
  r.predicted_down = pred_down;
  r.predicted_up = pred_up;
  Fit fd =
      fit_ratio(apply_all(op_down, fam, n, grid), phi_all(down_target, n - 1, grid));
  Fit fu =
      fit_ratio(apply_all(op_up, fam, n, grid), phi_all(up_target, n + 1, grid));
  r.c_down = fd.coeff;
  r.c_up = fu.coeff;
  double scale = std::max(1.0, std::max(pred_down, pred_up));
  r.residual = std::max(
      {fd.residual, fu.residual, std::abs(fd.coeff - cplx(pred_down)) / scale,
       std::abs(fu.coeff - cplx(pred_up)) / scale});
  (void)tol;
  return r;
}

double wall_dn_recurrence_residual(double a, QBase q, int n) {
  FamilySpec f1 = make_family("wall", {{"a", a}}, q);
  FamilySpec f2 = make_family("wall", {{"a", a / q.value()}}, q);
  double lhs = f1.d_n(n);
  double rhs = (1.0 - a) * std::pow(q.value(), 0.5 * n) /
               std::sqrt(a * (1.0 - std::pow(q.value(), n + 1))) *
               f2.d_n(n + 1);
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

double shift_operator_check(const FamilySpec& fam, ShiftKind kind, int n,
                            const std::vector<cplx>& grid, double /*tol*/) {
  QBase q = fam.lattice.q;
  const double qq = q.value();
  double worst = 0.0;
  auto upd = [&](cplx lhs, cplx rhs, double scale) {
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, scale));
  };
  if (fam.id == FamilyId::Wall) {
    double a = fam.params.at("a");
    FamilySpec up = make_family("wall", {{"a", a * qq}}, q);
    FamilySpec dn = make_family("wall", {{"a", a / qq}}, q);
    for (cplx s : grid) {
      if (kind == ShiftKind::Forward) {
        cplx lhs = fam.Pn(n, s + 1.0) - fam.Pn(n, s);
        cplx rhs = qpow(q, s + 1.0 - cplx(n)) * (1.0 - std::pow(qq, n)) /
                   (1.0 - a * qq) * up.Pn(n - 1, s);
        upd(lhs, rhs, std::abs(fam.Pn(n, s)));
      } else {
        cplx lhs =
            (1.0 - qpow(q, s)) * fam.Pn(n, s - 1.0) - a * fam.Pn(n, s);
        cplx rhs = (1.0 - a) * dn.Pn(n + 1, s);
        upd(lhs, rhs, std::abs(fam.Pn(n, s)));
      }
    }
    return worst;
  }
  if (fam.id == FamilyId::QMeixner || fam.id == FamilyId::QCharlier) {
    double b = fam.params.count("b") ? fam.params.at("b") : 0.0;
    double c = fam.params.at("c");
    std::map<std::string, double> pd{{"c", c / qq}}, pu{{"c", c * qq}};
    if (fam.id == FamilyId::QMeixner) {
      pd["b"] = b * qq;
      pu["b"] = b / qq;
    }
    FamilySpec fwd = make_family(fam.name, pd, q);
    FamilySpec bwd = make_family(fam.name, pu, q);
    for (cplx s : grid) {
      if (kind == ShiftKind::Forward) {
        cplx lhs = fam.Pn(n, s) - fam.Pn(n, s + 1.0);
        cplx rhs = (1.0 - std::pow(qq, n)) / (c * (1.0 - b * qq)) *
                   qpow(q, -s) * fwd.Pn(n - 1, s);
        upd(lhs, rhs, std::abs(rhs));
      } else {
        cplx t = qpow(q, s);
        cplx lhs = c * t * (1.0 - b * t) * fam.Pn(n, s) -
                   (1.0 - t) * (1.0 + b * c * t) * fam.Pn(n, s - 1.0);
        cplx rhs = c * t * (1.0 - b) * bwd.Pn(n + 1, s);
        upd(lhs, rhs, std::abs(rhs));
      }
    }
    return worst;
  }
  if (fam.id == FamilyId::DiscreteQLaguerre) {
    double al = fam.params.at("alpha");
    FamilySpec up = make_family(fam.name, {{"alpha", al + 1.0}}, q);
    FamilySpec dn = make_family(fam.name, {{"alpha", al - 1.0}}, q);
    for (cplx s : grid) {
      cplx x = qpow(q, s);
      if (kind == ShiftKind::Forward) {
        // L_n(x) - L_n(x/q) = q^alpha x L_{n-1}^{(alpha+1)}(x)
        cplx lhs = fam.Pn(n, s) - fam.Pn(n, s - 1.0);
        cplx rhs = std::pow(qq, al) * x * up.Pn(n - 1, s);
        upd(lhs, rhs, std::abs(fam.Pn(n, s)));
      } else {
        // L_n(x) - q^alpha (1+x) L_n(qx) = (1-q^{n+1}) L_{n+1}^{(alpha-1)}(x)
        cplx lhs = fam.Pn(n, s) - std::pow(qq, al) * (1.0 + x) * fam.Pn(n, s + 1.0);
        cplx rhs = (1.0 - std::pow(qq, n + 1)) * dn.Pn(n + 1, s);
        upd(lhs, rhs, std::abs(fam.Pn(n, s)));
      }
    }
    return worst;
  }
  throw error("shift_operator_check: no shift identities for family '" +
              fam.name + "'");
}

AdjointnessResult adjointness_check(const FamilySpec& fam, int n, int k,
                                    Rational alpha, double tol) {
  if (fam.support.kind != Support::Kind::DiscreteSum)
    throw error("adjointness_check: requires a discrete-sum support");
  ShiftExpr down = alpha_down(fam, alpha);
  ShiftExpr up = alpha_up(fam, alpha);
  auto phi_n1 = [&](cplx t) { return fam.phi(n + 1, t); };
  auto phi_k = [&](cplx t) { return fam.phi(k, t); };
  cplx lhs = 0.0, rhs = 0.0;
  int quiet = 0;
  const int start = fam.support.a;
  for (int s = start; s < start + 4000; ++s) {
    cplx tl = down.apply(phi_n1, cplx(s)) * phi_k(cplx(s));
    cplx tr = phi_n1(cplx(s)) * up.apply(phi_k, cplx(s));
    lhs += tl;
    rhs += tr;
    if (std::abs(tl) + std::abs(tr) < 0.01 * tol) {
      if (++quiet >= 3)
        break;
    } else {
      quiet = 0;
    }
    if (s == start + 3999)
      throw error("adjointness_check: tail truncation failed");
  }
  AdjointnessResult r;
  r.lhs = lhs.real();
  r.rhs = rhs.real();
  r.gap = std::abs(lhs - rhs);
  return r;
}

} // namespace qfactor
