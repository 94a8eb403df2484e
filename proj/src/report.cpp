#include "qfactor/report.hpp"

#include "qfactor/factor.hpp"
#include "qfactor/family_file.hpp"
#include "qfactor/orthogonality.hpp"
#include "qfactor/spectrum.hpp"
#include "qfactor/suq.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace qfactor {

using nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

ordered_json params_json(const std::map<std::string, double>& p) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : p) // std::map iterates sorted: deterministic
    j[k] = v;
  return j;
}

struct Check {
  std::string name;
  bool pass = true;
  double residual = 0.0;
  ordered_json details = ordered_json::object();
};

// ---- individual checks -----------------------------------------------------

Check check_pearson(const FamilySpec& fam, const RunConfig& cfg) {
  Check c{"pearson"};
  double worst = 0.0;
  cplx worst_s = 0.0;
  for (cplx s : fam.default_grid(cfg.grid_points)) {
    cplx r = fam.pearson_residual(s);
    double scale = std::max(1.0, std::abs(fam.sigma_plus(s) * fam.rho(s)));
    double rel = std::abs(r) / scale;
    if (rel > worst) {
      worst = rel;
      worst_s = s;
    }
  }
  c.residual = worst;
  c.pass = worst <= cfg.tol;
  c.details["worst_s_re"] = worst_s.real();
  c.details["worst_s_im"] = worst_s.imag();
  return c;
}

Check check_eigen(const FamilySpec& fam, const RunConfig& cfg) {
  Check c{"eigencheck"};
  ShiftExpr H = hamiltonian(fam);
  auto grid = fam.default_grid(cfg.grid_points);
  double worst = 0.0;
  int worst_n = 0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    double err = 0.0, scale = 0.0;
    for (cplx s : grid) {
      cplx ph = fam.phi(n, s);
      cplx r = H.apply([&](cplx t) { return fam.phi(n, t); }, s) -
               fam.lambda_n(n) * ph;
      err = std::max(err, std::abs(r));
      scale = std::max(scale, std::abs(ph));
    }
    double rel = err / std::max(scale, 1e-300);
    if (rel > worst) {
      worst = rel;
      worst_n = n;
    }
  }
  c.residual = worst;
  c.pass = worst <= cfg.tol;
  c.details["worst_n"] = worst_n;
  return c;
}

Check check_spectrum(const FamilySpec& fam, const RunConfig& cfg) {
  Check c{"spectrum"};
  QBase q = fam.lattice.q;
  double defect = ttrr_constant(fam.lambda_n, q, std::max(10, cfg.n_max), 1e-10);
  double predicted =
      ttrr_constant_predicted(fam.sigma_tilde_pp, fam.tau_tilde_p, q);
  double rel = std::abs(defect - predicted) / std::max(1.0, std::abs(defect));
  SpectrumCoeffs sc(fam.sigma_tilde_pp, fam.tau_tilde_p, q);
  double lam_err = 0.0;
  for (int n = 0; n <= std::max(10, cfg.n_max); ++n)
    lam_err = std::max(lam_err,
                       std::abs(eigenvalue_general(sc, n) - fam.lambda_n(n)) /
                           std::max(1.0, std::abs(fam.lambda_n(n))));
  c.residual = std::max(rel, lam_err);
  c.pass = c.residual <= std::max(cfg.tol, 1e-10);
  c.details["ttrr_defect"] = defect;
  c.details["ttrr_predicted"] = predicted;
  c.details["C1"] = sc.C1;
  c.details["C2"] = sc.C2;
  c.details["C3"] = sc.C3;
  c.details["L_q"] = sc.L_q;
  c.details["q_linearity"] = to_string(q_linearity_class(fam));
  return c;
}

ordered_json report_to_json(const FactorizationReport& rep) {
  ordered_json j;
  j["status"] = to_string(rep.status);
  if (rep.alpha)
    j["alpha"] = rep.alpha->to_double();
  if (rep.varsigma)
    j["varsigma"] = *rep.varsigma;
  if (rep.gamma)
    j["gamma"] = rep.gamma->to_double();
  if (rep.Lambda)
    j["Lambda"] = *rep.Lambda;
  if (std::isfinite(rep.residual_cond1))
    j["residual_cond1"] = rep.residual_cond1;
  if (std::isfinite(rep.residual_cond2))
    j["residual_cond2"] = rep.residual_cond2;
  j["cross_residual"] = rep.cross_residual;
  j["excluded_points"] = rep.excluded_points.size();
  for (const std::string& n : rep.notes)
    j["notes"].push_back(n);
  return j;
}

Check check_factorize(const FamilySpec& fam, const RunConfig& cfg,
                      FactorizationReport* out_rep) {
  Check c{"factorize"};
  auto rep = search_factorization(fam, default_alpha_candidates(),
                                  fam.default_grid(cfg.grid_points), cfg.tol);
  c.details = report_to_json(rep);
  // A negative status is a successful diagnosis, not a failure.
  c.pass = true;
  c.residual = (rep.status == FactorStatus::Solved ||
                rep.status == FactorStatus::Commuting)
                   ? std::max({rep.residual_cond1, rep.residual_cond2,
                               rep.cross_residual})
                   : 0.0;
  if (c.residual > cfg.tol)
    c.pass = false;
  if (out_rep)
    *out_rep = rep;
  return c;
}

Check check_theorem1(const FamilySpec& fam, const RunConfig& cfg) {
  Check c{"theorem1"};
  std::mt19937 rng(cfg.seed);
  auto cands = default_alpha_candidates();
  std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
  auto grid = fam.default_grid(cfg.grid_points);
  double worst = 0.0;
  ordered_json alphas = ordered_json::array();
  for (int i = 0; i < 5; ++i) {
    Rational alpha = cands[pick(rng)];
    double r = verify_factorization(fam, alpha, grid, cfg.tol);
    worst = std::max(worst, r);
    alphas.push_back(alpha.to_double());
  }
  c.residual = worst;
  c.pass = worst <= std::max(cfg.tol, 1e-9);
  c.details["alphas"] = alphas;
  c.details["seed"] = cfg.seed;
  return c;
}

bool has_param_ladder(const FamilySpec& fam) {
  return fam.id == FamilyId::Wall || fam.id == FamilyId::DiscreteQLaguerre ||
         fam.id == FamilyId::QMeixner || fam.id == FamilyId::QCharlier;
}

Check check_ladder(const FamilySpec& fam, const RunConfig& cfg,
                   const FactorizationReport& rep) {
  Check c{"ladder"};
  if (rep.status != FactorStatus::Solved) {
    c.details["skipped"] = "factorization not Solved";
    return c;
  }
  auto grid = fam.default_grid(12);
  double worst = 0.0;
  for (int n = 1; n <= std::min(cfg.n_max, 6); ++n) {
    LadderResult lr =
        ladder_check(fam, *rep.alpha, *rep.varsigma, n, grid, cfg.tol);
    worst = std::max({worst, lr.residual_down, lr.residual_up,
                      lr.relation_residual});
    if (!lr.is_ladder) {
      c.details["not_a_ladder_at_n"] = n;
      break;
    }
  }
  c.residual = worst;
  c.pass = worst <= cfg.tol || c.details.contains("not_a_ladder_at_n");
  return c;
}

Check check_param_ladder(const FamilySpec& fam, const RunConfig& cfg) {
  Check c{"param_ladder"};
  auto grid = fam.default_grid(12);
  double worst = 0.0;
  for (int n = 1; n <= std::min(cfg.n_max, 6); ++n) {
    ParamLadderResult pr =
        param_ladder_check(fam.name, fam.params, fam.lattice.q, n, grid,
                           cfg.tol);
    worst = std::max(worst, pr.residual);
  }
  if (fam.id == FamilyId::Wall) {
    double a = fam.params.at("a");
    for (int n = 0; n <= std::min(cfg.n_max, 6); ++n)
      worst = std::max(worst,
                       wall_dn_recurrence_residual(a, fam.lattice.q, n));
  }
  c.residual = worst;
  c.pass = worst <= cfg.tol;
  return c;
}

Check check_shiftops(const FamilySpec& fam, const RunConfig& cfg) {
  Check c{"shiftops"};
  auto grid = fam.default_grid(12);
  double worst = 0.0;
  for (int n = 1; n <= std::min(cfg.n_max, 6); ++n) {
    worst = std::max(worst, shift_operator_check(fam, ShiftKind::Forward, n,
                                                 grid, cfg.tol));
    worst = std::max(worst, shift_operator_check(fam, ShiftKind::Backward, n,
                                                 grid, cfg.tol));
  }
  c.residual = worst;
  c.pass = worst <= cfg.tol;
  return c;
}

Check check_gram(const FamilySpec& fam, const RunConfig& cfg) {
  Check c{"gram"};
  QuadratureSpec spec;
  spec.tol = std::min(1e-9, cfg.tol);
  GramResult g = gram(fam, std::min(cfg.n_max, 4), spec);
  c.residual = g.max_err;
  c.pass = g.max_err <= std::max(cfg.tol, 1e-6);
  c.details["terms"] = g.terms_used;
  return c;
}

Check check_algebra(const FamilySpec& fam, const RunConfig& cfg,
                    const FactorizationReport& rep) {
  Check c{"algebra"};
  if (rep.status != FactorStatus::Solved) {
    c.details["skipped"] = "factorization not Solved with Lambda != 0";
    return c;
  }
  TruncatedRep tr = from_family(rep, cfg.dim);
  auto rels = check_relations(tr, cfg.tol);
  double worst = 0.0;
  for (const auto& [name, r] : rels) {
    c.details[name] = r;
    worst = std::max(worst, r);
  }
  c.details["base"] = tr.base;
  c.details["inverse_mapped"] = tr.inverse_mapped;
  c.residual = worst;
  c.pass = worst <= std::max(cfg.tol, 1e-10);
  return c;
}

void emit_checks_text(const std::vector<Check>& checks, std::ostream& out) {
  for (const Check& c : checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name
        << "  residual=" << fmt(c.residual);
    if (!c.details.empty())
      out << "  " << c.details.dump();
    out << "\n";
  }
}

ordered_json checks_to_json(const FamilySpec& fam, const RunConfig& cfg,
                            const std::vector<Check>& checks) {
  ordered_json j;
  j["tool_version"] = tool_version;
  j["family"] = fam.name;
  j["params"] = params_json(fam.params);
  j["q"] = cfg.q;
  j["tol"] = cfg.tol;
  j["seed"] = cfg.seed;
  j["checks"] = ordered_json::array();
  for (const Check& c : checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = c.pass ? "pass" : "fail";
    cj["residual"] = c.residual;
    cj["details"] = c.details;
    j["checks"].push_back(cj);
  }
  j["notes"] = ordered_json::array();
  for (const std::string& n : fam.notes)
    j["notes"].push_back(n);
  return j;
}

std::vector<Check> full_battery(const FamilySpec& fam, const RunConfig& cfg) {
  std::vector<Check> checks;
  checks.push_back(check_pearson(fam, cfg));
  checks.push_back(check_eigen(fam, cfg));
  checks.push_back(check_spectrum(fam, cfg));
  checks.push_back(check_theorem1(fam, cfg));
  FactorizationReport rep;
  checks.push_back(check_factorize(fam, cfg, &rep));
  if (rep.status == FactorStatus::Solved)
    checks.push_back(check_ladder(fam, cfg, rep));
  if (has_param_ladder(fam)) {
    checks.push_back(check_param_ladder(fam, cfg));
    checks.push_back(check_shiftops(fam, cfg));
  }
  checks.push_back(check_gram(fam, cfg));
  if (rep.status == FactorStatus::Solved)
    checks.push_back(check_algebra(fam, cfg, rep));
  return checks;
}

} // namespace

FamilySpec resolve_family(const RunConfig& cfg) {
  if (!cfg.family_file.empty())
    return load_family_file(cfg.family_file, cfg.q).spec;
  if (cfg.family.empty())
    throw std::invalid_argument("no family given (use --family or --family-file)");
  return make_family(cfg.family, cfg.params, QBase(cfg.q));
}

std::string report_json(const RunConfig& cfg) {
  FamilySpec fam = resolve_family(cfg);
  auto checks = full_battery(fam, cfg);
  return checks_to_json(fam, cfg, checks).dump(2);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "list") {
      for (const CatalogEntry& e : catalog()) {
        out << e.name;
        if (!e.params.empty()) {
          out << "  [";
          bool first = true;
          for (const ParamInfo& p : e.params) {
            if (!first)
              out << ", ";
            first = false;
            out << p.name << "=" << p.def << " in " << p.range;
          }
          out << "]";
        }
        out << "  -- " << e.summary << "\n";
      }
      return 0;
    }

    FamilySpec fam = resolve_family(cfg);

    if (cfg.command == "info") {
      ordered_json j;
      j["tool_version"] = tool_version;
      j["family"] = fam.name;
      j["params"] = params_json(fam.params);
      j["q"] = cfg.q;
      j["lattice_kind"] = fam.lattice.kind == LatticeKind::QLinearUp
                              ? "q-linear-up"
                              : fam.lattice.kind == LatticeKind::QLinearDown
                                    ? "q-linear-down"
                                    : "q-quadratic";
      j["A"] = fam.A == AType::SqrtNablaX1 ? "sqrt(nabla x1)" : "1";
      j["support"] = fam.support.kind == Support::Kind::DiscreteSum
                         ? (fam.support.bilateral ? "discrete (bilateral)"
                                                  : "discrete")
                         : "continuous";
      j["q_linearity"] = to_string(q_linearity_class(fam));
      j["lambda"] = ordered_json::array();
      for (int n = 0; n <= cfg.n_max; ++n)
        j["lambda"].push_back(fam.lambda_n(n));
      j["notes"] = fam.notes;
      out << (cfg.format == "json" ? j.dump(2) : j.dump(2)) << "\n";
      return 0;
    }

    if (cfg.command == "spectrum") {
      SpectrumCoeffs sc(fam.sigma_tilde_pp, fam.tau_tilde_p, fam.lattice.q);
      if (cfg.format == "csv") {
        out << "n,lambda_n,eq3\n";
        for (int n = 0; n <= cfg.n_max; ++n)
          out << n << "," << fmt(fam.lambda_n(n)) << ","
              << fmt(eigenvalue_general(sc, n)) << "\n";
        return 0;
      }
      std::vector<Check> checks{check_spectrum(fam, cfg)};
      if (cfg.format == "json")
        out << checks_to_json(fam, cfg, checks).dump(2) << "\n";
      else
        emit_checks_text(checks, out);
      return checks[0].pass ? 0 : 1;
    }

    std::vector<Check> checks;
    FactorizationReport rep;
    if (cfg.command == "pearson") {
      checks.push_back(check_pearson(fam, cfg));
    } else if (cfg.command == "eigencheck") {
      checks.push_back(check_eigen(fam, cfg));
    } else if (cfg.command == "factorize") {
      checks.push_back(check_factorize(fam, cfg, &rep));
    } else if (cfg.command == "ladder") {
      if (cfg.param_shift || (!cfg.alpha && has_param_ladder(fam))) {
        checks.push_back(check_param_ladder(fam, cfg));
      } else {
        checks.push_back(check_factorize(fam, cfg, &rep));
        checks.push_back(check_ladder(fam, cfg, rep));
      }
    } else if (cfg.command == "shiftops") {
      checks.push_back(check_shiftops(fam, cfg));
    } else if (cfg.command == "gram") {
      checks.push_back(check_gram(fam, cfg));
    } else if (cfg.command == "algebra") {
      checks.push_back(check_factorize(fam, cfg, &rep));
      Check c = check_algebra(fam, cfg, rep);
      if (c.details.contains("skipped")) {
        err << "algebra: " << c.details["skipped"].get<std::string>() << "\n";
        return 1;
      }
      checks.push_back(c);
    } else if (cfg.command == "report") {
      out << report_json(cfg) << "\n";
      // recompute pass/fail for the exit status
      auto all = full_battery(fam, cfg);
      for (const Check& c : all)
        if (!c.pass)
          return 1;
      return 0;
    } else {
      err << "unknown command: " << cfg.command << "\n";
      return 2;
    }

    if (cfg.format == "json")
      out << checks_to_json(fam, cfg, checks).dump(2) << "\n";
    else
      emit_checks_text(checks, out);
    for (const Check& c : checks)
      if (!c.pass)
        return 1;
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace qfactor
