#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfactor/factor.hpp"
#include "qfactor/spectrum.hpp"

#include <cmath>
#include <random>

using namespace qfactor;

namespace {

FamilySpec fam(const std::string& name, double q,
               std::map<std::string, double> params = {}) {
  return make_family(name, params, QBase(q));
}

double eigen_residual(const FamilySpec& f, int n_max) {
  ShiftExpr H = hamiltonian(f);
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    double err = 0.0, scale = 0.0;
    for (cplx s : f.default_grid()) {
      cplx ph = f.phi(n, s);
      err = std::max(err, std::abs(H.apply([&](cplx t) { return f.phi(n, t); },
                                           s) -
                                   f.lambda_n(n) * ph));
      scale = std::max(scale, std::abs(ph));
    }
    worst = std::max(worst, err / scale);
  }
  return worst;
}

FactorizationReport search(const FamilySpec& f, double tol = 1e-8) {
  return search_factorization(f, default_alpha_candidates(), f.default_grid(),
                              tol);
}

} // namespace

TEST_CASE("Stieltjes-Wigert Hamiltonian matches the closed-form display") {
  const double q = 0.5;
  FamilySpec f = fam("stieltjes-wigert", q);
  ShiftExpr H = hamiltonian(f);
  for (double s : {0.3, 1.1, 2.7}) {
    cplx I_expect = (1.0 + std::pow(q, -s)) / (1.0 - q);
    cplx P_expect = -std::pow(q, -(s + 1.0) / 2.0) / (1.0 - q);
    cplx M_expect = -std::pow(q, -s / 2.0) / (1.0 - q);
    CHECK(std::abs(H.coefficient(Rational(0), s) - I_expect) < 1e-13);
    CHECK(std::abs(H.coefficient(Rational(1), s) - P_expect) < 1e-13);
    CHECK(std::abs(H.coefficient(Rational(-1), s) - M_expect) < 1e-13);
  }
  // gH Phi_3 = lambda_3 Phi_3 at s = 1.7 (within 1e-9)
  cplx s(1.7, 0.0);
  cplx lhs = H.apply([&](cplx t) { return f.phi(3, t); }, s);
  CHECK(std::abs(lhs - f.lambda_n(3) * f.phi(3, s)) <=
        1e-9 * std::abs(f.phi(3, s)));
}

TEST_CASE("Al-Salam-Carlitz I Hamiltonian matches the display") {
  const double q = 0.5, a = 0.5;
  FamilySpec f = fam("al-salam-carlitz-1", q, {{"a", a}});
  ShiftExpr H = hamiltonian(f);
  for (double s : {0.4, 1.3, 2.6}) {
    double qs = std::pow(q, s);
    cplx I_expect =
        (a * std::pow(q, 2 * s + 1) + (1 - qs) * (1 - a * qs)) / (1.0 - q);
    cplx P_expect = -std::sqrt(a * (1 - qs * q) * (1 - a * qs * q)) *
                    std::pow(q, s + 0.5) / (1.0 - q);
    cplx M_expect = -std::sqrt(a * (1 - qs) * (1 - a * qs)) *
                    std::pow(q, s - 0.5) / (1.0 - q);
    CHECK(std::abs(H.coefficient(Rational(0), s) - I_expect) < 1e-13);
    CHECK(std::abs(H.coefficient(Rational(1), s) - P_expect) < 1e-13);
    CHECK(std::abs(H.coefficient(Rational(-1), s) - M_expect) < 1e-13);
  }
}

TEST_CASE("q-Meixner Hamiltonian has the B/D three-term structure") {
  const double q = 0.5, b = 0.5, c = 1.0;
  FamilySpec f = fam("q-meixner", q, {{"b", b}, {"c", c}});
  ShiftExpr H = hamiltonian(f);
  auto B = [&](double x) { return c * std::pow(q, x) * (1 - b * std::pow(q, x + 1)); };
  auto D = [&](double x) {
    return (1 - std::pow(q, x)) * (1 + b * c * std::pow(q, x));
  };
  for (double x : {0.4, 1.3, 2.6}) {
    CHECK(std::abs(H.coefficient(Rational(0), x) - (B(x) + D(x)) / (1 - q)) <
          1e-13);
    CHECK(std::abs(H.coefficient(Rational(1), x) +
                   std::sqrt(B(x) * D(x + 1)) / (1 - q)) < 1e-13);
    CHECK(std::abs(H.coefficient(Rational(-1), x) +
                   std::sqrt(D(x) * B(x - 1)) / (1 - q)) < 1e-13);
  }
}

TEST_CASE("alpha operators: Stieltjes-Wigert alpha=2 display") {
  const double q = 0.5;
  FamilySpec f = fam("stieltjes-wigert", q);
  ShiftExpr down = alpha_down(f, Rational(2));
  // a_down_2 = (1-q)^{-1/2} (e^{-2 d} - e^{-d} q^{-s/2}); the operator
  // composition e^{-d} q^{-s/2} carries coefficient -q^{-(s-1)/2} at s.
  for (double s : {0.5, 1.4, 2.3}) {
    CHECK(std::abs(down.coefficient(Rational(-2), s) -
                   1.0 / std::sqrt(1.0 - q)) < 1e-13);
    CHECK(std::abs(down.coefficient(Rational(-1), s) +
                   std::pow(q, -(s - 1.0) / 2.0) / std::sqrt(1.0 - q)) <
          1e-13);
  }
  ShiftExpr up = alpha_up(f, Rational(2));
  for (double s : {0.5, 1.4}) {
    CHECK(std::abs(up.coefficient(Rational(2), s) - 1.0 / std::sqrt(1.0 - q)) <
          1e-13);
    CHECK(std::abs(up.coefficient(Rational(1), s) +
                   std::pow(q, -s / 2.0) / std::sqrt(1.0 - q)) < 1e-13);
  }
}

TEST_CASE("alpha operators: continuous q-Hermite alpha=1/2, A=1 display") {
  const double q = 0.5;
  const double kq = k_q(QBase(q));
  FamilySpec f = fam("continuous-q-hermite", q); // C_sigma = k_q/4 < 0
  ShiftExpr down = alpha_down(f, Rational(1, 2));
  const double lq = std::log(q);
  for (double th : {0.5, 1.3, 2.4}) {
    cplx s(0.0, th / lq);
    cplx u = std::exp(cplx(0, th));
    cplx pref = std::sqrt(cplx(-kq / 4.0)) / (kq * std::sin(th));
    // e^{d/2} q^s carries q^{s+1/2}; e^{-d/2} q^{-s} carries q^{-(s-1/2)}.
    // The second coefficient is fixed only up to the branch of
    // sqrt(sigma(-s)); compare its square.
    cplx cp = down.coefficient(Rational(1, 2), s);
    cplx cm = down.coefficient(Rational(-1, 2), s);
    cplx cm_disp = -pref * std::sqrt(q) / u;
    CHECK(std::abs(cp - pref * u * std::sqrt(q)) < 1e-12);
    CHECK(std::abs(cm * cm - cm_disp * cm_disp) < 1e-12);
  }
}

TEST_CASE("Theorem 1: factorization holds for every alpha") {
  std::mt19937 rng(2024);
  auto cands = default_alpha_candidates();
  std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
  const std::vector<std::pair<std::string, std::map<std::string, double>>>
      fams = {{"stieltjes-wigert", {}},
              {"al-salam-carlitz-1", {{"a", 0.5}}},
              {"al-salam-carlitz-2", {{"a", 0.5}}},
              {"discrete-q-hermite-2", {}},
              {"wall", {{"a", 0.3}}},
              {"discrete-q-laguerre", {{"alpha", 1.0}}},
              {"q-meixner", {{"b", 0.5}, {"c", 1.0}}},
              {"q-charlier", {{"c", 1.0}}},
              {"askey-wilson", {{"a", 0.3}, {"b", 0.4}, {"c", 0.5}, {"d", 0.6}}},
              {"continuous-q-laguerre", {}},
              {"continuous-q-hermite", {}},
              {"continuous-q-hermite-sqrtw", {}}};
  for (const auto& [name, params] : fams) {
    FamilySpec f = fam(name, 0.5, params);
    auto grid = f.default_grid();
    for (int i = 0; i < 5; ++i) {
      Rational alpha = cands[pick(rng)];
      INFO(name, " alpha=", alpha.str());
      CHECK(verify_factorization(f, alpha, grid, 1e-9) <= 1e-9);
    }
  }
  // the specific alphas named for Stieltjes-Wigert and Wall
  FamilySpec sw = fam("stieltjes-wigert", 0.5);
  for (int k : {-6, 0, 3, 6, 12})
    CHECK(verify_factorization(sw, Rational(k, 6), sw.default_grid(), 1e-10) <=
          1e-10);
  FamilySpec wl = fam("wall", 0.5, {{"a", 0.3}});
  CHECK(verify_factorization(wl, Rational(0), wl.default_grid(), 1e-10) <=
        1e-10);
}

TEST_CASE("compose(up,down) matches the closed-form B coefficients (SW)") {
  // B1, B2, B3 of the product expansion, evaluated as an independent oracle
  const double q = 0.5;
  FamilySpec f = fam("stieltjes-wigert", q);
  ShiftExpr C = alpha_up(f, Rational(0)).compose(alpha_down(f, Rational(0)));
  Lattice lat = f.lattice;
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> U(0.2, 4.0);
  for (int i = 0; i < 20; ++i) {
    cplx s(U(rng), 0.0);
    cplx sg = f.sigma_h(s), sgp = f.sigma_plus_h(s);
    cplx sg1 = f.sigma_h(s + 1.0), sgp1 = f.sigma_plus_h(s - 1.0);
    cplx Ar_p = lat.sqrt_nx1(s) / lat.sqrt_nx1(s + 1.0);
    cplx Ar_m = lat.sqrt_nx1(s) / lat.sqrt_nx1(s - 1.0);
    cplx B1 = -Ar_p * std::sqrt(sgp * sg1) / (lat.dx(s) * lat.nx1(s));
    cplx B2 = -Ar_m * std::sqrt(sgp1 * sg) / (lat.nx(s) * lat.nx1(s));
    cplx B3 = (sg / lat.nx(s) + sgp / lat.dx(s)) / lat.nx1(s);
    CHECK(std::abs(C.coefficient(Rational(1), s) - B1) < 1e-12);
    CHECK(std::abs(C.coefficient(Rational(-1), s) - B2) < 1e-12);
    CHECK(std::abs(C.coefficient(Rational(0), s) - B3) < 1e-12);
  }
}

TEST_CASE("compose(down,up) matches the closed-form A coefficients (SW)") {
  // The closed forms of the product expansion at alpha = 0 fix the
  // magnitudes (the root branch is convention); the zero-shift coefficient
  // and the proof identity A1(s) B2(s+1) = A2(s+1) B1(s) pin the rest.
  const double q = 0.5;
  FamilySpec f = fam("stieltjes-wigert", q);
  ShiftExpr C = alpha_down(f, Rational(0)).compose(alpha_up(f, Rational(0)));
  ShiftExpr H = hamiltonian(f);
  Lattice lat = f.lattice;
  for (double sr : {0.4, 1.1, 2.6}) {
    cplx s(sr, 0.0);
    double A1 = std::abs(std::sqrt(f.sigma_h(s + 1.0) * f.sigma_plus_h(s + 1.0)) /
                         (std::sqrt(lat.dx(s) * lat.dx(s + 1.0)) *
                          lat.nx1(s + 1.0)));
    double A2 = std::abs(std::sqrt(f.sigma_h(s) * f.sigma_plus_h(s)) /
                         (std::sqrt(lat.dx(s - 1.0) * lat.dx(s)) * lat.nx1(s)));
    cplx A3 = (f.sigma_h(s + 1.0) / lat.nx1(s + 1.0) +
               f.sigma_plus_h(s) / lat.nx1(s)) /
              lat.dx(s);
    CHECK(std::abs(std::abs(C.coefficient(Rational(1), s)) - A1) < 1e-12);
    CHECK(std::abs(std::abs(C.coefficient(Rational(-1), s)) - A2) < 1e-12);
    CHECK(std::abs(C.coefficient(Rational(0), s) - A3) < 1e-12);
    // A1(s) B2(s+1) = A2(s+1) B1(s) (the relation that makes one varsigma
    // serve both shift coefficients)
    cplx lhs = C.coefficient(Rational(1), s) *
               H.coefficient(Rational(-1), s + 1.0);
    cplx rhs = C.coefficient(Rational(-1), s + 1.0) *
               H.coefficient(Rational(1), s);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("condition one closed values") {
  const double q = 0.5;
  // Stieltjes-Wigert: condition one equals q^{alpha/2} for every alpha
  FamilySpec sw = fam("stieltjes-wigert", q);
  for (double al : {0.0, 0.5, 1.0, 2.0}) {
    Rational alpha(std::lround(al * 6), 6);
    for (double s : {0.4, 1.3, 2.2}) {
      CHECK(std::abs(condition_one(sw, alpha, s) - std::pow(q, al / 2.0)) <
            1e-12);
    }
  }
  // commuting Askey-Wilson: z1 z2 = z3 z4 = sqrt(q) gives exactly 1
  double rq = std::sqrt(q);
  FamilySpec awc = fam("askey-wilson", q,
                       {{"a", 0.8}, {"b", rq / 0.8}, {"c", 0.9},
                        {"d", rq / 0.9}});
  const double lq = std::log(q);
  for (double th : {0.5, 1.2, 2.1}) {
    cplx s(0.0, th / lq);
    CHECK(std::abs(condition_one(awc, Rational(1, 2), s) - 1.0) < 1e-12);
  }
  // q-Meixner at generic parameters: not constant over the grid
  FamilySpec qm = fam("q-meixner", q, {{"b", 0.5}, {"c", 1.0}});
  cplx v1 = condition_one(qm, Rational(2, 5), cplx(0.4));
  cplx v2 = condition_one(qm, Rational(2, 5), cplx(2.3));
  CHECK(std::abs(v1 - v2) > 1e-3);
}

TEST_CASE("condition two closed values") {
  const double q = 0.5;
  FamilySpec sw = fam("stieltjes-wigert", q);
  for (double s : {0.4, 1.3, 2.2})
    CHECK(std::abs(condition_two(sw, Rational(2), q, s) - 1.0) < 1e-12);

  // discrete q-Laguerre: alpha=1, vs=sqrt(q) constant only at a = q^{-1/2}
  FamilySpec gen = fam("discrete-q-laguerre", q, {{"alpha", 1.0}});
  cplx g1 = condition_two(gen, Rational(1), std::sqrt(q), cplx(0.4));
  cplx g2 = condition_two(gen, Rational(1), std::sqrt(q), cplx(2.3));
  CHECK(std::abs(g1 - g2) > 1e-2);
  FamilySpec sol = fam("discrete-q-laguerre", q, {{"alpha", -0.5}});
  cplx s1 = condition_two(sol, Rational(1), std::sqrt(q), cplx(0.4));
  cplx s2 = condition_two(sol, Rational(1), std::sqrt(q), cplx(2.3));
  CHECK(std::abs(s1 - s2) < 1e-12);

  // continuous q-Laguerre at generic C_sigma: Lambda = 4 C (sqrt q - 1)/k^2
  double Cs = 0.11;
  FamilySpec cql = fam("continuous-q-laguerre", q, {{"C_sigma", Cs}});
  double kq = k_q(QBase(q));
  double expect = 4.0 * Cs * (std::sqrt(q) - 1.0) / (kq * kq);
  const double lq = std::log(q);
  for (double th : {0.6, 1.7}) {
    cplx s(0.0, th / lq);
    CHECK(std::abs(condition_two(cql, Rational(1, 2), 1.0 / std::sqrt(q), s) -
                   expect) < 1e-11);
  }
}

TEST_CASE("search_factorization reproduces the solved table at q=0.5") {
  const double q = 0.5;
  SUBCASE("stieltjes-wigert: alpha=2, vs=q, Lambda=1") {
    auto rep = search(fam("stieltjes-wigert", q));
    REQUIRE(rep.status == FactorStatus::Solved);
    CHECK(*rep.alpha == Rational(2));
    CHECK(*rep.varsigma == doctest::Approx(q).epsilon(1e-8));
    CHECK(*rep.Lambda == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(*rep.gamma == Rational(1));
    CHECK(rep.cross_residual <= 1e-8);
  }
  SUBCASE("al-salam-carlitz-1: alpha=0, vs=q, Lambda=1") {
    auto rep = search(fam("al-salam-carlitz-1", q, {{"a", 0.5}}));
    REQUIRE(rep.status == FactorStatus::Solved);
    CHECK(*rep.alpha == Rational(0));
    CHECK(*rep.varsigma == doctest::Approx(q).epsilon(1e-8));
    CHECK(*rep.Lambda == doctest::Approx(1.0).epsilon(1e-8));
  }
  SUBCASE("continuous q-Hermite (A=1, C=k_q/4): vs=1/q, Lambda=1") {
    auto rep = search(fam("continuous-q-hermite", q));
    REQUIRE(rep.status == FactorStatus::Solved);
    CHECK(*rep.varsigma == doctest::Approx(1.0 / q).epsilon(1e-8));
    CHECK(*rep.Lambda == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(*rep.gamma == Rational(-1));
  }
  SUBCASE("continuous q-Laguerre: vs=q^{-1/2}, Lambda=1") {
    auto rep = search(fam("continuous-q-laguerre", q));
    REQUIRE(rep.status == FactorStatus::Solved);
    CHECK(*rep.varsigma ==
          doctest::Approx(1.0 / std::sqrt(q)).epsilon(1e-8));
    CHECK(*rep.Lambda == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(*rep.alpha == Rational(1, 2));
  }
  SUBCASE("commuting Askey-Wilson: vs=1, Lambda=0") {
    double rq = std::sqrt(q);
    auto rep = search(fam("askey-wilson", q,
                          {{"a", 0.8}, {"b", rq / 0.8}, {"c", 0.9},
                           {"d", rq / 0.9}}));
    REQUIRE(rep.status == FactorStatus::Commuting);
    CHECK(*rep.varsigma == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(*rep.Lambda) <= 1e-8);
  }
  SUBCASE("discrete q-Laguerre: generic fails cond 2, a=q^{-1/2} solves") {
    auto neg = search(fam("discrete-q-laguerre", q, {{"alpha", 1.0}}));
    CHECK(neg.status == FactorStatus::Condition2Fails);
    auto pos = search(fam("discrete-q-laguerre", q, {{"alpha", -0.5}}));
    REQUIRE(pos.status == FactorStatus::Solved);
    CHECK(*pos.alpha == Rational(1));
    CHECK(*pos.varsigma == doctest::Approx(std::sqrt(q)).epsilon(1e-8));
  }
  SUBCASE("q-Meixner generic: negative status") {
    auto rep = search(fam("q-meixner", q, {{"b", 0.5}, {"c", 1.0}}));
    CHECK(rep.status == FactorStatus::NoConstantVarsigma);
  }
  SUBCASE("Wall generic: negative status") {
    auto rep = search(fam("wall", q, {{"a", 0.3}}));
    CHECK(rep.status == FactorStatus::Condition2Fails);
  }
  SUBCASE("Wall at a = q^{-1/2}: solved with vs = q^{-1/2}") {
    auto rep = search(fam("wall", q, {{"a", 1.0 / std::sqrt(q)}}));
    REQUIRE(rep.status == FactorStatus::Solved);
    CHECK(*rep.varsigma == doctest::Approx(1.0 / std::sqrt(q)).epsilon(1e-8));
    CHECK(*rep.alpha == Rational(0));
  }
  SUBCASE("continuous dual q-Hahn (one zero root): negative status") {
    auto rep = search(fam("askey-wilson", q,
                          {{"a", 0.3}, {"b", 0.4}, {"c", 0.5}, {"d", 0.0}}));
    CHECK((rep.status == FactorStatus::NoConstantVarsigma ||
           rep.status == FactorStatus::Condition2Fails));
  }
}

TEST_CASE("Theorem 3: Solved families have q-(inverse-)linear spectra") {
  const double q = 0.5;
  const std::vector<std::pair<std::string, std::map<std::string, double>>>
      fams = {{"stieltjes-wigert", {}},
              {"al-salam-carlitz-1", {{"a", 0.5}}},
              {"al-salam-carlitz-2", {{"a", 0.5}}},
              {"discrete-q-hermite-2", {}},
              {"wall", {{"a", 0.3}}},
              {"wall", {{"a", 1.0 / std::sqrt(0.5)}}},
              {"discrete-q-laguerre", {{"alpha", 1.0}}},
              {"discrete-q-laguerre", {{"alpha", -0.5}}},
              {"q-meixner", {{"b", 0.5}, {"c", 1.0}}},
              {"q-charlier", {{"c", 1.0}}},
              {"askey-wilson", {{"a", 0.3}, {"b", 0.4}, {"c", 0.5}, {"d", 0.6}}},
              {"continuous-q-laguerre", {}},
              {"continuous-q-hermite", {}}};
  bool meixner_witness = false;
  for (const auto& [name, params] : fams) {
    FamilySpec f = fam(name, q, params);
    auto rep = search(f);
    QLinClass cls = q_linearity_class(f);
    INFO(name);
    if (rep.status == FactorStatus::Solved && std::abs(*rep.Lambda) > 1e-8)
      CHECK((cls == QLinClass::QLinear || cls == QLinClass::QInverseLinear));
    if (name == "q-meixner") {
      // q-linearity is necessary, not sufficient
      CHECK(cls == QLinClass::QLinear);
      CHECK(rep.status != FactorStatus::Solved);
      meixner_witness = true;
    }
  }
  CHECK(meixner_witness);
}

TEST_CASE("Appendix recurrence for Solved q-linear families with vs=q") {
  const double q = 0.5;
  for (const char* name : {"stieltjes-wigert", "al-salam-carlitz-1"}) {
    FamilySpec f = fam(name, q, {});
    SpectrumCoeffs sc(f.sigma_tilde_pp, f.tau_tilde_p, QBase(q));
    double C = ((1.0 - q) * sc.C3 - 1.0) / q;
    for (int n = 1; n <= 8; ++n) {
      double lhs = (f.lambda_n(n) - 1.0) / q;
      double rhs = f.lambda_n(n - 1) + C;
      INFO(name, " n=", n);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST_CASE("sigma commutator classification on catalog operators") {
  const double q = 0.5;
  // [a_down_2, a_up_2]_q = I for Stieltjes-Wigert
  FamilySpec sw = fam("stieltjes-wigert", q);
  ShiftExpr comm = sigma_commutator(alpha_down(sw, Rational(2)),
                                    alpha_up(sw, Rational(2)), q);
  auto grid = sw.default_grid();
  for (cplx s : {grid[0], grid[5]}) {
    CHECK(std::abs(comm.coefficient(Rational(0), s) - 1.0) < 1e-12);
    for (int k : {-4, -3, -2, -1, 1, 2, 3, 4})
      CHECK(std::abs(comm.coefficient(Rational(k), s)) < 1e-12);
  }
  ClassifyResult cl = classify_identity_multiple(comm, grid, 1e-10);
  CHECK(cl.verdict == IdentityVerdict::IdentityMultiple);
  CHECK(std::abs(*cl.Lambda - 1.0) < 1e-10);

  // continuous q-Hermite with C = k_q/4: [down, up]_{1/q} = I
  FamilySpec ch = fam("continuous-q-hermite", q);
  ShiftExpr chc = sigma_commutator(alpha_down(ch, Rational(1, 2)),
                                   alpha_up(ch, Rational(1, 2)), 1.0 / q);
  ClassifyResult cl2 = classify_identity_multiple(chc, ch.default_grid(), 1e-10);
  CHECK(cl2.verdict == IdentityVerdict::IdentityMultiple);
  CHECK(std::abs(*cl2.Lambda - 1.0) <= 1e-10);

  // commuting Askey-Wilson pair: plain commutator vanishes pointwise
  double rq = std::sqrt(q);
  FamilySpec awc = fam("askey-wilson", q,
                       {{"a", 0.8}, {"b", rq / 0.8}, {"c", 0.9},
                        {"d", rq / 0.9}});
  ShiftExpr awcm = sigma_commutator(alpha_down(awc, Rational(1, 2)),
                                    alpha_up(awc, Rational(1, 2)), 1.0);
  auto f = [&](cplx t) { return awc.phi(2, t); };
  for (cplx s : awc.default_grid(8))
    CHECK(std::abs(awcm.apply(f, s)) <= 1e-10);

  // q-Meixner: no constant multiple of the identity at generic parameters
  FamilySpec qm = fam("q-meixner", q, {{"b", 0.5}, {"c", 1.0}});
  ShiftExpr qmc = sigma_commutator(alpha_down(qm, Rational(2, 5)),
                                   alpha_up(qm, Rational(2, 5)), std::sqrt(q));
  ClassifyResult cl3 = classify_identity_multiple(qmc, qm.default_grid(), 1e-8);
  CHECK(cl3.verdict != IdentityVerdict::IdentityMultiple);
}

TEST_CASE("eigen-equation residual small for all catalog families") {
  const std::vector<std::pair<std::string, std::map<std::string, double>>>
      fams = {{"stieltjes-wigert", {}},
              {"al-salam-carlitz-1", {{"a", 0.5}}},
              {"wall", {{"a", 0.3}}},
              {"discrete-q-laguerre", {{"alpha", 1.0}}},
              {"q-meixner", {{"b", 0.5}, {"c", 1.0}}},
              {"askey-wilson", {{"a", 0.3}, {"b", 0.4}, {"c", 0.5}, {"d", 0.6}}},
              {"continuous-q-laguerre", {}},
              {"continuous-q-hermite", {}}};
  for (const auto& [name, params] : fams) {
    INFO(name);
    CHECK(eigen_residual(fam(name, 0.5, params), 6) <= 1e-8);
  }
}
