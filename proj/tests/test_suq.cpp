#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfactor/suq.hpp"

#include <array>
#include <cmath>

using namespace qfactor;

namespace {

FactorizationReport solved(const std::string& name, double q,
                           std::map<std::string, double> params = {}) {
  FamilySpec f = make_family(name, params, QBase(q));
  return search_factorization(f, default_alpha_candidates(), f.default_grid(),
                              1e-8);
}

} // namespace

TEST_CASE("build_rep basics") {
  TruncatedRep r = build_rep(QBase(0.5), 8);
  // vacuum annihilation: a e_0 = 0 (column 0 empty)
  for (int i = 0; i < 8; ++i)
    CHECK(r.a.at(i, 0) == 0.0);
  // K0 diagonal entries (n + 1/2)/2, so 1/4 at n = 0
  CHECK(r.K0.at(0, 0) == doctest::Approx(0.25));
  // adag is the transpose of a
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(r.adag.at(i, j) == r.a.at(j, i));
  // plain commutator diagonal [a, adag] = q^{2n} on the interior
  Mat comm = r.a * r.adag - r.adag * r.a;
  for (int n = 0; n <= 5; ++n)
    CHECK(comm.at(n, n) == doctest::Approx(std::pow(0.5, 2 * n)).epsilon(1e-12));
  CHECK_THROWS_AS(build_rep(QBase(0.5), 3), std::invalid_argument);
}

TEST_CASE("check_relations interior residuals") {
  for (int dim : {6, 12, 24}) {
    TruncatedRep r = build_rep(QBase(0.5), dim);
    auto rels = check_relations(r);
    INFO("dim=", dim);
    for (const auto& [name, res] : rels) {
      INFO(name);
      CHECK(res <= 1e-10);
    }
  }
  // minimal case dim = 4: interior indices {0, 1}
  TruncatedRep r4 = build_rep(QBase(0.5), 4);
  for (const auto& [name, res] : check_relations(r4)) {
    INFO(name);
    CHECK(res <= 1e-10);
  }
}

TEST_CASE("dim=4 representation against an explicit 4x4 oracle") {
  const double b = 0.5, b2 = b * b;
  TruncatedRep r = build_rep(QBase(b), 4);
  auto lam = [&](int n) { return (1.0 - std::pow(b2, n)) / (1.0 - b2); };
  // hand-built matrices
  std::array<std::array<double, 4>, 4> a{}, ad{};
  for (int n = 1; n < 4; ++n) {
    a[n - 1][n] = std::sqrt(lam(n));
    ad[n][n - 1] = std::sqrt(lam(n));
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CHECK(r.a.at(i, j) == doctest::Approx(a[i][j]).epsilon(1e-14));
      CHECK(r.adag.at(i, j) == doctest::Approx(ad[i][j]).epsilon(1e-14));
    }
  // b bdag - q bdag b at n=0,1 equals q^{-n} (explicit arithmetic)
  auto bm = [&](int i, int j) { return std::pow(b, -0.5 * i) * a[i][j]; };
  auto bd = [&](int i, int j) { return ad[i][j] * std::pow(b, -0.5 * j); };
  for (int n = 0; n <= 1; ++n) {
    double bbd = 0.0, bdb = 0.0;
    for (int k = 0; k < 4; ++k) {
      bbd += bm(n, k) * bd(k, n);
      bdb += bd(n, k) * bm(k, n);
    }
    CHECK(bbd - b * bdb == doctest::Approx(std::pow(b, -n)).epsilon(1e-12));
  }
}

TEST_CASE("from_family: base = sqrt(varsigma)") {
  auto rep = solved("stieltjes-wigert", 0.25);
  REQUIRE(rep.status == FactorStatus::Solved);
  TruncatedRep r = from_family(rep, 12);
  CHECK(r.base == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_FALSE(r.inverse_mapped);
  for (const auto& [name, res] : check_relations(r))
    CHECK(res <= 1e-10);
}

TEST_CASE("from_family: q-inverse-linear families map through q <-> 1/q") {
  const double q = 0.5;
  auto rep = solved("wall", q, {{"a", 1.0 / std::sqrt(q)}});
  REQUIRE(rep.status == FactorStatus::Solved);
  REQUIRE(*rep.varsigma > 1.0);
  TruncatedRep r = from_family(rep, 12);
  CHECK(r.inverse_mapped);
  CHECK(r.base == doctest::Approx(std::sqrt(1.0 / *rep.varsigma)).epsilon(1e-9));
  for (const auto& [name, res] : check_relations(r))
    CHECK(res <= 1e-10);
}

TEST_CASE("from_family: commuting case has no algebra") {
  const double q = 0.5, rq = std::sqrt(0.5);
  auto rep = solved("askey-wilson", q,
                    {{"a", 0.8}, {"b", rq / 0.8}, {"c", 0.9}, {"d", rq / 0.9}});
  REQUIRE(rep.status == FactorStatus::Commuting);
  CHECK_THROWS_AS(from_family(rep, 12), error);
  auto neg = solved("q-meixner", q, {{"b", 0.5}, {"c", 1.0}});
  CHECK_THROWS_AS(from_family(neg, 12), error);
}

TEST_CASE("interior residuals are dim-independent") {
  double worst6 = 0.0, worst12 = 0.0, worst24 = 0.0;
  for (const auto& [k, v] : check_relations(build_rep(QBase(0.5), 6)))
    worst6 = std::max(worst6, v);
  for (const auto& [k, v] : check_relations(build_rep(QBase(0.5), 12)))
    worst12 = std::max(worst12, v);
  for (const auto& [k, v] : check_relations(build_rep(QBase(0.5), 24)))
    worst24 = std::max(worst24, v);
  CHECK(worst6 <= 1e-10);
  CHECK(worst12 <= 1e-10);
  CHECK(worst24 <= 1e-10);
}
