#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfactor/lattice.hpp"
#include "qfactor/qcore.hpp"

#include <cmath>
#include <random>

using namespace qfactor;

namespace {

// direct-formula oracle in extended precision
long double q_number_oracle(long double n, long double q) {
  return (std::pow(q, n / 2.0L) - std::pow(q, -n / 2.0L)) /
         (std::pow(q, 0.5L) - std::pow(q, -0.5L));
}

// brute-force partial products
cplx qpoch_oracle(cplx a, double q, int n) {
  cplx p = 1.0;
  for (int k = 0; k < n; ++k)
    p *= (1.0 - a * std::pow(q, k));
  return p;
}

// term-by-term series oracle (no ratio recursion)
cplx phi_oracle(const std::vector<cplx>& nums, const std::vector<cplx>& dens,
                double q, cplx z, int kmax) {
  const int e = 1 + static_cast<int>(dens.size()) - static_cast<int>(nums.size());
  cplx total = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    cplx t = 1.0;
    for (cplx a : nums)
      t *= qpoch_oracle(a, q, k);
    t /= qpoch_oracle(q, q, k);
    for (cplx b : dens)
      t /= qpoch_oracle(b, q, k);
    t *= std::pow(z, k);
    if (e != 0)
      t *= std::pow(std::pow(cplx(-1.0), k) *
                        std::pow(cplx(q), 0.5 * k * (k - 1)),
                    e);
    total += t;
  }
  return total;
}

} // namespace

TEST_CASE("QBase validation") {
  CHECK_THROWS_AS(QBase(0.0), std::invalid_argument);
  CHECK_THROWS_AS(QBase(-0.3), std::invalid_argument);
  CHECK_THROWS_AS(QBase(1.0), std::invalid_argument);
  CHECK(QBase(2.0).greater_than_one());
  CHECK_FALSE(QBase(0.5).greater_than_one());
}

TEST_CASE("q_number basic values") {
  for (double q : {0.3, 0.5, 0.8, 2.5}) {
    CHECK(q_number(1.0, QBase(q)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(q_number(2.0, QBase(q)) ==
          doctest::Approx(std::sqrt(q) + 1.0 / std::sqrt(q)).epsilon(1e-14));
  }
  // extended-precision oracle
  CHECK(q_number(3.0, QBase(0.5)) ==
        doctest::Approx(static_cast<double>(q_number_oracle(3.0L, 0.5L)))
            .epsilon(1e-14));
  // relation to the (Q^x - Q^-x)/(Q - Q^-1) bracket
  CHECK(q_bracket(3.0, std::sqrt(0.5)) ==
        doctest::Approx(q_number(3.0, QBase(0.5))).epsilon(1e-13));
}

TEST_CASE("k_q convention") {
  CHECK(k_q(QBase(0.25)) == doctest::Approx(-1.5).epsilon(1e-15));
  // series-expansion oracle near q = 1: k_q ~ (q-1)/sqrt(q) ~ -eps
  double eps = 1e-8;
  CHECK(std::abs(k_q(QBase(1.0 - eps)) + eps) < 1e-14);
  // k_q^2 + (2 - q - 1/q) = 0 exactly up to rounding
  for (double q : {0.3, 0.5, 0.8}) {
    double kq = k_q(QBase(q));
    CHECK(std::abs(kq * kq + (2.0 - q - 1.0 / q)) < 1e-14);
  }
}

TEST_CASE("qpoch finite products") {
  QBase q(0.5);
  CHECK(qpoch(0.3, q, 0) == cplx(1.0));
  CHECK(qpoch(0.3, q, 3).real() ==
        doctest::Approx(0.7 * 0.85 * 0.925).epsilon(1e-15));
  CHECK(qpoch(0.3, q, 3).real() == doctest::Approx(0.550375).epsilon(1e-15));
  CHECK_THROWS_AS(qpoch(0.3, q, -1), std::invalid_argument);
}

TEST_CASE("qpoch_inf against brute-force partial products") {
  QBase q(0.5);
  cplx brute = 1.0;
  for (int k = 0; k < 200; ++k)
    brute *= (1.0 - std::pow(0.5, k + 1)); // (q;q)_inf
  double tail = 0.0;
  cplx v = qpoch_inf(cplx(0.5), q, 1e-16, &tail);
  CHECK(std::abs(v - brute) < 1e-15);
  CHECK(tail < 1e-14);
  CHECK_THROWS_AS(qpoch_inf(0.5, QBase(1.5)), error);
}

TEST_CASE("qpoch splitting identity (a;q)_{n+m} = (a;q)_n (a q^n;q)_m") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    double q = 0.2 + 0.6 * std::abs(U(rng));
    cplx a(U(rng), U(rng));
    int n = trial % 6, m = (trial * 7) % 5;
    cplx lhs = qpoch(a, QBase(q), n + m);
    cplx rhs = qpoch(a, QBase(q), n) * qpoch(a * std::pow(q, n), QBase(q), m);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("basic_hypergeometric termination and values") {
  QBase q(0.5);
  // a numerator parameter equal to 1 = q^0 terminates at the first term
  CHECK(basic_hypergeometric({1.0, 0.3}, {0.7}, q, 2.0) == cplx(1.0));
  // 2phi1(q^-2, q^-1; bq | q; -q^3/c) at b=0.5, c=1: 3-term sum oracle
  cplx v = basic_hypergeometric({0.25, 2.0}, {0.25}, q, -0.125);
  cplx o = phi_oracle({0.25, 2.0}, {0.25}, 0.5, -0.125, 2);
  CHECK(std::abs(v - o) < 1e-14);
  // terminating series equals its explicit finite sum for degrees <= 12
  for (int n = 1; n <= 12; ++n) {
    cplx a = std::pow(0.5, -n);
    cplx s1 = basic_hypergeometric({a, 0.4}, {0.3}, q, 0.9);
    cplx s2 = phi_oracle({a, 0.4}, {0.3}, 0.5, 0.9, n);
    CHECK(std::abs(s1 - s2) <= 1e-12 * (1.0 + std::abs(s1)));
  }
  // 2phi0 series (negative correction exponent), degree 3
  cplx t1 = basic_hypergeometric({std::pow(0.5, -3), 0.7}, {}, q, 0.2);
  cplx t2 = phi_oracle({std::pow(0.5, -3), 0.7}, {}, 0.5, 0.2, 3);
  CHECK(std::abs(t1 - t2) <= 1e-12 * (1.0 + std::abs(t1)));
  // non-terminating convergent 1phi1 against the term oracle
  cplx c1 = basic_hypergeometric({0.3}, {0.2}, q, 0.4);
  cplx c2 = phi_oracle({0.3}, {0.2}, 0.5, 0.4, 60);
  CHECK(std::abs(c1 - c2) <= 1e-12 * (1.0 + std::abs(c1)));
}

TEST_CASE("basic_hypergeometric error paths") {
  QBase q(0.5);
  // denominator hits q^{-m} before the series terminates -> pole
  CHECK_THROWS_AS(basic_hypergeometric({0.3}, {std::pow(0.5, -2)}, q, 0.4),
                  error);
  // non-terminating and non-converging
  CHECK_THROWS_AS(basic_hypergeometric({0.3}, {}, QBase(0.5), 3.0, 50), error);
}

TEST_CASE("lattice evaluation and difference identities") {
  QBase q(0.5);
  Lattice up = Lattice::q_linear_up(q);
  CHECK(up.x(2.0).real() == doctest::Approx(0.25).epsilon(1e-15));

  // x(s) = (q^s + q^-s)/2 = cos(theta) at s = i theta / ln q
  Lattice aw = Lattice::q_quadratic(q, 0.5, 0.5);
  double th = 1.1;
  cplx s(0.0, th / std::log(0.5));
  CHECK(std::abs(aw.x(s) - std::cos(th)) < 1e-14);
  CHECK(aw.mu() == doctest::Approx(0.0));

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> U(0.1, 6.0);
  for (const Lattice& lat :
       {up, Lattice::q_linear_down(q, 1.0, 0.3), aw,
        Lattice::q_quadratic(QBase(0.3), 0.7, 0.2, 0.1)}) {
    for (int i = 0; i < 50; ++i) {
      cplx s0 = lat.quadratic() ? cplx(0.0, U(rng) / (2.0 * std::log(0.5)))
                                : cplx(U(rng), 0.0);
      // x(s+1) - x(s) = dx(s);  nabla x1(s) = dx(s - 1/2)
      CHECK(std::abs(lat.x(s0 + 1.0) - lat.x(s0) - lat.dx(s0)) <=
            1e-12 * (1.0 + std::abs(lat.dx(s0))));
      CHECK(std::abs(lat.nx1(s0) - lat.dx(s0 - 0.5)) <=
            1e-12 * (1.0 + std::abs(lat.nx1(s0))));
      // x_k(s) = x(s + k/2)
      CHECK(std::abs(lat.xk(Rational(3), s0) - lat.x(s0 + 1.5)) == 0.0);
      // branch-coherent roots square back to the difference quotients
      CHECK(std::abs(lat.sqrt_dx(s0) * lat.sqrt_dx(s0) - lat.dx(s0)) <=
            1e-12 * (1.0 + std::abs(lat.dx(s0))));
      CHECK(std::abs(lat.sqrt_nx1(s0) * lat.sqrt_nx1(s0) - lat.nx1(s0)) <=
            1e-12 * (1.0 + std::abs(lat.nx1(s0))));
      CHECK(std::abs(lat.sqrt_nx(s0) - lat.sqrt_dx(s0 - 1.0)) == 0.0);
    }
  }
  CHECK_THROWS_AS(Lattice(0.0, 0.0, 1.0, q), std::invalid_argument);
  CHECK_THROWS_AS(up.mu(), error);
}

TEST_CASE("rational arithmetic for shifts") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1) - Rational(5, 6)) == Rational(1, 6));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}
