#include "qfactor/orthogonality.hpp"

#include <cmath>

namespace qfactor {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1,1], computed once by Newton
// iteration on P_16.
struct GaussRule {
  std::vector<double> x, w;
  GaussRule() {
    const int n = 16;
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n / 2; ++i) {
      double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double p0 = 0, p1 = 0;
      for (int it = 0; it < 100; ++it) {
        p0 = 1.0;
        p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
        }
        double dp = n * (t * p0 - p1) / (t * t - 1.0);
        double dt = p0 / dp;
        t -= dt;
        if (std::abs(dt) < 1e-15)
          break;
      }
      p0 = 1.0;
      p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
      }
      double dp = n * (t * p0 - p1) / (t * t - 1.0);
      x[i] = -t;
      x[n - 1 - i] = t;
      w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
  }
};

const GaussRule& rule() {
  static const GaussRule r;
  return r;
}

cplx panels(const std::function<cplx(double)>& f, double lo, double hi,
            int npanels) {
  const GaussRule& r = rule();
  cplx acc = 0.0;
  double h = (hi - lo) / npanels;
  for (int p = 0; p < npanels; ++p) {
    double a = lo + p * h, mid = a + 0.5 * h;
    for (std::size_t i = 0; i < r.x.size(); ++i)
      acc += 0.5 * h * r.w[i] * f(mid + 0.5 * h * r.x[i]);
  }
  return acc;
}

} // namespace

cplx integrate(const std::function<cplx(double)>& f, double lo, double hi,
               double tol, int max_doublings) {
  int n = 4;
  cplx prev = panels(f, lo, hi, n);
  for (int d = 0; d < max_doublings; ++d) {
    n *= 2;
    cplx cur = panels(f, lo, hi, n);
    if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur)))
      return cur;
    prev = cur;
  }
  return prev;
}

namespace {

double discrete_entry(const FamilySpec& fam, int i, int j,
                      const QuadratureSpec& spec, int* terms, double* tail) {
  double acc = 0.0;
  double worst_tail = 0.0;
  int used = 0;
  auto sweep = [&](int dir) {
    int k = fam.support.a;
    if (dir < 0)
      k = fam.support.a - 1;
    int quiet = 0;
    double last = 0.0;
    for (int steps = 0; steps < spec.max_terms; ++steps) {
      cplx t = fam.phi(i, cplx(k)) * fam.phi(j, cplx(k));
      acc += t.real();
      ++used;
      double m = std::abs(t);
      if (m < 0.1 * spec.tol) {
        if (++quiet >= 3) {
          double r = (last > 0.0) ? std::min(0.9, m / last) : 0.5;
          worst_tail = std::max(worst_tail, m * r / (1.0 - r));
          return true;
        }
      } else {
        quiet = 0;
      }
      last = std::max(m, 1e-300);
      k += dir;
    }
    return false;
  };
  bool ok = sweep(+1);
  if (fam.support.bilateral)
    ok = sweep(-1) && ok;
  if (!ok)
    throw error("gram: discrete tail bound not reached within " +
                std::to_string(spec.max_terms) +
                " terms; increase the cutoff");
  *terms += used;
  *tail = std::max(*tail, worst_tail);
  return acc;
}

} // namespace

GramResult gram(const FamilySpec& fam, int n_max, QuadratureSpec spec) {
  if (n_max < 0)
    throw std::invalid_argument("gram: n_max must be >= 0");
  GramResult res;
  res.G.assign(n_max + 1, std::vector<double>(n_max + 1, 0.0));
  const QBase q = fam.lattice.q;

  for (int i = 0; i <= n_max; ++i) {
    for (int j = 0; j <= i; ++j) {
      double v = 0.0;
      if (fam.support.kind == Support::Kind::DiscreteSum) {
        v = discrete_entry(fam, i, j, spec, &res.terms_used, &res.tail_bound);
      } else if (fam.support.quad == Support::Quad::Theta) {
        // <Phi_i, Phi_j> over theta in (0, pi):
        //   A = 1:            integrand Phi_i Phi_j sin(theta)
        //   A = sqrt(nx1):    integrand Phi_i Phi_j / (i k_q)
        const double lq = std::log(q.value());
        auto f = [&](double th) -> cplx {
          cplx s(0.0, th / lq);
          cplx t = fam.phi(i, s) * fam.phi(j, s);
          if (fam.A == AType::One)
            return t * std::sin(th);
          return t / cplx(0.0, k_q(q));
        };
        v = integrate(f, 1e-8, M_PI - 1e-8, spec.tol).real();
      } else {
        // s-line integral (Stieltjes-Wigert); expand the window until the
        // integrand is negligible at both ends.
        auto f = [&](double s) -> cplx {
          return fam.phi(i, cplx(s)) * fam.phi(j, cplx(s));
        };
        double lo = -2.0, hi = 2.0;
        while (std::abs(f(lo)) > 1e-20 && lo > -80.0)
          lo -= 2.0;
        while (std::abs(f(hi)) > 1e-20 && hi < 120.0)
          hi += 2.0;
        v = integrate(f, lo, hi, spec.tol).real();
      }
      res.G[i][j] = res.G[j][i] = v;
      double target = (i == j) ? 1.0 : 0.0;
      res.max_err = std::max(res.max_err, std::abs(v - target));
    }
  }
  return res;
}

} // namespace qfactor
