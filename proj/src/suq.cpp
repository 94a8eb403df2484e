#include "qfactor/suq.hpp"

#include <cmath>

namespace qfactor {

Mat Mat::eye(int d) {
  Mat m(d);
  for (int i = 0; i < d; ++i)
    m.at(i, i) = 1.0;
  return m;
}

Mat Mat::diag(const std::vector<double>& entries) {
  Mat m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.dim; ++i)
    m.at(i, i) = entries[static_cast<std::size_t>(i)];
  return m;
}

Mat Mat::transpose() const {
  Mat m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m.at(i, j) = at(j, i);
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  Mat m(a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      double aik = a.at(i, k);
      if (aik == 0.0)
        continue;
      for (int j = 0; j < a.dim; ++j)
        m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat m = a;
  for (std::size_t i = 0; i < m.v.size(); ++i)
    m.v[i] += b.v[i];
  return m;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat m = a;
  for (std::size_t i = 0; i < m.v.size(); ++i)
    m.v[i] -= b.v[i];
  return m;
}

Mat Mat::scaled(double f) const {
  Mat m = *this;
  for (double& x : m.v)
    x *= f;
  return m;
}

double Mat::interior_max(int cut) const {
  double worst = 0.0;
  for (int i = 0; i < cut; ++i)
    for (int j = 0; j < cut; ++j)
      worst = std::max(worst, std::abs(at(i, j)));
  return worst;
}

namespace {

TruncatedRep build_from_base(double base, int dim) {
  if (dim < 4)
    throw std::invalid_argument("build_rep: dim must be >= 4");
  TruncatedRep r;
  r.dim = dim;
  r.base = base;
  const double b2 = base * base;
  auto lam = [b2](int n) {
    return (1.0 - std::pow(b2, n)) / (1.0 - b2);
  };
  r.a = Mat(dim);
  r.adag = Mat(dim);
  for (int n = 1; n < dim; ++n)
    r.a.at(n - 1, n) = std::sqrt(lam(n));
  r.adag = r.a.transpose();
  std::vector<double> nn(dim);
  for (int n = 0; n < dim; ++n)
    nn[static_cast<std::size_t>(n)] = n;
  r.N = Mat::diag(nn);
  std::vector<double> qmn2(dim);
  for (int n = 0; n < dim; ++n)
    qmn2[static_cast<std::size_t>(n)] = std::pow(base, -0.5 * n);
  Mat qN = Mat::diag(qmn2); // base^{-N/2}
  r.b = qN * r.a;
  r.bdag = r.adag * qN;
  std::vector<double> k0(dim);
  for (int n = 0; n < dim; ++n)
    k0[static_cast<std::size_t>(n)] = 0.5 * (n + 0.5);
  r.K0 = Mat::diag(k0);
  const double beta = 1.0 / (base + 1.0 / base);
  r.Kplus = (r.bdag * r.bdag).scaled(beta);
  r.Kminus = (r.b * r.b).scaled(beta);
  return r;
}

} // namespace

TruncatedRep build_rep(QBase q, int dim) { return build_from_base(q.value(), dim); }

TruncatedRep from_family(const FactorizationReport& rep, int dim) {
  if (rep.status == FactorStatus::Commuting)
    throw error("from_family: commuting pair (Lambda = 0) generates no "
                "su_q(1,1) algebra");
  if (rep.status != FactorStatus::Solved || !rep.varsigma || !rep.Lambda ||
      *rep.Lambda == 0.0)
    throw error("from_family: requires a Solved factorization with "
                "Lambda != 0");
  double vs = *rep.varsigma;
  TruncatedRep r;
  if (vs < 1.0) {
    r = build_from_base(std::sqrt(vs), dim);
  } else {
    // q^{-1}-linear side: lambda_n(q,-) = lambda_n(q^{-1},+)
    r = build_from_base(std::sqrt(1.0 / vs), dim);
    r.inverse_mapped = true;
    r.notes.push_back("varsigma > 1 mapped through q <-> 1/q");
  }
  r.notes.push_back("reported varsigma is interpreted as the squared "
                    "representation base (the q^2 role)");
  return r;
}

std::map<std::string, double> check_relations(const TruncatedRep& rep,
                                              double /*tol*/) {
  const int dim = rep.dim;
  if (dim < 4)
    throw std::invalid_argument("check_relations: dim must be >= 4");
  const int cut = dim - 2;
  const double base = rep.base;
  const double b2 = base * base;
  auto rel = [&](const Mat& lhs, const Mat& rhs) {
    double scale = std::max({1.0, lhs.interior_max(cut), rhs.interior_max(cut)});
    return (lhs - rhs).interior_max(cut) / scale;
  };
  std::map<std::string, double> out;

  // a adag - b^2 adag a = I
  out["a_adag_vs_commutator"] =
      rel(rep.a * rep.adag - (rep.adag * rep.a).scaled(b2), Mat::eye(dim));
  // [a, adag] = base^{2N}
  std::vector<double> q2n(dim);
  for (int n = 0; n < dim; ++n)
    q2n[static_cast<std::size_t>(n)] = std::pow(b2, n);
  out["plain_commutator_q2N"] =
      rel(rep.a * rep.adag - rep.adag * rep.a, Mat::diag(q2n));
  // N = log_{b^2}(I - (1-b^2) adag a) on the diagonal
  {
    Mat ada = rep.adag * rep.a;
    Mat logN(dim);
    for (int n = 0; n < dim; ++n)
      logN.at(n, n) =
          std::log(1.0 - (1.0 - b2) * ada.at(n, n)) / std::log(b2);
    out["number_operator_log"] = rel(logN, rep.N);
  }
  // [N, a] = -a, [N, adag] = adag
  out["N_a"] = rel(rep.N * rep.a - rep.a * rep.N, rep.a.scaled(-1.0));
  out["N_adag"] = rel(rep.N * rep.adag - rep.adag * rep.N, rep.adag);
  // b bdag - base bdag b = base^{-N}
  std::vector<double> qmn(dim);
  for (int n = 0; n < dim; ++n)
    qmn[static_cast<std::size_t>(n)] = std::pow(base, -n);
  out["b_bdag"] = rel(rep.b * rep.bdag - (rep.bdag * rep.b).scaled(base),
                      Mat::diag(qmn));
  // [K0, K+-] = +-K+-
  out["K0_Kplus"] =
      rel(rep.K0 * rep.Kplus - rep.Kplus * rep.K0, rep.Kplus);
  out["K0_Kminus"] =
      rel(rep.K0 * rep.Kminus - rep.Kminus * rep.K0, rep.Kminus.scaled(-1.0));
  // [K-, K+] = [2 K0]_{b^2} with [x]_Q = (Q^x - Q^-x)/(Q - Q^-1)
  {
    Mat rhs(dim);
    for (int n = 0; n < dim; ++n)
      rhs.at(n, n) = q_bracket(2.0 * rep.K0.at(n, n), b2);
    out["Kminus_Kplus"] =
        rel(rep.Kminus * rep.Kplus - rep.Kplus * rep.Kminus, rhs);
  }
  // spectrum realization: diag(adag a) = lambda_n
  {
    Mat ada = rep.adag * rep.a;
    Mat lamd(dim);
    for (int n = 0; n < dim; ++n)
      lamd.at(n, n) = (1.0 - std::pow(b2, n)) / (1.0 - b2);
    out["spectrum_diag"] = rel(ada, lamd);
  }
  return out;
}

} // namespace qfactor
