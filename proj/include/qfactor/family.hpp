#pragma once

#include "qfactor/lattice.hpp"
#include "qfactor/qcore.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qfactor {

enum class FamilyId {
  StieltjesWigert,
  AlSalamCarlitz1,
  AlSalamCarlitz2,
  DiscreteQHermite2,
  Wall,
  DiscreteQLaguerre,
  QMeixner,
  QCharlier,
  AskeyWilson,
  ContinuousQLaguerre,
  ContinuousQHermite,
  ContinuousQHermiteSqrtW,
  Custom,
};

enum class AType { SqrtNablaX1, One };

struct Support {
  enum class Kind { DiscreteSum, ContinuousInterval } kind =
      Kind::DiscreteSum;
  // DiscreteSum: sum over integer s >= a (bilateral extends to -inf too).
  int a = 0;
  bool bilateral = false;
  // ContinuousInterval: orthogonality interval in x.
  double x_lo = 0.0, x_hi = 0.0;
  // Integration strategy: theta-substitution (q-quadratic) or s-line.
  enum class Quad { None, Theta, SLine } quad = Quad::None;
};

// One q-polynomial family: the difference-equation data sigma/sigma_plus on
// its lattice, the normalized eigenfunction ingredients (phiA, P_n, d_n),
// the eigenvalues, and the branch-coherent square roots used by the
// factorization operators.
//
// `sigma` and `sigma_plus` carry the normalization the source displays use;
// `ham_scale` rescales them so that the generic Hamiltonian construction
// reproduces those displays together with `lambda_n` exactly.
struct FamilySpec {
  FamilyId id = FamilyId::Custom;
  std::string name;
  Lattice lattice;
  AType A = AType::SqrtNablaX1;
  std::map<std::string, double> params;

  coef_fn sigma;
  coef_fn sigma_plus;
  cplx ham_scale = 1.0;
  coef_fn sqrt_sigma_h;      // sqrt(ham_scale * sigma), coherent branch
  coef_fn sqrt_sigma_plus_h; // sqrt(ham_scale * sigma_plus), aligned branch

  coef_fn phiA; // A(s) sqrt(rho(s)) in the family's normalization
  std::function<cplx(int, cplx)> Pn;
  std::function<double(int)> d_n;
  std::function<double(int)> lambda_n;

  // Taylor data of the scaled sigma-tilde/tau-tilde (for eq-(3)-level checks).
  double sigma_tilde_pp = 0.0;
  double tau_tilde_p = 0.0;

  Support support;
  std::vector<std::string> notes;

  explicit FamilySpec(Lattice lat) : lattice(lat) {}

  cplx sigma_h(cplx s) const { return ham_scale * sigma(s); }
  cplx sigma_plus_h(cplx s) const { return ham_scale * sigma_plus(s); }

  // tau(s) = (sigma_plus(s) - sigma(s)) / nabla x1(s)
  cplx tau(cplx s) const {
    return (sigma_plus(s) - sigma(s)) / lattice.nx1(s);
  }

  // Normalized eigenfunction Phi_n(s) = phiA(s) P_n(s) / d_n.
  cplx phi(int n, cplx s) const;

  // Pearson weight, derived from phiA so there is one source of truth:
  // rho = phiA^2 / nabla x1 for A = sqrt(nabla x1), rho = phiA^2 for A = 1.
  cplx rho(cplx s) const;

  // sigma(s+1) rho(s+1) - sigma_plus(s) rho(s)
  cplx pearson_residual(cplx s) const;

  // Default evaluation grid: real s avoiding integers on q-linear lattices,
  // s = i*theta/ln q with theta in (0.1, pi-0.1) on q-quadratic ones.
  std::vector<cplx> default_grid(std::size_t count = 24) const;

  bool quadratic() const { return lattice.quadratic(); }
};

struct ParamInfo {
  std::string name;
  double def;
  std::string range; // human-readable admissible range
};

struct CatalogEntry {
  std::string name;
  FamilyId id;
  std::vector<ParamInfo> params;
  std::string summary;
};

const std::vector<CatalogEntry>& catalog();

// Builds a catalog family; unknown names and out-of-range parameters throw
// std::invalid_argument.  Omitted parameters take their defaults.
FamilySpec make_family(const std::string& name,
                       const std::map<std::string, double>& params, QBase q);

// Aligns the branch of sqrt_sigma_plus_h with the weight root via the
// Pearson equation (the factored principal roots are only fixed up to a
// global sign).  Called by make_family and the family-file loader.
void align_sqrt_branch(FamilySpec& fam);

} // namespace qfactor
