#pragma once

#include "qfactor/family.hpp"
#include "qfactor/shift_expr.hpp"

#include <optional>

namespace qfactor {

// The q-Hamiltonian as a three-term shift expression (shifts -1, 0, +1),
// built from the family's scaled sigma data and A-conjugation.
ShiftExpr hamiltonian(const FamilySpec& fam);

// The alpha-family of lowering/raising operators; shifts {1-alpha, -alpha}
// and {alpha-1, alpha} respectively.
ShiftExpr alpha_down(const FamilySpec& fam, Rational alpha);
ShiftExpr alpha_up(const FamilySpec& fam, Rational alpha);

// Max over the grid and over shifts of |coeff(up∘down) - coeff(H)|;
// grid points hitting coefficient poles are skipped.
double verify_factorization(const FamilySpec& fam, Rational alpha,
                            const std::vector<cplx>& grid, double tol);

// Left side of the first/second factorizability condition.
cplx condition_one(const FamilySpec& fam, Rational alpha, cplx s);
cplx condition_two(const FamilySpec& fam, Rational alpha, cplx varsigma,
                   cplx s);

enum class FactorStatus {
  Solved,
  NoConstantVarsigma,
  Condition2Fails,
  Commuting,
};

std::string to_string(FactorStatus s);

struct FactorizationReport {
  std::string family;
  std::map<std::string, double> params;
  double q = 0.0;
  FactorStatus status = FactorStatus::NoConstantVarsigma;
  std::optional<Rational> alpha;
  std::optional<double> varsigma;
  std::optional<Rational> gamma; // varsigma = q^gamma when recognized
  std::optional<double> Lambda;
  double residual_cond1 = 0.0;
  double residual_cond2 = 0.0;
  double cross_residual = 0.0; // |Lambda - Lambda'| from the commutator
  std::vector<cplx> excluded_points;
  std::vector<std::string> notes;
};

std::vector<Rational> default_alpha_candidates(); // {k/6 : k = -12..18}

// Scans alpha candidates: constancy of condition one fixes varsigma,
// constancy of condition two fixes Lambda; a Solved/Commuting result is
// cross-validated through the sigma-commutator classifier.
FactorizationReport search_factorization(const FamilySpec& fam,
                                         const std::vector<Rational>& alphas,
                                         const std::vector<cplx>& grid,
                                         double tol);

struct LadderResult {
  cplx coeff_down;       // D_n from fitting a_down Phi_n ~ D_n Phi_{n-1}
  cplx coeff_up_prev;    // U_{n-1} from fitting a_up Phi_{n-1} ~ U Phi_n
  double residual_down = 0.0;
  double residual_up = 0.0;
  double relation_residual = 0.0; // |D_n U_{n-1} - lambda_n| and the
                                  // |lambda_1 + vs lambda_n - lambda_{n+1}|
  bool is_ladder = false;
};

// Requires a Solved factorization at this alpha (vs is its varsigma).
LadderResult ladder_check(const FamilySpec& fam, Rational alpha, double vs,
                          int n, const std::vector<cplx>& grid, double tol);

struct ParamLadderResult {
  cplx c_down, c_up;
  double predicted_down = 0.0, predicted_up = 0.0;
  double residual = 0.0; // worst of both fits and coefficient errors
};

// Parameter-shifting ladders (wall, discrete-q-laguerre, q-meixner,
// q-charlier): fits the designated operators against the parameter-shifted
// eigenfunctions and compares with the predicted coefficients.
ParamLadderResult param_ladder_check(const std::string& family,
                                     const std::map<std::string, double>& params,
                                     QBase q, int n,
                                     const std::vector<cplx>& grid,
                                     double tol);

// Norm recurrence d_n(a) = (1-a) q^{n/2} / sqrt(a(1-q^{n+1})) d_{n+1}(a/q)
// for the wall family; returns the relative defect.
double wall_dn_recurrence_residual(double a, QBase q, int n);

enum class ShiftKind { Forward, Backward };

// Pointwise residual of the polynomial-level forward/backward shift
// identity (wall, discrete-q-laguerre, q-meixner, q-charlier).
double shift_operator_check(const FamilySpec& fam, ShiftKind kind, int n,
                            const std::vector<cplx>& grid, double tol);

struct AdjointnessResult {
  double lhs = 0.0, rhs = 0.0, gap = 0.0;
};

// <a_down_alpha Phi_{n+1}, Phi_k> versus <Phi_{n+1}, a_up_alpha Phi_k> in
// the discrete inner product; alpha = 0 is the mutually adjoint case.
AdjointnessResult adjointness_check(const FamilySpec& fam, int n, int k,
                                    Rational alpha = Rational(0),
                                    double tol = 1e-12);

} // namespace qfactor
