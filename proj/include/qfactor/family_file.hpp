#pragma once

#include "qfactor/family.hpp"

#include <memory>

namespace qfactor {

// Evaluable arithmetic expression over the variables s, n, q, the family
// parameters, and the functions qpoch(a, n|inf), sqrt, exp, sin, cos.
class Expr {
public:
  struct Env {
    cplx s = 0.0;
    double n = 0.0;
    double q = 0.5;
    const std::map<std::string, double>* params = nullptr;
  };
  virtual ~Expr() = default;
  virtual cplx eval(const Env& env) const = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

// Parses the minimal grammar (+, -, *, /, ^, parentheses, numbers,
// identifiers, function calls); throws std::invalid_argument on bad input.
ExprPtr parse_expression(const std::string& text);

struct LoadedFamily {
  FamilySpec spec;
  std::string document; // normalized re-serialization of the source
};

// Loads a family-definition document (JSON text with expression strings).
// The Pearson invariant is checked at probe points on load; documents whose
// rho is inconsistent with sigma/sigma_plus are rejected with the maximal
// residual in the error message.  q_override, when nonzero, replaces the
// document's base.
LoadedFamily load_family(const std::string& json_text, double q_override = 0.0,
                         double pearson_tol = 1e-8);

LoadedFamily load_family_file(const std::string& path,
                              double q_override = 0.0,
                              double pearson_tol = 1e-8);

} // namespace qfactor
