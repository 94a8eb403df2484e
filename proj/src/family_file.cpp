#include "qfactor/family_file.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qfactor {

namespace {

using nlohmann::ordered_json;

// ---- expression AST -------------------------------------------------------

struct NumExpr : Expr {
  double v;
  explicit NumExpr(double x) : v(x) {}
  cplx eval(const Env&) const override { return v; }
};

struct VarExpr : Expr {
  std::string name;
  explicit VarExpr(std::string n) : name(std::move(n)) {}
  cplx eval(const Env& env) const override {
    if (name == "s")
      return env.s;
    if (name == "n")
      return env.n;
    if (name == "q")
      return env.q;
    if (name == "pi")
      return M_PI;
    if (env.params) {
      auto it = env.params->find(name);
      if (it != env.params->end())
        return it->second;
    }
    throw std::invalid_argument("expression: unknown identifier '" + name +
                                "'");
  }
};

struct BinExpr : Expr {
  char op;
  ExprPtr a, b;
  BinExpr(char o, ExprPtr x, ExprPtr y)
      : op(o), a(std::move(x)), b(std::move(y)) {}
  cplx eval(const Env& env) const override {
    cplx x = a->eval(env), y = b->eval(env);
    switch (op) {
    case '+':
      return x + y;
    case '-':
      return x - y;
    case '*':
      return x * y;
    case '/':
      return x / y;
    case '^':
      return std::pow(x, y);
    }
    throw std::invalid_argument("expression: bad operator");
  }
};

struct NegExpr : Expr {
  ExprPtr a;
  explicit NegExpr(ExprPtr x) : a(std::move(x)) {}
  cplx eval(const Env& env) const override { return -a->eval(env); }
};

struct CallExpr : Expr {
  std::string fn;
  std::vector<ExprPtr> args;
  bool inf_arg = false; // qpoch(a, inf)
  cplx eval(const Env& env) const override {
    QBase q(env.q);
    if (fn == "qpoch") {
      cplx a = args[0]->eval(env);
      if (inf_arg)
        return qpoch_inf(a, q);
      cplx nv = args[1]->eval(env);
      double nr = nv.real();
      long ni = std::lround(nr);
      if (std::abs(nv.imag()) < 1e-12 && std::abs(nr - ni) < 1e-12 && ni >= 0)
        return qpoch(a, q, static_cast<int>(ni));
      return qpoch_s(a, q, nv);
    }
    cplx x = args[0]->eval(env);
    if (fn == "sqrt")
      return std::sqrt(x);
    if (fn == "exp")
      return std::exp(x);
    if (fn == "sin")
      return std::sin(x);
    if (fn == "cos")
      return std::cos(x);
    throw std::invalid_argument("expression: unknown function '" + fn + "'");
  }
};

// ---- tokenizer / recursive-descent parser ---------------------------------

struct Parser {
  std::string text;
  std::size_t pos = 0;

  explicit Parser(std::string t) : text(std::move(t)) {}

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("expression parse error at position " +
                                std::to_string(pos) + ": " + msg + " in '" +
                                text + "'");
  }

  ExprPtr parse() {
    ExprPtr e = sum();
    skip();
    if (pos != text.size())
      fail("trailing input");
    return e;
  }

  ExprPtr sum() {
    ExprPtr e = product();
    for (;;) {
      if (eat('+'))
        e = std::make_shared<BinExpr>('+', e, product());
      else if (eat('-'))
        e = std::make_shared<BinExpr>('-', e, product());
      else
        return e;
    }
  }

  ExprPtr product() {
    ExprPtr e = unary();
    for (;;) {
      if (eat('*'))
        e = std::make_shared<BinExpr>('*', e, unary());
      else if (eat('/'))
        e = std::make_shared<BinExpr>('/', e, unary());
      else
        return e;
    }
  }

  ExprPtr unary() {
    if (eat('-'))
      return std::make_shared<NegExpr>(unary());
    if (eat('+'))
      return unary();
    return power();
  }

  ExprPtr power() {
    ExprPtr e = atom();
    if (eat('^'))
      return std::make_shared<BinExpr>('^', e, unary()); // right assoc
    return e;
  }

  ExprPtr atom() {
    skip();
    if (pos >= text.size())
      fail("unexpected end");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      ExprPtr e = sum();
      if (!eat(')'))
        fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t len = 0;
      double v = std::stod(text.substr(pos), &len);
      pos += len;
      return std::make_shared<NumExpr>(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      skip();
      if (pos < text.size() && text[pos] == '(') {
        ++pos;
        auto call = std::make_shared<CallExpr>();
        call->fn = name;
        for (;;) {
          skip();
          // allow the literal `inf` as the second qpoch argument
          if (text.compare(pos, 3, "inf") == 0 && name == "qpoch" &&
              !call->args.empty()) {
            call->inf_arg = true;
            pos += 3;
          } else {
            call->args.push_back(sum());
          }
          if (eat(','))
            continue;
          if (eat(')'))
            break;
          fail("expected ',' or ')' in call");
        }
        std::size_t expect = (name == "qpoch") ? 2 : 1;
        std::size_t got = call->args.size() + (call->inf_arg ? 1 : 0);
        if (got != expect)
          fail("function '" + name + "' expects " + std::to_string(expect) +
               " argument(s)");
        return call;
      }
      return std::make_shared<VarExpr>(name);
    }
    fail("unexpected character");
  }
};

coef_fn bind_s(ExprPtr e, double q,
               std::shared_ptr<const std::map<std::string, double>> params) {
  return [e, q, params](cplx s) {
    Expr::Env env;
    env.s = s;
    env.q = q;
    env.params = params.get();
    return e->eval(env);
  };
}

} // namespace

ExprPtr parse_expression(const std::string& text) {
  Parser p(text);
  return p.parse();
}

LoadedFamily load_family(const std::string& json_text, double q_override,
                         double pearson_tol) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("family document: bad JSON: ") +
                                e.what());
  }
  for (const char* key :
       {"name", "lattice", "sigma", "sigma_plus", "rho", "d_n", "P_n",
        "lambda_n", "support"})
    if (!doc.contains(key))
      throw std::invalid_argument(
          std::string("family document: missing field '") + key + "'");

  double qv = q_override != 0.0 ? q_override : doc.value("q", 0.5);
  QBase q(qv);
  auto params = std::make_shared<std::map<std::string, double>>();
  if (doc.contains("params"))
    for (auto& [k, v] : doc["params"].items())
      (*params)[k] = v.get<double>();

  const auto& lat = doc["lattice"];
  Lattice lattice(lat.value("c1", 0.0), lat.value("c2", 0.0),
                  lat.value("c3", 0.0), q);
  FamilySpec f(lattice);
  f.id = FamilyId::Custom;
  f.name = doc["name"].get<std::string>();
  f.params = *params;
  if (doc.value("A", "sqrt_nabla_x1") == std::string("one"))
    f.A = AType::One;

  auto expr_field = [&](const char* key) {
    return bind_s(parse_expression(doc[key].get<std::string>()), qv, params);
  };
  f.sigma = expr_field("sigma");
  f.sigma_plus = expr_field("sigma_plus");
  {
    cplx hs = 1.0;
    if (doc.contains("ham_scale")) {
      Expr::Env env;
      env.q = qv;
      env.params = params.get();
      hs = parse_expression(doc["ham_scale"].get<std::string>())->eval(env);
    }
    f.ham_scale = hs;
  }
  coef_fn rho = expr_field("rho");

  coef_fn sg = f.sigma, sgp = f.sigma_plus;
  cplx hs = f.ham_scale;
  f.sqrt_sigma_h = [sg, hs](cplx s) { return std::sqrt(hs * sg(s)); };
  f.sqrt_sigma_plus_h = [sgp, hs](cplx s) { return std::sqrt(hs * sgp(s)); };

  Lattice lt = f.lattice;
  AType At = f.A;
  if (doc.contains("phiA")) {
    f.phiA = expr_field("phiA");
  } else {
    f.phiA = [rho, lt, At](cplx s) {
      cplx r = rho(s);
      cplx w = (At == AType::SqrtNablaX1) ? r * lt.nx1(s) : r;
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        return cplx(0.0);
      return std::sqrt(w);
    };
  }

  // P_n descriptor
  {
    const auto& pn = doc["P_n"];
    std::vector<ExprPtr> nums, dens;
    for (const auto& t : pn.value("numerators", std::vector<std::string>{}))
      nums.push_back(parse_expression(t));
    for (const auto& t : pn.value("denominators", std::vector<std::string>{}))
      dens.push_back(parse_expression(t));
    ExprPtr arg = parse_expression(pn["argument"].get<std::string>());
    ExprPtr pref = pn.contains("prefactor")
                       ? parse_expression(pn["prefactor"].get<std::string>())
                       : nullptr;
    f.Pn = [nums, dens, arg, pref, qv, params](int n, cplx s) {
      Expr::Env env;
      env.s = s;
      env.n = n;
      env.q = qv;
      env.params = params.get();
      std::vector<cplx> nv, dv;
      for (const auto& e : nums)
        nv.push_back(e->eval(env));
      for (const auto& e : dens)
        dv.push_back(e->eval(env));
      cplx v = basic_hypergeometric(nv, dv, QBase(qv), arg->eval(env));
      if (pref)
        v *= pref->eval(env);
      return v;
    };
  }
  {
    ExprPtr dn = parse_expression(doc["d_n"].get<std::string>());
    f.d_n = [dn, qv, params](int n) {
      Expr::Env env;
      env.n = n;
      env.q = qv;
      env.params = params.get();
      return dn->eval(env).real();
    };
    ExprPtr ln = parse_expression(doc["lambda_n"].get<std::string>());
    f.lambda_n = [ln, qv, params](int n) {
      Expr::Env env;
      env.n = n;
      env.q = qv;
      env.params = params.get();
      return ln->eval(env).real();
    };
  }
  {
    const auto& sup = doc["support"];
    std::string kind = sup.value("kind", "discrete");
    if (kind == "discrete") {
      f.support.kind = Support::Kind::DiscreteSum;
      f.support.a = sup.value("start", 0);
      f.support.bilateral = sup.value("bilateral", false);
    } else {
      f.support.kind = Support::Kind::ContinuousInterval;
      f.support.x_lo = sup.value("x_lo", -1.0);
      f.support.x_hi = sup.value("x_hi", 1.0);
      f.support.quad = f.lattice.quadratic() ? Support::Quad::Theta
                                             : Support::Quad::SLine;
    }
  }

  // Taylor data: from explicit fields, else the Delta^(2) extraction on
  // q-linear lattices.
  if (doc.contains("sigma_tilde_pp")) {
    f.sigma_tilde_pp = doc["sigma_tilde_pp"].get<double>();
    f.tau_tilde_p = doc.value("tau_tilde_p", 0.0);
  } else if (!f.quadratic()) {
    auto d2 = [&](const coef_fn& g, double s0) {
      auto inner = [&](cplx t) {
        return (g(t + 1.0) - g(t)) / (lt.x(t + 1.0) - lt.x(t));
      };
      return ((inner(cplx(s0) + 1.0) - inner(cplx(s0))) /
              (lt.x(cplx(s0) + 1.5) - lt.x(cplx(s0) + 0.5)))
          .real();
    };
    coef_fn sh = [sg, hs](cplx s) { return hs * sg(s); };
    coef_fn sph = [sgp, hs](cplx s) { return hs * sgp(s); };
    double a2 = d2(sh, 0.45), b2 = d2(sph, 0.45);
    double two_q = q_number(2.0, q), kq = k_q(q);
    f.sigma_tilde_pp = (a2 + b2) / two_q;
    f.tau_tilde_p = (f.lattice.kind == LatticeKind::QLinearUp)
                        ? (b2 - a2) / (two_q * kq)
                        : (a2 - b2) / (two_q * kq);
  }

  align_sqrt_branch(f);

  // Pearson gate: the document's rho must solve the Pearson equation.
  {
    double worst = 0.0;
    for (cplx s : f.default_grid(8)) {
      cplx lhs = f.sigma(s + 1.0) * rho(s + 1.0);
      cplx rhs = f.sigma_plus(s) * rho(s);
      double scale = std::max(1.0, std::abs(rhs));
      worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    if (worst > pearson_tol) {
      std::ostringstream os;
      os << "family document rejected: rho does not satisfy the Pearson "
            "equation (max relative residual "
         << worst << ")";
      throw error(os.str());
    }
  }

  LoadedFamily out{std::move(f), doc.dump(2)};
  return out;
}

LoadedFamily load_family_file(const std::string& path, double q_override,
                              double pearson_tol) {
  std::ifstream in(path);
  if (!in)
    throw error("load_family_file: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_family(ss.str(), q_override, pearson_tol);
}

} // namespace qfactor
