#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qfactor/factor.hpp"
#include "qfactor/family.hpp"
#include "qfactor/family_file.hpp"
#include "qfactor/orthogonality.hpp"
#include "qfactor/report.hpp"
#include "qfactor/spectrum.hpp"
#include "qfactor/suq.hpp"

namespace py = pybind11;
using namespace qfactor;

namespace {

FamilySpec family_of(const std::string& name,
                     const std::map<std::string, double>& params, double q) {
  return make_family(name, params, QBase(q));
}

py::dict report_to_dict(const FactorizationReport& rep) {
  py::dict d;
  d["status"] = to_string(rep.status);
  if (rep.alpha)
    d["alpha"] = rep.alpha->to_double();
  if (rep.varsigma)
    d["varsigma"] = *rep.varsigma;
  if (rep.gamma)
    d["gamma"] = rep.gamma->to_double();
  if (rep.Lambda)
    d["Lambda"] = *rep.Lambda;
  d["residual_cond1"] = rep.residual_cond1;
  d["residual_cond2"] = rep.residual_cond2;
  d["cross_residual"] = rep.cross_residual;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "q-Hamiltonian factorization and su_q(1,1) audits for "
            "q-orthogonal polynomial families";

  m.def("k_q", [](double q) { return k_q(QBase(q)); }, py::arg("q"));
  m.def("q_number",
        [](double n, double q) { return q_number(n, QBase(q)); },
        py::arg("n"), py::arg("q"));
  m.def("qpoch",
        [](cplx a, double q, int n) { return qpoch(a, QBase(q), n); },
        py::arg("a"), py::arg("q"), py::arg("n"));
  m.def("qpoch_inf",
        [](cplx a, double q, double tol) {
          return qpoch_inf(a, QBase(q), tol);
        },
        py::arg("a"), py::arg("q"), py::arg("tol") = 1e-16);
  m.def("basic_hypergeometric",
        [](const std::vector<cplx>& nums, const std::vector<cplx>& dens,
           double q, cplx z) {
          return basic_hypergeometric(nums, dens, QBase(q), z);
        },
        py::arg("numerators"), py::arg("denominators"), py::arg("q"),
        py::arg("z"));
  m.def("lattice_x",
        [](double c1, double c2, double c3, double q, cplx s) {
          return Lattice(c1, c2, c3, QBase(q)).x(s);
        },
        py::arg("c1"), py::arg("c2"), py::arg("c3"), py::arg("q"),
        py::arg("s"));

  m.def("catalog_names", []() {
    std::vector<std::string> names;
    for (const CatalogEntry& e : catalog())
      names.push_back(e.name);
    return names;
  });

  m.def("family_sigma",
        [](const std::string& name, const std::map<std::string, double>& p,
           double q, cplx s) { return family_of(name, p, q).sigma(s); },
        py::arg("family"), py::arg("params"), py::arg("q"), py::arg("s"));
  m.def("family_phi",
        [](const std::string& name, const std::map<std::string, double>& p,
           double q, int n, cplx s) { return family_of(name, p, q).phi(n, s); },
        py::arg("family"), py::arg("params"), py::arg("q"), py::arg("n"),
        py::arg("s"));
  m.def("family_lambda",
        [](const std::string& name, const std::map<std::string, double>& p,
           double q, int n) { return family_of(name, p, q).lambda_n(n); },
        py::arg("family"), py::arg("params"), py::arg("q"), py::arg("n"));

  m.def("eigencheck_residual",
        [](const std::string& name, const std::map<std::string, double>& p,
           double q, int n_max) {
          FamilySpec fam = family_of(name, p, q);
          ShiftExpr H = hamiltonian(fam);
          double worst = 0.0;
          for (int n = 0; n <= n_max; ++n) {
            double err = 0.0, scale = 0.0;
            for (cplx s : fam.default_grid()) {
              cplx ph = fam.phi(n, s);
              err = std::max(err, std::abs(H.apply([&](cplx t) {
                return fam.phi(n, t);
              }, s) - fam.lambda_n(n) * ph));
              scale = std::max(scale, std::abs(ph));
            }
            worst = std::max(worst, err / scale);
          }
          return worst;
        },
        py::arg("family"), py::arg("params"), py::arg("q"),
        py::arg("n_max") = 6);

  m.def("factorize",
        [](const std::string& name, const std::map<std::string, double>& p,
           double q, double tol) {
          FamilySpec fam = family_of(name, p, q);
          auto rep = search_factorization(fam, default_alpha_candidates(),
                                          fam.default_grid(), tol);
          return report_to_dict(rep);
        },
        py::arg("family"), py::arg("params"), py::arg("q"),
        py::arg("tol") = 1e-8);

  m.def("gram_max_err",
        [](const std::string& name, const std::map<std::string, double>& p,
           double q, int n_max) {
          return gram(family_of(name, p, q), n_max).max_err;
        },
        py::arg("family"), py::arg("params"), py::arg("q"),
        py::arg("n_max") = 4);

  m.def("algebra_residuals",
        [](double q, int dim) {
          return check_relations(build_rep(QBase(q), dim));
        },
        py::arg("q"), py::arg("dim") = 12);

  m.def("report_json",
        [](const std::string& family, const std::map<std::string, double>& p,
           double q, double tol, int n_max) {
          RunConfig cfg;
          cfg.command = "report";
          cfg.family = family;
          cfg.params = p;
          cfg.q = q;
          cfg.tol = tol;
          cfg.n_max = n_max;
          return report_json(cfg);
        },
        py::arg("family"), py::arg("params"), py::arg("q"),
        py::arg("tol") = 1e-8, py::arg("n_max") = 8);

  m.def("load_family_check",
        [](const std::string& json_text, double q) {
          LoadedFamily lf = load_family(json_text, q);
          return lf.spec.name;
        },
        py::arg("json_text"), py::arg("q") = 0.0);

  m.attr("__version__") = "1.0.0";
}
