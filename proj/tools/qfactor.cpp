#include "qfactor/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace {

std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> out;
  if (text.empty())
    return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--params expects name=value pairs, got '" +
                                 item + "'");
    out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"qfactor: factorization and dynamical-algebra checks for "
               "q-orthogonal polynomial families"};
  app.require_subcommand(1);

  qfactor::RunConfig cfg;
  if (const char* env_tol = std::getenv("QFACTOR_TOL"))
    cfg.tol = std::atof(env_tol);

  std::string params_text;
  double alpha_val = 0.0;
  bool alpha_set = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "catalog family name");
    sub->add_option("--params", params_text,
                    "comma-separated name=value family parameters");
    sub->add_option("--q", cfg.q, "base q (0<q, q!=1)");
    sub->add_option("--tol", cfg.tol, "check tolerance")
        ->capture_default_str();
    sub->add_option("--n-max", cfg.n_max, "max degree")->capture_default_str();
    sub->add_option("--dim", cfg.dim, "truncated representation dimension")
        ->capture_default_str();
    sub->add_option("--grid", cfg.grid_points, "grid point count")
        ->capture_default_str();
    sub->add_option("--format", cfg.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--family-file", cfg.family_file,
                    "family-definition document (JSON)");
    sub->add_option("--seed", cfg.seed, "seed for sampled checks")
        ->capture_default_str();
    sub->add_flag("--param-shift", cfg.param_shift,
                  "ladder: use the parameter-shifting operator pair");
    sub->add_option("--alpha", alpha_val, "ladder: explicit alpha")
        ->each([&](const std::string&) { alpha_set = true; });
  };

  for (const char* name :
       {"list", "info", "spectrum", "pearson", "eigencheck", "factorize",
        "ladder", "shiftops", "gram", "algebra", "report"})
    add_common(app.add_subcommand(name));

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.params = parse_params(params_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (alpha_set)
    cfg.alpha = alpha_val;
  cfg.command = app.get_subcommands().front()->get_name();
  if (!(cfg.tol > 0.0)) {
    std::cerr << "error: tol must be positive\n";
    return 2;
  }
  if (cfg.n_max < 1) {
    std::cerr << "error: n-max must be >= 1\n";
    return 2;
  }
  return qfactor::run(cfg, std::cout, std::cerr);
}
