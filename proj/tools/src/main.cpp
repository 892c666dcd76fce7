#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "config_file.hpp"
#include "report.hpp"
#include "verify_suite.hpp"

#include "utfw/certificate.hpp"
#include "utfw/critical_charge.hpp"
#include "utfw/density_io.hpp"
#include "utfw/energy_terms.hpp"
#include "utfw/instability_search.hpp"
#include "utfw/model_params.hpp"

namespace {

using namespace utfw;
using cli::ordered_json;

// Exit statuses. "Negative" means the computation ran and reached a
// negative verdict (not certified, witness found, suite failure), which is
// distinct from the tool itself failing.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 2;
constexpr int kExitRange = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

// Accepts "0.2" and "1/9" style fractions.
bool parse_number(const std::string& text, double& out) {
  try {
    const auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      out = std::stod(text, &used);
      return used == text.size() && std::isfinite(out);
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const double p = std::stod(num, &used);
    if (used != num.size()) return false;
    const double q = std::stod(den, &used);
    if (used != den.size() || q == 0.0) return false;
    out = p / q;
    return std::isfinite(out);
  } catch (...) {
    return false;
  }
}

struct ParamFlags {
  std::string lambda_text;
  std::string alpha_text = "1/137";

  // nullopt plus a message on stderr when the flags do not parse
  std::optional<ModelParams> resolve() const {
    double lambda = 0.0, alpha = 0.0;
    if (!parse_number(lambda_text, lambda) || !(lambda > 0.0)) {
      std::cerr << "--lambda: expected a positive number or fraction\n";
      return std::nullopt;
    }
    if (!parse_number(alpha_text, alpha) || !(alpha > 0.0)) {
      std::cerr << "--alpha: expected a positive number or fraction\n";
      return std::nullopt;
    }
    return params_from_lambda(lambda, alpha);
  }
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags) {
  cmd->add_option("--lambda", flags.lambda_text,
                  "Weizsacker coefficient (number or fraction like 1/9)")
      ->required();
  cmd->add_option("--alpha", flags.alpha_text,
                  "fine structure constant (default 1/137)");
}

// The literature integers for the atomic lower bound at alpha = 1/137.
std::optional<int> atomic_quote(double lambda) {
  const struct {
    double lambda;
    int quoted;
  } rows[] = {{1.0 / 9.0, 56}, {0.2, 75}, {0.185, 73}};
  for (const auto& row : rows) {
    if (std::abs(lambda - row.lambda) <= 1e-9 * row.lambda) return row.quoted;
  }
  return std::nullopt;
}

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
  if (!f) {
    std::cerr << "cannot write " << path << "\n";
    return false;
  }
  return true;
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------- bounds

struct BoundsOpts {
  ParamFlags params;
  bool table = false;
  std::string csv_path;
  std::string out_path;
};

int run_bounds(const BoundsOpts& opt) {
  const auto params = opt.params.resolve();
  if (!params) return kExitUsage;

  ordered_json inputs;
  inputs["lambda"] = params->lambda;
  inputs["alpha"] = params->alpha;
  inputs["table"] = opt.table;

  const auto bounds = atomic_bounds(*params);
  ordered_json outputs;
  outputs["params"] = cli::to_json(*params);
  outputs["bounds"] = cli::to_json(bounds);

  struct Row {
    double lambda;
    AtomicBounds bounds;
    std::optional<int> quoted;
  };
  std::vector<Row> rows;
  if (opt.table) {
    for (double lam : {1.0 / 9.0, 0.2, 0.185}) {
      const auto p = params_from_lambda(lam, params->alpha);
      rows.push_back({lam, atomic_bounds(p), atomic_quote(lam)});
    }
    ordered_json table = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json r;
      r["lambda"] = row.lambda;
      r.update(cli::to_json(row.bounds));
      r["quoted"] = row.quoted ? ordered_json(*row.quoted) : nullptr;
      table.push_back(r);
    }
    outputs["table"] = table;
  } else {
    rows.push_back({params->lambda, bounds, atomic_quote(params->lambda)});
  }

  if (!opt.csv_path.empty()) {
    std::string csv = "lambda,lower,gap,upper,quoted\n";
    for (const auto& row : rows) {
      csv += csv_number(row.lambda) + "," + csv_number(row.bounds.lower) +
             "," + csv_number(row.bounds.gap) + "," +
             csv_number(row.bounds.upper) + "," +
             (row.quoted ? std::to_string(*row.quoted) : "") + "\n";
    }
    if (!write_text(opt.csv_path, csv)) return kExitUsage;
  }

  const auto report = cli::make_report("bounds", inputs, outputs);
  return cli::emit_report(report, opt.out_path) ? kExitOk : kExitUsage;
}

// ------------------------------------------------------- molecular-bound

struct MolecularOpts {
  ParamFlags params;
  bool table = false;
  std::string csv_path;
  std::string out_path;
};

ordered_json comparison_json(const std::optional<PublishedComparison>& c) {
  return c ? cli::to_json(*c) : ordered_json(nullptr);
}

int run_molecular(const MolecularOpts& opt) {
  const auto params = opt.params.resolve();
  if (!params) return kExitUsage;

  ordered_json inputs;
  inputs["lambda"] = params->lambda;
  inputs["alpha"] = params->alpha;
  inputs["table"] = opt.table;

  const auto bound = molecular_x_root(*params);
  ordered_json outputs;
  outputs["params"] = cli::to_json(*params);
  outputs["bound"] = cli::to_json(bound);
  outputs["comparison"] = comparison_json(published_molecular_quote(*params));

  std::vector<PublishedComparison> rows;
  if (opt.table) {
    rows = published_molecular_table(params->alpha);
    ordered_json table = ordered_json::array();
    for (const auto& row : rows) table.push_back(cli::to_json(row));
    outputs["table"] = table;
  } else if (const auto own = published_molecular_quote(*params)) {
    rows.push_back(*own);
  }

  if (!opt.csv_path.empty()) {
    std::string csv = "lambda,z_max_computed,quoted,difference,flagged\n";
    for (const auto& row : rows) {
      csv += csv_number(row.lambda) + "," + csv_number(row.z_max_computed) +
             "," + std::to_string(row.quoted) + "," +
             csv_number(row.difference) + "," +
             (row.flagged ? "true" : "false") + "\n";
    }
    if (!write_text(opt.csv_path, csv)) return kExitUsage;
  }

  const auto report = cli::make_report("molecular-bound", inputs, outputs);
  return cli::emit_report(report, opt.out_path) ? kExitOk : kExitUsage;
}

// --------------------------------------------------------------- certify

struct CertifyOpts {
  std::string config_path;
  std::string out_path;
};

int run_certify(const CertifyOpts& opt) {
  const auto file = cli::read_molecule_file(opt.config_path);
  const auto params = params_from_lambda(file.lambda, file.alpha);

  ordered_json inputs;
  inputs["config"] = opt.config_path;
  inputs["lambda"] = file.lambda;
  inputs["alpha"] = file.alpha;
  ordered_json nuclei = ordered_json::array();
  for (const auto& n : file.config.nuclei) {
    ordered_json entry;
    entry["z"] = n.z;
    entry["position"] = {n.position.x, n.position.y, n.position.z};
    nuclei.push_back(entry);
  }
  inputs["nuclei"] = nuclei;

  const auto report = certify(file.config, params);
  ordered_json outputs;
  outputs["params"] = cli::to_json(params);
  outputs["certificate"] = cli::to_json(report);

  const auto doc = cli::make_report("certify", inputs, outputs);
  if (!cli::emit_report(doc, opt.out_path)) return kExitUsage;
  switch (report.verdict) {
    case CertificateVerdict::Certified:
      return kExitOk;
    case CertificateVerdict::NotCertified:
      return kExitNegative;
    case CertificateVerdict::ChargeExceedsModelRange:
      return kExitRange;
  }
  return kExitUsage;
}

// ---------------------------------------------------------------- search

struct SearchOpts {
  ParamFlags params;
  double z = 0.0;
  SearchOptions search;
  std::string out_path;
};

int run_search(const SearchOpts& opt) {
  const auto params = opt.params.resolve();
  if (!params) return kExitUsage;

  ordered_json inputs;
  inputs["z"] = opt.z;
  inputs["lambda"] = params->lambda;
  inputs["alpha"] = params->alpha;
  inputs["budget"] = opt.search.budget;
  inputs["restarts"] = opt.search.restarts;
  inputs["seed"] = opt.search.seed;
  inputs["grid_points"] = opt.search.grid_points;
  inputs["r_max"] = opt.search.r_max;

  const auto result = search_negative(opt.z, *params, opt.search);
  ordered_json outputs;
  outputs["params"] = cli::to_json(*params);
  outputs["search"] = cli::to_json(result);

  cli::GridSpec grid{"log", opt.search.grid_points, opt.search.r_max,
                     kDefaultRMinRatio};
  const auto doc =
      cli::make_report("search", inputs, outputs, opt.search.seed, grid);
  if (!cli::emit_report(doc, opt.out_path)) return kExitUsage;
  return result.verdict == SearchVerdict::NegativeFound ? kExitNegative
                                                        : kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
  ParamFlags params;
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_verify(const VerifyOpts& opt) {
  const auto params = opt.params.resolve();
  if (!params) return kExitUsage;

  ordered_json inputs;
  inputs["lambda"] = params->lambda;
  inputs["alpha"] = params->alpha;
  inputs["seed"] = opt.seed;

  const auto suites = cli::run_verify_suites(*params, opt.seed);
  bool all_pass = true;
  ordered_json list = ordered_json::array();
  for (const auto& s : suites) {
    ordered_json j;
    j["name"] = s.name;
    j["pass"] = s.pass;
    j["worst"] = s.worst;
    j["detail"] = s.detail;
    list.push_back(j);
    all_pass = all_pass && s.pass;
  }
  ordered_json outputs;
  outputs["params"] = cli::to_json(*params);
  outputs["suites"] = list;
  outputs["all_pass"] = all_pass;

  const auto doc = cli::make_report("verify", inputs, outputs, opt.seed);
  if (!cli::emit_report(doc, opt.out_path)) return kExitUsage;
  return all_pass ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------- energy

struct EnergyOpts {
  ParamFlags params;
  std::string density_path;
  double z = 0.0;
  std::string out_path;
};

int run_energy(const EnergyOpts& opt) {
  const auto params = opt.params.resolve();
  if (!params) return kExitUsage;

  const auto rho = read_density_file(opt.density_path);

  ordered_json inputs;
  inputs["density"] = opt.density_path;
  inputs["z"] = opt.z;
  inputs["lambda"] = params->lambda;
  inputs["alpha"] = params->alpha;

  ordered_json terms;
  terms["weizsacker"] = weizsacker_term(rho, *params);
  terms["thomas_fermi"] = tf_term(rho, *params);
  terms["attraction"] = attraction_term_atomic(rho, opt.z, *params);
  terms["hartree"] = hartree_radial(rho, *params);
  ordered_json outputs;
  outputs["params"] = cli::to_json(*params);
  outputs["total_charge"] = rho.total_charge();
  outputs["terms"] = terms;
  outputs["xi"] = atomic_energy(rho, opt.z, *params);

  const auto& g = rho.grid;
  cli::GridSpec grid{g.kind() == GridKind::Linear ? "linear" : "log",
                     g.size(), g.r_max(), g.nodes().front() / g.r_max()};
  const auto doc =
      cli::make_report("energy", inputs, outputs, std::nullopt, grid);
  return cli::emit_report(doc, opt.out_path) ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stability bounds for ultrarelativistic Thomas-Fermi-"
               "Weizsacker atoms and molecules"};
  app.require_subcommand(1);

  BoundsOpts bounds_opts;
  auto* bounds_cmd =
      app.add_subcommand("bounds", "atomic critical-charge window");
  add_param_flags(bounds_cmd, bounds_opts.params);
  bounds_cmd->add_flag("--table", bounds_opts.table,
                       "include the canonical lambda table");
  bounds_cmd->add_option("--csv", bounds_opts.csv_path, "write a CSV table");
  bounds_cmd->add_option("--out", bounds_opts.out_path,
                         "also write the report to a file");

  MolecularOpts mol_opts;
  auto* mol_cmd = app.add_subcommand("molecular-bound",
                                     "per-nucleus molecular stability bound");
  add_param_flags(mol_cmd, mol_opts.params);
  mol_cmd->add_flag("--table", mol_opts.table,
                    "include the canonical lambda table");
  mol_cmd->add_option("--csv", mol_opts.csv_path, "write a CSV table");
  mol_cmd->add_option("--out", mol_opts.out_path,
                      "also write the report to a file");

  CertifyOpts certify_opts;
  auto* certify_cmd =
      app.add_subcommand("certify", "molecular stability certificate");
  certify_cmd
      ->add_option("config", certify_opts.config_path,
                   "molecule configuration file (JSON)")
      ->required();
  certify_cmd->add_option("--out", certify_opts.out_path,
                          "also write the report to a file");

  SearchOpts search_opts;
  auto* search_cmd = app.add_subcommand(
      "search", "look for a negative-energy trial density");
  search_cmd->add_option("--z", search_opts.z, "nuclear charge")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_param_flags(search_cmd, search_opts.params);
  search_cmd
      ->add_option("--budget", search_opts.search.budget,
                   "energy evaluations (default 5000)")
      ->check(CLI::Range(std::size_t{100}, std::size_t{100000000}));
  search_cmd
      ->add_option("--restarts", search_opts.search.restarts,
                   "optimizer restarts (default 20)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{10000}));
  search_cmd->add_option("--seed", search_opts.search.seed, "random seed");
  search_cmd
      ->add_option("--grid-points", search_opts.search.grid_points,
                   "radial nodes (default 2000)")
      ->check(CLI::Range(std::size_t{16}, std::size_t{10000000}));
  search_cmd->add_option("--rmax", search_opts.search.r_max,
                         "grid radius (default 100)")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--out", search_opts.out_path,
                         "also write the report to a file");

  VerifyOpts verify_opts;
  auto* verify_cmd = app.add_subcommand(
      "verify", "run the inequality and identity property suites");
  verify_opts.params.lambda_text = "1/5";
  verify_cmd->add_option("--lambda", verify_opts.params.lambda_text,
                         "Weizsacker coefficient (default 1/5)");
  verify_cmd->add_option("--alpha", verify_opts.params.alpha_text,
                         "fine structure constant (default 1/137)");
  verify_cmd->add_option("--seed", verify_opts.seed, "random seed");
  verify_cmd->add_option("--out", verify_opts.out_path,
                         "also write the report to a file");

  EnergyOpts energy_opts;
  auto* energy_cmd =
      app.add_subcommand("energy", "evaluate the energy of a density file");
  energy_cmd
      ->add_option("density", energy_opts.density_path,
                   "two-column radius/value file")
      ->required();
  energy_cmd->add_option("--z", energy_opts.z, "nuclear charge")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_param_flags(energy_cmd, energy_opts.params);
  energy_cmd->add_option("--out", energy_opts.out_path,
                         "also write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bounds_cmd->parsed()) return run_bounds(bounds_opts);
    if (mol_cmd->parsed()) return run_molecular(mol_opts);
    if (certify_cmd->parsed()) return run_certify(certify_opts);
    if (search_cmd->parsed()) return run_search(search_opts);
    if (verify_cmd->parsed()) return run_verify(verify_opts);
    if (energy_cmd->parsed()) return run_energy(energy_opts);
  } catch (const cli::ConfigParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitData;
  } catch (const DensityParseError& e) {
    std::cerr << "density error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return kExitUsage;
}
