#include "report.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

namespace utfw::cli {

ordered_json to_json(const GridSpec& g) {
  ordered_json j;
  j["kind"] = g.kind;
  j["points"] = g.points;
  j["r_max"] = g.r_max;
  if (g.kind == "log") j["r_min_ratio"] = g.r_min_ratio;
  return j;
}

ordered_json to_json(const ModelParams& p) {
  ordered_json j;
  j["lambda"] = p.lambda;
  j["alpha"] = p.alpha;
  j["a"] = p.a;
  j["b"] = p.b;
  return j;
}

ordered_json to_json(const AtomicBounds& b) {
  ordered_json j;
  j["lower"] = b.lower;
  j["gap"] = b.gap;
  j["upper"] = b.upper;
  return j;
}

ordered_json to_json(const MolecularBound& m) {
  ordered_json j;
  j["rhs"] = m.rhs;
  j["x_root"] = m.x_root;
  j["z_max"] = m.z_max;
  j["b1"] = m.b1;
  j["b2"] = m.b2;
  return j;
}

ordered_json to_json(const PublishedComparison& c) {
  ordered_json j;
  j["lambda"] = c.lambda;
  j["z_max_computed"] = c.z_max_computed;
  j["quoted"] = c.quoted;
  j["difference"] = c.difference;
  j["flagged"] = c.flagged;
  return j;
}

const char* verdict_name(CertificateVerdict v) {
  switch (v) {
    case CertificateVerdict::Certified:
      return "certified";
    case CertificateVerdict::NotCertified:
      return "not-certified";
    case CertificateVerdict::ChargeExceedsModelRange:
      return "charge-exceeds-model-range";
  }
  return "unknown";
}

ordered_json to_json(const CertificateReport& r) {
  ordered_json j;
  j["route"] = r.route == CertificateRoute::Atomic ? "atomic" : "molecular";
  j["verdict"] = verdict_name(r.verdict);
  j["stable"] = r.stable;
  j["z_cert"] = r.z_cert;
  j["U"] = r.U;
  ordered_json d = ordered_json::array();
  for (double v : r.voronoi.half_distance) {
    if (std::isfinite(v))
      d.push_back(v);
    else
      d.push_back(nullptr);
  }
  j["D"] = d;
  j["b2"] = r.b2;
  j["b1"] = r.b1 ? ordered_json(*r.b1) : ordered_json(nullptr);
  j["z_condition_ok"] = r.z_condition_ok;
  j["M"] = r.M ? ordered_json(*r.M) : ordered_json(nullptr);
  j["per_cell_ball"] = r.per_cell_ball;
  j["per_cell_exterior"] = r.per_cell_exterior;
  j["lieb_yau_rhs"] = r.lieb_yau_rhs;
  j["energy_lower_bound"] = r.energy_lower_bound
                                ? ordered_json(*r.energy_lower_bound)
                                : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const TrialFamily& f) {
  ordered_json j;
  j["shape"] = f.shape == TrialShape::Exponential ? "exponential" : "power";
  j["A"] = f.A;
  j["s"] = f.s;
  if (f.shape == TrialShape::Power) j["p"] = f.p;
  return j;
}

ordered_json to_json(const SearchResult& r) {
  ordered_json j;
  j["verdict"] = r.verdict == SearchVerdict::NegativeFound ? "negative-found"
                                                           : "none-found";
  j["best_energy"] = r.best_energy;
  j["best"] = to_json(r.best);
  j["evaluations"] = r.evaluations;
  j["reconfirmed_energy"] = r.reconfirmed_energy;
  j["seed"] = r.seed;
  return j;
}

ordered_json make_report(const std::string& command, ordered_json inputs,
                         ordered_json outputs,
                         std::optional<std::uint64_t> seed,
                         std::optional<GridSpec> grid) {
  ordered_json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["outputs"] = std::move(outputs);
  ordered_json prov;
  prov["version"] = version();
  prov["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
  prov["grid"] = grid ? to_json(*grid) : ordered_json(nullptr);
  j["provenance"] = prov;
  return j;
}

bool emit_report(const ordered_json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << text;
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return false;
    }
  }
  return true;
}

}  // namespace utfw::cli
