#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "utfw/certificate.hpp"
#include "utfw/critical_charge.hpp"
#include "utfw/instability_search.hpp"
#include "utfw/model_params.hpp"

// Run reports: every subcommand prints one JSON document
//
//   { "command": ..., "inputs": ..., "outputs": ...,
//     "provenance": {"version", "seed", "grid"} }
//
// to stdout (and to --out when given). Serialization is deterministic, so
// identical inputs and seed produce byte-identical reports.

namespace utfw::cli {

using ordered_json = nlohmann::ordered_json;

struct GridSpec {
  std::string kind = "log";
  std::size_t points = 0;
  double r_max = 0.0;
  double r_min_ratio = 0.0;  // log grids only
};

ordered_json to_json(const GridSpec& g);
ordered_json to_json(const ModelParams& p);
ordered_json to_json(const AtomicBounds& b);
ordered_json to_json(const MolecularBound& m);
ordered_json to_json(const PublishedComparison& c);
ordered_json to_json(const CertificateReport& r);
ordered_json to_json(const TrialFamily& f);
ordered_json to_json(const SearchResult& r);

const char* verdict_name(CertificateVerdict v);

ordered_json make_report(const std::string& command, ordered_json inputs,
                         ordered_json outputs,
                         std::optional<std::uint64_t> seed = std::nullopt,
                         std::optional<GridSpec> grid = std::nullopt);

// Print to stdout and optionally write the same bytes to out_path.
// Returns false (after reporting to stderr) if the file cannot be written.
bool emit_report(const ordered_json& report, const std::string& out_path);

}  // namespace utfw::cli
