#pragma once

#include <stdexcept>
#include <string>

#include "utfw/model_params.hpp"
#include "utfw/molecule.hpp"

// Molecule configuration files:
//
//   {
//     "lambda": 0.2,
//     "alpha": 0.0072992700729927,   // optional, defaults to 1/137
//     "nuclei": [
//       {"z": 50, "position": [0, 0, 0]},
//       {"z": 50, "position": [1, 0, 0]}
//     ]
//   }
//
// Parse errors name the offending field.

namespace utfw::cli {

struct ConfigParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MoleculeFile {
  double lambda = 0.0;
  double alpha = kDefaultAlpha;
  MoleculeConfig config;
};

MoleculeFile read_molecule_file(const std::string& path);

}  // namespace utfw::cli
