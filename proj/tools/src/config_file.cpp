#include "config_file.hpp"

#include <fstream>

#include "json.hpp"

namespace utfw::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigParseError(field + ": " + what);
}

double number_field(const json& obj, const std::string& field,
                    const std::string& where) {
  if (!obj.contains(field)) fail(where + field, "missing");
  const auto& v = obj.at(field);
  if (!v.is_number()) fail(where + field, "expected a number");
  return v.get<double>();
}

}  // namespace

MoleculeFile read_molecule_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParseError(path + ": cannot open file");

  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigParseError(path + ": " + e.what());
  }
  if (!root.is_object()) fail(path, "top level must be an object");

  for (const auto& [key, value] : root.items()) {
    if (key != "lambda" && key != "alpha" && key != "nuclei")
      fail(key, "unknown field");
  }

  MoleculeFile out;
  out.lambda = number_field(root, "lambda", "");
  if (!(out.lambda > 0.0)) fail("lambda", "must be > 0");
  if (root.contains("alpha")) {
    out.alpha = number_field(root, "alpha", "");
    if (!(out.alpha > 0.0)) fail("alpha", "must be > 0");
  }

  if (!root.contains("nuclei")) fail("nuclei", "missing");
  const auto& nuclei = root.at("nuclei");
  if (!nuclei.is_array() || nuclei.empty())
    fail("nuclei", "expected a non-empty array");

  for (std::size_t i = 0; i < nuclei.size(); ++i) {
    const std::string where = "nuclei[" + std::to_string(i) + "].";
    const auto& entry = nuclei.at(i);
    if (!entry.is_object()) fail("nuclei[" + std::to_string(i) + "]",
                                 "expected an object");
    for (const auto& [key, value] : entry.items()) {
      if (key != "z" && key != "position") fail(where + key, "unknown field");
    }
    Nucleus n;
    n.z = number_field(entry, "z", where);
    if (!(n.z >= 0.0)) fail(where + "z", "must be >= 0");
    if (!entry.contains("position")) fail(where + "position", "missing");
    const auto& pos = entry.at("position");
    if (!pos.is_array() || pos.size() != 3)
      fail(where + "position", "expected an array of 3 numbers");
    double xyz[3];
    for (std::size_t k = 0; k < 3; ++k) {
      if (!pos.at(k).is_number())
        fail(where + "position[" + std::to_string(k) + "]",
             "expected a number");
      xyz[k] = pos.at(k).get<double>();
    }
    n.position = {xyz[0], xyz[1], xyz[2]};
    out.config.nuclei.push_back(n);
  }

  try {
    out.config.validate();
  } catch (const std::domain_error& e) {
    throw ConfigParseError(std::string("nuclei: ") + e.what());
  }
  return out;
}

}  // namespace utfw::cli
