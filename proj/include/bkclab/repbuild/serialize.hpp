#pragma once

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "bkclab/repbuild/modular.hpp"

namespace bkclab::repbuild {

inline constexpr const char* kModuleSchema = "bkclab-module/1";

inline nlohmann::ordered_json matrix_to_json(const MatrixFp& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string line;
    for (std::size_t j = 0; j < m.cols(); ++j) line += (j ? " " : "") + std::to_string(m(i, j));
    rows.push_back(line);
  }
  return {{"rows", std::to_string(m.rows())}, {"cols", std::to_string(m.cols())}, {"data", rows}};
}

inline MatrixFp matrix_from_json(const nlohmann::ordered_json& j, std::uint64_t p) {
  const auto rows = std::stoull(j.at("rows").get<std::string>());
  const auto cols = std::stoull(j.at("cols").get<std::string>());
  MatrixFp m(p, rows, cols);
  const auto& data = j.at("data");
  if (data.size() != rows) throw InvalidArgument("matrix row count mismatch in JSON");
  for (std::size_t i = 0; i < rows; ++i) {
    std::istringstream in(data[i].get<std::string>());
    for (std::size_t c = 0; c < cols; ++c) {
      std::uint64_t v;
      if (!(in >> v)) throw InvalidArgument("short matrix row in JSON");
      m.set(i, c, v);
    }
  }
  return m;
}

inline nlohmann::ordered_json module_to_json(const ModularModule& m) {
  nlohmann::ordered_json j;
  j["schema"] = kModuleSchema;
  j["p"] = std::to_string(m.p);
  j["provenance"] = m.provenance;
  j["highest_weight"] = m.highest_weight ? nlohmann::ordered_json(*m.highest_weight) : nlohmann::ordered_json();
  j["weights"] = m.weights;
  for (const char* key : {"raise", "lower"}) {
    const auto& fam = std::string(key) == "raise" ? m.raise : m.lower;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& per_root : fam) {
      nlohmann::ordered_json powers = nlohmann::ordered_json::array();
      for (const auto& x : per_root) powers.push_back(matrix_to_json(x));
      arr.push_back(powers);
    }
    j[key] = arr;
  }
  return j;
}

inline ModularModule module_from_json(const nlohmann::ordered_json& j) {
  if (j.at("schema").get<std::string>() != kModuleSchema) throw InvalidArgument("unknown module schema");
  ModularModule m;
  m.p = std::stoull(j.at("p").get<std::string>());
  m.provenance = j.at("provenance").get<std::string>();
  if (!j.at("highest_weight").is_null()) m.highest_weight = j.at("highest_weight").get<Weight>();
  m.weights = j.at("weights").get<std::vector<Weight>>();
  for (const char* key : {"raise", "lower"}) {
    auto& fam = std::string(key) == "raise" ? m.raise : m.lower;
    for (const auto& powers : j.at(key)) {
      std::vector<MatrixFp> per_root;
      for (const auto& x : powers) per_root.push_back(matrix_from_json(x, m.p));
      fam.push_back(std::move(per_root));
    }
  }
  return m;
}

}  // namespace bkclab::repbuild
