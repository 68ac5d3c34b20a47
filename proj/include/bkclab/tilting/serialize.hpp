#pragma once

#include "bkclab/repbuild/serialize.hpp"
#include "bkclab/tilting/tilting.hpp"

namespace bkclab::tilting {

inline constexpr const char* kTiltingSchema = "bkclab-tilting/1";

inline nlohmann::ordered_json tilting_to_json(const TiltingModule& t) {
  nlohmann::ordered_json j;
  j["schema"] = kTiltingSchema;
  j["label"] = t.label;
  j["route"] = t.route;
  j["lambda"] = t.lambda;
  j["factors"] = t.factors;
  j["steps"] = t.steps;
  j["module"] = repbuild::module_to_json(t.module);
  if (t.route == "tensor-split") {
    j["inclusion"] = repbuild::matrix_to_json(t.inclusion);
    j["projection"] = repbuild::matrix_to_json(t.projection);
  }
  return j;
}

inline TiltingModule tilting_from_json(const nlohmann::ordered_json& j) {
  if (j.at("schema").get<std::string>() != kTiltingSchema) throw InvalidArgument("unknown tilting schema");
  TiltingModule t;
  t.label = j.at("label").get<std::string>();
  t.route = j.at("route").get<std::string>();
  t.lambda = j.at("lambda").get<Weight>();
  t.factors = j.at("factors").get<std::vector<Weight>>();
  t.steps = j.at("steps").get<std::vector<std::string>>();
  t.module = repbuild::module_from_json(j.at("module"));
  if (t.route == "tensor-split") {
    t.inclusion = repbuild::matrix_from_json(j.at("inclusion"), t.module.p);
    t.projection = repbuild::matrix_from_json(j.at("projection"), t.module.p);
  }
  return t;
}

}  // namespace bkclab::tilting
