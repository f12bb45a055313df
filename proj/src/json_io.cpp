#include "lspec/json_io.hpp"

#include <json.hpp>

#include "lspec/errors.hpp"

namespace lspec {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<PathStep> steps_from(const json& array) {
  if (!array.is_array()) throw UsageError("path steps must be an array");
  std::vector<PathStep> steps;
  for (const auto& triple : array) {
    if (!triple.is_array() || triple.size() != 3)
      throw UsageError("each path step must be an [i, j, h] triple");
    steps.push_back({triple[0].get<int>(), triple[1].get<int>(), triple[2].get<int>()});
  }
  return steps;
}

}  // namespace

std::string tree_to_json(const LabelledPlaneTree& tree) {
  return json{{"children", tree.child_counts}, {"labels", tree.labels}}.dump();
}

LabelledPlaneTree tree_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("children") || !j.contains("labels"))
    throw UsageError("tree JSON needs \"children\" and \"labels\" arrays");
  try {
    return {j.at("children").get<std::vector<int>>(), j.at("labels").get<std::vector<int>>()};
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed tree JSON: ") + e.what());
  }
}

std::string path_to_json(const LambdaDyckPath& path) {
  json steps = json::array();
  for (const auto& s : path.steps) steps.push_back({s.i, s.j, s.h});
  if (path.steps.empty()) return json{{"steps", steps}, {"root_label", path.root_label}}.dump();
  return steps.dump();
}

LambdaDyckPath path_from_json(const std::string& text) {
  const json j = parse(text);
  try {
    if (j.is_array()) return {steps_from(j), 0};
    if (j.is_object() && j.contains("steps"))
      return {steps_from(j.at("steps")), j.value("root_label", 0)};
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed path JSON: ") + e.what());
  }
  throw UsageError("path JSON must be an array of [i, j, h] triples or {\"steps\", \"root_label\"}");
}

}  // namespace lspec
