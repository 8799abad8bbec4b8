#include <fstream>
#include <sstream>

#include <json.hpp>

#include "laml/deployment.hpp"
#include "laml/errors.hpp"

namespace laml {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) throw ConfigError("unknown field \"" + key + "\" in " + where);
  }
}

double require_number(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError("missing field \"" + std::string(key) + "\" in " + where);
  if (!obj[key].is_number()) {
    throw ConfigError("field \"" + std::string(key) + "\" in " + where + " must be a number");
  }
  return obj[key].get<double>();
}

}  // namespace

Deployment parse_scenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("scenario must be a JSON object");
  reject_unknown_keys(doc, {"area_side", "comm_radius", "sensors", "targets"}, "scenario");

  const double area_side = require_number(doc, "area_side", "scenario");
  const double comm_radius = require_number(doc, "comm_radius", "scenario");

  std::vector<SensorSpec> sensors;
  if (!doc.contains("sensors") || !doc["sensors"].is_array()) {
    throw ConfigError("scenario requires a \"sensors\" array");
  }
  for (const auto& s : doc["sensors"]) {
    if (!s.is_object()) throw ConfigError("sensor entries must be objects");
    reject_unknown_keys(s, {"id", "x", "y", "range"}, "sensor entry");
    SensorSpec spec;
    spec.id = static_cast<int>(require_number(s, "id", "sensor entry"));
    spec.pos = {require_number(s, "x", "sensor entry"), require_number(s, "y", "sensor entry")};
    spec.sensing_range = require_number(s, "range", "sensor entry");
    sensors.push_back(spec);
  }

  std::vector<TargetSpec> targets;
  if (!doc.contains("targets") || !doc["targets"].is_array()) {
    throw ConfigError("scenario requires a \"targets\" array");
  }
  for (const auto& t : doc["targets"]) {
    if (!t.is_object()) throw ConfigError("target entries must be objects");
    reject_unknown_keys(t, {"id", "x", "y"}, "target entry");
    TargetSpec spec;
    spec.id = static_cast<int>(require_number(t, "id", "target entry"));
    spec.pos = {require_number(t, "x", "target entry"), require_number(t, "y", "target entry")};
    targets.push_back(spec);
  }

  return make_deployment(area_side, std::move(sensors), std::move(targets), comm_radius);
}

Deployment load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string scenario_to_json(const Deployment& d) {
  json doc;
  doc["area_side"] = d.area_side;
  doc["comm_radius"] = d.comm_radius;
  doc["sensors"] = json::array();
  for (const auto& s : d.sensors) {
    doc["sensors"].push_back(
        {{"id", s.id}, {"x", s.pos.x}, {"y", s.pos.y}, {"range", s.sensing_range}});
  }
  doc["targets"] = json::array();
  for (const auto& t : d.targets) {
    doc["targets"].push_back({{"id", t.id}, {"x", t.pos.x}, {"y", t.pos.y}});
  }
  return doc.dump(2);
}

}  // namespace laml
