#include <fstream>
#include <sstream>

#include <json.hpp>

#include "laml/errors.hpp"
#include "laml/experiment.hpp"

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

double get_number(const json& obj, const char* key, double fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) {
    throw ConfigError("field \"" + std::string(key) + "\" in " + where + " must be a number");
  }
  return obj[key].get<double>();
}

int get_int(const json& obj, const char* key, int fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_integer()) {
    throw ConfigError("field \"" + std::string(key) + "\" in " + where + " must be an integer");
  }
  return obj[key].get<int>();
}

Scheme parse_scheme(const std::string& name) {
  if (name == "LRI") return Scheme::RewardInaction;
  if (name == "LRP") return Scheme::RewardPenalty;
  if (name == "LREP") return Scheme::RewardEpsilonPenalty;
  throw ConfigError("learning.scheme must be one of LRI, LRP, LREP; got \"" + name + "\"");
}

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::RewardInaction:
      return "LRI";
    case Scheme::RewardPenalty:
      return "LRP";
    case Scheme::RewardEpsilonPenalty:
      return "LREP";
  }
  return "LRP";
}

LearningParams parse_learning(const json& obj) {
  reject_unknown_keys(obj, {"a", "b", "scheme"}, "learning");
  LearningParams params;
  if (obj.contains("scheme")) {
    if (!obj["scheme"].is_string()) throw ConfigError("learning.scheme must be a string");
    params.scheme = parse_scheme(obj["scheme"].get<std::string>());
  }
  params.reward_rate = get_number(obj, "a", params.reward_rate, "learning");
  // When b is omitted it follows the scheme: 0 for L_R-I, a for L_R-P, a/10
  // for L_R-epsP.
  double default_b = params.reward_rate;
  if (params.scheme == Scheme::RewardInaction) default_b = 0.0;
  if (params.scheme == Scheme::RewardEpsilonPenalty) default_b = params.reward_rate / 10.0;
  params.penalty_rate = get_number(obj, "b", default_b, "learning");
  return params;
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown_keys(doc,
                      {"area_side", "n_sensors", "n_targets", "sensing_range", "comm_radius",
                       "psi", "theta", "learning", "energy", "max_learning_iters_factor",
                       "reset_automata_each_round", "trials", "master_seed", "algorithm"},
                      "config");

  ExperimentConfig c;
  for (const char* required : {"n_sensors", "n_targets", "sensing_range"}) {
    if (!doc.contains(required)) {
      throw ConfigError("missing required field \"" + std::string(required) + "\" in config");
    }
  }

  c.area_side = get_number(doc, "area_side", c.area_side, "config");
  c.n_sensors = get_int(doc, "n_sensors", c.n_sensors, "config");
  c.n_targets = get_int(doc, "n_targets", c.n_targets, "config");
  c.sensing_range = get_number(doc, "sensing_range", c.sensing_range, "config");
  c.comm_radius = get_number(doc, "comm_radius", c.comm_radius, "config");
  c.psi = get_number(doc, "psi", c.psi, "config");
  c.theta = get_number(doc, "theta", c.theta, "config");

  if (doc.contains("learning")) {
    if (!doc["learning"].is_object()) throw ConfigError("\"learning\" must be an object");
    c.learning = parse_learning(doc["learning"]);
  }

  if (doc.contains("energy")) {
    const json& e = doc["energy"];
    if (!e.is_object()) throw ConfigError("\"energy\" must be an object");
    reject_unknown_keys(
        e, {"initial_battery", "sense_rate", "e_elec", "eps_amp", "packet_bits", "comm_scale"},
        "energy");
    c.energy.initial_battery = get_number(e, "initial_battery", c.energy.initial_battery, "energy");
    c.energy.sense_rate = get_number(e, "sense_rate", c.energy.sense_rate, "energy");
    c.energy.e_elec = get_number(e, "e_elec", c.energy.e_elec, "energy");
    c.energy.eps_amp = get_number(e, "eps_amp", c.energy.eps_amp, "energy");
    c.energy.packet_bits = get_int(e, "packet_bits", c.energy.packet_bits, "energy");
    c.energy.comm_scale = get_number(e, "comm_scale", c.energy.comm_scale, "energy");
  }

  c.max_learning_iters_factor =
      get_int(doc, "max_learning_iters_factor", c.max_learning_iters_factor, "config");
  if (doc.contains("reset_automata_each_round")) {
    if (!doc["reset_automata_each_round"].is_boolean()) {
      throw ConfigError("reset_automata_each_round must be a boolean");
    }
    c.reset_automata_each_round = doc["reset_automata_each_round"].get<bool>();
  }
  c.trials = get_int(doc, "trials", c.trials, "config");
  if (doc.contains("master_seed")) {
    if (!doc["master_seed"].is_number_integer()) {
      throw ConfigError("master_seed must be an integer");
    }
    c.master_seed = doc["master_seed"].get<std::uint64_t>();
  }
  if (doc.contains("algorithm")) {
    if (!doc["algorithm"].is_string()) throw ConfigError("algorithm must be a string");
    const std::string name = doc["algorithm"].get<std::string>();
    if (name == "LAML") {
      c.algorithm = Algorithm::Laml;
    } else if (name == "GREEDY_MSC") {
      c.algorithm = Algorithm::GreedyMsc;
    } else {
      throw ConfigError("algorithm must be LAML or GREEDY_MSC; got \"" + name + "\"");
    }
  }

  validate(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const ExperimentConfig& c) {
  json doc;
  doc["area_side"] = c.area_side;
  doc["n_sensors"] = c.n_sensors;
  doc["n_targets"] = c.n_targets;
  doc["sensing_range"] = c.sensing_range;
  doc["comm_radius"] = c.comm_radius;
  doc["psi"] = c.psi;
  doc["theta"] = c.theta;
  doc["learning"] = {{"a", c.learning.reward_rate},
                     {"b", c.learning.penalty_rate},
                     {"scheme", scheme_name(c.learning.scheme)}};
  doc["energy"] = {{"initial_battery", c.energy.initial_battery},
                   {"sense_rate", c.energy.sense_rate},
                   {"e_elec", c.energy.e_elec},
                   {"eps_amp", c.energy.eps_amp},
                   {"packet_bits", c.energy.packet_bits},
                   {"comm_scale", c.energy.comm_scale}};
  doc["max_learning_iters_factor"] = c.max_learning_iters_factor;
  doc["reset_automata_each_round"] = c.reset_automata_each_round;
  doc["trials"] = c.trials;
  doc["master_seed"] = c.master_seed;
  doc["algorithm"] = c.algorithm == Algorithm::Laml ? "LAML" : "GREEDY_MSC";
  return doc.dump(2);
}

}  // namespace laml
