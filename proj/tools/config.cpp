#include "config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "redesign/catalog.hpp"
#include "redesign/serialize.hpp"

namespace redesign::cli {
namespace {

using nlohmann::json;

void require_keys(const json& node, const std::string& prefix,
                  std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : node.items()) {
    bool known = false;
    for (const char* candidate : allowed)
      if (key == candidate) known = true;
    if (!known)
      throw ConfigError(prefix.empty() ? key : prefix + "." + key, "unknown key");
  }
}

double require_number(const json& node, const std::string& field) {
  if (!node.is_number()) throw ConfigError(field, "expected a number");
  return node.get<double>();
}

std::int64_t require_integer(const json& node, const std::string& field) {
  if (!node.is_number_integer()) throw ConfigError(field, "expected an integer");
  return node.get<std::int64_t>();
}

bool require_bool(const json& node, const std::string& field) {
  if (!node.is_boolean()) throw ConfigError(field, "expected a boolean");
  return node.get<bool>();
}

std::string require_string(const json& node, const std::string& field) {
  if (!node.is_string()) throw ConfigError(field, "expected a string");
  return node.get<std::string>();
}

struct ResolvedGame {
  std::string label;
  NormalFormGame game;
  std::optional<GamePreset> preset;
};

ResolvedGame parse_game(const json& node) {
  if (node.is_string()) {
    try {
      GamePreset preset = preset_by_id(node.get<std::string>());
      return ResolvedGame{preset.id, preset.game, std::move(preset)};
    } catch (const std::invalid_argument& e) {
      throw ConfigError("game", e.what());
    }
  }
  if (!node.is_object())
    throw ConfigError("game", "expected a preset id or a game object");

  if (node.contains("preset")) {
    require_keys(node, "game", {"preset", "players"});
    const std::string id = require_string(node["preset"], "game.preset");
    try {
      if (node.contains("players")) {
        if (id != "vd")
          throw ConfigError("game.players", "only the vd preset is sized by players");
        GamePreset preset = make_vd(static_cast<int>(
            require_integer(node["players"], "game.players")));
        return ResolvedGame{preset.id, preset.game, std::move(preset)};
      }
      GamePreset preset = preset_by_id(id);
      return ResolvedGame{preset.id, preset.game, std::move(preset)};
    } catch (const std::invalid_argument& e) {
      throw ConfigError("game.preset", e.what());
    }
  }

  try {
    NormalFormGame game = game_from_json(node.dump());
    return ResolvedGame{"custom", std::move(game), std::nullopt};
  } catch (const std::invalid_argument& e) {
    throw ConfigError("game", e.what());
  }
}

DesignKind parse_kind(const json& node) {
  const std::string kind = require_string(node, "designer.kind");
  if (kind == "none") return DesignKind::identity;
  if (kind == "interior") return DesignKind::interior;
  if (kind == "boundary") return DesignKind::boundary;
  if (kind == "discrete") return DesignKind::discrete;
  throw ConfigError("designer.kind",
                    "expected one of none, interior, boundary, discrete");
}

ActionProfile parse_target(const json& node, const NormalFormGame& game) {
  if (!node.is_array()) throw ConfigError("designer.target", "expected an array");
  ActionProfile target;
  for (const auto& v : node)
    target.push_back(static_cast<int>(require_integer(v, "designer.target")));
  try {
    game.profile_index(target);
  } catch (const std::exception& e) {
    throw ConfigError("designer.target", e.what());
  }
  return target;
}

DesignerSpec parse_designer(const json& node, const ResolvedGame& resolved) {
  require_keys(node, "designer",
               {"kind", "target", "rho", "v", "alpha", "epsilon", "thresholded"});
  if (!node.contains("kind")) throw ConfigError("designer.kind", "missing");

  DesignerSpec spec;
  spec.kind = parse_kind(node["kind"]);

  if (node.contains("target")) {
    spec.target = parse_target(node["target"], resolved.game);
  } else if (resolved.preset) {
    spec.target = resolved.preset->target;
  } else if (spec.kind != DesignKind::identity) {
    throw ConfigError("designer.target", "required for custom games");
  }

  const bool time_varying =
      spec.kind == DesignKind::boundary || spec.kind == DesignKind::discrete;
  if (spec.kind == DesignKind::identity) {
    for (const char* key : {"rho", "v", "alpha", "epsilon", "thresholded"})
      if (node.contains(key))
        throw ConfigError(std::string("designer.") + key,
                          "not applicable to kind none");
    return spec;
  }

  if (!node.contains("rho")) throw ConfigError("designer.rho", "missing");
  spec.margin = require_number(node["rho"], "designer.rho");
  if (!(spec.margin > 0.0)) throw ConfigError("designer.rho", "must be positive");

  if (node.contains("thresholded"))
    spec.thresholded = require_bool(node["thresholded"], "designer.thresholded");

  if (!time_varying) {
    for (const char* key : {"v", "alpha", "epsilon"})
      if (node.contains(key))
        throw ConfigError(std::string("designer.") + key,
                          "only valid for boundary or discrete kinds");
    return spec;
  }

  if (node.contains("alpha")) {
    spec.regret_rate = require_number(node["alpha"], "designer.alpha");
    if (!(spec.regret_rate >= 0.0 && spec.regret_rate < 1.0))
      throw ConfigError("designer.alpha", "must be in [0, 1)");
  }
  if (!node.contains("epsilon")) throw ConfigError("designer.epsilon", "missing");
  spec.epsilon = require_number(node["epsilon"], "designer.epsilon");
  if (!(spec.epsilon > 0.0 && spec.epsilon <= 1.0 - spec.regret_rate))
    throw ConfigError("designer.epsilon", "must be in (0, 1 - alpha]");

  if (node.contains("v")) {
    const json& v = node["v"];
    if (v.is_string()) {
      const std::string mode = v.get<std::string>();
      try {
        if (mode == "midpoint") {
          spec.interior_vector = default_interior_vector(resolved.game);
        } else if (mode == "target-mean") {
          spec.interior_vector =
              target_mean_interior_vector(resolved.game, spec.target);
        } else {
          throw ConfigError("designer.v",
                            "expected an array, \"midpoint\", or \"target-mean\"");
        }
      } catch (const std::invalid_argument& e) {
        throw ConfigError("designer.v", e.what());
      }
    } else if (v.is_array()) {
      LossVector vec;
      for (const auto& entry : v)
        vec.push_back(require_number(entry, "designer.v"));
      if (vec.size() != static_cast<std::size_t>(resolved.game.num_players()))
        throw ConfigError("designer.v", "needs one value per player");
      spec.interior_vector = std::move(vec);
    } else {
      throw ConfigError("designer.v",
                        "expected an array, \"midpoint\", or \"target-mean\"");
    }
  }
  return spec;
}

CostModel parse_cost(const json& node) {
  require_keys(node, "cost", {"eta", "p"});
  CostModel model;
  if (node.contains("eta")) {
    model.lipschitz = require_number(node["eta"], "cost.eta");
    if (!(model.lipschitz > 0.0)) throw ConfigError("cost.eta", "must be positive");
  }
  if (node.contains("p")) {
    if (node["p"].is_string()) {
      const std::string p = node["p"].get<std::string>();
      if (p != "inf" && p != "infinity")
        throw ConfigError("cost.p", "expected a number >= 1 or \"inf\"");
      model.norm_p = std::numeric_limits<double>::infinity();
    } else {
      model.norm_p = require_number(node["p"], "cost.p");
      if (!(model.norm_p >= 1.0)) throw ConfigError("cost.p", "must be >= 1");
    }
  }
  return model;
}

}  // namespace

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();

  json doc;
  try {
    doc = json::parse(buffer.str());
  } catch (const json::exception& e) {
    throw ConfigError("config", e.what());
  }
  if (!doc.is_object()) throw ConfigError("config", "expected a JSON object");
  require_keys(doc, "", {"game", "designer", "cost", "run", "output"});
  if (!doc.contains("game")) throw ConfigError("game", "missing");
  if (!doc.contains("run")) throw ConfigError("run", "missing");

  ResolvedGame resolved = parse_game(doc["game"]);

  DesignerSpec designer;
  if (doc.contains("designer")) {
    designer = parse_designer(doc["designer"], resolved);
  } else if (resolved.preset) {
    designer = resolved.preset->designer;
  } else {
    throw ConfigError("designer", "required for custom games");
  }

  CostModel cost = resolved.preset ? resolved.preset->cost : CostModel{};
  if (doc.contains("cost")) cost = parse_cost(doc["cost"]);

  const json& run = doc["run"];
  if (!run.is_object()) throw ConfigError("run", "expected an object");
  require_keys(run, "run",
               {"T_list", "trials", "seed", "checkpoints", "averaging"});
  if (!run.contains("T_list")) throw ConfigError("run.T_list", "missing");
  if (!run["T_list"].is_array() || run["T_list"].empty())
    throw ConfigError("run.T_list", "expected a non-empty array");
  std::vector<std::int64_t> horizons;
  for (const auto& v : run["T_list"]) {
    const std::int64_t t = require_integer(v, "run.T_list");
    if (t < 1) throw ConfigError("run.T_list", "horizons must be >= 1");
    horizons.push_back(t);
  }

  int trials = 5;
  if (run.contains("trials")) {
    trials = static_cast<int>(require_integer(run["trials"], "run.trials"));
    if (trials < 1) throw ConfigError("run.trials", "must be >= 1");
  }

  if (!run.contains("seed")) throw ConfigError("run.seed", "missing");
  if (!run["seed"].is_number_integer() ||
      (run["seed"].is_number_integer() && !run["seed"].is_number_unsigned() &&
       run["seed"].get<std::int64_t>() < 0))
    throw ConfigError("run.seed", "expected a nonnegative integer");
  const std::uint64_t seed = run["seed"].get<std::uint64_t>();

  std::vector<std::int64_t> checkpoints;
  if (run.contains("checkpoints")) {
    if (!run["checkpoints"].is_array())
      throw ConfigError("run.checkpoints", "expected an array");
    for (const auto& v : run["checkpoints"]) {
      const std::int64_t t = require_integer(v, "run.checkpoints");
      if (t < 1) throw ConfigError("run.checkpoints", "rounds must be >= 1");
      if (!checkpoints.empty() && t <= checkpoints.back())
        throw ConfigError("run.checkpoints", "must be strictly increasing");
      checkpoints.push_back(t);
    }
  }

  PolicyAveraging averaging = PolicyAveraging::probability;
  if (run.contains("averaging")) {
    const std::string mode = require_string(run["averaging"], "run.averaging");
    if (mode == "probability")
      averaging = PolicyAveraging::probability;
    else if (mode == "empirical")
      averaging = PolicyAveraging::empirical;
    else
      throw ConfigError("run.averaging", "expected probability or empirical");
  }

  OutputOptions output;
  if (doc.contains("output")) {
    const json& out = doc["output"];
    if (!out.is_object()) throw ConfigError("output", "expected an object");
    require_keys(out, "output", {"directory", "formats"});
    if (out.contains("directory"))
      output.directory = require_string(out["directory"], "output.directory");
    if (out.contains("formats")) {
      if (!out["formats"].is_array())
        throw ConfigError("output.formats", "expected an array");
      output.write_csv = false;
      output.write_json = false;
      for (const auto& v : out["formats"]) {
        const std::string format = require_string(v, "output.formats");
        if (format == "csv")
          output.write_csv = true;
        else if (format == "json")
          output.write_json = true;
        else
          throw ConfigError("output.formats", "expected csv or json");
      }
    }
  }

  return ExperimentConfig{
      .game_label = resolved.label,
      .game = std::move(resolved.game),
      .designer = std::move(designer),
      .cost = cost,
      .horizons = std::move(horizons),
      .trials = trials,
      .seed = seed,
      .checkpoints = std::move(checkpoints),
      .averaging = averaging,
      .output = output,
  };
}

}  // namespace redesign::cli
