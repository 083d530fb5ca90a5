#include "redesign/serialize.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace redesign {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json nest_losses(const NormalFormGame& game, int depth, std::size_t base) {
  ordered_json out = ordered_json::array();
  if (depth == game.num_players()) {
    // base is a profile index here; emit its loss vector
    for (int i = 0; i < game.num_players(); ++i) out.push_back(game.loss(base, i));
    return out;
  }
  const std::size_t stride = game.stride(depth);
  for (int a = 0; a < game.action_counts()[static_cast<std::size_t>(depth)]; ++a)
    out.push_back(nest_losses(game, depth + 1, base + static_cast<std::size_t>(a) * stride));
  return out;
}

void flatten_losses(const nlohmann::json& node, const std::vector<int>& action_counts,
                    int depth, std::vector<double>& out) {
  const int players = static_cast<int>(action_counts.size());
  if (depth == players) {
    if (!node.is_array() || node.size() != static_cast<std::size_t>(players))
      throw std::invalid_argument(
          "loss_table: each cell must hold one loss per player");
    for (const auto& v : node) {
      if (!v.is_number()) throw std::invalid_argument("loss_table: non-numeric loss");
      out.push_back(v.get<double>());
    }
    return;
  }
  if (!node.is_array() ||
      node.size() != static_cast<std::size_t>(action_counts[static_cast<std::size_t>(depth)]))
    throw std::invalid_argument("loss_table: expected " +
                                std::to_string(action_counts[static_cast<std::size_t>(depth)]) +
                                " entries at depth " + std::to_string(depth));
  for (const auto& child : node) flatten_losses(child, action_counts, depth + 1, out);
}

}  // namespace

std::string game_to_json(const NormalFormGame& game, int indent) {
  ordered_json doc;
  doc["players"] = game.num_players();
  doc["action_counts"] = game.action_counts();
  doc["loss_table"] = nest_losses(game, 0, 0);
  doc["L"] = game.loss_lower();
  doc["U"] = game.loss_upper();
  if (game.natural_values()) doc["natural_values"] = *game.natural_values();
  return doc.dump(indent);
}

NormalFormGame game_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("game document: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("game document: expected an object");

  for (const auto& [key, _] : doc.items()) {
    if (key != "players" && key != "action_counts" && key != "loss_table" &&
        key != "L" && key != "U" && key != "natural_values")
      throw std::invalid_argument("game document: unknown key \"" + key + "\"");
  }
  for (const char* key : {"players", "action_counts", "loss_table", "L", "U"})
    if (!doc.contains(key))
      throw std::invalid_argument(std::string("game document: missing \"") + key + "\"");

  if (!doc["players"].is_number_integer())
    throw std::invalid_argument("players: expected an integer");
  const int players = doc["players"].get<int>();
  if (!doc["action_counts"].is_array())
    throw std::invalid_argument("action_counts: expected an array");
  std::vector<int> action_counts;
  for (const auto& v : doc["action_counts"]) {
    if (!v.is_number_integer())
      throw std::invalid_argument("action_counts: expected integers");
    action_counts.push_back(v.get<int>());
  }
  if (players != static_cast<int>(action_counts.size()))
    throw std::invalid_argument("players does not match action_counts length");
  if (!doc["L"].is_number() || !doc["U"].is_number())
    throw std::invalid_argument("L and U must be numbers");

  std::vector<double> losses;
  flatten_losses(doc["loss_table"], action_counts, 0, losses);

  std::optional<std::vector<double>> natural_values;
  if (doc.contains("natural_values")) {
    if (!doc["natural_values"].is_array())
      throw std::invalid_argument("natural_values: expected an array");
    natural_values.emplace();
    for (const auto& v : doc["natural_values"]) {
      if (!v.is_number())
        throw std::invalid_argument("natural_values: expected numbers");
      natural_values->push_back(v.get<double>());
    }
  }

  return NormalFormGame(std::move(action_counts), std::move(losses),
                        doc["L"].get<double>(), doc["U"].get<double>(),
                        std::move(natural_values));
}

}  // namespace redesign
