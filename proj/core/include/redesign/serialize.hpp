#pragma once

#include <string>

#include "redesign/game.hpp"

namespace redesign {

// Game document:
//   {"players": M, "action_counts": [...], "loss_table": <nested arrays>,
//    "L": ..., "U": ..., "natural_values": [...]?}
// loss_table nests one level per player (last player's action innermost);
// each leaf is the M-element loss vector of one profile, so the flattened
// order is the mixed-radix profile order.
std::string game_to_json(const NormalFormGame& game, int indent = 2);

// Strict parse of the document above; unknown keys are rejected.
NormalFormGame game_from_json(const std::string& text);

}  // namespace redesign
