#pragma once

#include <string>

#include "redesign/cost.hpp"
#include "redesign/designer.hpp"
#include "redesign/game.hpp"

namespace redesign {

// A named example game together with its default redesign settings.
struct GamePreset {
  std::string id;
  NormalFormGame game;
  ActionProfile target;
  DesignerSpec designer;
  CostModel cost;
};

// Volunteer's dilemma: action 0 volunteers. A volunteer always loses 0;
// a non-volunteer loses -1 when someone else volunteers and 10 when nobody
// does. Target: everybody volunteers. Default: thresholded interior, rho = 1.
GamePreset make_vd(int num_players = 3);

// Two farmers graze 0..15 sheep on a shared pasture; the per-sheep price is
// sqrt(30 - a_1 - a_2) and each farmer's loss is the negated value of their
// flock. Target: 10 sheep each (the social optimum split evenly). Default:
// thresholded interior, rho = 1.
GamePreset make_tc();

// Prisoner's dilemma with losses in [1, 5]; action 0 stays mum. Target: both
// mum. Default: thresholded interior, rho = 1.
GamePreset make_pd();

// Rock-paper-scissors in losses, natural values {-1, 0, 1}. Target: (rock,
// paper), whose original loss sits on the range boundary. Default: boundary
// design with v = (0, 0), rho = 1, alpha = 0.5, epsilon = 0.3, unthresholded
// to preserve the zero-sum property.
GamePreset make_rps();

// Lookup by id ("vd", "tc", "pd", "rps"); throws on unknown ids.
GamePreset preset_by_id(const std::string& id);

}  // namespace redesign
