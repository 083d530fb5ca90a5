#pragma once

#include <span>

namespace redesign {

// Per-round designer charge: lipschitz * ||original - designed||_p on the
// played cell. norm_p may be +infinity for the max norm.
struct CostModel {
  double lipschitz = 1.0;  // eta > 0
  double norm_p = 1.0;     // p >= 1
};

double round_cost(const CostModel& model, std::span<const double> original_loss,
                  std::span<const double> designed_loss);

}  // namespace redesign
