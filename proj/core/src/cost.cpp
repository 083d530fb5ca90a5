#include "redesign/cost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace redesign {

double round_cost(const CostModel& model, std::span<const double> original_loss,
                  std::span<const double> designed_loss) {
  if (!(model.lipschitz > 0.0))
    throw std::invalid_argument("round_cost: lipschitz constant must be positive");
  if (!(model.norm_p >= 1.0))
    throw std::invalid_argument("round_cost: norm order must be >= 1");
  if (original_loss.size() != designed_loss.size() || original_loss.empty())
    throw std::invalid_argument("round_cost: loss vector length mismatch");

  const std::size_t n = original_loss.size();
  double norm = 0.0;
  if (std::isinf(model.norm_p)) {
    for (std::size_t i = 0; i < n; ++i)
      norm = std::max(norm, std::abs(original_loss[i] - designed_loss[i]));
  } else if (model.norm_p == 1.0) {
    for (std::size_t i = 0; i < n; ++i)
      norm += std::abs(original_loss[i] - designed_loss[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      norm += std::pow(std::abs(original_loss[i] - designed_loss[i]), model.norm_p);
    norm = std::pow(norm, 1.0 / model.norm_p);
  }
  return model.lipschitz * norm;
}

}  // namespace redesign
