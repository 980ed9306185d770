#pragma once

#include <cstdint>
#include <vector>

#include "ifm/interaction_model.hpp"
#include "ifm/schedule.hpp"

namespace ifm {

struct OptimizeResult {
  ProtocolSchedule schedule;
  std::vector<double> angles;   // per-step control rotations
  double d_lower = 0.0;         // 1 − ‖ψ_T‖² of the result
  double disc = 0.0;            // discriminability of the result
  double eps_achieved = 0.0;
  double floor_value = 0.0;     // adversary floor at the achieved eps
  bool used_full_sim = false;   // exact discriminability vs safe-side bound
};

struct OptimizeOptions {
  std::size_t restarts = 4;      // seeded random restarts on top of the
                                 // uniform-angle baseline
  std::size_t sweeps = 3;        // coordinate-descent passes per start
  double penalty = 1e4;          // constraint penalty weight
  std::size_t full_sim_dim_cap = std::size_t{1} << 14;
};

// Derivative-free minimization of the final distortion bound over per-step
// control-rotation angles, subject to discriminability ≥ 1 − eps_target.
// Coordinate descent with golden-section line search; the uniform-angle
// (Kwiat) schedule is always one of the starts, so the result never loses
// to it. Throws std::domain_error when the target is infeasible outright.
OptimizeResult optimize_schedule(std::size_t steps,
                                 const InteractionModel& model,
                                 double eps_target, std::uint64_t seed,
                                 const OptimizeOptions& opts = {});

}  // namespace ifm
