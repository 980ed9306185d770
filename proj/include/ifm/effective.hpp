#pragma once

#include <optional>
#include <vector>

#include "ifm/complex_matrix.hpp"
#include "ifm/schedule.hpp"
#include "ifm/state_vector.hpp"

namespace ifm {

// Per-step record of the effective (environment-post-selected) dynamics.
//
//   conditioned  ψ_t = (c−A) V_t ψ_{t−1}   (sub-normalized)
//   reference    φ_t = V_t ⋯ V_1 |φ⟩       (the empty-box run, unit norm)
//   routed       ψ′_t = V_t ψ_{t−1}        (before the box acts)
//
// The control splits ψ′_t into the bypass branch (index 0) and the box
// branch (index 1); the box branch gets hit by the compressed operator.
struct TrajectoryStep {
  StateVector conditioned;   // ψ_t
  StateVector reference;     // φ_t
  StateVector routed;        // ψ′_t (equals ψ_0 at t = 0)
  double conditioned_sq = 1.0;     // ‖ψ_t‖²
  double bypass_branch_sq = 0.0;   // ‖ψ′_{t,1}‖²
  double box_branch_sq = 0.0;      // ‖ψ′_{t,2}‖²
  double boxed_branch_sq = 0.0;    // ‖A ψ′_{t,2}‖²
  double distortion_lower = 0.0;   // 1 − ‖ψ_t‖²
};

struct Trajectory {
  std::vector<TrajectoryStep> at;  // index t = 0 … T
  std::size_t steps = 0;
  std::optional<double> eps_achieved;  // filled once paired via discriminability

  const TrajectoryStep& final() const { return at.back(); }
};

// Runs the recursion ψ_t = (c−A)V_t ψ_{t−1}. Passing nullptr for the
// compressed operator runs the empty-box branch (A = identity), in which
// case ψ_t coincides with φ_t at every step.
Trajectory run_effective(const ProtocolSchedule& schedule,
                         const ComplexMatrix* compressed);

// 1 − ‖ψ_t‖², the safe-side distortion bound of the audit chain.
double distortion_lower(const Trajectory& traj, std::size_t t);

}  // namespace ifm
