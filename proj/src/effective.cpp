#include "ifm/effective.hpp"

#include <stdexcept>

#include "ifm/tensor_ops.hpp"

namespace ifm {

namespace {

// c−A on the C⊗I pair: identity on control index 0, A on control index 1.
ComplexMatrix controlled_compressed(const ComplexMatrix& a) {
  const std::size_t d = a.rows();
  ComplexMatrix c(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) c(i, i) = cx{1.0, 0.0};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c(d + i, d + j) = a(i, j);
  return c;
}

double branch_norm_sq(const StateVector& psi, std::size_t control_index) {
  // Control is the most significant register, so branch b occupies the
  // contiguous half [b·dim/2, (b+1)·dim/2).
  const std::size_t half = psi.dim() / 2;
  double s = 0.0;
  for (std::size_t i = 0; i < half; ++i)
    s += std::norm(psi.amplitude(control_index * half + i));
  return s;
}

}  // namespace

Trajectory run_effective(const ProtocolSchedule& schedule,
                         const ComplexMatrix* compressed) {
  validate_schedule(schedule);
  if (compressed &&
      (compressed->rows() != schedule.dim_i || !compressed->square()))
    throw std::invalid_argument(
        "run_effective: compressed operator must act on I");

  const ComplexMatrix a = compressed
                              ? *compressed
                              : ComplexMatrix::identity(schedule.dim_i);
  const ComplexMatrix c_a = controlled_compressed(a);

  Trajectory traj;
  traj.steps = schedule.steps;
  traj.at.reserve(schedule.steps + 1);

  TrajectoryStep start;
  start.conditioned = schedule.initial;
  start.reference = schedule.initial;
  start.routed = schedule.initial;
  start.conditioned_sq = schedule.initial.norm_sq();
  start.bypass_branch_sq = branch_norm_sq(schedule.initial, 0);
  start.box_branch_sq = branch_norm_sq(schedule.initial, 1);
  start.boxed_branch_sq = start.box_branch_sq;
  start.distortion_lower = 0.0;
  traj.at.push_back(std::move(start));

  for (std::size_t t = 1; t <= schedule.steps; ++t) {
    const auto& prev = traj.at[t - 1];
    TrajectoryStep step;

    step.reference = prev.reference;
    apply_operator(step.reference, schedule.v[t - 1], {"C", "W", "I"});

    step.routed = prev.conditioned;
    apply_operator(step.routed, schedule.v[t - 1], {"C", "W", "I"});
    step.bypass_branch_sq = branch_norm_sq(step.routed, 0);
    step.box_branch_sq = branch_norm_sq(step.routed, 1);

    step.conditioned = step.routed;
    apply_operator(step.conditioned, c_a, {"C", "I"});
    step.conditioned_sq = step.conditioned.norm_sq();
    step.boxed_branch_sq = branch_norm_sq(step.conditioned, 1);
    step.distortion_lower = 1.0 - step.conditioned_sq;

    traj.at.push_back(std::move(step));
  }
  return traj;
}

double distortion_lower(const Trajectory& traj, std::size_t t) {
  if (t >= traj.at.size())
    throw std::out_of_range("distortion_lower: step out of range");
  return traj.at[t].distortion_lower;
}

}  // namespace ifm
