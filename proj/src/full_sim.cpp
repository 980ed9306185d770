#include "ifm/full_sim.hpp"

#include <stdexcept>
#include <string>

#include "ifm/linalg.hpp"
#include "ifm/tensor_ops.hpp"

namespace ifm {

namespace {

std::string slot_name(std::size_t t) { return "Bp" + std::to_string(t); }

RegisterLayout full_layout(const ProtocolSchedule& s,
                           const InteractionModel& m) {
  std::vector<std::pair<std::string, std::size_t>> regs = {
      {"C", s.dim_c}, {"W", s.dim_w}, {"I", s.dim_i}};
  for (std::size_t t = 1; t <= s.steps; ++t)
    regs.emplace_back(slot_name(t), m.dim_bp);
  return RegisterLayout(std::move(regs));
}

// c−U₁ on C⊗I⊗B′: bypass on control 0, the interaction on control 1.
ComplexMatrix controlled_interaction(const InteractionModel& m) {
  const std::size_t d = m.dim_i * m.dim_bp;
  ComplexMatrix c(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) c(i, i) = cx{1.0, 0.0};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c(d + i, d + j) = m.u1(i, j);
  return c;
}

StateVector refresh_bra(const InteractionModel& m, std::size_t t) {
  StateVector bra = StateVector(RegisterLayout({{slot_name(1), m.dim_bp}}),
                                m.f.amplitudes());
  for (std::size_t s = 2; s <= t; ++s)
    bra = tensor(bra, StateVector(RegisterLayout({{slot_name(s), m.dim_bp}}),
                                  m.f.amplitudes()));
  return bra;
}

}  // namespace

bool full_sim_feasible(const ProtocolSchedule& schedule,
                       const InteractionModel& model, std::size_t cap) {
  double dim = static_cast<double>(schedule.cwi_dim());
  for (std::size_t t = 0; t < schedule.steps; ++t) {
    dim *= static_cast<double>(model.dim_bp);
    if (dim > static_cast<double>(cap)) return false;
  }
  return true;
}

std::vector<FullState> run_full(const ProtocolSchedule& schedule,
                                const InteractionModel& model, int theta,
                                std::size_t cap) {
  validate_schedule(schedule);
  if (schedule.dim_i != model.dim_i)
    throw std::invalid_argument("run_full: schedule and model disagree on dim I");
  if (theta != 0 && theta != 1)
    throw std::invalid_argument("run_full: theta must be 0 or 1");
  if (!full_sim_feasible(schedule, model, cap))
    throw std::runtime_error(
        "run_full: dim(B')^T * dim(CWI) exceeds the configured cap");

  const auto layout = full_layout(schedule, model);

  // φ ⊗ f^{⊗T}
  std::vector<cx> amps(layout.total_dim());
  std::size_t env_dim = 1;
  for (std::size_t t = 0; t < schedule.steps; ++t) env_dim *= model.dim_bp;
  for (std::size_t c = 0; c < schedule.cwi_dim(); ++c) {
    for (std::size_t e = 0; e < env_dim; ++e) {
      cx f_amp{1.0, 0.0};
      std::size_t rem = e;
      for (std::size_t s = schedule.steps; s-- > 0;) {
        f_amp *= model.f.amplitude(rem % model.dim_bp);
        rem /= model.dim_bp;
      }
      amps[c * env_dim + e] = schedule.initial.amplitude(c) * f_amp;
    }
  }

  std::vector<FullState> history;
  history.push_back({StateVector(layout, std::move(amps)), 0});

  const ComplexMatrix c_u = controlled_interaction(model);
  for (std::size_t t = 1; t <= schedule.steps; ++t) {
    StateVector psi = history.back().state;
    apply_operator(psi, schedule.v[t - 1], {"C", "W", "I"});
    if (theta == 1) apply_operator(psi, c_u, {"C", "I", slot_name(t)});
    history.push_back({std::move(psi), t});
  }
  return history;
}

StateVector project_refresh(const FullState& full,
                            const InteractionModel& model) {
  const std::size_t total =
      full.state.layout().count() - 3;  // number of B′ slots
  if (total == 0) return full.state;
  return partial_inner(refresh_bra(model, total), full.state);
}

double distortion_exact(const FullState& full, const InteractionModel& model) {
  if (full.t == 0) return 0.0;
  std::vector<std::string> touched;
  for (std::size_t s = 1; s <= full.t; ++s) touched.push_back(slot_name(s));
  const DensityOperator rho = reduced_density(full.state, touched);

  const StateVector fpow = refresh_bra(model, full.t);
  const ComplexMatrix ref = outer_product(fpow, fpow);
  return trace_norm(rho.matrix() - ref);
}

double discriminability(const Trajectory& empty_box,
                        const Trajectory& interacting,
                        const FullState* full0, const FullState* full1) {
  if (empty_box.steps != interacting.steps)
    throw std::invalid_argument("discriminability: trajectories disagree on T");
  if (full0 && full1) {
    const std::vector<std::string> keep = {"C", "W", "I"};
    const auto rho0 = reduced_density(full0->state, keep);
    const auto rho1 = reduced_density(full1->state, keep);
    return trace_norm(rho0.matrix() - rho1.matrix());
  }
  const auto& phi = empty_box.final().reference;
  const auto& psi = interacting.final().conditioned;
  const double tail = 1.0 - interacting.final().conditioned_sq;
  return trace_norm(outer_product(phi, phi) - outer_product(psi, psi)) + tail;
}

}  // namespace ifm
