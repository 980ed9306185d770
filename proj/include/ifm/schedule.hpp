#pragma once

#include <cstdint>
#include <vector>

#include "ifm/complex_matrix.hpp"
#include "ifm/interaction_model.hpp"
#include "ifm/state_vector.hpp"

namespace ifm {

// An interrogation protocol: T processing unitaries on C⊗W⊗I interleaved
// with T queries to the blackbox. The control register C is a qubit: basis
// index 0 bypasses the box, index 1 triggers it.
struct ProtocolSchedule {
  std::size_t steps = 0;  // T
  std::size_t dim_c = 2;
  std::size_t dim_w = 1;
  std::size_t dim_i = 1;
  std::vector<ComplexMatrix> v;  // T unitaries on C⊗W⊗I
  StateVector initial;           // |φ⟩ on C⊗W⊗I, unit norm

  RegisterLayout cwi_layout() const;
  std::size_t cwi_dim() const { return dim_c * dim_w * dim_i; }
};

// Throws std::invalid_argument when a V_t is not unitary, the control is not
// a qubit, or the initial state is off-layout or not normalized.
void validate_schedule(const ProtocolSchedule& s, double tol = 1e-10);

// The two-path interrogation schedule: no work register, every V_t rotates
// the control by π/(2T), initial state on the bypass branch with I in |0⟩.
// For the empty box the control lands on index 1 with certainty.
ProtocolSchedule build_kwiat_schedule(std::size_t steps,
                                      const InteractionModel& model);

// Same shape as the Kwiat schedule but with caller-chosen per-step control
// rotation angles (the optimizer's search space).
ProtocolSchedule build_rotation_schedule(const std::vector<double>& angles,
                                         const InteractionModel& model);

// Haar-random V_t and a random initial state; used by the randomized audits.
ProtocolSchedule random_schedule(std::size_t steps, std::size_t dim_w,
                                 std::size_t dim_i, std::uint64_t seed);

}  // namespace ifm
