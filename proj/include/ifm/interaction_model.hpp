#pragma once

#include "ifm/complex_matrix.hpp"
#include "ifm/state_vector.hpp"

namespace ifm {

// The refreshed-environment blackbox of the first scenario: a unitary
// interaction on I⊗B′ whose B′ side is reset to |f⟩ before every query.
// The compressed operator a1 = ⟨f|U₁|f⟩ captures the whole effect on the
// accessible side conditioned on the environment staying put; the bound
// constant is big_c = 6(1−‖a1‖²)^{−1/2}.
struct InteractionModel {
  std::size_t dim_i = 1;
  std::size_t dim_bp = 2;
  ComplexMatrix u1;    // unitary on I⊗B′ (I on the slow index)
  StateVector f;       // refresh state on B′, unit norm
  ComplexMatrix a1;    // derived: ⟨f|U₁|f⟩ on I
  double a1_norm = 0;  // ‖a1‖, strictly below 1
  double big_c = 6.0;  // 6(1−‖a1‖²)^{−1/2}
};

// Validates unitarity, ‖f‖ = 1 and ‖A₁‖ < 1, and derives a1 / big_c.
InteractionModel make_interaction_model(std::size_t dim_i, std::size_t dim_bp,
                                        ComplexMatrix u1, StateVector f);

// ⟨f|U₁|f⟩: contracts the B′ legs of the interaction against the refresh
// state, one basis column at a time.
ComplexMatrix compressed_operator(const InteractionModel& model);

// Bomb-tester defaults: trivial I, qubit B′, |f⟩ = |0⟩, U₁ a π/2 rotation on
// B′, so a1 = 0 and big_c = 6.
InteractionModel absorbing_model();

// Interaction rotating |f⟩=|0⟩ by `angle` on B′ with a trivial I register:
// a1 = cos(angle) as a 1×1 matrix.
InteractionModel rotation_model(double angle);

}  // namespace ifm
