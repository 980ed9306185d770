#pragma once

#include <optional>
#include <vector>

#include "ifm/density_operator.hpp"
#include "ifm/effective.hpp"
#include "ifm/interaction_model.hpp"
#include "ifm/schedule.hpp"

namespace ifm {

// Whole-system state on C⊗W⊗I⊗B′₁…B′_T after t queries. The t-th query acts
// on the t-th B′ slot; slots past t still hold the refresh state.
struct FullState {
  StateVector state;
  std::size_t t = 0;
};

// dim(B′)^T · dim(C⊗W⊗I) must stay within this cap for full simulation; the
// environment grows exponentially in T.
constexpr std::size_t kFullSimDimCap = std::size_t{1} << 20;

bool full_sim_feasible(const ProtocolSchedule& schedule,
                       const InteractionModel& model,
                       std::size_t cap = kFullSimDimCap);

// Unitary evolution of the whole system for theta ∈ {0, 1}; returns states
// at t = 0 … T. Throws when the dimension cap is exceeded.
std::vector<FullState> run_full(const ProtocolSchedule& schedule,
                                const InteractionModel& model, int theta,
                                std::size_t cap = kFullSimDimCap);

// ⟨f^{⊗t}| contracted against the touched B′ slots of Φ_{θ,t} (untouched
// slots are contracted too — they hold |f⟩ exactly); equals ψ_t of the
// effective recursion.
StateVector project_refresh(const FullState& full,
                            const InteractionModel& model);

// ‖ ρ_B(t) − (|f⟩⟨f|)^{⊗t} ‖₁ on the first t environment slots.
double distortion_exact(const FullState& full, const InteractionModel& model);

// Trace distance of the reduced states the final measurement can see.
// With both full states present this is exact; otherwise it is the safe-side
// bound ‖φ_T⟩⟨φ_T| − |ψ_T⟩⟨ψ_T|‖₁ + 1 − ‖ψ_T‖² from the audit chain.
double discriminability(const Trajectory& empty_box,
                        const Trajectory& interacting,
                        const FullState* full0 = nullptr,
                        const FullState* full1 = nullptr);

}  // namespace ifm
