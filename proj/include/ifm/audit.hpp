#pragma once

#include <optional>
#include <vector>

#include "ifm/effective.hpp"
#include "ifm/full_sim.hpp"
#include "ifm/interaction_model.hpp"

namespace ifm {

// (C+1)^{−2} (1−eps)² / T — the adversary floor every protocol in the
// refreshed-environment framework must respect.
double adversary_floor(double big_c, double eps, std::size_t steps);

// One audited time step. Slacks are rhs − lhs of the inequality as used by
// the chain; a violation is a slack below −tol. The direct-sum identity is
// an equality, so its residual is reported as an absolute value.
struct AuditStep {
  std::size_t t = 0;
  double shrink = 0.0;             // ‖ψ_{t−1}‖² − ‖ψ_t‖²
  double direct_sum_residual = 0;  // | ‖ψ_t‖² − (‖ψ′_{t,1}‖² + ‖Aψ′_{t,2}‖²) |
  double phi2_slack = 0.0;         // shrink − (1−‖A‖²)‖ψ′_{t,2}‖²
  double step_bound = 0.0;         // ‖ψ′ψ′ − ψψ‖₁ at step t
  double step_six_slack = 0.0;     // 6‖ψ′_{t,2}‖ − step_bound
  double step_chain_slack = 0.0;   // C√shrink − step_bound
  double observed_constant = 0.0;  // step_bound / ‖ψ′_{t,2}‖ (0 when tiny)
  std::optional<double> dist_upper_slack;  // eq (dist<) rhs − exact, with fulls
  std::optional<double> cross_sim_residual;  // ‖⟨f^{⊗t}|Φ⟩ − ψ_t‖
  bool ok = true;
};

struct AuditReport {
  std::vector<AuditStep> steps;
  double telescoping_slack = 0.0;  // Σ per-step bounds − ‖φφ−ψψ‖₁ at T
  double cauchy_slack = 0.0;       // C√(T·ΣΔ) − C·Σ√Δ
  double dist_upper_final = 0.0;   // eq (dist<) rhs at T
  std::optional<double> dist_exact_final;
  double discriminability_used = 0.0;  // exact when available, else the bound
  double eps_achieved = 0.0;           // 1 − discriminability, clipped to [0,1]
  double d_lower_final = 0.0;
  std::optional<double> d_exact_final;
  double final_chain_slack = 0.0;  // (C+1)√(T·D_lower) − discriminability
  double floor_value = 0.0;        // adversary_floor(C, eps_achieved, T)
  double floor_slack = 0.0;        // D_lower − floor
  double tol = 1e-9;
  bool all_ok = true;
};

// Verifies the full §-two chain step by step on a pair of trajectories:
// the exact direct-sum split of the conditioned norm, the relaxed shrink
// identity, the per-step trace-norm bound with its constant, the safe-side
// discriminability bound, and the final floor. Violations are recorded in
// the report, never thrown. Full states (when supplied) add the exact
// distortion / discriminability cross-checks.
AuditReport audit_chain(const Trajectory& empty_box,
                        const Trajectory& interacting,
                        const InteractionModel& model,
                        const std::vector<FullState>* full0 = nullptr,
                        const std::vector<FullState>* full1 = nullptr,
                        double tol = 1e-9);

}  // namespace ifm
