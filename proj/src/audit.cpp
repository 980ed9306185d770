#include "ifm/audit.hpp"

#include <cmath>
#include <stdexcept>

#include "ifm/linalg.hpp"
#include "ifm/tensor_ops.hpp"

namespace ifm {

double adversary_floor(double big_c, double eps, std::size_t steps) {
  if (!(eps >= 0.0 && eps <= 1.0))
    throw std::domain_error("adversary_floor: eps must lie in [0, 1]");
  if (big_c < 6.0 - 1e-12)
    throw std::domain_error("adversary_floor: C is at least 6 by construction");
  if (steps == 0) throw std::domain_error("adversary_floor: T >= 1");
  const double cp = big_c + 1.0;
  const double sep = 1.0 - eps;
  return sep * sep / (cp * cp * static_cast<double>(steps));
}

AuditReport audit_chain(const Trajectory& empty_box,
                        const Trajectory& interacting,
                        const InteractionModel& model,
                        const std::vector<FullState>* full0,
                        const std::vector<FullState>* full1, double tol) {
  if (empty_box.steps != interacting.steps)
    throw std::invalid_argument("audit_chain: trajectories disagree on T");
  const std::size_t t_max = interacting.steps;
  const double a_sq = model.a1_norm * model.a1_norm;
  const double big_c = model.big_c;

  AuditReport report;
  report.tol = tol;

  double sum_step_bounds = 0.0;
  double sum_sqrt_shrink = 0.0;

  for (std::size_t t = 1; t <= t_max; ++t) {
    const auto& cur = interacting.at[t];
    const auto& prev = interacting.at[t - 1];
    AuditStep step;
    step.t = t;
    step.shrink = prev.conditioned_sq - cur.conditioned_sq;

    // ‖ψ_t‖² = ‖ψ′_{t,1}‖² + ‖Aψ′_{t,2}‖², exactly (direct sum over the
    // control branches).
    step.direct_sum_residual = std::abs(
        cur.conditioned_sq - (cur.bypass_branch_sq + cur.boxed_branch_sq));

    // Relaxation of the paper's shrink identity; an equality only when the
    // compressed operator is a scaled isometry, an inequality always.
    step.phi2_slack = step.shrink - (1.0 - a_sq) * cur.box_branch_sq;

    // ‖ |ψ′⟩⟨ψ′| − |ψ⟩⟨ψ| ‖₁ ≤ 6‖ψ′_{t,2}‖ ≤ C√(‖ψ_{t−1}‖²−‖ψ_t‖²)
    step.step_bound = trace_norm(
        outer_product(cur.routed, cur.routed) -
        outer_product(cur.conditioned, cur.conditioned));
    const double box_branch = std::sqrt(std::max(cur.box_branch_sq, 0.0));
    step.step_six_slack = 6.0 * box_branch - step.step_bound;
    step.step_chain_slack =
        big_c * std::sqrt(std::max(step.shrink, 0.0)) - step.step_bound;
    step.observed_constant =
        (box_branch > 1e-12) ? step.step_bound / box_branch : 0.0;

    sum_step_bounds += step.step_bound;
    sum_sqrt_shrink += std::sqrt(std::max(step.shrink, 0.0));

    if (full0 && full1) {
      const auto& f1 = (*full1)[t];
      // Definitional cross-check ⟨f^{⊗t}|Φ_{1,t}⟩ = ψ_t.
      const StateVector projected = project_refresh(f1, model);
      double resid = 0.0;
      for (std::size_t i = 0; i < projected.dim(); ++i)
        resid += std::norm(projected.amplitude(i) -
                           cur.conditioned.amplitude(i));
      step.cross_sim_residual = std::sqrt(resid);

      // eq (dist<): exact reduced distance ≤ ‖φφ−ψψ‖₁ + 1 − ‖ψ_t‖².
      const std::vector<std::string> keep = {"C", "W", "I"};
      const auto rho0 = reduced_density((*full0)[t].state, keep);
      const auto rho1 = reduced_density(f1.state, keep);
      const double exact =
          trace_distance_hermitian(rho0.matrix(), rho1.matrix());
      const double upper =
          trace_norm(outer_product(cur.reference, cur.reference) -
                     outer_product(cur.conditioned, cur.conditioned)) +
          1.0 - cur.conditioned_sq;
      step.dist_upper_slack = upper - exact;
    }

    step.ok = step.direct_sum_residual <= tol &&
              step.phi2_slack >= -tol && step.step_six_slack >= -tol &&
              step.step_chain_slack >= -tol &&
              (!step.dist_upper_slack || *step.dist_upper_slack >= -tol) &&
              (!step.cross_sim_residual || *step.cross_sim_residual <= 1e-10);
    report.all_ok = report.all_ok && step.ok;
    report.steps.push_back(std::move(step));
  }

  const auto& fin = interacting.final();
  const double d_lower = 1.0 - fin.conditioned_sq;
  report.d_lower_final = d_lower;

  const double pure_gap =
      trace_norm(outer_product(fin.reference, fin.reference) -
                 outer_product(fin.conditioned, fin.conditioned));
  report.telescoping_slack = sum_step_bounds - pure_gap;
  report.cauchy_slack =
      big_c * std::sqrt(static_cast<double>(t_max) *
                        std::max(1.0 - fin.conditioned_sq, 0.0)) -
      big_c * sum_sqrt_shrink;
  report.dist_upper_final = pure_gap + d_lower;

  if (full0 && full1) {
    report.dist_exact_final =
        discriminability(empty_box, interacting, &full0->back(), &full1->back());
    report.d_exact_final = distortion_exact(full1->back(), model);
    report.discriminability_used = *report.dist_exact_final;
  } else {
    report.discriminability_used = report.dist_upper_final;
  }

  report.eps_achieved =
      std::min(1.0, std::max(0.0, 1.0 - report.discriminability_used));
  report.final_chain_slack =
      (big_c + 1.0) * std::sqrt(static_cast<double>(t_max) * std::max(d_lower, 0.0)) -
      report.discriminability_used;
  report.floor_value = adversary_floor(big_c, report.eps_achieved, t_max);
  report.floor_slack = d_lower - report.floor_value;

  report.all_ok = report.all_ok && report.telescoping_slack >= -tol &&
                  report.cauchy_slack >= -tol &&
                  report.final_chain_slack >= -tol &&
                  report.floor_slack >= -tol;
  if (report.d_exact_final)
    report.all_ok =
        report.all_ok && (*report.d_exact_final >= d_lower - tol);
  return report;
}

}  // namespace ifm
