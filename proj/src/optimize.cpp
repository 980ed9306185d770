#include "ifm/optimize.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ifm/audit.hpp"
#include "ifm/full_sim.hpp"

namespace ifm {

namespace {

struct Evaluation {
  double d_lower;
  double disc;
  double objective;
};

class AngleObjective {
 public:
  AngleObjective(const InteractionModel& model, double eps_target,
                 std::size_t steps, const OptimizeOptions& opts)
      : model_(model), eps_target_(eps_target), opts_(opts) {
    ProtocolSchedule probe = build_rotation_schedule(
        std::vector<double>(steps, 0.0), model_);
    use_full_ = full_sim_feasible(probe, model_, opts_.full_sim_dim_cap);
  }

  Evaluation eval(const std::vector<double>& angles) const {
    const ProtocolSchedule s = build_rotation_schedule(angles, model_);
    const Trajectory t0 = run_effective(s, nullptr);
    const Trajectory t1 = run_effective(s, &model_.a1);
    double disc;
    if (use_full_) {
      const auto f0 = run_full(s, model_, 0, opts_.full_sim_dim_cap);
      const auto f1 = run_full(s, model_, 1, opts_.full_sim_dim_cap);
      disc = discriminability(t0, t1, &f0.back(), &f1.back());
    } else {
      disc = discriminability(t0, t1);
    }
    Evaluation e;
    e.d_lower = t1.final().distortion_lower;
    e.disc = disc;
    const double short_fall = std::max(0.0, (1.0 - eps_target_) - disc);
    e.objective = e.d_lower + opts_.penalty * short_fall * short_fall;
    return e;
  }

  bool used_full_sim() const { return use_full_; }

 private:
  const InteractionModel& model_;
  double eps_target_;
  OptimizeOptions opts_;
  bool use_full_ = false;
};

// Golden-section search for the minimum of f on [lo, hi].
template <typename F>
double golden_min(F&& f, double lo, double hi, std::size_t iters = 40) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (std::size_t i = 0; i < iters; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

}  // namespace

OptimizeResult optimize_schedule(std::size_t steps,
                                 const InteractionModel& model,
                                 double eps_target, std::uint64_t seed,
                                 const OptimizeOptions& opts) {
  if (steps == 0) throw std::domain_error("optimize_schedule: T >= 1");
  if (!(eps_target >= 0.0 && eps_target < 1.0))
    throw std::domain_error("optimize_schedule: eps_target must be in [0, 1)");
  if (adversary_floor(model.big_c, eps_target, steps) >= 1.0)
    throw std::domain_error(
        "optimize_schedule: infeasible target — the adversary floor exceeds "
        "the largest possible distortion");

  const AngleObjective objective(model, eps_target, steps, opts);
  const double pi = std::numbers::pi;
  const double uniform = pi / (2.0 * static_cast<double>(steps));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(0.0, pi);

  std::vector<double> best_angles(steps, uniform);
  Evaluation best = objective.eval(best_angles);

  for (std::size_t start = 0; start <= opts.restarts; ++start) {
    std::vector<double> angles(steps, uniform);
    if (start > 0)
      for (auto& a : angles) a = jitter(rng);
    Evaluation cur = objective.eval(angles);

    for (std::size_t sweep = 0; sweep < opts.sweeps; ++sweep) {
      for (std::size_t t = 0; t < steps; ++t) {
        const double keep = angles[t];
        const double candidate = golden_min(
            [&](double a) {
              angles[t] = a;
              return objective.eval(angles).objective;
            },
            0.0, pi);
        angles[t] = candidate;
        const Evaluation trial = objective.eval(angles);
        if (trial.objective < cur.objective) {
          cur = trial;
        } else {
          angles[t] = keep;
        }
      }
    }
    if (cur.objective < best.objective) {
      best = cur;
      best_angles = angles;
    }
  }

  OptimizeResult out;
  out.schedule = build_rotation_schedule(best_angles, model);
  out.angles = std::move(best_angles);
  out.d_lower = best.d_lower;
  out.disc = best.disc;
  out.eps_achieved = std::min(1.0, std::max(0.0, 1.0 - best.disc));
  out.floor_value = adversary_floor(model.big_c, out.eps_achieved, steps);
  out.used_full_sim = objective.used_full_sim();
  return out;
}

}  // namespace ifm
