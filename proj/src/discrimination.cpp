#include "ifm/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ifm/linalg.hpp"

namespace ifm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double circular_gap(double a, double b) {
  double g = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(g, kTwoPi - g);
}

// Per-shot survival probability of competitor phases against the hypothesis
// phases over the selected eigenvectors.
double shot_overlap(const std::vector<double>& competitor,
                    const std::vector<double>& star,
                    const std::vector<std::size_t>& selected) {
  double q = 1.0;
  for (std::size_t idx = 0; idx < selected.size(); ++idx) {
    const double gap = circular_gap(competitor[selected[idx]],
                                    star[selected[idx]]);
    const double c = std::cos(gap / 2.0);
    q *= c * c;
  }
  return q;
}

std::vector<cx> column_of(const ComplexMatrix& m, std::size_t col) {
  std::vector<cx> v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, col);
  return v;
}

double pure_trace_distance(const std::vector<cx>& a, const std::vector<cx>& b) {
  cx ov{0.0, 0.0};
  double na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ov += std::conj(a[i]) * b[i];
    na += std::norm(a[i]);
    nb += std::norm(b[i]);
  }
  const double fid = std::norm(ov) / std::max(na * nb, 1e-300);
  return 2.0 * std::sqrt(std::max(0.0, 1.0 - fid));
}

// Trace distance between a d×d density matrix and a pure reference.
double mixed_trace_distance(const ComplexMatrix& rho,
                            const std::vector<cx>& ref) {
  ComplexMatrix proj(ref.size(), ref.size());
  for (std::size_t r = 0; r < ref.size(); ++r)
    for (std::size_t c = 0; c < ref.size(); ++c)
      proj(r, c) = ref[r] * std::conj(ref[c]);
  return trace_distance_hermitian(rho, proj);
}

std::uint64_t mix_seed(std::uint64_t base,
                       const std::vector<std::string>& labels) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ base;
  auto feed = [&h](unsigned char byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  for (const auto& l : labels) {
    for (unsigned char c : l) feed(c);
    feed(0x1f);
  }
  return h;
}

}  // namespace

RoundPlan plan_round(ReductionProgram program, double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("plan_round: delta must lie in (0, 1)");
  RoundPlan plan;
  plan.active = program.labels;
  plan.eigen = common_eigenvectors(program.reduced);
  plan.delta = delta;

  const std::size_t d = program.d;
  const std::size_t star = program.reduced.index_of(program.theta_star);
  std::vector<std::size_t> competitors;
  for (std::size_t m = 0; m < program.reduced.size(); ++m)
    if (m != star) competitors.push_back(m);
  if (competitors.empty())
    throw std::invalid_argument("plan_round: nothing to discriminate against");

  const auto& table = plan.eigen.phase_table;

  // Greedy eigenvector selection: start with the single column that keeps
  // the worst competitor as far away as possible, then grow until no
  // competitor can imitate the hypothesis phases exactly. A competitor that
  // matches θ* on every column of the common basis would be the same matrix.
  auto worst_q = [&](const std::vector<std::size_t>& sel) {
    double q = 0.0;
    for (std::size_t m : competitors)
      q = std::max(q, shot_overlap(table[m], table[star], sel));
    return q;
  };

  std::size_t best_single = 0;
  double best_single_q = 2.0;
  for (std::size_t j = 0; j < d; ++j) {
    const double q = worst_q({j});
    if (q < best_single_q) {
      best_single_q = q;
      best_single = j;
    }
  }
  plan.selected = {best_single};

  constexpr double kCollision = 1.0 - 1e-12;
  while (worst_q(plan.selected) >= kCollision) {
    // Find the colliding competitor and the column separating it best.
    std::size_t offender = competitors.front();
    for (std::size_t m : competitors)
      if (shot_overlap(table[m], table[star], plan.selected) >= kCollision)
        offender = m;
    std::size_t grow = d;
    double grow_gap = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      bool used = false;
      for (std::size_t s : plan.selected) used = used || (s == j);
      if (used) continue;
      const double gap = circular_gap(table[offender][j], table[star][j]);
      if (gap > grow_gap) {
        grow_gap = gap;
        grow = j;
      }
    }
    if (grow == d || grow_gap <= 1e-9) {
      std::ostringstream msg;
      msg << "plan_round: candidate '" << program.reduced.labels[offender]
          << "' matches the hypothesis '" << program.theta_star
          << "' on every usable eigenphase; the reduced members coincide";
      throw VerificationError(msg.str());
    }
    plan.selected.push_back(grow);
  }

  plan.worst_overlap = worst_q(plan.selected);
  plan.delta_min =
      2.0 * std::acos(std::sqrt(std::min(1.0, plan.worst_overlap)));

  if (plan.worst_overlap <= 1e-300) {
    plan.repetitions = 1;  // orthogonal hypothesis: single shot is perfect
  } else {
    const double n = std::log(1.0 / delta) / std::log(1.0 / plan.worst_overlap);
    plan.repetitions = static_cast<std::size_t>(std::max(1.0, std::ceil(n)));
  }
  plan.error_bound = std::pow(plan.worst_overlap, plan.repetitions);

  plan.star_phases.clear();
  for (std::size_t j : plan.selected)
    plan.star_phases.push_back(table[star][j]);
  plan.program = std::move(program);
  return plan;
}

RoundTranscript run_round(const RoundPlan& plan, const ComplexMatrix& hidden_u,
                          std::mt19937_64& rng, TargetThread& thread) {
  const std::size_t d = plan.program.d;
  if (hidden_u.rows() != d)
    throw std::invalid_argument("run_round: blackbox dimension mismatch");

  RoundTranscript rec;
  rec.active = plan.active;
  rec.theta_star = plan.program.theta_star;
  rec.repetitions = plan.repetitions;
  rec.selected_count = plan.selected.size();
  rec.error_bound = plan.error_bound;
  rec.delta_min = plan.delta_min;

  std::uniform_real_distribution<double> coin(0.0, 1.0);
  double survive = 1.0;
  bool rejected = false;

  for (std::size_t n = 0; n < plan.repetitions && !rejected; ++n) {
    for (std::size_t idx = 0; idx < plan.selected.size() && !rejected; ++idx) {
      const std::vector<cx> target =
          column_of(plan.eigen.basis, plan.selected[idx]);

      // θ-independent preparation: defined against the analytic reference,
      // applied to the simulated state.
      const ComplexMatrix prep = mapping_unitary(thread.reference, target);
      thread.state = matvec(prep, thread.state);
      thread.reference = matvec(prep, thread.reference);
      // The reference chain is exact by construction; re-pin it to the
      // eigenvector so phase conventions do not drift.
      thread.reference = target;

      // Joint control⊗target factor: branches start equal.
      std::vector<cx> bypass(thread.state), boxed(thread.state);
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      for (auto& v : bypass) v *= inv_sqrt2;
      for (auto& v : boxed) v *= inv_sqrt2;

      ComplexMatrix bypass_gates = ComplexMatrix::identity(d);
      for (const auto& token : plan.program.compiled) {
        switch (token.kind) {
          case CompiledToken::Kind::kTargetGate:
            bypass = matvec(token.gate, bypass);
            boxed = matvec(token.gate, boxed);
            bypass_gates = token.gate * bypass_gates;
            break;
          case CompiledToken::Kind::kControlledGate:
            boxed = matvec(token.gate, boxed);
            break;
          case CompiledToken::Kind::kCall:
            boxed = matvec(hidden_u, boxed);
            ++rec.calls;
            break;
        }
        // Mid-block state of the target space, against the gate-only branch.
        ComplexMatrix rho(d, d);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c)
            rho(r, c) = bypass[r] * std::conj(bypass[c]) +
                        boxed[r] * std::conj(boxed[c]);
        const std::vector<cx> mid_ref = matvec(bypass_gates, thread.reference);
        rec.max_midblock_distortion = std::max(
            rec.max_midblock_distortion, mixed_trace_distance(rho, mid_ref));
      }

      // Block boundary: the target returns to the prepared eigenvector.
      {
        ComplexMatrix rho(d, d);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c)
            rho(r, c) = bypass[r] * std::conj(bypass[c]) +
                        boxed[r] * std::conj(boxed[c]);
        rec.max_checkpoint_distortion =
            std::max(rec.max_checkpoint_distortion,
                     mixed_trace_distance(rho, thread.reference));
      }

      // Measure this control qubit against the hypothesis factor
      // (|0⟩ + e^{iφ*}|1⟩)/√2; the product over qubits is the rank-1
      // acceptance projector.
      const cx hyp = std::polar(1.0, plan.star_phases[idx]);
      std::vector<cx> accept_state(d), reject_state(d);
      double p_accept = 0.0;
      for (std::size_t r = 0; r < d; ++r) {
        accept_state[r] = inv_sqrt2 * (bypass[r] + std::conj(hyp) * boxed[r]);
        reject_state[r] = inv_sqrt2 * (bypass[r] - std::conj(hyp) * boxed[r]);
        p_accept += std::norm(accept_state[r]);
      }
      survive *= p_accept;

      const bool factor_accepts = coin(rng) < p_accept;
      const std::vector<cx>& collapsed =
          factor_accepts ? accept_state : reject_state;
      const double pnorm = factor_accepts ? p_accept : 1.0 - p_accept;
      thread.state = collapsed;
      const double inv = 1.0 / std::sqrt(std::max(pnorm, 1e-300));
      for (auto& v : thread.state) v *= inv;

      rec.max_checkpoint_distortion =
          std::max(rec.max_checkpoint_distortion,
                   pure_trace_distance(thread.state, thread.reference));
      if (!factor_accepts) rejected = true;
    }
  }

  rec.accepted = !rejected;
  rec.accept_probability = survive;
  return rec;
}

Transcript discriminate(const UnitaryFamily& fam, const std::string& hidden,
                        double delta, std::uint64_t run_seed,
                        std::uint64_t plan_seed, PlanCache* cache) {
  validate_family(fam);
  const ComplexMatrix& hidden_u = fam.member(hidden);

  Transcript tr;
  tr.hidden = hidden;
  tr.seed = run_seed;
  tr.delta = delta;

  std::mt19937_64 rng(run_seed);
  std::vector<std::string> active = fam.labels;

  TargetThread thread;
  thread.state.assign(fam.d, cx{0.0, 0.0});
  thread.state[0] = cx{1.0, 0.0};
  thread.reference = thread.state;

  while (active.size() > 1) {
    const RoundPlan* plan = nullptr;
    RoundPlan local;
    if (cache) {
      auto it = cache->find(active);
      if (it != cache->end()) plan = &it->second;
    }
    if (!plan) {
      const UnitaryFamily sub = fam.restricted(active);
      const std::string theta0 = active.front();
      const UnitaryFamily norm = normalize_family(sub, theta0);
      const ComplexMatrix normalizer = sub.member(theta0).adjoint();
      ReductionProgram prog =
          reduce_family(norm, normalizer, mix_seed(plan_seed, active));
      local = plan_round(std::move(prog), delta);
      if (cache) {
        plan = &cache->emplace(active, std::move(local)).first->second;
      } else {
        plan = &local;
      }
    }

    RoundTranscript round = run_round(*plan, hidden_u, rng, thread);
    if (hidden == round.theta_star)
      round.reject_probability_if_star = 1.0 - round.accept_probability;

    tr.total_calls += round.calls;
    tr.max_checkpoint_distortion = std::max(tr.max_checkpoint_distortion,
                                            round.max_checkpoint_distortion);
    tr.max_midblock_distortion =
        std::max(tr.max_midblock_distortion, round.max_midblock_distortion);

    const bool accepted = round.accepted;
    const std::string star = round.theta_star;
    tr.rounds.push_back(std::move(round));

    if (accepted) {
      tr.estimate = star;
      tr.accepted_round_error = tr.rounds.back().error_bound;
      tr.misidentified = tr.estimate != hidden;
      return tr;
    }
    active.erase(std::find(active.begin(), active.end(), star));
  }

  tr.estimate = active.front();
  tr.accepted_round_error = 0.0;
  tr.misidentified = tr.estimate != hidden;
  return tr;
}

double distortion_audit(const Transcript& transcript) {
  return transcript.max_checkpoint_distortion;
}

}  // namespace ifm
