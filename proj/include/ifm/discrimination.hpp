#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ifm/complex_matrix.hpp"
#include "ifm/reduction.hpp"

namespace ifm {

// One elimination round, fully planned: which eigenvectors carry the phase
// kick, how many fresh control qubits are spent, and the acceptance state
// for the hypothesis θ*.
//
// A shot prepares the target in a common eigenvector e_j, runs the compiled
// transform controlled on a fresh qubit, and leaves (|0⟩+e^{iφ_θ(e_j)}|1⟩)/√2
// on that qubit with the target back in e_j. Measuring every qubit against
// the θ* hypothesis factor is the rank-1 product projector; the reject
// outcome has exactly zero amplitude when θ = θ*, and a competitor survives
// all N·|S| factors with probability q^N, q = Π_j cos²(Δ_j/2).
struct RoundPlan {
  std::vector<std::string> active;
  ReductionProgram program;
  CommonEigensystem eigen;
  std::vector<std::size_t> selected;     // eigenvector column indices S
  std::vector<double> star_phases;       // φ_{θ*}(e_j) for j ∈ S
  double worst_overlap = 0.0;            // q_max over active competitors
  double delta_min = 0.0;                // joint gap: q_max = cos²(Δ_min/2)
  std::size_t repetitions = 1;           // N
  double error_bound = 0.0;              // q_max^N ≤ δ
  double delta = 0.0;
};

RoundPlan plan_round(ReductionProgram program, double delta);

struct RoundTranscript {
  std::vector<std::string> active;
  std::string theta_star;
  std::size_t repetitions = 0;
  std::size_t selected_count = 0;
  std::size_t calls = 0;
  bool accepted = false;
  double accept_probability = 0.0;   // exact probability for the hidden box
  double error_bound = 0.0;
  double delta_min = 0.0;
  double max_checkpoint_distortion = 0.0;  // at transform-block boundaries
  double max_midblock_distortion = 0.0;    // inside blocks; reported, not judged
  std::optional<double> reject_probability_if_star;
};

struct Transcript {
  std::string hidden;
  std::string estimate;
  std::uint64_t seed = 0;
  double delta = 0.0;
  std::vector<RoundTranscript> rounds;
  std::size_t total_calls = 0;
  double max_checkpoint_distortion = 0.0;
  double max_midblock_distortion = 0.0;
  double accepted_round_error = 0.0;  // error bound of the accepting round
  bool misidentified = false;
};

// Carried target-space state: the simulated amplitudes plus the analytic
// reference every preparation gate is defined against (θ-independent).
struct TargetThread {
  std::vector<cx> state;
  std::vector<cx> reference;
};

RoundTranscript run_round(const RoundPlan& plan, const ComplexMatrix& hidden_u,
                          std::mt19937_64& rng, TargetThread& thread);

// Plans are a function of the candidate set alone, so sweeps over many run
// seeds share them.
using PlanCache = std::map<std::vector<std::string>, RoundPlan>;

// Sequential elimination: at most k−1 one-sided rounds, each re-reducing the
// original family restricted to the surviving labels. Misidentification
// probability is at most (k−1)·delta end to end.
Transcript discriminate(const UnitaryFamily& fam, const std::string& hidden,
                        double delta, std::uint64_t run_seed,
                        std::uint64_t plan_seed = 0, PlanCache* cache = nullptr);

// Maximum checkpoint distortion of a completed transcript.
double distortion_audit(const Transcript& transcript);

}  // namespace ifm
