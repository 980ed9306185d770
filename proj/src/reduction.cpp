#include "ifm/reduction.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "ifm/linalg.hpp"

namespace ifm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t count_nonscalar(const std::vector<ComplexMatrix>& ms, double tol) {
  std::size_t n = 0;
  for (const auto& m : ms)
    if (!is_scalar(m, tol)) ++n;
  return n;
}

bool pairwise_commuting(const std::vector<ComplexMatrix>& ms, double tol) {
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (commutator_norm(ms[i], ms[j]) > tol) return false;
  return true;
}

double phase_of_scalar(const ComplexMatrix& m) {
  const cx mean = m.trace() / cx(static_cast<double>(m.rows()), 0.0);
  double p = std::arg(mean);
  if (p < 0) p += kTwoPi;
  return p;
}

// Flattened gate stream for the nested transform: level ℓ wraps the previous
// level's stream in the d shift-phase conjugations of step ℓ.
std::vector<CompiledToken> compile_tokens(
    const std::vector<ReductionStep>& steps, const ComplexMatrix& normalizer,
    std::size_t d) {
  std::vector<CompiledToken> stream;
  stream.push_back({CompiledToken::Kind::kControlledGate, normalizer});
  stream.push_back({CompiledToken::Kind::kCall, ComplexMatrix()});
  for (const auto& step : steps) {
    UnitaryEigensystem eig;
    eig.phases = step.eigenphases;
    eig.vectors = step.eigenbasis;
    std::vector<CompiledToken> wrapped;
    for (std::size_t k = 0; k < d; ++k) {
      const ComplexMatrix x = shift_phase_operator(eig, step.lambda.rows[k], k);
      wrapped.push_back({CompiledToken::Kind::kTargetGate, x});
      wrapped.insert(wrapped.end(), stream.begin(), stream.end());
      wrapped.push_back({CompiledToken::Kind::kTargetGate, x.adjoint()});
    }
    stream = std::move(wrapped);
  }
  return stream;
}

}  // namespace

ComplexMatrix ReductionProgram::apply_to(const ComplexMatrix& u) const {
  ComplexMatrix branch = ComplexMatrix::identity(d);
  for (const auto& token : compiled) {
    switch (token.kind) {
      case CompiledToken::Kind::kTargetGate:
      case CompiledToken::Kind::kControlledGate:
        branch = token.gate * branch;
        break;
      case CompiledToken::Kind::kCall:
        branch = u * branch;
        break;
    }
  }
  return branch;
}

ReductionProgram reduce_family(const UnitaryFamily& normalized,
                               const ComplexMatrix& normalizer,
                               std::uint64_t seed, const ReduceOptions& opts) {
  validate_family(normalized, 1e-8, false);
  ReductionProgram prog;
  prog.d = normalized.d;
  prog.labels = normalized.labels;
  prog.normalizer = normalizer;

  std::vector<ComplexMatrix> current = normalized.members;
  std::size_t nonscalar = count_nonscalar(current, opts.scalar_tol);
  const std::size_t max_layers = nonscalar;
  std::mt19937_64 seeder(seed);

  std::size_t layer = 0;
  while (!pairwise_commuting(current, opts.commute_tol)) {
    if (layer >= max_layers) {
      std::ostringstream msg;
      msg << "reduce_family: family still non-commutative after " << layer
          << " layers (non-scalar count " << nonscalar
          << "); the layer count may never exceed the initial non-scalar "
             "count";
      throw VerificationError(msg.str());
    }

    // The pivot is the first non-scalar member with a non-commuting partner;
    // such a pivot exists because any non-commuting pair is non-scalar on
    // both sides.
    std::size_t pivot = current.size();
    std::size_t partner = current.size();
    for (std::size_t i = 0; i < current.size() && pivot == current.size();
         ++i) {
      if (is_scalar(current[i], opts.scalar_tol)) continue;
      for (std::size_t j = 0; j < current.size(); ++j) {
        if (j == i) continue;
        if (commutator_norm(current[i], current[j]) > opts.commute_tol) {
          pivot = i;
          partner = j;
          break;
        }
      }
    }
    if (pivot == current.size())
      throw VerificationError(
          "reduce_family: non-commutative family without a usable pivot");

    const UnitaryEigensystem eig = eig_unitary(current[pivot], 1e-8);
    const LambdaSearchResult found = find_nonscalar_lambda(
        current[pivot], current[partner], seeder(), opts.lambda_tol,
        opts.lambda_max_tries);

    ReductionStep step;
    step.theta = prog.labels[pivot];
    step.lambda = found.lambda;
    step.eigenbasis = eig.vectors;
    step.eigenphases = eig.phases;

    std::vector<ComplexMatrix> next;
    next.reserve(current.size());
    for (const auto& m : current)
      next.push_back(f_transform(eig, step.lambda, m));

    const std::size_t next_nonscalar = count_nonscalar(next, opts.scalar_tol);
    if (next_nonscalar == 0 || next_nonscalar >= nonscalar) {
      std::ostringstream msg;
      msg << "reduce_family: layer " << layer + 1
          << " did not strictly shrink the non-scalar count (" << nonscalar
          << " -> " << next_nonscalar << ")";
      throw VerificationError(msg.str());
    }
    current = std::move(next);
    nonscalar = next_nonscalar;
    prog.steps.push_back(std::move(step));
    ++layer;
  }

  prog.reduced.d = prog.d;
  prog.reduced.labels = prog.labels;
  prog.reduced.members = current;

  // θ*: the first non-scalar member; for all-scalar families the first
  // member whose global phase differs from the identity's, with pairwise
  // distinct phases required so the controlled form can still separate them.
  std::string star;
  for (std::size_t i = 0; i < current.size(); ++i)
    if (!is_scalar(current[i], opts.scalar_tol)) {
      star = prog.labels[i];
      break;
    }
  if (star.empty()) {
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        const double gap = std::abs(std::polar(1.0, phase_of_scalar(current[i])) -
                                    std::polar(1.0, phase_of_scalar(current[j])));
        if (gap < opts.scalar_tol)
          throw VerificationError(
              "reduce_family: two candidates reduced to the same scalar; "
              "labels '" + prog.labels[i] + "' and '" + prog.labels[j] + "'");
      }
    for (std::size_t i = 0; i < current.size(); ++i) {
      const double gap =
          std::abs(std::polar(1.0, phase_of_scalar(current[i])) - cx{1.0, 0.0});
      if (gap > opts.scalar_tol) {
        star = prog.labels[i];
        break;
      }
    }
    if (star.empty())
      throw VerificationError(
          "reduce_family: all-scalar family with no non-identity phase");
  }
  prog.theta_star = star;

  prog.compiled = compile_tokens(prog.steps, prog.normalizer, prog.d);
  prog.calls_per_application = 1;
  for (std::size_t i = 0; i < prog.steps.size(); ++i)
    prog.calls_per_application *= prog.d;
  return prog;
}

CommonEigensystem common_eigenvectors(const UnitaryFamily& reduced,
                                      double commute_tol,
                                      double residual_tol) {
  const std::size_t d = reduced.d;
  for (std::size_t i = 0; i < reduced.size(); ++i)
    if (reduced.members[i].rows() != d || !is_unitary(reduced.members[i], 1e-7))
      throw VerificationError("common_eigenvectors: member '" +
                              reduced.labels[i] + "' is not unitary");
  if (!pairwise_commuting(reduced.members, commute_tol))
    throw VerificationError(
        "common_eigenvectors: family is not pairwise commuting");

  // A random Hermitian combination H = Σ w_θ M_θ + h.c. shares the joint
  // eigenspaces and splits them apart almost surely; the labeled eigenbasis
  // comes from the unitary e^{iH/s} so the canonical Schur path applies.
  // Deterministic weights; retry with the next draw if the residual check
  // fails.
  std::mt19937_64 rng(0x9d2c5680cafef00dULL);
  std::uniform_real_distribution<double> unit(0.2, 1.0);
  for (std::size_t attempt = 0; attempt < 8; ++attempt) {
    ComplexMatrix mix(d, d);
    for (const auto& m : reduced.members) {
      const cx w{unit(rng), unit(rng)};
      mix += w * m;
      mix += std::conj(w) * m.adjoint();
    }
    const double scale = mix.frobenius_norm() + 1.0;
    // exp(i·mix/scale) by power series; at norm ≤ 1 the 24-term tail is
    // below 1e−23.
    ComplexMatrix expm = ComplexMatrix::identity(d);
    {
      ComplexMatrix term = ComplexMatrix::identity(d);
      for (int n = 1; n <= 24; ++n) {
        term = term * mix;
        term *= cx{0.0, 1.0} / cx{scale * static_cast<double>(n), 0.0};
        expm += term;
      }
    }
    UnitaryEigensystem eig;
    try {
      eig = eig_unitary(expm, 1e-6);
    } catch (const std::invalid_argument&) {
      continue;
    }

    // Verify simultaneous diagonalization and read off the phases.
    CommonEigensystem out;
    out.basis = eig.vectors;
    out.phase_table.assign(reduced.size(), std::vector<double>(d, 0.0));
    double worst = 0.0;
    for (std::size_t m = 0; m < reduced.size(); ++m) {
      const ComplexMatrix diag =
          eig.vectors.adjoint() * reduced.members[m] * eig.vectors;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          if (r != c) worst = std::max(worst, std::abs(diag(r, c)));
      for (std::size_t j = 0; j < d; ++j) {
        double p = std::arg(diag(j, j));
        if (p < 0) p += kTwoPi;
        if (p >= kTwoPi) p = 0.0;
        out.phase_table[m][j] = p;
      }
    }
    if (worst <= residual_tol) return out;
  }
  throw VerificationError(
      "common_eigenvectors: diagonalization residual too large after seeded "
      "retries");
}

}  // namespace ifm
