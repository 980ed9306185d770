#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ifm/complex_matrix.hpp"
#include "ifm/f_transform.hpp"
#include "ifm/family.hpp"

namespace ifm {

// Verification problems in the reduction pipeline are reported with
// diagnostics and never silently accepted.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
};

// One conjugation layer: transform the current family by F_{U_θ, Λ}, using
// the recorded labeled eigenbasis of the current member θ.
struct ReductionStep {
  std::string theta;
  LambdaBlock lambda;
  ComplexMatrix eigenbasis;        // columns, snapshot used for the X gates
  std::vector<double> eigenphases;
};

// Gate stream realizing one application of the compiled transform to the
// controlled blackbox. TargetGate acts on the target space on both control
// branches; ControlledGate is a known gate applied in controlled form (the
// family normalizer); Call is one use of the unknown c−U.
struct CompiledToken {
  enum class Kind { kTargetGate, kControlledGate, kCall } kind;
  ComplexMatrix gate;  // empty for Call
};

struct ReductionProgram {
  std::size_t d = 0;
  std::vector<std::string> labels;      // the active candidate set, in order
  std::vector<ReductionStep> steps;
  ComplexMatrix normalizer;             // U_{θ₀}†, applied before every call
  std::vector<CompiledToken> compiled;  // flattened gate stream
  UnitaryFamily reduced;                // images of the active members
  std::string theta_star;               // this round's hypothesis label
  std::size_t calls_per_application = 1;  // d^{#steps}

  // Resolves the compiled stream on a candidate: the operator the target
  // space sees on the triggering control branch.
  ComplexMatrix apply_to(const ComplexMatrix& u) const;
};

struct ReduceOptions {
  double commute_tol = 1e-9;
  double scalar_tol = 1e-8;
  double lambda_tol = 1e-8;
  std::size_t lambda_max_tries = 50;
};

// Conjugates the normalized family layer by layer until it is pairwise
// commuting, strictly shrinking the non-scalar count each layer. The result
// carries either at least one non-scalar member (θ* is the first of them)
// or, for families of scalars, pairwise distinct global phases with θ* the
// first non-identity label. Anything else raises VerificationError.
ReductionProgram reduce_family(const UnitaryFamily& normalized,
                               const ComplexMatrix& normalizer,
                               std::uint64_t seed,
                               const ReduceOptions& opts = {});

// Simultaneous eigenbasis of a verified-commuting family, with the phase
// table φ_θ(e_j) read off the diagonal.
struct CommonEigensystem {
  ComplexMatrix basis;                           // orthonormal columns
  std::vector<std::vector<double>> phase_table;  // [member][column]
};

CommonEigensystem common_eigenvectors(const UnitaryFamily& reduced,
                                      double commute_tol = 1e-9,
                                      double residual_tol = 1e-8);

}  // namespace ifm
