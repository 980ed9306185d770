#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ifm/complex_matrix.hpp"
#include "ifm/state_vector.hpp"

namespace ifm {

// Textbook phase estimation, simulated gate by gate: Hadamards on the
// ancilla register, controlled powers of the unitary on the prepared
// eigenstate, inverse Fourier transform, readout. Outcome m estimates the
// eigenphase as m/2^n turns.
struct QpeResult {
  std::size_t ancillas = 0;
  std::vector<double> distribution;  // P(m), m = 0 … 2^n − 1
  std::size_t mode = 0;              // most likely outcome
  std::optional<std::size_t> sampled;
  double phase_estimate = 0.0;       // (sampled or mode) / 2^n, in turns
  double eigenstate_distortion = 0;  // trace distance of the target after
                                     // the circuit vs the input eigenstate
};

// `eigenstate` must actually be an eigenvector of u (residual ≤ 1e−8);
// anything else would distort the target and is rejected.
QpeResult qpe(const ComplexMatrix& u, const std::vector<cx>& eigenstate,
              std::size_t ancillas,
              std::optional<std::uint64_t> sample_seed = std::nullopt);

}  // namespace ifm
