#pragma once

#include <cstdint>
#include <vector>

#include "ifm/complex_matrix.hpp"
#include "ifm/linalg.hpp"

namespace ifm {

using PhaseVector = std::vector<double>;  // d phases in [0, 2π)

// Λ = (λ⃗₀, …, λ⃗_{d−1}): one phase vector per shift amount.
struct LambdaBlock {
  std::vector<PhaseVector> rows;

  std::size_t d() const { return rows.size(); }
  static LambdaBlock zeros(std::size_t d) {
    return LambdaBlock{std::vector<PhaseVector>(d, PhaseVector(d, 0.0))};
  }
};

// Shift-phase operator on u's labeled eigenbasis {e_i}:
//   Σ_i e^{iλ_i} |e_{i+k mod d}⟩⟨e_i|.
// Permutation-times-phases on an orthonormal basis, hence unitary.
ComplexMatrix shift_phase_operator(const ComplexMatrix& u,
                                   const PhaseVector& lambda, std::size_t k);

// Same, built from a pre-computed eigensystem (keeps the labeled basis
// consistent across the d layers of one transform).
ComplexMatrix shift_phase_operator(const UnitaryEigensystem& eig,
                                   const PhaseVector& lambda, std::size_t k);

// F_{u,Λ}(u') = (X^{d−1})† u' X^{d−1} · … · (X¹)† u' X¹ · (X⁰)† u' X⁰.
// Anything sharing u's eigenvectors collapses to det(u')·1; the identity maps
// to the identity for every Λ.
ComplexMatrix f_transform(const ComplexMatrix& u, const LambdaBlock& lambda,
                          const ComplexMatrix& uprime);
ComplexMatrix f_transform(const UnitaryEigensystem& eig,
                          const LambdaBlock& lambda,
                          const ComplexMatrix& uprime);

// Seeded search for a Λ whose transform keeps u' non-scalar. Requires
// [u, u'] ≠ 0; the failure set has measure zero, so the first sample wins
// almost surely. Throws std::runtime_error after max_tries (never observed).
struct LambdaSearchResult {
  LambdaBlock lambda;
  std::size_t tries = 0;
};
LambdaSearchResult find_nonscalar_lambda(const ComplexMatrix& u,
                                         const ComplexMatrix& uprime,
                                         std::uint64_t seed,
                                         double tol = 1e-8,
                                         std::size_t max_tries = 50);

}  // namespace ifm
