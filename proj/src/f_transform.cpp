#include "ifm/f_transform.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ifm {

ComplexMatrix shift_phase_operator(const UnitaryEigensystem& eig,
                                   const PhaseVector& lambda, std::size_t k) {
  const std::size_t d = eig.phases.size();
  if (lambda.size() != d)
    throw std::invalid_argument("shift_phase_operator: phase vector size");
  if (k >= d) throw std::invalid_argument("shift_phase_operator: k < d");
  ComplexMatrix x(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t shifted = (i + k) % d;
    const cx phase = std::polar(1.0, lambda[i]);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        x(r, c) += phase * eig.vectors(r, shifted) *
                   std::conj(eig.vectors(c, i));
  }
  return x;
}

ComplexMatrix shift_phase_operator(const ComplexMatrix& u,
                                   const PhaseVector& lambda, std::size_t k) {
  return shift_phase_operator(eig_unitary(u), lambda, k);
}

ComplexMatrix f_transform(const UnitaryEigensystem& eig,
                          const LambdaBlock& lambda,
                          const ComplexMatrix& uprime) {
  const std::size_t d = eig.phases.size();
  if (uprime.rows() != d || !uprime.square())
    throw std::invalid_argument("f_transform: dimension mismatch");
  if (lambda.d() != d)
    throw std::invalid_argument("f_transform: lambda block needs d rows");
  ComplexMatrix out = ComplexMatrix::identity(d);
  for (std::size_t k = 0; k < d; ++k) {
    const ComplexMatrix x = shift_phase_operator(eig, lambda.rows[k], k);
    out = (x.adjoint() * uprime * x) * out;  // layer k applies after k−1
  }
  return out;
}

ComplexMatrix f_transform(const ComplexMatrix& u, const LambdaBlock& lambda,
                          const ComplexMatrix& uprime) {
  return f_transform(eig_unitary(u), lambda, uprime);
}

LambdaSearchResult find_nonscalar_lambda(const ComplexMatrix& u,
                                         const ComplexMatrix& uprime,
                                         std::uint64_t seed, double tol,
                                         std::size_t max_tries) {
  if (commutator_norm(u, uprime) <= tol)
    throw std::invalid_argument(
        "find_nonscalar_lambda: inputs commute; the transform of a commuting "
        "pair is always scalar");
  const UnitaryEigensystem eig = eig_unitary(u);
  const std::size_t d = eig.phases.size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
  for (std::size_t attempt = 1; attempt <= max_tries; ++attempt) {
    LambdaBlock lambda = LambdaBlock::zeros(d);
    for (auto& row : lambda.rows)
      for (auto& p : row) p = uniform(rng);
    if (!is_scalar(f_transform(eig, lambda, uprime), tol))
      return {std::move(lambda), attempt};
  }
  throw std::runtime_error(
      "find_nonscalar_lambda: exhausted " + std::to_string(max_tries) +
      " samples; the failure set has measure zero, so this indicates a "
      "mis-specified input");
}

}  // namespace ifm
