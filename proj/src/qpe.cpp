#include "ifm/qpe.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "ifm/linalg.hpp"
#include "ifm/tensor_ops.hpp"

namespace ifm {

namespace {

ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return ComplexMatrix{{cx{s, 0}, cx{s, 0}}, {cx{s, 0}, cx{-s, 0}}};
}

ComplexMatrix controlled(const ComplexMatrix& u) {
  const std::size_t d = u.rows();
  ComplexMatrix c(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) c(i, i) = cx{1.0, 0.0};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c(d + i, d + j) = u(i, j);
  return c;
}

ComplexMatrix inverse_qft(std::size_t dim) {
  ComplexMatrix f(dim, dim);
  const double s = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const double angle = -2.0 * std::numbers::pi *
                           static_cast<double>(r) * static_cast<double>(c) /
                           static_cast<double>(dim);
      f(r, c) = std::polar(s, angle);
    }
  return f;
}

}  // namespace

QpeResult qpe(const ComplexMatrix& u, const std::vector<cx>& eigenstate,
              std::size_t ancillas, std::optional<std::uint64_t> sample_seed) {
  if (!u.square() || u.rows() != eigenstate.size())
    throw std::invalid_argument("qpe: unitary / eigenstate dimension mismatch");
  if (!is_unitary(u, 1e-10))
    throw std::invalid_argument("qpe: operator is not unitary");
  if (ancillas == 0 || ancillas > 16)
    throw std::invalid_argument("qpe: ancilla count out of range");

  const std::size_t d = u.rows();
  // Rayleigh residual: reject states the circuit would actually distort.
  {
    const std::vector<cx> image = matvec(u, eigenstate);
    cx lambda{0.0, 0.0};
    double nn = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      lambda += std::conj(eigenstate[i]) * image[i];
      nn += std::norm(eigenstate[i]);
    }
    if (std::abs(nn - 1.0) > 1e-8)
      throw std::invalid_argument("qpe: eigenstate must be normalized");
    double resid = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      resid += std::norm(image[i] - lambda * eigenstate[i]);
    if (std::sqrt(resid) > 1e-8)
      throw std::invalid_argument(
          "qpe: input is not an eigenstate (residual " +
          std::to_string(std::sqrt(resid)) + "); it would be distorted");
  }

  std::vector<std::pair<std::string, std::size_t>> regs;
  std::vector<std::string> anc_names;
  for (std::size_t j = 1; j <= ancillas; ++j) {
    anc_names.push_back("anc" + std::to_string(j));
    regs.emplace_back(anc_names.back(), 2);
  }
  regs.emplace_back("I", d);
  const RegisterLayout layout(regs);

  // |0…0⟩ ⊗ eigenstate
  std::vector<cx> amps(layout.total_dim(), cx{0.0, 0.0});
  for (std::size_t i = 0; i < d; ++i) amps[i] = eigenstate[i];
  StateVector psi(layout, std::move(amps));

  const ComplexMatrix h = hadamard();
  for (const auto& name : anc_names) apply_operator(psi, h, {name});

  // anc_j is the j-th most significant readout bit and controls u^(2^{n−j}).
  ComplexMatrix power = u;
  for (std::size_t j = ancillas; j-- > 0;) {
    apply_operator(psi, controlled(power), {anc_names[j], "I"});
    if (j > 0) power = power * power;
  }

  const std::size_t grid = std::size_t{1} << ancillas;
  apply_operator(psi, inverse_qft(grid), anc_names);

  QpeResult out;
  out.ancillas = ancillas;
  out.distribution.assign(grid, 0.0);
  for (std::size_t m = 0; m < grid; ++m)
    for (std::size_t i = 0; i < d; ++i)
      out.distribution[m] += std::norm(psi.amplitude(m * d + i));

  out.mode = 0;
  for (std::size_t m = 1; m < grid; ++m)
    if (out.distribution[m] > out.distribution[out.mode]) out.mode = m;

  std::size_t estimate_index = out.mode;
  if (sample_seed) {
    std::mt19937_64 rng(*sample_seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const double draw = coin(rng);
    double acc = 0.0;
    std::size_t picked = grid - 1;
    for (std::size_t m = 0; m < grid; ++m) {
      acc += out.distribution[m];
      if (draw < acc) {
        picked = m;
        break;
      }
    }
    out.sampled = picked;
    estimate_index = picked;
  }
  out.phase_estimate =
      static_cast<double>(estimate_index) / static_cast<double>(grid);

  // The target register must come back exactly where it started.
  const DensityOperator rho = reduced_density(psi, {"I"});
  ComplexMatrix ref(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      ref(r, c) = eigenstate[r] * std::conj(eigenstate[c]);
  out.eigenstate_distortion = trace_distance_hermitian(rho.matrix(), ref);
  return out;
}

}  // namespace ifm
