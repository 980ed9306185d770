#include "ifm/interaction_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ifm/linalg.hpp"
#include "ifm/tensor_ops.hpp"

namespace ifm {

namespace {
RegisterLayout ib_layout(std::size_t dim_i, std::size_t dim_bp) {
  return RegisterLayout({{"I", dim_i}, {"Bp", dim_bp}});
}
}  // namespace

ComplexMatrix compressed_operator(const InteractionModel& model) {
  const auto layout = ib_layout(model.dim_i, model.dim_bp);
  ComplexMatrix a(model.dim_i, model.dim_i);
  StateVector bra(RegisterLayout({{"Bp", model.dim_bp}}),
                  model.f.amplitudes());
  for (std::size_t col = 0; col < model.dim_i; ++col) {
    // U₁ (|col⟩_I ⊗ |f⟩), then ⟨f| on the B′ leg.
    std::vector<cx> amps(layout.total_dim(), cx{0.0, 0.0});
    for (std::size_t b = 0; b < model.dim_bp; ++b)
      amps[col * model.dim_bp + b] = model.f.amplitude(b);
    StateVector psi(layout, std::move(amps));
    apply_operator(psi, model.u1, {"I", "Bp"});
    const StateVector column = partial_inner(bra, psi);
    for (std::size_t row = 0; row < model.dim_i; ++row)
      a(row, col) = column.amplitude(row);
  }
  return a;
}

InteractionModel make_interaction_model(std::size_t dim_i, std::size_t dim_bp,
                                        ComplexMatrix u1, StateVector f) {
  InteractionModel m;
  m.dim_i = dim_i;
  m.dim_bp = dim_bp;
  m.u1 = std::move(u1);
  m.f = std::move(f);
  if (m.u1.rows() != dim_i * dim_bp || !is_unitary(m.u1, 1e-10))
    throw std::invalid_argument("InteractionModel: U1 must be unitary on I⊗B'");
  if (m.f.dim() != dim_bp || std::abs(m.f.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("InteractionModel: |f> must be a unit vector on B'");
  m.a1 = compressed_operator(m);
  m.a1_norm = operator_norm(m.a1);
  if (m.a1_norm >= 1.0 - 1e-12)
    throw std::invalid_argument(
        "InteractionModel: ||A1|| = " + std::to_string(m.a1_norm) +
        " but the interacting box requires ||A1|| < 1");
  m.big_c = 6.0 / std::sqrt(1.0 - m.a1_norm * m.a1_norm);
  return m;
}

InteractionModel rotation_model(double angle) {
  StateVector f = StateVector::basis(RegisterLayout({{"Bp", 2}}), 0);
  return make_interaction_model(1, 2, rotation2(angle), std::move(f));
}

InteractionModel absorbing_model() {
  return rotation_model(std::acos(0.0));  // π/2: A₁ = 0 exactly up to rounding
}

}  // namespace ifm
