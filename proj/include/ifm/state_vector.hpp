#pragma once

#include <vector>

#include "ifm/complex_matrix.hpp"
#include "ifm/register_layout.hpp"

namespace ifm {

// Pure (possibly sub-normalized) state over a register layout. Vectors with
// norm below 1 are legal — they arise as post-selected branches — but a norm
// above 1 + 1e−12 is an error.
class StateVector {
 public:
  StateVector() = default;
  StateVector(RegisterLayout layout, std::vector<cx> amplitudes);

  // |basis_index⟩ on the given layout.
  static StateVector basis(RegisterLayout layout, std::size_t basis_index);

  const RegisterLayout& layout() const { return layout_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cx>& amplitudes() const { return amps_; }
  std::vector<cx>& amplitudes() { return amps_; }
  cx amplitude(std::size_t i) const { return amps_[i]; }

  double norm_sq() const;
  double norm() const;

  StateVector& scale(cx s);
  StateVector normalized() const;  // throws on (near-)zero norm

 private:
  RegisterLayout layout_;
  std::vector<cx> amps_;
};

cx inner_product(const StateVector& a, const StateVector& b);  // ⟨a|b⟩

// |a⟩ ⊗ |b⟩; layouts concatenate, names must stay unique.
StateVector tensor(const StateVector& a, const StateVector& b);

// |v⟩⟨w| as a matrix.
ComplexMatrix outer_product(const StateVector& v, const StateVector& w);

}  // namespace ifm
