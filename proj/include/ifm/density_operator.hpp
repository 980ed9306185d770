#pragma once

#include "ifm/complex_matrix.hpp"
#include "ifm/register_layout.hpp"
#include "ifm/state_vector.hpp"

namespace ifm {

// Square operator over a layout, validated as a (sub-normalized) density
// matrix: Hermitian to 1e−10, trace in [0, 1+1e−10], min eigenvalue above
// −1e−10.
class DensityOperator {
 public:
  DensityOperator() = default;
  DensityOperator(RegisterLayout layout, ComplexMatrix matrix);

  static DensityOperator pure(const StateVector& psi);

  const RegisterLayout& layout() const { return layout_; }
  const ComplexMatrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }
  double trace_real() const { return mat_.trace().real(); }

 private:
  RegisterLayout layout_;
  ComplexMatrix mat_;
};

}  // namespace ifm
