#include "ifm/density_operator.hpp"

#include <stdexcept>
#include <string>

#include "ifm/linalg.hpp"

namespace ifm {

namespace {
constexpr double kHermTol = 1e-10;
constexpr double kTraceSlack = 1e-10;
constexpr double kPsdSlack = 1e-10;
}  // namespace

DensityOperator::DensityOperator(RegisterLayout layout, ComplexMatrix matrix)
    : layout_(std::move(layout)), mat_(std::move(matrix)) {
  if (!mat_.square() || mat_.rows() != layout_.total_dim())
    throw std::invalid_argument("DensityOperator: matrix does not match layout");
  double herm = 0.0;
  for (std::size_t r = 0; r < mat_.rows(); ++r)
    for (std::size_t c = 0; c < mat_.cols(); ++c)
      herm += std::norm(mat_(r, c) - std::conj(mat_(c, r)));
  if (std::sqrt(herm) > kHermTol)
    throw std::invalid_argument("DensityOperator: not Hermitian");
  const cx tr = mat_.trace();
  if (std::abs(tr.imag()) > kTraceSlack || tr.real() < -kTraceSlack ||
      tr.real() > 1.0 + kTraceSlack)
    throw std::invalid_argument("DensityOperator: trace " +
                                std::to_string(tr.real()) + " out of [0,1]");
  const auto eigs = hermitian_eigenvalues(mat_);
  if (!eigs.empty() && eigs.front() < -kPsdSlack)
    throw std::invalid_argument("DensityOperator: not positive semidefinite");
}

DensityOperator DensityOperator::pure(const StateVector& psi) {
  return DensityOperator(psi.layout(), outer_product(psi, psi));
}

}  // namespace ifm
