#include "ifm/state_vector.hpp"

#include <cmath>
#include <stdexcept>

namespace ifm {

namespace {
constexpr double kNormSlack = 1e-12;
}

StateVector::StateVector(RegisterLayout layout, std::vector<cx> amplitudes)
    : layout_(std::move(layout)), amps_(std::move(amplitudes)) {
  if (amps_.size() != layout_.total_dim())
    throw std::invalid_argument("StateVector: amplitude count " +
                                std::to_string(amps_.size()) +
                                " does not match layout dimension " +
                                std::to_string(layout_.total_dim()));
  for (const auto& a : amps_)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::invalid_argument("StateVector: non-finite amplitude");
  if (norm_sq() > 1.0 + kNormSlack)
    throw std::invalid_argument("StateVector: norm exceeds 1 (norm^2 = " +
                                std::to_string(norm_sq()) + ")");
}

StateVector StateVector::basis(RegisterLayout layout, std::size_t basis_index) {
  std::vector<cx> amps(layout.total_dim(), cx{0.0, 0.0});
  if (basis_index >= amps.size())
    throw std::invalid_argument("StateVector::basis: index out of range");
  amps[basis_index] = cx{1.0, 0.0};
  return StateVector(std::move(layout), std::move(amps));
}

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

double StateVector::norm() const { return std::sqrt(norm_sq()); }

StateVector& StateVector::scale(cx s) {
  for (auto& a : amps_) a *= s;
  return *this;
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n < 1e-300) throw std::domain_error("normalized: zero state");
  StateVector out = *this;
  out.scale(cx{1.0 / n, 0.0});
  return out;
}

cx inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("inner_product: dimension mismatch");
  cx s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i)
    s += std::conj(a.amplitude(i)) * b.amplitude(i);
  return s;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<std::pair<std::string, std::size_t>> regs;
  for (const auto& r : a.layout().registers()) regs.push_back(r);
  for (const auto& r : b.layout().registers()) regs.push_back(r);
  std::vector<cx> amps(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      amps[i * b.dim() + j] = a.amplitude(i) * b.amplitude(j);
  return StateVector(RegisterLayout(std::move(regs)), std::move(amps));
}

ComplexMatrix outer_product(const StateVector& v, const StateVector& w) {
  ComplexMatrix m(v.dim(), w.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j)
      m(i, j) = v.amplitude(i) * std::conj(w.amplitude(j));
  return m;
}

}  // namespace ifm
