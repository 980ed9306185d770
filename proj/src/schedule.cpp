#include "ifm/schedule.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ifm/linalg.hpp"
#include "ifm/tensor_ops.hpp"

namespace ifm {

RegisterLayout ProtocolSchedule::cwi_layout() const {
  return RegisterLayout({{"C", dim_c}, {"W", dim_w}, {"I", dim_i}});
}

void validate_schedule(const ProtocolSchedule& s, double tol) {
  if (s.steps == 0 || s.v.size() != s.steps)
    throw std::invalid_argument("schedule: needs T >= 1 unitaries");
  if (s.dim_c != 2)
    throw std::invalid_argument("schedule: control register must be a qubit");
  for (const auto& vt : s.v)
    if (vt.rows() != s.cwi_dim() || !is_unitary(vt, tol))
      throw std::invalid_argument("schedule: V_t must be unitary on C⊗W⊗I");
  if (s.initial.dim() != s.cwi_dim() ||
      std::abs(s.initial.norm() - 1.0) > tol)
    throw std::invalid_argument("schedule: initial state must be unit norm on C⊗W⊗I");
}

ProtocolSchedule build_rotation_schedule(const std::vector<double>& angles,
                                         const InteractionModel& model) {
  ProtocolSchedule s;
  s.steps = angles.size();
  s.dim_w = 1;
  s.dim_i = model.dim_i;
  const auto layout = s.cwi_layout();
  s.v.reserve(s.steps);
  for (double a : angles) s.v.push_back(embed(rotation2(a), {"C"}, layout));
  s.initial = StateVector::basis(layout, 0);  // |0⟩_C ⊗ |0⟩_W ⊗ |0⟩_I
  validate_schedule(s);
  return s;
}

ProtocolSchedule build_kwiat_schedule(std::size_t steps,
                                      const InteractionModel& model) {
  if (steps == 0) throw std::invalid_argument("kwiat schedule: T >= 1");
  const double angle = std::numbers::pi / (2.0 * static_cast<double>(steps));
  return build_rotation_schedule(std::vector<double>(steps, angle), model);
}

ProtocolSchedule random_schedule(std::size_t steps, std::size_t dim_w,
                                 std::size_t dim_i, std::uint64_t seed) {
  ProtocolSchedule s;
  s.steps = steps;
  s.dim_w = dim_w;
  s.dim_i = dim_i;
  std::mt19937_64 rng(seed);
  s.v.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t)
    s.v.push_back(haar_unitary(s.cwi_dim(), rng));
  s.initial =
      StateVector(s.cwi_layout(), random_unit_vector(s.cwi_dim(), rng));
  validate_schedule(s);
  return s;
}

}  // namespace ifm
