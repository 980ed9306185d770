#pragma once

#include <string>
#include <vector>

#include "ifm/complex_matrix.hpp"

namespace ifm {

// Finite candidate set {U_θ} of d×d unitaries. Members are distinct as
// matrices — the blackbox is handed over in controlled form, so a global
// phase is observable and counts as a difference.
struct UnitaryFamily {
  std::size_t d = 0;
  std::vector<std::string> labels;
  std::vector<ComplexMatrix> members;

  std::size_t size() const { return members.size(); }
  std::size_t index_of(const std::string& label) const;  // throws if missing
  const ComplexMatrix& member(const std::string& label) const;

  // Family restricted to the given labels, original order preserved.
  UnitaryFamily restricted(const std::vector<std::string>& keep) const;
};

// Unitarity to 1e−10, pairwise distinctness, k ≥ 2 (unless relaxed).
void validate_family(const UnitaryFamily& fam, double tol = 1e-10,
                     bool require_two = true);

// Right-multiplies every member by U_{θ₀}†, making member θ₀ exactly the
// identity; the physical realization applies the controlled inverse right
// before each blackbox call.
UnitaryFamily normalize_family(const UnitaryFamily& fam,
                               const std::string& theta0);

UnitaryFamily random_family(std::size_t d, std::size_t k, std::uint64_t seed);

}  // namespace ifm
