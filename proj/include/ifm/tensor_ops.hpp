#pragma once

#include <string>
#include <vector>

#include "ifm/complex_matrix.hpp"
#include "ifm/density_operator.hpp"
#include "ifm/register_layout.hpp"
#include "ifm/state_vector.hpp"

namespace ifm {

// Kronecker product, left factor on the slower-varying index.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// op ⊗ identity on the remaining registers, permuted into layout order.
// `targets` gives both which registers op acts on and their order within op.
ComplexMatrix embed(const ComplexMatrix& op,
                    const std::vector<std::string>& targets,
                    const RegisterLayout& layout);

// In-place application of op to the target registers of psi.
void apply_operator(StateVector& psi, const ComplexMatrix& op,
                    const std::vector<std::string>& targets);

// Trace out `discard`; remaining registers keep layout order.
DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<std::string>& discard);

// Reduced density matrix of a pure state on the `keep` registers.
DensityOperator reduced_density(const StateVector& psi,
                                const std::vector<std::string>& keep);

// ⟨bra| applied to the matching sub-registers of psi. bra's registers must
// all exist in psi's layout (any order); the result lives on the remaining
// registers in psi's order. bra registers = all registers gives the overlap
// as a 1-dimensional state on the empty layout.
StateVector partial_inner(const StateVector& bra, const StateVector& psi);

}  // namespace ifm
