#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ifm/complex_matrix.hpp"

namespace ifm {

// Singular values, descending.
std::vector<double> singular_values(const ComplexMatrix& m);

// Sum of singular values (Schatten-1 norm).
double trace_norm(const ComplexMatrix& m);

// Largest singular value (spectral norm); 0 for an empty matrix.
double operator_norm(const ComplexMatrix& m);

// Eigenvalues of a Hermitian matrix, ascending. Input is symmetrized first;
// callers that need the Hermiticity defect should check it themselves.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Labeled eigensystem of a unitary.
//
// The basis is deterministic: phases sorted ascending in [0, 2π); inside a
// degenerate cluster (phase gap below 1e−9) the eigenspace projector is
// re-orthonormalized by Gram–Schmidt over its columns in index order, and
// every vector's global phase is fixed so its largest-magnitude component
// is real positive. Two calls on the same matrix are bit-identical, which is
// what the shift-phase construction in the discrimination protocol needs.
struct UnitaryEigensystem {
  std::vector<double> phases;  // ascending, in [0, 2π)
  ComplexMatrix vectors;       // orthonormal columns, column j ↔ phases[j]
};

UnitaryEigensystem eig_unitary(const ComplexMatrix& u, double tol = 1e-10);

// Trace distance ‖a − b‖₁ for Hermitian a, b via eigenvalues of a − b.
double trace_distance_hermitian(const ComplexMatrix& a,
                                const ComplexMatrix& b);

// det via LU (used for the scalar image of the reduction transform).
cx determinant(const ComplexMatrix& m);

// Haar-distributed unitary (QR of a Ginibre sample, R-phases normalized).
ComplexMatrix haar_unitary(std::size_t dim, std::mt19937_64& rng);

// Random unit vector (Gaussian amplitudes, normalized).
std::vector<cx> random_unit_vector(std::size_t dim, std::mt19937_64& rng);

// Rotation by `angle` in the two-dimensional real plane:
// [[cos, −sin], [sin, cos]].
ComplexMatrix rotation2(double angle);

// Unitary (a Householder reflection, or the identity) mapping unit vector
// `from` onto unit vector `to` up to global phase.
ComplexMatrix mapping_unitary(const std::vector<cx>& from,
                              const std::vector<cx>& to);

}  // namespace ifm
