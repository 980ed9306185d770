#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifm {

using cx = std::complex<double>;

constexpr double kStructuralTol = 1e-9;   // default for structural checks
constexpr double kArithmeticTol = 1e-12;  // default for arithmetic identities

// Dense complex matrix, row-major. All operators in both scenarios live here;
// dimensions stay at desk scale, so no sparsity or blocking anywhere.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cx{0.0, 0.0}) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<cx>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool square() const { return rows_ == cols_; }

  cx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  cx* data() { return data_.data(); }
  const cx* data() const { return data_.data(); }
  const std::vector<cx>& entries() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  cx trace() const;
  double frobenius_norm() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(cx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, cx s) { return a *= s; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cx> data_;
};

//  Matrix product; dispatches to the active kernel backend.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// a * v for a column vector given as a flat array.
std::vector<cx> matvec(const ComplexMatrix& a, const std::vector<cx>& v);

double distance_frobenius(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = kStructuralTol);

// ‖m†m − 1‖_F, the unitarity defect.
double unitarity_defect(const ComplexMatrix& m);
bool is_unitary(const ComplexMatrix& m, double tol = 1e-10);

// ‖m − (tr m / d)·1‖_F < tol, i.e. m is a complex multiple of the identity.
bool is_scalar(const ComplexMatrix& m, double tol = kStructuralTol);

// Frobenius norm of ab − ba.
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace ifm
