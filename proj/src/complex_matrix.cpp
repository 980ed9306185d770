#include "ifm/complex_matrix.hpp"

#include <cmath>

#include "ifm/kernels.hpp"

namespace ifm {

namespace {
void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require(data_.size() == rows_ * cols_, "ComplexMatrix: entry count mismatch");
  require(all_finite(), "ComplexMatrix: non-finite entry");
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  require(all_finite(), "ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = cx{1.0, 0.0};
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cx>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      m(c, r) = std::conj((*this)(r, c));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m = *this;
  for (auto& v : m.data_) v = std::conj(v);
  return m;
}

cx ComplexMatrix::trace() const {
  require(square(), "trace: matrix not square");
  cx t{0.0, 0.0};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  for (const auto& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix add: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sub: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix multiply: inner dimension mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  kern::matmul(a.data(), b.data(), out.data(), a.rows(), a.cols(), b.cols());
  return out;
}

std::vector<cx> matvec(const ComplexMatrix& a, const std::vector<cx>& v) {
  if (a.cols() != v.size())
    throw std::invalid_argument("matvec: dimension mismatch");
  std::vector<cx> out(a.rows());
  kern::matmul(a.data(), v.data(), out.data(), a.rows(), a.cols(), 1);
  return out;
}

double distance_frobenius(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("distance: shape mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += std::norm(a.data()[i] - b.data()[i]);
  return std::sqrt(s);
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         distance_frobenius(a, b) < tol;
}

double unitarity_defect(const ComplexMatrix& m) {
  if (!m.square()) return 1.0;
  return distance_frobenius(m.adjoint() * m,
                            ComplexMatrix::identity(m.rows()));
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return m.square() && unitarity_defect(m) <= tol;
}

bool is_scalar(const ComplexMatrix& m, double tol) {
  if (!m.square()) throw std::invalid_argument("is_scalar: matrix not square");
  const cx mean = m.trace() / cx(static_cast<double>(m.rows()), 0.0);
  double s = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const cx expect = (r == c) ? mean : cx{0.0, 0.0};
      s += std::norm(m(r, c) - expect);
    }
  return std::sqrt(s) < tol;
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !a.square())
    throw std::invalid_argument("commutator_norm: shape mismatch");
  return distance_frobenius(a * b, b * a);
}

}  // namespace ifm
