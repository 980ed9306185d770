#include "ifm/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ifm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
  ComplexMatrix m(e.rows(), e.cols());
  for (Eigen::Index r = 0; r < e.rows(); ++r)
    for (Eigen::Index c = 0; c < e.cols(); ++c) m(r, c) = e(r, c);
  return m;
}

}  // namespace

std::vector<double> singular_values(const ComplexMatrix& m) {
  if (m.size() == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

double trace_norm(const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("trace_norm: matrix not square");
  double s = 0.0;
  for (double v : singular_values(m)) s += v;
  return s;
}

double operator_norm(const ComplexMatrix& m) {
  const auto sv = singular_values(m);
  return sv.empty() ? 0.0 : sv.front();
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!m.square())
    throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  Eigen::MatrixXcd e = to_eigen(m);
  Eigen::MatrixXcd h = 0.5 * (e + e.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double trace_distance_hermitian(const ComplexMatrix& a,
                                const ComplexMatrix& b) {
  double s = 0.0;
  for (double v : hermitian_eigenvalues(a - b)) s += std::abs(v);
  return s;
}

cx determinant(const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix not square");
  return to_eigen(m).determinant();
}

UnitaryEigensystem eig_unitary(const ComplexMatrix& u, double tol) {
  if (!u.square()) throw std::invalid_argument("eig_unitary: matrix not square");
  const double defect = unitarity_defect(u);
  if (defect > tol)
    throw std::invalid_argument("eig_unitary: input not unitary (defect " +
                                std::to_string(defect) + ")");
  const std::size_t d = u.rows();

  // Schur of a normal matrix: T is (numerically) diagonal and the columns of
  // Q are an orthonormal eigenbasis, degenerate clusters included.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(to_eigen(u));
  const Eigen::MatrixXcd& q = schur.matrixU();
  const Eigen::MatrixXcd& t = schur.matrixT();

  constexpr double kGroupTol = 1e-9;
  struct Entry {
    double phase;
    std::size_t col;
  };
  std::vector<Entry> entries(d);
  for (std::size_t j = 0; j < d; ++j) {
    double p = std::arg(t(j, j));
    if (p < 0) p += kTwoPi;
    // Eigenvalues within kGroupTol of phase 2π belong with the phase-0
    // cluster; wrap them below zero and clamp at output time.
    if (p >= kTwoPi - kGroupTol) p -= kTwoPi;
    entries[j] = {p, j};
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.phase != b.phase) return a.phase < b.phase;
    return a.col < b.col;
  });

  UnitaryEigensystem out;
  out.phases.resize(d);
  out.vectors = ComplexMatrix(d, d);

  std::size_t pos = 0;
  while (pos < d) {
    std::size_t end = pos + 1;
    while (end < d && entries[end].phase - entries[end - 1].phase < kGroupTol)
      ++end;
    const std::size_t gsize = end - pos;

    // Canonical orthonormal basis of the cluster eigenspace: project the
    // computational basis through the (basis-independent) projector and
    // Gram–Schmidt the columns in index order.
    Eigen::MatrixXcd basis(d, gsize);
    if (gsize == 1) {
      basis.col(0) = q.col(entries[pos].col);
    } else {
      Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(d, d);
      for (std::size_t g = pos; g < end; ++g) {
        const auto v = q.col(entries[g].col);
        proj += v * v.adjoint();
      }
      std::size_t accepted = 0;
      for (std::size_t c = 0; c < d && accepted < gsize; ++c) {
        Eigen::VectorXcd v = proj.col(c);
        for (std::size_t a = 0; a < accepted; ++a)
          v -= basis.col(a) * (basis.col(a).adjoint() * v);
        const double n = v.norm();
        if (n > 1e-6) basis.col(accepted++) = v / n;
      }
      if (accepted != gsize)
        throw std::runtime_error(
            "eig_unitary: failed to canonicalize a degenerate eigenspace");
    }

    for (std::size_t g = 0; g < gsize; ++g) {
      Eigen::VectorXcd v = basis.col(g);
      // Global phase: largest-magnitude component real positive.
      std::size_t arg_max = 0;
      double best = -1.0;
      for (std::size_t i = 0; i < d; ++i) {
        const double a = std::abs(v(i));
        if (a > best) {
          best = a;
          arg_max = i;
        }
      }
      const cx ph = v(arg_max) / std::abs(v(arg_max));
      v *= std::conj(ph);
      const std::size_t j = pos + g;
      out.phases[j] = std::max(entries[j].phase, 0.0);
      for (std::size_t i = 0; i < d; ++i) out.vectors(i, j) = v(i);
    }
    pos = end;
  }
  return out;
}

ComplexMatrix haar_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) g(r, c) = cx{gauss(rng), gauss(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t j = 0; j < dim; ++j) {
    const cx rj = r(j, j);
    const double a = std::abs(rj);
    q.col(j) *= (a > 0) ? rj / a : cx{1.0, 0.0};
  }
  return from_eigen(q);
}

std::vector<cx> random_unit_vector(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cx> v(dim);
  double n = 0.0;
  for (auto& a : v) {
    a = cx{gauss(rng), gauss(rng)};
    n += std::norm(a);
  }
  n = std::sqrt(n);
  for (auto& a : v) a /= n;
  return v;
}

ComplexMatrix rotation2(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return ComplexMatrix{{cx{c, 0}, cx{-s, 0}}, {cx{s, 0}, cx{c, 0}}};
}

ComplexMatrix mapping_unitary(const std::vector<cx>& from,
                              const std::vector<cx>& to) {
  if (from.size() != to.size())
    throw std::invalid_argument("mapping_unitary: dimension mismatch");
  const std::size_t d = from.size();
  // Phase-align the target so ⟨to', from⟩ is real nonnegative, then reflect
  // across the hyperplane orthogonal to from − to'.
  cx ov{0.0, 0.0};
  for (std::size_t i = 0; i < d; ++i) ov += std::conj(to[i]) * from[i];
  const double a = std::abs(ov);
  const cx align = (a > 1e-14) ? ov / a : cx{1.0, 0.0};
  std::vector<cx> diff(d);
  double nn = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    diff[i] = from[i] - align * to[i];
    nn += std::norm(diff[i]);
  }
  ComplexMatrix w = ComplexMatrix::identity(d);
  if (nn < 1e-28) return w;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      w(r, c) -= 2.0 * diff[r] * std::conj(diff[c]) / nn;
  return w;
}

}  // namespace ifm
