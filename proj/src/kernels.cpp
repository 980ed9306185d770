#include "ifm/kernels.hpp"

#ifdef IFM_HAVE_OPENMP
#include <omp.h>
#endif

namespace ifm::kern {

namespace {
Backend g_backend =
#ifdef IFM_HAVE_OPENMP
    Backend::kParallel;
#else
    Backend::kSerial;
#endif

// Below this many output elements the fork/join overhead dominates.
constexpr std::size_t kParallelGrain = 4096;

inline bool go_parallel(std::size_t work) {
#ifdef IFM_HAVE_OPENMP
  return g_backend == Backend::kParallel && work >= kParallelGrain;
#else
  (void)work;
  return false;
#endif
}
}  // namespace

Backend active_backend() { return g_backend; }

void set_backend(Backend b) { g_backend = b; }

bool parallel_available() {
#ifdef IFM_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

namespace serial {

void matmul(const cx* a, const cx* b, cx* out, std::size_t n, std::size_t k,
            std::size_t m) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cx acc{0.0, 0.0};
      for (std::size_t l = 0; l < k; ++l) acc += a[i * k + l] * b[l * m + j];
      out[i * m + j] = acc;
    }
  }
}

void kron(const cx* a, std::size_t ar, std::size_t ac, const cx* b,
          std::size_t br, std::size_t bc, cx* out) {
  const std::size_t oc = ac * bc;
  for (std::size_t i1 = 0; i1 < ar; ++i1)
    for (std::size_t i2 = 0; i2 < br; ++i2)
      for (std::size_t j1 = 0; j1 < ac; ++j1)
        for (std::size_t j2 = 0; j2 < bc; ++j2)
          out[(i1 * br + i2) * oc + (j1 * bc + j2)] =
              a[i1 * ac + j1] * b[i2 * bc + j2];
}

void embed(const cx* op, std::size_t tdim, const std::vector<std::size_t>& toff,
           const std::vector<std::size_t>& roff, cx* out, std::size_t dim) {
  for (std::size_t i = 0; i < dim * dim; ++i) out[i] = cx{0.0, 0.0};
  for (std::size_t ti = 0; ti < tdim; ++ti)
    for (std::size_t tj = 0; tj < tdim; ++tj) {
      const cx v = op[ti * tdim + tj];
      for (std::size_t r : roff)
        out[(toff[ti] + r) * dim + (toff[tj] + r)] = v;
    }
}

void apply_targets(cx* amps, const cx* op, std::size_t tdim,
                   const std::vector<std::size_t>& toff,
                   const std::vector<std::size_t>& roff) {
  std::vector<cx> scratch(tdim);
  for (std::size_t r : roff) {
    for (std::size_t i = 0; i < tdim; ++i) {
      cx acc{0.0, 0.0};
      for (std::size_t j = 0; j < tdim; ++j)
        acc += op[i * tdim + j] * amps[toff[j] + r];
      scratch[i] = acc;
    }
    for (std::size_t i = 0; i < tdim; ++i) amps[toff[i] + r] = scratch[i];
  }
}

void reduced_density(const cx* psi, const std::vector<std::size_t>& koff,
                     const std::vector<std::size_t>& roff, cx* rho) {
  const std::size_t kd = koff.size();
  for (std::size_t i = 0; i < kd; ++i)
    for (std::size_t j = 0; j < kd; ++j) {
      cx acc{0.0, 0.0};
      for (std::size_t r : roff)
        acc += psi[koff[i] + r] * std::conj(psi[koff[j] + r]);
      rho[i * kd + j] = acc;
    }
}

void partial_trace(const cx* rho, std::size_t dim,
                   const std::vector<std::size_t>& koff,
                   const std::vector<std::size_t>& doff, cx* out) {
  const std::size_t kd = koff.size();
  for (std::size_t i = 0; i < kd; ++i)
    for (std::size_t j = 0; j < kd; ++j) {
      cx acc{0.0, 0.0};
      for (std::size_t s : doff)
        acc += rho[(koff[i] + s) * dim + (koff[j] + s)];
      out[i * kd + j] = acc;
    }
}

void partial_inner(const cx* bra, const cx* psi,
                   const std::vector<std::size_t>& soff,
                   const std::vector<std::size_t>& roff, cx* out) {
  const std::size_t rd = roff.size();
  for (std::size_t r = 0; r < rd; ++r) {
    cx acc{0.0, 0.0};
    for (std::size_t s = 0; s < soff.size(); ++s)
      acc += std::conj(bra[s]) * psi[soff[s] + roff[r]];
    out[r] = acc;
  }
}

}  // namespace serial

void matmul(const cx* a, const cx* b, cx* out, std::size_t n, std::size_t k,
            std::size_t m) {
  if (!go_parallel(n * m * k)) return serial::matmul(a, b, out, n, k, m);
#ifdef IFM_HAVE_OPENMP
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cx acc{0.0, 0.0};
      for (std::size_t l = 0; l < k; ++l) acc += a[i * k + l] * b[l * m + j];
      out[i * m + j] = acc;
    }
  }
#endif
}

void kron(const cx* a, std::size_t ar, std::size_t ac, const cx* b,
          std::size_t br, std::size_t bc, cx* out) {
  if (!go_parallel(ar * ac * br * bc))
    return serial::kron(a, ar, ac, b, br, bc, out);
#ifdef IFM_HAVE_OPENMP
  const std::size_t oc = ac * bc;
#pragma omp parallel for schedule(static)
  for (std::size_t i1 = 0; i1 < ar; ++i1)
    for (std::size_t i2 = 0; i2 < br; ++i2)
      for (std::size_t j1 = 0; j1 < ac; ++j1)
        for (std::size_t j2 = 0; j2 < bc; ++j2)
          out[(i1 * br + i2) * oc + (j1 * bc + j2)] =
              a[i1 * ac + j1] * b[i2 * bc + j2];
#endif
}

void embed(const cx* op, std::size_t tdim, const std::vector<std::size_t>& toff,
           const std::vector<std::size_t>& roff, cx* out, std::size_t dim) {
  if (!go_parallel(dim * dim))
    return serial::embed(op, tdim, toff, roff, out, dim);
#ifdef IFM_HAVE_OPENMP
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < dim * dim; ++i) out[i] = cx{0.0, 0.0};
#pragma omp parallel for schedule(static)
  for (std::size_t ti = 0; ti < tdim; ++ti)
    for (std::size_t tj = 0; tj < tdim; ++tj) {
      const cx v = op[ti * tdim + tj];
      for (std::size_t r : roff)
        out[(toff[ti] + r) * dim + (toff[tj] + r)] = v;
    }
#endif
}

void apply_targets(cx* amps, const cx* op, std::size_t tdim,
                   const std::vector<std::size_t>& toff,
                   const std::vector<std::size_t>& roff) {
  if (!go_parallel(roff.size() * tdim * tdim))
    return serial::apply_targets(amps, op, tdim, toff, roff);
#ifdef IFM_HAVE_OPENMP
#pragma omp parallel
  {
    std::vector<cx> scratch(tdim);
#pragma omp for schedule(static)
    for (std::size_t ri = 0; ri < roff.size(); ++ri) {
      const std::size_t r = roff[ri];
      for (std::size_t i = 0; i < tdim; ++i) {
        cx acc{0.0, 0.0};
        for (std::size_t j = 0; j < tdim; ++j)
          acc += op[i * tdim + j] * amps[toff[j] + r];
        scratch[i] = acc;
      }
      for (std::size_t i = 0; i < tdim; ++i) amps[toff[i] + r] = scratch[i];
    }
  }
#endif
}

void reduced_density(const cx* psi, const std::vector<std::size_t>& koff,
                     const std::vector<std::size_t>& roff, cx* rho) {
  const std::size_t kd = koff.size();
  if (!go_parallel(kd * kd * roff.size()))
    return serial::reduced_density(psi, koff, roff, rho);
#ifdef IFM_HAVE_OPENMP
#pragma omp parallel for schedule(static)
  for (std::size_t ij = 0; ij < kd * kd; ++ij) {
    const std::size_t i = ij / kd, j = ij % kd;
    cx acc{0.0, 0.0};
    for (std::size_t r : roff)
      acc += psi[koff[i] + r] * std::conj(psi[koff[j] + r]);
    rho[ij] = acc;
  }
#endif
}

void partial_trace(const cx* rho, std::size_t dim,
                   const std::vector<std::size_t>& koff,
                   const std::vector<std::size_t>& doff, cx* out) {
  const std::size_t kd = koff.size();
  if (!go_parallel(kd * kd * doff.size()))
    return serial::partial_trace(rho, dim, koff, doff, out);
#ifdef IFM_HAVE_OPENMP
#pragma omp parallel for schedule(static)
  for (std::size_t ij = 0; ij < kd * kd; ++ij) {
    const std::size_t i = ij / kd, j = ij % kd;
    cx acc{0.0, 0.0};
    for (std::size_t s : doff)
      acc += rho[(koff[i] + s) * dim + (koff[j] + s)];
    out[ij] = acc;
  }
#endif
}

void partial_inner(const cx* bra, const cx* psi,
                   const std::vector<std::size_t>& soff,
                   const std::vector<std::size_t>& roff, cx* out) {
  if (!go_parallel(roff.size() * soff.size()))
    return serial::partial_inner(bra, psi, soff, roff, out);
#ifdef IFM_HAVE_OPENMP
#pragma omp parallel for schedule(static)
  for (std::size_t r = 0; r < roff.size(); ++r) {
    cx acc{0.0, 0.0};
    for (std::size_t s = 0; s < soff.size(); ++s)
      acc += std::conj(bra[s]) * psi[soff[s] + roff[r]];
    out[r] = acc;
  }
#endif
}

}  // namespace ifm::kern
