#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Data-parallel inner loops shared by both scenarios. Every kernel exists
// twice: ifm::kern::serial holds the straight-line reference used by the
// parity tests, ifm::kern holds the OpenMP dispatch. Each output element is
// accumulated by a single thread in the same order as the reference, so the
// two backends produce bit-identical results and the choice of backend (or
// thread count) can never change observable output.

namespace ifm::kern {

using cx = std::complex<double>;

enum class Backend { kSerial, kParallel };

Backend active_backend();
void set_backend(Backend b);
bool parallel_available();

namespace serial {

// out[n×m] = a[n×k] · b[k×m], row-major.
void matmul(const cx* a, const cx* b, cx* out, std::size_t n, std::size_t k,
            std::size_t m);

// out = a ⊗ b with the left factor on the slower-varying index.
void kron(const cx* a, std::size_t ar, std::size_t ac, const cx* b,
          std::size_t br, std::size_t bc, cx* out);

// Scatter op (dim t × t over the target registers) into the full space:
// out[(toff[i]+roff[r]), (toff[j]+roff[r])] = op[i,j], zeros elsewhere.
// toff/roff are flat offsets for target / remaining register indices.
void embed(const cx* op, std::size_t tdim, const std::vector<std::size_t>& toff,
           const std::vector<std::size_t>& roff, cx* out, std::size_t dim);

// In-place gate application: for every rest offset, gather the target slice,
// multiply by op, scatter back.
void apply_targets(cx* amps, const cx* op, std::size_t tdim,
                   const std::vector<std::size_t>& toff,
                   const std::vector<std::size_t>& roff);

// rho[i,j] = Σ_r psi[koff[i]+roff[r]] · conj(psi[koff[j]+roff[r]])
void reduced_density(const cx* psi, const std::vector<std::size_t>& koff,
                     const std::vector<std::size_t>& roff, cx* rho);

// out[i,j] = Σ_s rho[(koff[i]+doff[s])·dim + (koff[j]+doff[s])]
void partial_trace(const cx* rho, std::size_t dim,
                   const std::vector<std::size_t>& koff,
                   const std::vector<std::size_t>& doff, cx* out);

// out[r] = Σ_s conj(bra[s]) · psi[soff[s]+roff[r]]
void partial_inner(const cx* bra, const cx* psi,
                   const std::vector<std::size_t>& soff,
                   const std::vector<std::size_t>& roff, cx* out);

}  // namespace serial

// Dispatching entry points; same contracts as the serial reference.
void matmul(const cx* a, const cx* b, cx* out, std::size_t n, std::size_t k,
            std::size_t m);
void kron(const cx* a, std::size_t ar, std::size_t ac, const cx* b,
          std::size_t br, std::size_t bc, cx* out);
void embed(const cx* op, std::size_t tdim, const std::vector<std::size_t>& toff,
           const std::vector<std::size_t>& roff, cx* out, std::size_t dim);
void apply_targets(cx* amps, const cx* op, std::size_t tdim,
                   const std::vector<std::size_t>& toff,
                   const std::vector<std::size_t>& roff);
void reduced_density(const cx* psi, const std::vector<std::size_t>& koff,
                     const std::vector<std::size_t>& roff, cx* rho);
void partial_trace(const cx* rho, std::size_t dim,
                   const std::vector<std::size_t>& koff,
                   const std::vector<std::size_t>& doff, cx* out);
void partial_inner(const cx* bra, const cx* psi,
                   const std::vector<std::size_t>& soff,
                   const std::vector<std::size_t>& roff, cx* out);

}  // namespace ifm::kern
