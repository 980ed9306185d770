#include "ifm/tensor_ops.hpp"

#include <stdexcept>

#include "ifm/kernels.hpp"

namespace ifm {

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  kern::kron(a.data(), a.rows(), a.cols(), b.data(), b.rows(), b.cols(),
             out.data());
  return out;
}

namespace {
std::size_t product_dim(const RegisterLayout& layout,
                        const std::vector<std::string>& names) {
  std::size_t d = 1;
  for (const auto& n : names) d *= layout.dim_of(n);
  return d;
}
}  // namespace

ComplexMatrix embed(const ComplexMatrix& op,
                    const std::vector<std::string>& targets,
                    const RegisterLayout& layout) {
  const std::size_t tdim = product_dim(layout, targets);
  if (!op.square() || op.rows() != tdim)
    throw std::invalid_argument(
        "embed: operator dimension does not match target registers");
  const auto toff = layout.subset_offsets(targets);
  const auto roff = layout.subset_offsets(layout.complement(targets));
  ComplexMatrix out(layout.total_dim(), layout.total_dim());
  kern::embed(op.data(), tdim, toff, roff, out.data(), layout.total_dim());
  return out;
}

void apply_operator(StateVector& psi, const ComplexMatrix& op,
                    const std::vector<std::string>& targets) {
  const auto& layout = psi.layout();
  const std::size_t tdim = product_dim(layout, targets);
  if (!op.square() || op.rows() != tdim)
    throw std::invalid_argument(
        "apply_operator: operator dimension does not match target registers");
  const auto toff = layout.subset_offsets(targets);
  const auto roff = layout.subset_offsets(layout.complement(targets));
  kern::apply_targets(psi.amplitudes().data(), op.data(), tdim, toff, roff);
}

DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<std::string>& discard) {
  const auto& layout = rho.layout();
  const auto keep = layout.complement(discard);
  const auto koff = layout.subset_offsets(keep);
  const auto doff = layout.subset_offsets(discard);
  ComplexMatrix out(koff.size(), koff.size());
  kern::partial_trace(rho.matrix().data(), layout.total_dim(), koff, doff,
                      out.data());
  return DensityOperator(layout.sublayout(keep), std::move(out));
}

DensityOperator reduced_density(const StateVector& psi,
                                const std::vector<std::string>& keep) {
  const auto& layout = psi.layout();
  const auto rest = layout.complement(keep);
  const auto koff = layout.subset_offsets(keep);
  const auto roff = layout.subset_offsets(rest);
  ComplexMatrix out(koff.size(), koff.size());
  kern::reduced_density(psi.amplitudes().data(), koff, roff, out.data());
  return DensityOperator(layout.sublayout(keep), std::move(out));
}

StateVector partial_inner(const StateVector& bra, const StateVector& psi) {
  const auto& layout = psi.layout();
  std::vector<std::string> bra_names;
  for (const auto& [name, dim] : bra.layout().registers()) {
    if (!layout.has(name) || layout.dim_of(name) != dim)
      throw std::invalid_argument("partial_inner: register '" + name +
                                  "' missing or mismatched in ket layout");
    bra_names.push_back(name);
  }
  const auto rest = layout.complement(bra_names);
  const auto soff = layout.subset_offsets(bra_names);
  const auto roff = layout.subset_offsets(rest);
  std::vector<cx> out(roff.size());
  kern::partial_inner(bra.amplitudes().data(), psi.amplitudes().data(), soff,
                      roff, out.data());
  return StateVector(layout.sublayout(rest), std::move(out));
}

}  // namespace ifm
