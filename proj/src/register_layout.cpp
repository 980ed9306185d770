#include "ifm/register_layout.hpp"

#include <algorithm>
#include <stdexcept>

namespace ifm {

RegisterLayout::RegisterLayout(
    std::vector<std::pair<std::string, std::size_t>> regs)
    : regs_(std::move(regs)) {
  for (const auto& [name, dim] : regs_)
    if (dim == 0)
      throw std::invalid_argument("register '" + name + "' has dimension 0");
  for (std::size_t i = 0; i < regs_.size(); ++i)
    for (std::size_t j = i + 1; j < regs_.size(); ++j)
      if (regs_[i].first == regs_[j].first)
        throw std::invalid_argument("duplicate register name '" +
                                    regs_[i].first + "'");
  strides_.assign(regs_.size(), 1);
  for (std::size_t i = regs_.size(); i-- > 0;) {
    if (i + 1 < regs_.size()) strides_[i] = strides_[i + 1] * regs_[i + 1].second;
  }
  total_ = 1;
  for (const auto& [name, dim] : regs_) total_ *= dim;
}

bool RegisterLayout::has(const std::string& name) const {
  return std::any_of(regs_.begin(), regs_.end(),
                     [&](const auto& r) { return r.first == name; });
}

std::size_t RegisterLayout::position(const std::string& name) const {
  for (std::size_t i = 0; i < regs_.size(); ++i)
    if (regs_[i].first == name) return i;
  throw std::invalid_argument("unknown register '" + name + "'");
}

std::size_t RegisterLayout::dim_of(const std::string& name) const {
  return regs_[position(name)].second;
}

std::vector<std::size_t> RegisterLayout::subset_offsets(
    const std::vector<std::string>& names) const {
  std::vector<std::size_t> strides, dims;
  strides.reserve(names.size());
  dims.reserve(names.size());
  std::size_t count = 1;
  for (const auto& n : names) {
    const std::size_t p = position(n);
    strides.push_back(strides_[p]);
    dims.push_back(regs_[p].second);
    count *= regs_[p].second;
  }
  std::vector<std::size_t> out(count, 0);
  // Odometer over the multi-index, first name slowest.
  std::vector<std::size_t> idx(names.size(), 0);
  for (std::size_t flat = 0; flat < count; ++flat) {
    std::size_t off = 0;
    for (std::size_t i = 0; i < names.size(); ++i) off += idx[i] * strides[i];
    out[flat] = off;
    for (std::size_t i = names.size(); i-- > 0;) {
      if (++idx[i] < dims[i]) break;
      idx[i] = 0;
    }
  }
  return out;
}

std::vector<std::string> RegisterLayout::complement(
    const std::vector<std::string>& names) const {
  for (const auto& n : names) position(n);  // validate
  std::vector<std::string> out;
  for (const auto& [name, dim] : regs_) {
    (void)dim;
    if (std::find(names.begin(), names.end(), name) == names.end())
      out.push_back(name);
  }
  return out;
}

RegisterLayout RegisterLayout::sublayout(
    const std::vector<std::string>& names) const {
  std::vector<std::pair<std::string, std::size_t>> regs;
  regs.reserve(names.size());
  for (const auto& n : names) regs.emplace_back(n, dim_of(n));
  return RegisterLayout(std::move(regs));
}

}  // namespace ifm
