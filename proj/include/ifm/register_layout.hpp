#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ifm {

// Ordered list of named registers. The first-listed register is the most
// significant (slowest varying) index; every flat index in this codebase,
// and every oracle in the tests, uses this one convention.
class RegisterLayout {
 public:
  RegisterLayout() = default;
  explicit RegisterLayout(
      std::vector<std::pair<std::string, std::size_t>> regs);

  std::size_t count() const { return regs_.size(); }
  std::size_t total_dim() const { return total_; }
  const std::vector<std::pair<std::string, std::size_t>>& registers() const {
    return regs_;
  }

  bool has(const std::string& name) const;
  std::size_t position(const std::string& name) const;  // throws if missing
  std::size_t dim_of(const std::string& name) const;
  // Stride of register i under the most-significant-first convention.
  std::size_t stride(std::size_t position) const { return strides_[position]; }

  // Flat offsets of every multi-index over `names` (first name slowest),
  // relative to the full layout. The remaining registers are held at zero.
  std::vector<std::size_t> subset_offsets(
      const std::vector<std::string>& names) const;

  // Registers of this layout not listed in `names`, in layout order.
  std::vector<std::string> complement(
      const std::vector<std::string>& names) const;

  // Sub-layout consisting of `names` in the given order.
  RegisterLayout sublayout(const std::vector<std::string>& names) const;

  bool operator==(const RegisterLayout& o) const { return regs_ == o.regs_; }

 private:
  std::vector<std::pair<std::string, std::size_t>> regs_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

}  // namespace ifm
