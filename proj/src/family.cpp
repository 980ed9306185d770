#include "ifm/family.hpp"

#include <random>
#include <stdexcept>

#include "ifm/linalg.hpp"

namespace ifm {

std::size_t UnitaryFamily::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw std::invalid_argument("family: unknown label '" + label + "'");
}

const ComplexMatrix& UnitaryFamily::member(const std::string& label) const {
  return members[index_of(label)];
}

UnitaryFamily UnitaryFamily::restricted(
    const std::vector<std::string>& keep) const {
  UnitaryFamily out;
  out.d = d;
  for (const auto& l : labels) {
    bool take = false;
    for (const auto& k : keep) take = take || (k == l);
    if (take) {
      out.labels.push_back(l);
      out.members.push_back(member(l));
    }
  }
  if (out.labels.size() != keep.size())
    throw std::invalid_argument("family: restriction label missing");
  return out;
}

void validate_family(const UnitaryFamily& fam, double tol, bool require_two) {
  if (fam.labels.size() != fam.members.size())
    throw std::invalid_argument("family: label/member count mismatch");
  if (require_two && fam.size() < 2)
    throw std::invalid_argument("family: need at least two candidates");
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (fam.members[i].rows() != fam.d || !fam.members[i].square())
      throw std::invalid_argument("family: member '" + fam.labels[i] +
                                  "' has wrong dimension");
    if (!is_unitary(fam.members[i], tol))
      throw std::invalid_argument("family: member '" + fam.labels[i] +
                                  "' is not unitary");
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      if (fam.labels[i] == fam.labels[j])
        throw std::invalid_argument("family: duplicate label '" +
                                    fam.labels[i] + "'");
      if (distance_frobenius(fam.members[i], fam.members[j]) < 1e-9)
        throw std::invalid_argument(
            "family: members '" + fam.labels[i] + "' and '" + fam.labels[j] +
            "' coincide (global phase counts)");
    }
  }
}

UnitaryFamily normalize_family(const UnitaryFamily& fam,
                               const std::string& theta0) {
  const ComplexMatrix inverse = fam.member(theta0).adjoint();
  UnitaryFamily out;
  out.d = fam.d;
  out.labels = fam.labels;
  out.members.reserve(fam.size());
  for (const auto& m : fam.members) out.members.push_back(m * inverse);
  return out;
}

UnitaryFamily random_family(std::size_t d, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  UnitaryFamily fam;
  fam.d = d;
  for (std::size_t i = 0; i < k; ++i) {
    fam.labels.push_back(std::to_string(i));
    fam.members.push_back(haar_unitary(d, rng));
  }
  validate_family(fam);
  return fam;
}

}  // namespace ifm
