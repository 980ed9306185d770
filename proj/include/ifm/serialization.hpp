#pragma once

#include <string>

#include <json.hpp>

#include "ifm/complex_matrix.hpp"
#include "ifm/register_layout.hpp"
#include "ifm/state_vector.hpp"

namespace ifm {

using json = nlohmann::json;

// Complex entries are [re, im] pairs; matrices are row-major flat lists.
// Doubles survive a JSON round trip bit-exactly (shortest-round-trip
// formatting on write, exact parse on read).

json to_json(cx v);
cx complex_from_json(const json& j);

json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json to_json(const RegisterLayout& layout);
RegisterLayout layout_from_json(const json& j);

json to_json(const StateVector& psi);
StateVector state_from_json(const json& j);

json amplitudes_to_json(const std::vector<cx>& amps);
std::vector<cx> amplitudes_from_json(const json& j);

// File helpers; both throw std::runtime_error with the path on failure.
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace ifm
