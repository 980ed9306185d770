#include "ifm/serialization.hpp"

#include <fstream>
#include <stdexcept>

namespace ifm {

json to_json(cx v) { return json::array({v.real(), v.imag()}); }

cx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::runtime_error("expected complex entry as [re, im]");
  return cx{j[0].get<double>(), j[1].get<double>()};
}

json amplitudes_to_json(const std::vector<cx>& amps) {
  json a = json::array();
  for (const auto& v : amps) a.push_back(to_json(v));
  return a;
}

std::vector<cx> amplitudes_from_json(const json& j) {
  if (!j.is_array()) throw std::runtime_error("expected amplitude array");
  std::vector<cx> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

json to_json(const ComplexMatrix& m) {
  return json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", amplitudes_to_json(m.entries())}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::runtime_error("matrix object needs rows/cols/entries");
  return ComplexMatrix(j["rows"].get<std::size_t>(),
                       j["cols"].get<std::size_t>(),
                       amplitudes_from_json(j["entries"]));
}

json to_json(const RegisterLayout& layout) {
  json regs = json::array();
  for (const auto& [name, dim] : layout.registers())
    regs.push_back(json::array({name, dim}));
  return json{{"registers", regs}};
}

RegisterLayout layout_from_json(const json& j) {
  if (!j.contains("registers") || !j["registers"].is_array())
    throw std::runtime_error("layout object needs a registers array");
  std::vector<std::pair<std::string, std::size_t>> regs;
  for (const auto& r : j["registers"]) {
    if (!r.is_array() || r.size() != 2)
      throw std::runtime_error("layout register must be [name, dim]");
    regs.emplace_back(r[0].get<std::string>(), r[1].get<std::size_t>());
  }
  return RegisterLayout(std::move(regs));
}

json to_json(const StateVector& psi) {
  return json{{"layout", to_json(psi.layout())},
              {"amplitudes", amplitudes_to_json(psi.amplitudes())}};
}

StateVector state_from_json(const json& j) {
  if (!j.contains("layout") || !j.contains("amplitudes"))
    throw std::runtime_error("state object needs layout/amplitudes");
  return StateVector(layout_from_json(j["layout"]),
                     amplitudes_from_json(j["amplitudes"]));
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("parse error in '" + path + "': " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace ifm
