#include "ifm/io.hpp"

#include <stdexcept>

namespace ifm {

json to_json(const InteractionModel& model) {
  return json{{"dim_i", model.dim_i},
              {"dim_bp", model.dim_bp},
              {"u1", to_json(model.u1)},
              {"f", amplitudes_to_json(model.f.amplitudes())}};
}

InteractionModel model_from_json(const json& j) {
  for (const char* key : {"dim_i", "dim_bp", "u1", "f"})
    if (!j.contains(key))
      throw std::runtime_error(std::string("model object needs '") + key + "'");
  const auto dim_i = j["dim_i"].get<std::size_t>();
  const auto dim_bp = j["dim_bp"].get<std::size_t>();
  StateVector f(RegisterLayout({{"Bp", dim_bp}}),
                amplitudes_from_json(j["f"]));
  return make_interaction_model(dim_i, dim_bp, matrix_from_json(j["u1"]),
                                std::move(f));
}

InteractionModel resolve_model(const std::string& spec) {
  if (spec.empty() || spec == "default") return absorbing_model();
  return model_from_json(load_json_file(spec));
}

json to_json(const ProtocolSchedule& schedule) {
  json v = json::array();
  for (const auto& m : schedule.v) v.push_back(to_json(m));
  return json{{"t", schedule.steps},
              {"dim_c", schedule.dim_c},
              {"dim_w", schedule.dim_w},
              {"dim_i", schedule.dim_i},
              {"v", v},
              {"phi", amplitudes_to_json(schedule.initial.amplitudes())}};
}

ProtocolSchedule schedule_from_json(const json& j) {
  for (const char* key : {"dim_w", "dim_i", "v", "phi"})
    if (!j.contains(key))
      throw std::runtime_error(std::string("schedule object needs '") + key +
                               "'");
  ProtocolSchedule s;
  s.dim_c = j.value("dim_c", std::size_t{2});
  s.dim_w = j["dim_w"].get<std::size_t>();
  s.dim_i = j["dim_i"].get<std::size_t>();
  if (!j["v"].is_array() || j["v"].empty())
    throw std::runtime_error("schedule: 'v' must be a non-empty array");
  for (const auto& m : j["v"]) s.v.push_back(matrix_from_json(m));
  s.steps = s.v.size();
  if (j.contains("t") && j["t"].get<std::size_t>() != s.steps)
    throw std::runtime_error("schedule: 't' disagrees with the length of 'v'");
  s.initial = StateVector(s.cwi_layout(), amplitudes_from_json(j["phi"]));
  validate_schedule(s);
  return s;
}

json to_json(const UnitaryFamily& fam) {
  json labels = json::array();
  json matrices = json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    labels.push_back(fam.labels[i]);
    matrices.push_back(amplitudes_to_json(fam.members[i].entries()));
  }
  return json{{"d", fam.d}, {"labels", labels}, {"matrices", matrices}};
}

UnitaryFamily family_from_json(const json& j) {
  for (const char* key : {"d", "labels", "matrices"})
    if (!j.contains(key))
      throw std::runtime_error(std::string("family object needs '") + key +
                               "'");
  UnitaryFamily fam;
  fam.d = j["d"].get<std::size_t>();
  if (!j["labels"].is_array() || !j["matrices"].is_array() ||
      j["labels"].size() != j["matrices"].size())
    throw std::runtime_error("family: labels/matrices must be equal-length arrays");
  for (const auto& l : j["labels"]) fam.labels.push_back(l.get<std::string>());
  for (const auto& m : j["matrices"])
    fam.members.emplace_back(fam.d, fam.d, amplitudes_from_json(m));
  validate_family(fam);
  return fam;
}

json to_json(const ReductionProgram& program) {
  json steps = json::array();
  for (const auto& s : program.steps) {
    json lambda = json::array();
    for (const auto& row : s.lambda.rows) lambda.push_back(row);
    steps.push_back(json{{"theta", s.theta},
                         {"lambda", lambda},
                         {"eigenbasis", to_json(s.eigenbasis)},
                         {"eigenphases", s.eigenphases}});
  }
  json compiled = json::array();
  for (const auto& token : program.compiled) {
    switch (token.kind) {
      case CompiledToken::Kind::kTargetGate:
        compiled.push_back(
            json{{"kind", "target_gate"}, {"gate", to_json(token.gate)}});
        break;
      case CompiledToken::Kind::kControlledGate:
        compiled.push_back(
            json{{"kind", "controlled_gate"}, {"gate", to_json(token.gate)}});
        break;
      case CompiledToken::Kind::kCall:
        compiled.push_back(json{{"kind", "call"}});
        break;
    }
  }
  return json{{"d", program.d},
              {"labels", program.labels},
              {"theta_star", program.theta_star},
              {"normalizer", to_json(program.normalizer)},
              {"steps", steps},
              {"compiled", compiled},
              {"reduced", to_json(program.reduced)},
              {"calls_per_application", program.calls_per_application}};
}

}  // namespace ifm
