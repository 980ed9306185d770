#pragma once

#include "ifm/family.hpp"
#include "ifm/interaction_model.hpp"
#include "ifm/reduction.hpp"
#include "ifm/schedule.hpp"
#include "ifm/serialization.hpp"

namespace ifm {

// File formats for the CLI surfaces. All complex entries are [re, im]
// pairs, matrices row-major.

json to_json(const InteractionModel& model);
InteractionModel model_from_json(const json& j);
// "default" resolves to the absorbing model; anything else is a file path.
InteractionModel resolve_model(const std::string& spec);

json to_json(const ProtocolSchedule& schedule);
ProtocolSchedule schedule_from_json(const json& j);

json to_json(const UnitaryFamily& fam);
UnitaryFamily family_from_json(const json& j);

json to_json(const ReductionProgram& program);

}  // namespace ifm
