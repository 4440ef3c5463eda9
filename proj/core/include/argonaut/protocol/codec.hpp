#pragma once

#include "argonaut/agents/decision.hpp"
#include "argonaut/json.hpp"
#include "argonaut/protocol/framework_builder.hpp"
#include "argonaut/protocol/scenario.hpp"

namespace argonaut::protocol {

// JSON encodings shared by message payloads, scenario files, and traces.
// Decoders throw ValidationError on shape or type mismatches.

json encode_utility_table(const agents::UtilityTable& table);
agents::UtilityTable decode_utility_table(const json& j);

json encode_rule(const agents::AcceptabilityRule& rule);
agents::AcceptabilityRule decode_rule(const json& j);

json encode_claim(const AttackClaim& claim);
AttackClaim decode_claim(const json& j);

json encode_profile(const agents::JointActionProfile& profile);

/// Scenario file body (schema "argonaut-scenario/1"), canonical field order.
json encode_scenario(const Scenario& scenario);
Scenario decode_scenario(const json& j);

/// Utility values allow the sentinel spellings "+inf" / "-inf".
double decode_utility_value(const json& j);
json encode_utility_value(double v);

} // namespace argonaut::protocol
