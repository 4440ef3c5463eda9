#pragma once

#include <string>
#include <vector>

#include "argonaut/agents/decision.hpp"
#include "argonaut/protocol/framework_builder.hpp"

namespace argonaut::protocol {

enum class Role { persuader, mitigator };
enum class Variant { lazy, full };

/// Semantics used to resolve the session framework during belief
/// synchronization. maximal_ideal is the default; the other two exist so the
/// semantics comparison is runnable end-to-end.
enum class Resolution { preferred_intersection, grounded, maximal_ideal };

std::string to_string(Role role);
std::string to_string(Variant variant);
std::string to_string(Resolution resolution);
std::optional<Variant> parse_variant(std::string_view name);
std::optional<Resolution> parse_resolution(std::string_view name);

struct UtilityEntry {
    agents::ActionId action;
    double value = 0.0;

    auto operator<=>(const UtilityEntry&) const = default;
};

struct AgentDecl {
    Role role = Role::persuader;
    std::string name;
    std::vector<agents::ActionId> actions;  // empty for the mitigator, which does not act
    std::vector<UtilityEntry> utilities;    // over the persuader's actions, declaration order
    std::vector<agents::AcceptabilityRule> rules;
    std::vector<AttackClaim> repertoire;    // attacks this agent may launch

    bool operator==(const AgentDecl&) const = default;
};

struct SessionConfig {
    Variant variant = Variant::lazy;
    Resolution resolution = Resolution::maximal_ideal;
    int max_rounds = 1;

    bool operator==(const SessionConfig&) const = default;
};

struct Scenario {
    AgentDecl persuader;
    AgentDecl mitigator;
    SessionConfig config;

    bool operator==(const Scenario&) const = default;
};

/// Checks every referential invariant of a scenario; throws ValidationError
/// naming the violated invariant.
void validate_scenario(const Scenario& scenario);

/// The agent's utility entries as a table over single-actor profiles.
agents::UtilityTable to_utility_table(const AgentDecl& agent);

} // namespace argonaut::protocol
