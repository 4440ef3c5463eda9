#include "argonaut/protocol/scenario.hpp"

#include <algorithm>
#include <set>

#include "argonaut/errors.hpp"

namespace argonaut::protocol {

std::string to_string(Role role) {
    return role == Role::persuader ? "persuader" : "mitigator";
}

std::string to_string(Variant variant) {
    return variant == Variant::lazy ? "lazy" : "full";
}

std::string to_string(Resolution resolution) {
    switch (resolution) {
        case Resolution::preferred_intersection: return "preferred_intersection";
        case Resolution::grounded: return "grounded";
        case Resolution::maximal_ideal: return "maximal_ideal";
    }
    return "unknown";
}

std::optional<Variant> parse_variant(std::string_view name) {
    if (name == "lazy") return Variant::lazy;
    if (name == "full") return Variant::full;
    return std::nullopt;
}

std::optional<Resolution> parse_resolution(std::string_view name) {
    if (name == "preferred_intersection") return Resolution::preferred_intersection;
    if (name == "grounded") return Resolution::grounded;
    if (name == "maximal_ideal") return Resolution::maximal_ideal;
    return std::nullopt;
}

namespace {

void validate_agent_utilities(const AgentDecl& agent,
                              const std::vector<agents::ActionId>& action_space) {
    if (agent.utilities.size() != action_space.size())
        throw ValidationError("agent '" + agent.name +
                              "': utilities must cover the persuader's action list");
    std::set<agents::ActionId> seen;
    for (const UtilityEntry& entry : agent.utilities) {
        if (std::find(action_space.begin(), action_space.end(), entry.action) ==
            action_space.end())
            throw ValidationError("agent '" + agent.name + "': utility entry for '" +
                                  entry.action + "' references an undeclared action");
        if (!seen.insert(entry.action).second)
            throw ValidationError("agent '" + agent.name + "': duplicate utility entry for '" +
                                  entry.action + "'");
    }
}

void validate_agent_rules(const AgentDecl& agent,
                          const std::vector<agents::ActionId>& action_space) {
    for (const agents::AcceptabilityRule& rule : agent.rules) {
        if (rule.id.empty())
            throw ValidationError("agent '" + agent.name + "': rule with empty id");
        if (std::find(action_space.begin(), action_space.end(), rule.action) ==
            action_space.end())
            throw ValidationError("agent '" + agent.name + "': rule '" + rule.id +
                                  "' references undeclared action '" + rule.action + "'");
        if (!rule.wildcard() &&
            std::find(action_space.begin(), action_space.end(),
                      *rule.counterpart_preference) == action_space.end())
            throw ValidationError("agent '" + agent.name + "': rule '" + rule.id +
                                  "' references undeclared preference '" +
                                  *rule.counterpart_preference + "'");
    }
}

void validate_repertoire(const AgentDecl& agent, const Scenario& scenario) {
    for (const AttackClaim& claim : agent.repertoire) {
        if (claim.label.empty() || claim.target.empty())
            throw ValidationError("agent '" + agent.name +
                                  "': repertoire entries need a target and a label");
        for (const AgentDecl* other : {&scenario.persuader, &scenario.mitigator}) {
            for (const agents::AcceptabilityRule& rule : other->rules) {
                if (rule.id == claim.label)
                    throw ValidationError("agent '" + agent.name + "': attack label '" +
                                          claim.label + "' collides with a rule id");
            }
        }
        for (const agents::ActionId& action : scenario.persuader.actions) {
            if (action == claim.label)
                throw ValidationError("agent '" + agent.name + "': attack label '" +
                                      claim.label + "' collides with an action name");
        }
    }
}

} // namespace

void validate_scenario(const Scenario& scenario) {
    if (scenario.persuader.role != Role::persuader ||
        scenario.mitigator.role != Role::mitigator)
        throw ValidationError("scenario: agent roles are misassigned");
    if (scenario.persuader.name.empty() || scenario.mitigator.name.empty())
        throw ValidationError("scenario: agent names must be non-empty");
    if (scenario.persuader.name == scenario.mitigator.name)
        throw ValidationError("scenario: agent names must be distinct");

    const auto& action_space = scenario.persuader.actions;
    if (action_space.empty())
        throw ValidationError("scenario: persuader must declare at least one action");
    std::set<agents::ActionId> unique_actions;
    for (const auto& action : action_space) {
        if (action.empty()) throw ValidationError("scenario: action names must be non-empty");
        if (!unique_actions.insert(action).second)
            throw ValidationError("scenario: duplicate action '" + action + "'");
    }
    if (!scenario.mitigator.actions.empty())
        throw ValidationError("scenario: the mitigator does not act and declares no actions");

    for (const AgentDecl* agent : {&scenario.persuader, &scenario.mitigator}) {
        validate_agent_utilities(*agent, action_space);
        validate_agent_rules(*agent, action_space);
        validate_repertoire(*agent, scenario);
    }

    // A rule id shared by both agents must mean the same rule.
    for (const agents::AcceptabilityRule& pr : scenario.persuader.rules) {
        for (const agents::AcceptabilityRule& mr : scenario.mitigator.rules) {
            if (pr.id == mr.id &&
                (pr.action != mr.action ||
                 pr.counterpart_preference != mr.counterpart_preference))
                throw ValidationError("scenario: rule id '" + pr.id +
                                      "' bound to different rules");
        }
    }

    if (scenario.config.max_rounds < 0)
        throw ValidationError("scenario: max_rounds must be non-negative");
}

agents::UtilityTable to_utility_table(const AgentDecl& agent) {
    std::vector<std::pair<agents::JointActionProfile, double>> entries;
    entries.reserve(agent.utilities.size());
    for (const UtilityEntry& entry : agent.utilities) {
        entries.emplace_back(agents::make_actor_profile(entry.action), entry.value);
    }
    return agents::UtilityTable(agent.name, std::move(entries));
}

} // namespace argonaut::protocol
