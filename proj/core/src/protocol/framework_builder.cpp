#include "argonaut/protocol/framework_builder.hpp"

#include <algorithm>

#include "argonaut/errors.hpp"

namespace argonaut::protocol {

namespace {

// Targets resolve in this order: attack label, rule id, rule action name.
// Action-name targets hit every rule declared for that action.
std::vector<std::string> resolve_target(const std::string& target,
                                        const std::vector<agents::AcceptabilityRule>& rules,
                                        const std::vector<AttackClaim>& claims) {
    for (const AttackClaim& claim : claims) {
        if (claim.label == target) return {claim.label};
    }
    for (const agents::AcceptabilityRule& rule : rules) {
        if (rule.id == target) return {rule.id};
    }
    std::vector<std::string> hit;
    for (const agents::AcceptabilityRule& rule : rules) {
        if (rule.action == target) hit.push_back(rule.id);
    }
    return hit;
}

} // namespace

bool target_resolvable(const std::string& target,
                       const std::vector<agents::AcceptabilityRule>& rules,
                       const std::vector<AttackClaim>& claims) {
    return !resolve_target(target, rules, claims).empty();
}

af::ArgumentationFramework build_framework(const std::vector<agents::AcceptabilityRule>& rules,
                                           const std::vector<AttackClaim>& claims) {
    std::vector<af::ArgumentId> arguments;
    std::vector<af::Attack> attacks;

    auto add_argument = [&](const af::ArgumentId& id) {
        if (std::find(arguments.begin(), arguments.end(), id) == arguments.end())
            arguments.push_back(id);
    };

    for (const AttackClaim& claim : claims) add_argument(claim.label);

    for (const AttackClaim& claim : claims) {
        const auto resolved = resolve_target(claim.target, rules, claims);
        if (resolved.empty())
            throw InputError("attack '" + claim.label + "' targets unknown '" +
                             claim.target + "'");
        for (const std::string& argument : resolved) {
            add_argument(argument);
            attacks.push_back({claim.label, argument});
        }
    }

    return af::ArgumentationFramework(arguments, attacks);
}

} // namespace argonaut::protocol
