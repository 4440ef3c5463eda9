#pragma once

#include <string>
#include <vector>

#include "argonaut/af/framework.hpp"
#include "argonaut/agents/decision.hpp"

namespace argonaut::protocol {

/// A launched attack: `label` names the attack argument, `target` names what
/// it attacks. The target may be a rule id, an action name (hitting every
/// acceptability rule for that action), or another attack's label.
struct AttackClaim {
    std::string target;
    af::ArgumentId label;

    auto operator<=>(const AttackClaim&) const = default;
};

/// Builds the session argumentation framework from the rule pool and the
/// launched attack claims. Attacked rules become arguments (identified by
/// their rule id); unattacked rules stay out of the framework. Every claim
/// label becomes an argument with one attack edge per resolved target.
/// A target that resolves to nothing is an input error.
af::ArgumentationFramework build_framework(const std::vector<agents::AcceptabilityRule>& rules,
                                           const std::vector<AttackClaim>& claims);

/// True when `target` resolves against the given rules and claim labels.
bool target_resolvable(const std::string& target,
                       const std::vector<agents::AcceptabilityRule>& rules,
                       const std::vector<AttackClaim>& claims);

} // namespace argonaut::protocol
