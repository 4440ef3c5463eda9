#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "argonaut/agents/utility.hpp"

namespace argonaut::agents {

using ActionId = std::string;

/// One action set per agent, in agent order. In the two-agent persuasion
/// scenario the first selection is the persuader's single action and the
/// second is the mitigator's empty set (the mitigator does not act).
struct JointActionProfile {
    std::vector<std::vector<ActionId>> selections;

    /// All actions mentioned anywhere in the profile, in selection order.
    std::vector<ActionId> flatten() const;

    /// Convenience for the single-actor case: the first action of the first
    /// non-empty selection.
    std::optional<ActionId> primary_action() const;

    auto operator<=>(const JointActionProfile&) const = default;
};

/// Single-actor profile: [ [action], {} ].
JointActionProfile make_actor_profile(const ActionId& action);

/// Per-agent utility mapping over joint action profiles. Entry order is the
/// declaration order and drives every deterministic tie-break.
class UtilityTable {
public:
    UtilityTable() = default;
    UtilityTable(std::string owner,
                 std::vector<std::pair<JointActionProfile, double>> entries);

    const std::string& owner() const { return owner_; }
    const std::vector<std::pair<JointActionProfile, double>>& entries() const {
        return entries_;
    }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// Utility of a profile; InputError when the profile is not in the table.
    double value_of(const JointActionProfile& profile) const;

    /// Same profile set, ignoring entry order.
    bool same_space(const UtilityTable& other) const;

    bool operator==(const UtilityTable&) const = default;

private:
    std::string owner_;
    std::vector<std::pair<JointActionProfile, double>> entries_;
};

/// "Action X is acceptable when the counterpart's preferred action is Y."
/// A missing counterpart preference is the wildcard: the rule applies
/// regardless of the counterpart's preference.
struct AcceptabilityRule {
    ActionId action;
    std::optional<ActionId> counterpart_preference;  // nullopt = wildcard
    std::string id;  // stable identifier used when the rule becomes an argument

    bool wildcard() const { return !counterpart_preference.has_value(); }
    auto operator<=>(const AcceptabilityRule&) const = default;
};

enum class DecisionRationale {
    no_conflict_own_max,
    conflict_acceptable_own_max,
    conflict_shared_max,
    cancelled,
};

std::string to_string(DecisionRationale r);

struct DecisionOutcome {
    JointActionProfile chosen;
    DecisionRationale rationale = DecisionRationale::no_conflict_own_max;
    std::vector<JointActionProfile> considered;  // evaluation order

    bool operator==(const DecisionOutcome&) const = default;
};

/// All profiles attaining the table's maximum utility, in declaration order.
/// The first element is the deterministic tie-break winner.
std::vector<JointActionProfile> argmax_profiles(const UtilityTable& table);

/// Conflict-of-interests test over one argmax family per agent: no conflict
/// iff some choice of one profile per family has a non-empty intersection of
/// flattened action sets. Empty families are an input error.
bool detect_conflict(const std::vector<std::vector<JointActionProfile>>& argmax_families);

/// True iff some rule permits `profile`: the rule's action appears in the
/// profile and its counterpart preference is the wildcard or appears in
/// `counterpart_best`.
bool is_profile_acceptable(const JointActionProfile& profile,
                           const JointActionProfile& counterpart_best,
                           const std::vector<AcceptabilityRule>& rules);

/// Pointwise saturating sum over the same profile space; result entries
/// follow the first table's declaration order.
UtilityTable shared_utility(const std::vector<UtilityTable>& tables);

/// Decision procedure considering only the own-maximal and shared-maximal
/// profiles: own max when there is no conflict of interests or some rule
/// makes an own-maximal profile acceptable, shared-utility max otherwise.
DecisionOutcome decide_lazy(const UtilityTable& own, const UtilityTable& other,
                            const std::vector<AcceptabilityRule>& rules);

/// Like decide_lazy, but walks profiles in descending own-utility order and
/// takes the first conflict-free or acceptably-conflicting one; gives up and
/// falls back to the shared-utility max once candidates become worse for
/// self than that fallback.
DecisionOutcome decide_full(const UtilityTable& own, const UtilityTable& other,
                            const std::vector<AcceptabilityRule>& rules);

} // namespace argonaut::agents
