#include "argonaut/agents/decision.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "argonaut/errors.hpp"

namespace argonaut::agents {

std::vector<ActionId> JointActionProfile::flatten() const {
    std::vector<ActionId> out;
    for (const auto& selection : selections) {
        out.insert(out.end(), selection.begin(), selection.end());
    }
    return out;
}

std::optional<ActionId> JointActionProfile::primary_action() const {
    for (const auto& selection : selections) {
        if (!selection.empty()) return selection.front();
    }
    return std::nullopt;
}

JointActionProfile make_actor_profile(const ActionId& action) {
    return JointActionProfile{{{action}, {}}};
}

UtilityTable::UtilityTable(std::string owner,
                           std::vector<std::pair<JointActionProfile, double>> entries)
    : owner_(std::move(owner)), entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (std::isnan(entries_[i].second))
            throw InputError("utility table '" + owner_ + "' contains NaN");
        for (std::size_t j = i + 1; j < entries_.size(); ++j) {
            if (entries_[i].first == entries_[j].first)
                throw InputError("utility table '" + owner_ + "' declares a profile twice");
        }
    }
}

double UtilityTable::value_of(const JointActionProfile& profile) const {
    for (const auto& [p, v] : entries_) {
        if (p == profile) return v;
    }
    throw InputError("profile not covered by utility table '" + owner_ + "'");
}

bool UtilityTable::same_space(const UtilityTable& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    for (const auto& [p, v] : entries_) {
        (void)v;
        const bool found = std::any_of(other.entries_.begin(), other.entries_.end(),
                                       [&](const auto& e) { return e.first == p; });
        if (!found) return false;
    }
    return true;
}

std::string to_string(DecisionRationale r) {
    switch (r) {
        case DecisionRationale::no_conflict_own_max: return "no_conflict_own_max";
        case DecisionRationale::conflict_acceptable_own_max:
            return "conflict_acceptable_own_max";
        case DecisionRationale::conflict_shared_max: return "conflict_shared_max";
        case DecisionRationale::cancelled: return "cancelled";
    }
    return "unknown";
}

std::vector<JointActionProfile> argmax_profiles(const UtilityTable& table) {
    if (table.empty()) throw InputError("argmax over empty utility table");
    double best = table.entries().front().second;
    for (const auto& [p, v] : table.entries()) {
        (void)p;
        if (v > best) best = v;
    }
    std::vector<JointActionProfile> out;
    for (const auto& [p, v] : table.entries()) {
        if (v == best) out.push_back(p);
    }
    return out;
}

namespace {

bool profiles_share_action(const std::vector<const JointActionProfile*>& choice) {
    if (choice.empty()) return false;
    for (const ActionId& action : choice.front()->flatten()) {
        bool everywhere = true;
        for (std::size_t i = 1; i < choice.size(); ++i) {
            const auto actions = choice[i]->flatten();
            if (std::find(actions.begin(), actions.end(), action) == actions.end()) {
                everywhere = false;
                break;
            }
        }
        if (everywhere) return true;
    }
    return false;
}

bool any_consistent_choice(const std::vector<std::vector<JointActionProfile>>& families,
                           std::vector<const JointActionProfile*>& choice,
                           std::size_t depth) {
    if (depth == families.size()) return profiles_share_action(choice);
    for (const auto& profile : families[depth]) {
        choice.push_back(&profile);
        if (any_consistent_choice(families, choice, depth + 1)) {
            choice.pop_back();
            return true;
        }
        choice.pop_back();
    }
    return false;
}

} // namespace

bool detect_conflict(const std::vector<std::vector<JointActionProfile>>& argmax_families) {
    if (argmax_families.empty()) throw InputError("detect_conflict: no argmax families");
    for (const auto& family : argmax_families) {
        if (family.empty()) throw InputError("detect_conflict: empty argmax family");
    }
    std::vector<const JointActionProfile*> choice;
    return !any_consistent_choice(argmax_families, choice, 0);
}

bool is_profile_acceptable(const JointActionProfile& profile,
                           const JointActionProfile& counterpart_best,
                           const std::vector<AcceptabilityRule>& rules) {
    const auto own_actions = profile.flatten();
    const auto counterpart_actions = counterpart_best.flatten();
    for (const AcceptabilityRule& rule : rules) {
        const bool action_matches =
            std::find(own_actions.begin(), own_actions.end(), rule.action) !=
            own_actions.end();
        if (!action_matches) continue;
        if (rule.wildcard()) return true;
        const bool pref_matches =
            std::find(counterpart_actions.begin(), counterpart_actions.end(),
                      *rule.counterpart_preference) != counterpart_actions.end();
        if (pref_matches) return true;
    }
    return false;
}

UtilityTable shared_utility(const std::vector<UtilityTable>& tables) {
    if (tables.empty()) throw InputError("shared_utility: no tables");
    if (tables.size() == 1) return tables.front();
    for (std::size_t i = 1; i < tables.size(); ++i) {
        if (!tables.front().same_space(tables[i]))
            throw InputError("shared_utility: tables cover different profile spaces");
    }
    std::string owner = tables.front().owner();
    for (std::size_t i = 1; i < tables.size(); ++i) owner += "+" + tables[i].owner();

    std::vector<std::pair<JointActionProfile, double>> entries;
    for (const auto& [profile, value] : tables.front().entries()) {
        double sum = value;
        for (std::size_t i = 1; i < tables.size(); ++i) {
            sum = saturating_add(sum, tables[i].value_of(profile));
        }
        entries.emplace_back(profile, sum);
    }
    return UtilityTable(std::move(owner), std::move(entries));
}

namespace {

struct DecisionInputs {
    std::vector<JointActionProfile> own_max;
    std::vector<JointActionProfile> other_max;
    bool conflict = false;
    UtilityTable shared;
    JointActionProfile shared_best;
};

DecisionInputs prepare(const UtilityTable& own, const UtilityTable& other) {
    if (own.empty() || other.empty())
        throw InputError("decision requires non-empty utility tables");
    if (!own.same_space(other))
        throw InputError("decision requires tables over the same profile space");
    DecisionInputs in;
    in.own_max = argmax_profiles(own);
    in.other_max = argmax_profiles(other);
    in.conflict = detect_conflict({in.own_max, in.other_max});
    in.shared = shared_utility({own, other});
    in.shared_best = argmax_profiles(in.shared).front();
    return in;
}

} // namespace

DecisionOutcome decide_lazy(const UtilityTable& own, const UtilityTable& other,
                            const std::vector<AcceptabilityRule>& rules) {
    const DecisionInputs in = prepare(own, other);
    DecisionOutcome out;

    if (!in.conflict) {
        out.chosen = in.own_max.front();
        out.rationale = DecisionRationale::no_conflict_own_max;
        out.considered.push_back(out.chosen);
        return out;
    }

    for (const JointActionProfile& candidate : in.own_max) {
        out.considered.push_back(candidate);
        if (is_profile_acceptable(candidate, in.other_max.front(), rules)) {
            out.chosen = candidate;
            out.rationale = DecisionRationale::conflict_acceptable_own_max;
            return out;
        }
    }

    out.chosen = in.shared_best;
    out.rationale = DecisionRationale::conflict_shared_max;
    out.considered.push_back(out.chosen);
    return out;
}

DecisionOutcome decide_full(const UtilityTable& own, const UtilityTable& other,
                            const std::vector<AcceptabilityRule>& rules) {
    const DecisionInputs in = prepare(own, other);
    DecisionOutcome out;

    if (!in.conflict) {
        out.chosen = in.own_max.front();
        out.rationale = DecisionRationale::no_conflict_own_max;
        out.considered.push_back(out.chosen);
        return out;
    }

    // Candidates in descending own-utility order, declaration order within
    // ties; stop once a candidate is worse for self than the shared-max
    // fallback.
    std::vector<std::size_t> order(own.entries().size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return own.entries()[a].second > own.entries()[b].second;
    });
    const double fallback_utility = own.value_of(in.shared_best);

    for (std::size_t idx : order) {
        const JointActionProfile& candidate = own.entries()[idx].first;
        if (own.entries()[idx].second < fallback_utility) break;
        out.considered.push_back(candidate);
        if (!detect_conflict({{candidate}, in.other_max})) {
            out.chosen = candidate;
            out.rationale = DecisionRationale::no_conflict_own_max;
            return out;
        }
        if (is_profile_acceptable(candidate, in.other_max.front(), rules)) {
            out.chosen = candidate;
            out.rationale = DecisionRationale::conflict_acceptable_own_max;
            return out;
        }
    }

    out.chosen = in.shared_best;
    out.rationale = DecisionRationale::conflict_shared_max;
    out.considered.push_back(out.chosen);
    return out;
}

} // namespace argonaut::agents
