#include "argonaut/af/framework.hpp"

#include <algorithm>

#include "argonaut/errors.hpp"

namespace argonaut::af {

Extension::Extension(std::vector<ArgumentId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Extension::contains(const ArgumentId& id) const {
    return std::binary_search(members_.begin(), members_.end(), id);
}

bool Extension::subset_of(const Extension& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
}

std::string Extension::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i > 0) out += ",";
        out += members_[i];
    }
    out += "}";
    return out;
}

ArgumentationFramework::ArgumentationFramework(const std::vector<ArgumentId>& arguments,
                                               const std::vector<Attack>& attacks) {
    ids_ = arguments;
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    for (const auto& id : ids_) {
        if (id.empty()) throw InputError("argument id must be non-empty");
    }

    const std::size_t n = ids_.size();
    attackers_.assign(n, {});
    targets_.assign(n, {});
    matrix_.assign(n * n, 0);

    attack_list_ = attacks;
    std::sort(attack_list_.begin(), attack_list_.end());
    attack_list_.erase(std::unique(attack_list_.begin(), attack_list_.end()),
                       attack_list_.end());

    for (const auto& atk : attack_list_) {
        const int a = index_of(atk.attacker);
        const int t = index_of(atk.target);
        if (a < 0)
            throw InputError("attack references unknown attacker '" + atk.attacker + "'");
        if (t < 0)
            throw InputError("attack references unknown target '" + atk.target + "'");
        matrix_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(t)] = 1;
        attackers_[static_cast<std::size_t>(t)].push_back(a);
        targets_[static_cast<std::size_t>(a)].push_back(t);
    }
}

bool ArgumentationFramework::contains(const ArgumentId& id) const {
    return index_of(id) >= 0;
}

bool ArgumentationFramework::has_attack(const ArgumentId& attacker,
                                        const ArgumentId& target) const {
    const int a = index_of(attacker);
    const int t = index_of(target);
    if (a < 0 || t < 0) return false;
    return edge(static_cast<std::size_t>(a), static_cast<std::size_t>(t));
}

int ArgumentationFramework::index_of(const ArgumentId& id) const {
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return -1;
    return static_cast<int>(it - ids_.begin());
}

} // namespace argonaut::af
