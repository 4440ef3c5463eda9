#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace argonaut::af {

using ArgumentId = std::string;

/// Directed attack edge: `attacker` attacks `target`.
struct Attack {
    ArgumentId attacker;
    ArgumentId target;

    auto operator<=>(const Attack&) const = default;
};

/// A set of arguments in canonical form: members sorted and unique.
/// Extensions compare lexicographically on their member lists, which is the
/// canonical order in which extension sets are reported everywhere.
class Extension {
public:
    Extension() = default;
    explicit Extension(std::vector<ArgumentId> members);

    const std::vector<ArgumentId>& members() const { return members_; }
    bool contains(const ArgumentId& id) const;
    bool subset_of(const Extension& other) const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    /// Renders as "{a,b,c}"; the empty extension renders as "{}".
    std::string to_string() const;

    auto operator<=>(const Extension&) const = default;

private:
    std::vector<ArgumentId> members_;
};

/// Dung argumentation framework: a finite argument set plus a binary attack
/// relation over it. Arguments and attacks are stored as sets (duplicates in
/// the input are dropped silently); attack endpoints must name arguments of
/// the framework. Self-attacks are legal input.
class ArgumentationFramework {
public:
    ArgumentationFramework() = default;
    ArgumentationFramework(const std::vector<ArgumentId>& arguments,
                           const std::vector<Attack>& attacks);

    const std::vector<ArgumentId>& arguments() const { return ids_; }
    const std::vector<Attack>& attacks() const { return attack_list_; }
    std::size_t argument_count() const { return ids_.size(); }

    bool contains(const ArgumentId& id) const;
    bool has_attack(const ArgumentId& attacker, const ArgumentId& target) const;

    // Index view used by the solvers. Arguments are indexed in sorted-id
    // order, 0..argument_count()-1.
    int index_of(const ArgumentId& id) const;  // -1 when absent
    const ArgumentId& id_of(std::size_t index) const { return ids_[index]; }
    const std::vector<int>& attackers_of(std::size_t index) const { return attackers_[index]; }
    const std::vector<int>& targets_of(std::size_t index) const { return targets_[index]; }
    bool edge(std::size_t attacker, std::size_t target) const {
        return matrix_[attacker * ids_.size() + target];
    }

    bool operator==(const ArgumentationFramework& other) const {
        return ids_ == other.ids_ && attack_list_ == other.attack_list_;
    }

private:
    std::vector<ArgumentId> ids_;
    std::vector<Attack> attack_list_;
    std::vector<std::vector<int>> attackers_;
    std::vector<std::vector<int>> targets_;
    std::vector<char> matrix_;
};

} // namespace argonaut::af
