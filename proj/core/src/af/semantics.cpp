#include "argonaut/af/semantics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "argonaut/errors.hpp"

namespace argonaut::af {

std::string to_string(Semantics s) {
    switch (s) {
        case Semantics::complete: return "complete";
        case Semantics::preferred: return "preferred";
        case Semantics::grounded: return "grounded";
        case Semantics::maximal_ideal: return "maximal_ideal";
    }
    return "unknown";
}

std::optional<Semantics> parse_semantics(std::string_view name) {
    if (name == "complete") return Semantics::complete;
    if (name == "preferred") return Semantics::preferred;
    if (name == "grounded") return Semantics::grounded;
    if (name == "maximal_ideal") return Semantics::maximal_ideal;
    return std::nullopt;
}

const std::vector<Semantics>& all_semantics() {
    static const std::vector<Semantics> kAll = {
        Semantics::complete, Semantics::preferred, Semantics::grounded,
        Semantics::maximal_ideal};
    return kAll;
}

namespace {

// Membership flags for a caller-supplied set, validated against the framework.
std::vector<char> member_flags(const ArgumentationFramework& af,
                               const std::vector<ArgumentId>& s) {
    std::vector<char> in_set(af.argument_count(), 0);
    for (const auto& id : s) {
        const int idx = af.index_of(id);
        if (idx < 0) throw InputError("set member '" + id + "' is not in the framework");
        in_set[static_cast<std::size_t>(idx)] = 1;
    }
    return in_set;
}

// Flags for every argument attacked by some member of `in_set`.
std::vector<char> attacked_by(const ArgumentationFramework& af,
                              const std::vector<char>& in_set) {
    std::vector<char> attacked(af.argument_count(), 0);
    for (std::size_t i = 0; i < in_set.size(); ++i) {
        if (!in_set[i]) continue;
        for (int t : af.targets_of(i)) attacked[static_cast<std::size_t>(t)] = 1;
    }
    return attacked;
}

bool defended(const ArgumentationFramework& af, const std::vector<char>& attacked,
              std::size_t arg) {
    for (int b : af.attackers_of(arg)) {
        if (!attacked[static_cast<std::size_t>(b)]) return false;
    }
    return true;
}

// Mask-indexed view for the enumeration-based semantics.
struct MaskIndex {
    std::size_t n = 0;
    std::vector<std::uint64_t> targets;    // targets[i]: mask of arguments i attacks
    std::vector<std::uint64_t> attackers;  // attackers[i]: mask of arguments attacking i

    explicit MaskIndex(const ArgumentationFramework& af) : n(af.argument_count()) {
        if (n > kMaxEnumerationArguments)
            throw SizeError("framework too large for subset search (" +
                            std::to_string(n) + " arguments, limit " +
                            std::to_string(kMaxEnumerationArguments) + ")");
        targets.assign(n, 0);
        attackers.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (int t : af.targets_of(i)) targets[i] |= std::uint64_t{1} << t;
            for (int b : af.attackers_of(i)) attackers[i] |= std::uint64_t{1} << b;
        }
    }

    bool admissible(std::uint64_t set, std::uint64_t attacked) const {
        for (std::uint64_t rest = set; rest;) {
            const int i = std::countr_zero(rest);
            rest &= rest - 1;
            if (attackers[static_cast<std::size_t>(i)] & ~attacked) return false;
        }
        return true;
    }

    // F(set) == set, given `attacked` = union of set members' targets.
    bool complete(std::uint64_t set, std::uint64_t attacked) const {
        for (std::size_t i = 0; i < n; ++i) {
            const bool acceptable = (attackers[i] & ~attacked) == 0;
            const bool member = (set >> i) & 1;
            if (acceptable != member) return false;
        }
        return true;
    }
};

// Depth-first search over conflict-free sets. Calls `sink(set, attacked)` for
// every conflict-free subset, where `attacked` is the union of the members'
// target masks.
template <typename Sink>
void for_each_conflict_free(const MaskIndex& ix, std::size_t next, std::uint64_t set,
                            std::uint64_t attacked, Sink&& sink) {
    if (next == ix.n) {
        sink(set, attacked);
        return;
    }
    for_each_conflict_free(ix, next + 1, set, attacked, sink);
    const std::uint64_t bit = std::uint64_t{1} << next;
    const bool clash = (ix.targets[next] & (set | bit)) != 0 || (ix.attackers[next] & set) != 0;
    if (!clash) {
        for_each_conflict_free(ix, next + 1, set | bit, attacked | ix.targets[next],
                               std::forward<Sink>(sink));
    }
}

Extension mask_to_extension(const ArgumentationFramework& af, std::uint64_t mask) {
    std::vector<ArgumentId> members;
    for (std::uint64_t rest = mask; rest;) {
        const int i = std::countr_zero(rest);
        rest &= rest - 1;
        members.push_back(af.id_of(static_cast<std::size_t>(i)));
    }
    return Extension(std::move(members));
}

std::vector<Extension> masks_to_canonical(const ArgumentationFramework& af,
                                          const std::vector<std::uint64_t>& masks) {
    std::vector<Extension> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks) out.push_back(mask_to_extension(af, m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> admissible_masks(const ArgumentationFramework& af,
                                            const MaskIndex& ix) {
    (void)af;
    std::vector<std::uint64_t> out;
    for_each_conflict_free(ix, 0, 0, 0, [&](std::uint64_t set, std::uint64_t attacked) {
        if (ix.admissible(set, attacked)) out.push_back(set);
    });
    return out;
}

// Maximal elements of `sets` under mask inclusion. Processes candidates in
// descending popcount order; every processed non-maximal set is covered by an
// already-accepted maximal one, so testing against the accepted list suffices.
std::vector<std::uint64_t> maximal_masks(std::vector<std::uint64_t> sets) {
    std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa > pb;
        return a < b;
    });
    std::vector<std::uint64_t> maximal;
    for (std::uint64_t s : sets) {
        bool covered = false;
        for (std::uint64_t m : maximal) {
            if ((s & ~m) == 0 && s != m) {
                covered = true;
                break;
            }
        }
        if (!covered) maximal.push_back(s);
    }
    return maximal;
}

} // namespace

bool is_conflict_free(const ArgumentationFramework& af, const std::vector<ArgumentId>& s) {
    const auto in_set = member_flags(af, s);
    for (std::size_t i = 0; i < in_set.size(); ++i) {
        if (!in_set[i]) continue;
        for (int t : af.targets_of(i)) {
            if (in_set[static_cast<std::size_t>(t)]) return false;
        }
    }
    return true;
}

bool is_acceptable(const ArgumentationFramework& af, const std::vector<ArgumentId>& s,
                   const ArgumentId& a) {
    const int idx = af.index_of(a);
    if (idx < 0) throw InputError("argument '" + a + "' is not in the framework");
    const auto attacked = attacked_by(af, member_flags(af, s));
    return defended(af, attacked, static_cast<std::size_t>(idx));
}

bool is_admissible(const ArgumentationFramework& af, const std::vector<ArgumentId>& s) {
    const auto in_set = member_flags(af, s);
    for (std::size_t i = 0; i < in_set.size(); ++i) {
        if (!in_set[i]) continue;
        for (int t : af.targets_of(i)) {
            if (in_set[static_cast<std::size_t>(t)]) return false;
        }
    }
    const auto attacked = attacked_by(af, in_set);
    for (std::size_t i = 0; i < in_set.size(); ++i) {
        if (in_set[i] && !defended(af, attacked, i)) return false;
    }
    return true;
}

std::vector<ArgumentId> characteristic_function(const ArgumentationFramework& af,
                                                const std::vector<ArgumentId>& s) {
    const auto attacked = attacked_by(af, member_flags(af, s));
    std::vector<ArgumentId> out;
    for (std::size_t i = 0; i < af.argument_count(); ++i) {
        if (defended(af, attacked, i)) out.push_back(af.id_of(i));
    }
    return out;
}

Extension grounded_extension(const ArgumentationFramework& af) {
    const std::size_t n = af.argument_count();
    std::vector<char> current(n, 0);
    for (;;) {
        const auto attacked = attacked_by(af, current);
        std::vector<char> next(n, 0);
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = defended(af, attacked, i) ? 1 : 0;
            if (next[i] != current[i]) changed = true;
        }
        if (!changed) break;
        current = std::move(next);
    }
    std::vector<ArgumentId> members;
    for (std::size_t i = 0; i < n; ++i) {
        if (current[i]) members.push_back(af.id_of(i));
    }
    return Extension(std::move(members));
}

std::vector<Extension> complete_extensions(const ArgumentationFramework& af) {
    const MaskIndex ix(af);
    std::vector<std::uint64_t> found;
    for_each_conflict_free(ix, 0, 0, 0, [&](std::uint64_t set, std::uint64_t attacked) {
        if (ix.complete(set, attacked)) found.push_back(set);
    });
    return masks_to_canonical(af, found);
}

std::vector<Extension> preferred_extensions(const ArgumentationFramework& af) {
    const MaskIndex ix(af);
    return masks_to_canonical(af, maximal_masks(admissible_masks(af, ix)));
}

Extension maximal_ideal_extension(const ArgumentationFramework& af) {
    const MaskIndex ix(af);
    const auto preferred = maximal_masks(admissible_masks(af, ix));

    std::uint64_t intersection = ~std::uint64_t{0};
    for (std::uint64_t p : preferred) intersection &= p;
    if (ix.n < 64) intersection &= (std::uint64_t{1} << ix.n) - 1;

    // The intersection is conflict-free (it is a subset of any preferred
    // extension), so the maximal admissible subset is the fixpoint of
    // repeatedly dropping members the current set does not defend.
    std::uint64_t current = intersection;
    for (;;) {
        std::uint64_t attacked = 0;
        for (std::uint64_t rest = current; rest;) {
            const int i = std::countr_zero(rest);
            rest &= rest - 1;
            attacked |= ix.targets[static_cast<std::size_t>(i)];
        }
        std::uint64_t next = 0;
        for (std::uint64_t rest = current; rest;) {
            const int i = std::countr_zero(rest);
            rest &= rest - 1;
            if ((ix.attackers[static_cast<std::size_t>(i)] & ~attacked) == 0)
                next |= std::uint64_t{1} << i;
        }
        if (next == current) break;
        current = next;
    }
    return mask_to_extension(af, current);
}

std::vector<Extension> solve(const ArgumentationFramework& af, Semantics semantics) {
    switch (semantics) {
        case Semantics::complete: return complete_extensions(af);
        case Semantics::preferred: return preferred_extensions(af);
        case Semantics::grounded: return {grounded_extension(af)};
        case Semantics::maximal_ideal: return {maximal_ideal_extension(af)};
    }
    throw InputError("unknown semantics");
}

} // namespace argonaut::af
