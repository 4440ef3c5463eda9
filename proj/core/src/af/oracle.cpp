#include "argonaut/af/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "argonaut/errors.hpp"

namespace argonaut::af {

namespace {

// The oracle re-states every definition locally over the raw attack list so
// that it shares no logic with the solver path it is checking.
struct RawFramework {
    std::vector<ArgumentId> args;
    std::vector<std::pair<int, int>> edges;  // (attacker, target) indices

    explicit RawFramework(const ArgumentationFramework& af) : args(af.arguments()) {
        for (const Attack& atk : af.attacks()) {
            int a = -1, t = -1;
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (args[i] == atk.attacker) a = static_cast<int>(i);
                if (args[i] == atk.target) t = static_cast<int>(i);
            }
            edges.emplace_back(a, t);
        }
    }

    bool in(std::uint32_t set, int i) const { return (set >> i) & 1; }

    bool conflict_free(std::uint32_t set) const {
        for (const auto& [a, t] : edges) {
            if (in(set, a) && in(set, t)) return false;
        }
        return true;
    }

    // Every attacker of `arg` is attacked by some member of `set`.
    bool acceptable(std::uint32_t set, int arg) const {
        for (const auto& [b, t] : edges) {
            if (t != arg) continue;
            bool countered = false;
            for (const auto& [c, d] : edges) {
                if (d == b && in(set, c)) {
                    countered = true;
                    break;
                }
            }
            if (!countered) return false;
        }
        return true;
    }

    bool admissible(std::uint32_t set) const {
        if (!conflict_free(set)) return false;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (in(set, static_cast<int>(i)) && !acceptable(set, static_cast<int>(i)))
                return false;
        }
        return true;
    }

    bool complete(std::uint32_t set) const {
        if (!admissible(set)) return false;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (acceptable(set, static_cast<int>(i)) && !in(set, static_cast<int>(i)))
                return false;
        }
        return true;
    }

    Extension extension(std::uint32_t set) const {
        std::vector<ArgumentId> members;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (in(set, static_cast<int>(i))) members.push_back(args[i]);
        }
        return Extension(std::move(members));
    }
};

std::vector<std::uint32_t> all_admissible(const RawFramework& raw) {
    const std::uint32_t limit = std::uint32_t{1} << raw.args.size();
    std::vector<std::uint32_t> out;
    for (std::uint32_t set = 0; set < limit; ++set) {
        if (raw.admissible(set)) out.push_back(set);
    }
    return out;
}

// Maximal sets of a list under inclusion, checked in descending popcount
// order against already-accepted maximals.
std::vector<std::uint32_t> maximal_of(std::vector<std::uint32_t> sets) {
    std::sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa > pb;
        return a < b;
    });
    std::vector<std::uint32_t> maximal;
    for (std::uint32_t s : sets) {
        bool covered = false;
        for (std::uint32_t m : maximal) {
            if ((s & ~m) == 0 && s != m) {
                covered = true;
                break;
            }
        }
        if (!covered) maximal.push_back(s);
    }
    return maximal;
}

std::vector<Extension> canonical(const RawFramework& raw,
                                 const std::vector<std::uint32_t>& sets) {
    std::vector<Extension> out;
    out.reserve(sets.size());
    for (std::uint32_t s : sets) out.push_back(raw.extension(s));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Extension> oracle_extensions(const ArgumentationFramework& af,
                                         Semantics semantics) {
    if (af.argument_count() > kOracleMaxArguments)
        throw SizeError("framework too large for the brute-force oracle (" +
                        std::to_string(af.argument_count()) + " arguments, limit " +
                        std::to_string(kOracleMaxArguments) + ")");
    const RawFramework raw(af);
    const std::uint32_t limit = std::uint32_t{1} << raw.args.size();

    switch (semantics) {
        case Semantics::complete: {
            std::vector<std::uint32_t> found;
            for (std::uint32_t set = 0; set < limit; ++set) {
                if (raw.complete(set)) found.push_back(set);
            }
            return canonical(raw, found);
        }
        case Semantics::preferred:
            return canonical(raw, maximal_of(all_admissible(raw)));
        case Semantics::grounded: {
            // Least complete extension, taken literally: the complete
            // extension contained in every other one.
            std::vector<std::uint32_t> complete_sets;
            for (std::uint32_t set = 0; set < limit; ++set) {
                if (raw.complete(set)) complete_sets.push_back(set);
            }
            for (std::uint32_t s : complete_sets) {
                bool least = true;
                for (std::uint32_t other : complete_sets) {
                    if ((s & ~other) != 0) {
                        least = false;
                        break;
                    }
                }
                if (least) return {raw.extension(s)};
            }
            throw InputError("no least complete extension found");  // unreachable
        }
        case Semantics::maximal_ideal: {
            // Ideal = admissible and contained in every preferred set.
            const auto admissible = all_admissible(raw);
            const auto preferred = maximal_of(admissible);
            std::vector<std::uint32_t> ideal;
            for (std::uint32_t s : admissible) {
                bool contained = true;
                for (std::uint32_t p : preferred) {
                    if ((s & ~p) != 0) {
                        contained = false;
                        break;
                    }
                }
                if (contained) ideal.push_back(s);
            }
            const auto maximal = maximal_of(ideal);
            return canonical(raw, maximal);
        }
    }
    throw InputError("unknown semantics");
}

} // namespace argonaut::af
