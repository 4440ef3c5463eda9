#pragma once

#include <random>
#include <string>
#include <vector>

#include "argonaut/af/framework.hpp"

namespace testsupport {

// AF1 and AF2, the two running argumentation examples.
inline argonaut::af::ArgumentationFramework af1() {
    return {{"a1", "b1", "c1"}, {{"b1", "a1"}, {"c1", "b1"}, {"b1", "c1"}}};
}

inline argonaut::af::ArgumentationFramework af2() {
    return {{"a2", "b2", "c2", "d2", "e2"},
            {{"b2", "a2"},
             {"b2", "d2"},
             {"c2", "b2"},
             {"d2", "c2"},
             {"e2", "d2"},
             {"d2", "e2"}}};
}

inline argonaut::af::ArgumentationFramework mutual_attack() {
    return {{"a", "b"}, {{"a", "b"}, {"b", "a"}}};
}

/// Random framework with up to `max_args` arguments and a density drawn per
/// framework; self-attacks included.
inline argonaut::af::ArgumentationFramework random_framework(std::mt19937& rng,
                                                             int max_args = 8) {
    std::uniform_int_distribution<int> n_dist(0, max_args);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = n_dist(rng);
    const double density = unit(rng);

    std::vector<argonaut::af::ArgumentId> args;
    args.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) args.push_back("x" + std::to_string(i));

    std::vector<argonaut::af::Attack> attacks;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (unit(rng) < density) attacks.push_back({args[static_cast<std::size_t>(i)],
                                                        args[static_cast<std::size_t>(j)]});
        }
    }
    return {args, attacks};
}

} // namespace testsupport
