#pragma once

#include <vector>

#include "argonaut/af/framework.hpp"
#include "argonaut/af/semantics.hpp"

namespace argonaut::af {

/// Enumeration bound for the brute-force oracle.
inline constexpr std::size_t kOracleMaxArguments = 20;

/// Brute-force reference solver: enumerates all 2^n argument subsets and
/// filters them by the literal textbook definitions, independently of the
/// solver's pruned subset search and fixpoint machinery. Same result contract
/// as solve(). Intended for tests; raises SizeError beyond
/// kOracleMaxArguments arguments.
std::vector<Extension> oracle_extensions(const ArgumentationFramework& af,
                                         Semantics semantics);

} // namespace argonaut::af
