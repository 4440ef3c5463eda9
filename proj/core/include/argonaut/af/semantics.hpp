#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argonaut/af/framework.hpp"

namespace argonaut::af {

/// The four admissible-set-based semantics the engine supports.
enum class Semantics { complete, preferred, grounded, maximal_ideal };

std::string to_string(Semantics s);
std::optional<Semantics> parse_semantics(std::string_view name);

/// All semantics names accepted by parse_semantics, in dispatch order.
const std::vector<Semantics>& all_semantics();

// Set-level predicates. `s` may list members in any order; every member must
// belong to the framework, otherwise InputError. Duplicates are tolerated.

/// No attack has both endpoints inside `s`.
bool is_conflict_free(const ArgumentationFramework& af, const std::vector<ArgumentId>& s);

/// Every attacker of `a` is attacked by at least one member of `s`
/// (`s` defends `a`). `a` must belong to the framework.
bool is_acceptable(const ArgumentationFramework& af, const std::vector<ArgumentId>& s,
                   const ArgumentId& a);

/// Conflict-free and every member is acceptable with respect to `s`.
bool is_admissible(const ArgumentationFramework& af, const std::vector<ArgumentId>& s);

/// The set of all arguments acceptable with respect to `s`, sorted.
std::vector<ArgumentId> characteristic_function(const ArgumentationFramework& af,
                                                const std::vector<ArgumentId>& s);

/// Least fixed point of the characteristic function starting from {};
/// equivalently the least complete extension. Total for any framework.
Extension grounded_extension(const ArgumentationFramework& af);

/// All conflict-free fixed points of the characteristic function,
/// in canonical order.
std::vector<Extension> complete_extensions(const ArgumentationFramework& af);

/// All set-inclusion-maximal admissible sets, in canonical order.
/// Never empty: when nothing else is admissible the result is { {} }.
std::vector<Extension> preferred_extensions(const ArgumentationFramework& af);

/// The unique maximal admissible set contained in the intersection of all
/// preferred extensions.
Extension maximal_ideal_extension(const ArgumentationFramework& af);

/// Uniform dispatch. Single-valued semantics (grounded, maximal_ideal)
/// return a singleton list.
std::vector<Extension> solve(const ArgumentationFramework& af, Semantics semantics);

/// Hard cap for the enumeration-based semantics (argument sets are indexed
/// as 64-bit masks); exceeding it raises SizeError. grounded_extension has
/// no such bound.
inline constexpr std::size_t kMaxEnumerationArguments = 64;

} // namespace argonaut::af
