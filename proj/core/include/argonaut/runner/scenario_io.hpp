#pragma once

#include <filesystem>
#include <string>

#include "argonaut/protocol/scenario.hpp"

namespace argonaut::runner {

/// Parses and fully validates a scenario file. ParseError carries the
/// parser's position diagnostics; ValidationError names the violated
/// invariant.
protocol::Scenario load_scenario(const std::filesystem::path& path);

/// Same, from an in-memory document. `origin` labels diagnostics.
protocol::Scenario parse_scenario(const std::string& text, const std::string& origin);

/// Canonical serialization; parsing it back yields an equal scenario.
std::string serialize_scenario(const protocol::Scenario& scenario);

/// Stable FNV-1a 64 hash of the canonical serialization, hex-encoded.
std::string scenario_hash(const protocol::Scenario& scenario);

} // namespace argonaut::runner
