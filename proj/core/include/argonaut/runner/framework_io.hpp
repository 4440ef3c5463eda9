#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "argonaut/af/framework.hpp"
#include "argonaut/json.hpp"

namespace argonaut::runner {

/// Framework document shape: {"arguments": ["a", ...],
///                            "attacks": [["attacker", "target"], ...]}.
af::ArgumentationFramework framework_from_json(const json& j);

af::ArgumentationFramework load_framework(const std::filesystem::path& path);

json framework_to_json(const af::ArgumentationFramework& framework);

/// Canonical listing, one extension per line: "{}", "{a1,c1}", ...
std::string format_extensions(const std::vector<af::Extension>& extensions);

} // namespace argonaut::runner
