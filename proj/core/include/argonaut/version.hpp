#pragma once

namespace argonaut {

inline constexpr const char* kEngineVersion = "0.1.0";

} // namespace argonaut
