#pragma once

#include <json.hpp>

namespace argonaut {

// ordered_json keeps object keys in insertion order, which keeps every
// serialized payload and trace line byte-stable across runs.
using json = nlohmann::ordered_json;

} // namespace argonaut
