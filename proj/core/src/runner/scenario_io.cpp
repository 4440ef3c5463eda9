#include "argonaut/runner/scenario_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "argonaut/errors.hpp"
#include "argonaut/protocol/codec.hpp"

namespace argonaut::runner {

protocol::Scenario parse_scenario(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    protocol::Scenario scenario = protocol::decode_scenario(doc);
    protocol::validate_scenario(scenario);
    return scenario;
}

protocol::Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read scenario file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), path.string());
}

std::string serialize_scenario(const protocol::Scenario& scenario) {
    return protocol::encode_scenario(scenario).dump(2) + "\n";
}

std::string scenario_hash(const protocol::Scenario& scenario) {
    const std::string canonical = protocol::encode_scenario(scenario).dump();
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : canonical) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    static const char* kHex = "0123456789abcdef";
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4) out += kHex[(hash >> shift) & 0xF];
    return out;
}

} // namespace argonaut::runner
