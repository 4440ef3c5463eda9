#include "argonaut/runner/framework_io.hpp"

#include <fstream>
#include <sstream>

#include "argonaut/errors.hpp"

namespace argonaut::runner {

af::ArgumentationFramework framework_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("framework: document must be an object");
    if (!j.contains("arguments") || !j.at("arguments").is_array())
        throw ValidationError("framework: missing 'arguments' array");
    std::vector<af::ArgumentId> arguments;
    for (const json& a : j.at("arguments")) {
        if (!a.is_string()) throw ValidationError("framework: arguments must be strings");
        arguments.push_back(a.get<std::string>());
    }
    std::vector<af::Attack> attacks;
    if (j.contains("attacks")) {
        if (!j.at("attacks").is_array())
            throw ValidationError("framework: 'attacks' must be an array");
        for (const json& pair : j.at("attacks")) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
                !pair[1].is_string())
                throw ValidationError(
                    "framework: attacks must be [attacker, target] string pairs");
            attacks.push_back({pair[0].get<std::string>(), pair[1].get<std::string>()});
        }
    }
    try {
        return af::ArgumentationFramework(arguments, attacks);
    } catch (const InputError& e) {
        throw ValidationError(std::string("framework: ") + e.what());
    }
}

af::ArgumentationFramework load_framework(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read framework file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return framework_from_json(doc);
}

json framework_to_json(const af::ArgumentationFramework& framework) {
    json attacks = json::array();
    for (const af::Attack& atk : framework.attacks()) {
        attacks.push_back(json::array({atk.attacker, atk.target}));
    }
    return json{{"arguments", framework.arguments()}, {"attacks", std::move(attacks)}};
}

std::string format_extensions(const std::vector<af::Extension>& extensions) {
    std::string out;
    for (const af::Extension& e : extensions) out += e.to_string() + "\n";
    return out;
}

} // namespace argonaut::runner
