#include "argonaut/runner/trace.hpp"

#include <fstream>
#include <sstream>

#include "argonaut/errors.hpp"
#include "argonaut/protocol/codec.hpp"
#include "argonaut/runner/scenario_io.hpp"
#include "argonaut/version.hpp"

namespace argonaut::runner {

std::string Trace::to_jsonl() const {
    std::string out = header.dump() + "\n";
    for (const protocol::TraceEvent& event : events) {
        json record{{"type", protocol::to_string(event.type)}};
        record.update(event.body);
        out += record.dump() + "\n";
    }
    return out;
}

Trace run_to_trace(const protocol::Scenario& scenario) {
    const protocol::SessionResult result = protocol::run_session(scenario);

    Trace trace;
    trace.header = json{{"type", "header"},
                        {"schema", "argonaut-trace/1"},
                        {"engine", kEngineVersion},
                        {"scenario_hash", scenario_hash(scenario)},
                        {"config",
                         json{{"variant", protocol::to_string(scenario.config.variant)},
                              {"semantics", protocol::to_string(scenario.config.resolution)},
                              {"max_rounds", scenario.config.max_rounds},
                              {"shared_utility_operator", "sum"}}},
                        {"scenario", protocol::encode_scenario(scenario)}};
    trace.events = result.events;
    trace.outcome = result.outcome;
    trace.action = result.action;
    trace.rounds = result.rounds;
    return trace;
}

void write_trace(const Trace& trace, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write trace file '" + path.string() + "'");
    out << trace.to_jsonl();
}

std::string replay_trace_document(const std::string& jsonl) {
    std::istringstream in(jsonl);
    std::string first_line;
    if (!std::getline(in, first_line))
        throw ParseError("trace document is empty");
    json header;
    try {
        header = json::parse(first_line);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("trace header: ") + e.what());
    }
    if (header.value("type", "") != "header" || !header.contains("scenario"))
        throw ValidationError("trace document has no scenario header");
    protocol::Scenario scenario = protocol::decode_scenario(header.at("scenario"));
    protocol::validate_scenario(scenario);
    return run_to_trace(scenario).to_jsonl();
}

} // namespace argonaut::runner
