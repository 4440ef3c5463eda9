#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "argonaut/protocol/session.hpp"

namespace argonaut::runner {

/// A full session trace: one header record plus the ordered event records.
/// Serializes to line-delimited JSON, one record per line, with no
/// timestamps, so identical (scenario, config) inputs produce byte-identical
/// files. The header embeds the canonical scenario, making traces
/// self-contained and replayable.
struct Trace {
    json header;
    std::vector<protocol::TraceEvent> events;

    protocol::Phase outcome = protocol::Phase::cancelled;
    std::optional<agents::ActionId> action;
    int rounds = 0;

    std::string to_jsonl() const;
};

/// Runs the scenario's full choreography and packages the trace.
Trace run_to_trace(const protocol::Scenario& scenario);

void write_trace(const Trace& trace, const std::filesystem::path& path);

/// Re-runs the scenario embedded in a trace document and returns the fresh
/// serialization (replay check helper).
std::string replay_trace_document(const std::string& jsonl);

} // namespace argonaut::runner
