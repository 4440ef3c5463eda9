#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "argonaut/json.hpp"

namespace argonaut::protocol {

enum class MessageKind {
    announce_utilities,
    respond_utilities,
    propose_action,
    approve,
    disapprove,
    request_rules,
    send_rules,
    send_attacks,
    accept_af,
    cancel_session,
    execute_action,
};

std::string to_string(MessageKind kind);
std::optional<MessageKind> parse_message_kind(std::string_view name);

/// One message on the simulated session bus. `seq` is stamped by the session
/// at delivery time and is strictly increasing within a session.
struct Message {
    std::string from;
    std::string to;
    MessageKind kind = MessageKind::announce_utilities;
    json payload;
    std::uint64_t seq = 0;
};

/// One record of a session trace. The body is already in serialized shape;
/// the runner only wraps it with the record type when writing trace files.
struct TraceEvent {
    enum class Type { message, decision, framework, resolution, violation, outcome };

    Type type = Type::message;
    json body;
};

std::string to_string(TraceEvent::Type type);

} // namespace argonaut::protocol
