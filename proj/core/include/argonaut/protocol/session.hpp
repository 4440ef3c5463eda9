#pragma once

#include <optional>
#include <string>
#include <vector>

#include "argonaut/protocol/codec.hpp"
#include "argonaut/protocol/framework_builder.hpp"
#include "argonaut/protocol/messages.hpp"
#include "argonaut/protocol/scenario.hpp"

namespace argonaut::protocol {

enum class Phase { init, utilities_exchanged, proposed, arguing, agreed, cancelled };

std::string to_string(Phase phase);

struct BeliefBase {
    agents::UtilityTable utilities;
    std::optional<agents::UtilityTable> counterpart_utilities;
    std::vector<agents::AcceptabilityRule> rules;
    std::vector<AttackClaim> attacks;  // claims launched by this agent, still standing
};

struct AgentState {
    Role role = Role::persuader;
    std::string name;
    BeliefBase beliefs;
    std::vector<AttackClaim> repertoire;
};

struct DeliveryResult {
    bool accepted = false;
    std::uint64_t seq = 0;
    std::string error;
};

/// One two-agent negotiation. The session is the simulated message bus:
/// deliver() stamps a strictly increasing sequence number, validates the
/// message against the phase machine, applies it, and logs it. Out-of-phase
/// or malformed messages are rejected and recorded as violation events;
/// delivery on a terminal session raises DeliveryError. run() drives the
/// whole choreography deterministically.
class Session {
public:
    explicit Session(Scenario scenario);

    DeliveryResult deliver(Message message);
    void run();

    /// Belief synchronization loop: alternating mitigator/persuader turns in
    /// which each agent launches repertoire attacks, accepts the framework,
    /// or cancels, bounded by the configured round budget. Requires the
    /// arguing phase; leaves the session proposed or cancelled.
    void synchronize_beliefs();

    Phase phase() const { return phase_; }
    int rounds_used() const { return rounds_used_; }
    const std::vector<TraceEvent>& events() const { return events_; }
    const Scenario& scenario() const { return scenario_; }
    const AgentState& persuader() const { return persuader_; }
    const AgentState& mitigator() const { return mitigator_; }
    std::optional<agents::ActionId> agreed_action() const { return agreed_action_; }

    const std::vector<agents::AcceptabilityRule>& rule_pool() const { return rule_pool_; }
    const std::vector<AttackClaim>& claim_pool() const { return claim_pool_; }
    af::ArgumentationFramework current_framework() const;

    /// The decision the given seat currently stands behind. Both seats
    /// compute the acting agent's choice (the persuader's utilities fill the
    /// `own` slot), differing only in which rule set they believe.
    agents::DecisionOutcome expected_decision(Role seat) const;

private:
    struct Resolved {
        af::ArgumentationFramework framework;
        af::Extension extension;
        std::vector<agents::AcceptabilityRule> surviving_rules;  // pool order
    };

    bool terminal() const { return phase_ == Phase::agreed || phase_ == Phase::cancelled; }
    std::string phase_error(const Message& message) const;
    void apply(const Message& message);
    Resolved resolve_pool() const;
    void apply_resolution(const Resolved& resolved);
    void take_turn(AgentState& actor, AgentState& counterpart);
    bool acceptance_consistent() const;
    void log_decision(const AgentState& seat_owner, const agents::DecisionOutcome& outcome);
    void log_framework_snapshot();
    void log_outcome(const std::string& status, const std::string& reason);
    Message make(const AgentState& from, const AgentState& to, MessageKind kind,
                 json payload) const;

    Scenario scenario_;
    AgentState persuader_;
    AgentState mitigator_;
    Phase phase_ = Phase::init;
    int rounds_used_ = 0;
    std::uint64_t next_seq_ = 1;
    bool announced_ = false;
    bool rules_requested_ = false;
    bool rules_sent_ = false;
    bool approved_ = false;
    std::optional<agents::ActionId> proposal_;
    std::optional<agents::ActionId> agreed_action_;
    std::vector<agents::AcceptabilityRule> rule_pool_;
    std::vector<AttackClaim> claim_pool_;
    std::vector<TraceEvent> events_;
};

struct SessionResult {
    Phase outcome = Phase::cancelled;
    std::optional<agents::ActionId> action;
    int rounds = 0;
    std::vector<TraceEvent> events;
};

/// Full choreography over a validated scenario.
SessionResult run_session(const Scenario& scenario);

/// Same, with the scenario's config replaced.
SessionResult run_session(Scenario scenario, const SessionConfig& config);

} // namespace argonaut::protocol
