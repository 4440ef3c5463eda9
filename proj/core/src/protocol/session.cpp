#include "argonaut/protocol/session.hpp"

#include <algorithm>

#include "argonaut/af/semantics.hpp"
#include "argonaut/errors.hpp"

namespace argonaut::protocol {

std::string to_string(Phase phase) {
    switch (phase) {
        case Phase::init: return "init";
        case Phase::utilities_exchanged: return "utilities_exchanged";
        case Phase::proposed: return "proposed";
        case Phase::arguing: return "arguing";
        case Phase::agreed: return "agreed";
        case Phase::cancelled: return "cancelled";
    }
    return "unknown";
}

std::string to_string(MessageKind kind) {
    switch (kind) {
        case MessageKind::announce_utilities: return "announce_utilities";
        case MessageKind::respond_utilities: return "respond_utilities";
        case MessageKind::propose_action: return "propose_action";
        case MessageKind::approve: return "approve";
        case MessageKind::disapprove: return "disapprove";
        case MessageKind::request_rules: return "request_rules";
        case MessageKind::send_rules: return "send_rules";
        case MessageKind::send_attacks: return "send_attacks";
        case MessageKind::accept_af: return "accept_af";
        case MessageKind::cancel_session: return "cancel_session";
        case MessageKind::execute_action: return "execute_action";
    }
    return "unknown";
}

std::optional<MessageKind> parse_message_kind(std::string_view name) {
    static const std::pair<std::string_view, MessageKind> kNames[] = {
        {"announce_utilities", MessageKind::announce_utilities},
        {"respond_utilities", MessageKind::respond_utilities},
        {"propose_action", MessageKind::propose_action},
        {"approve", MessageKind::approve},
        {"disapprove", MessageKind::disapprove},
        {"request_rules", MessageKind::request_rules},
        {"send_rules", MessageKind::send_rules},
        {"send_attacks", MessageKind::send_attacks},
        {"accept_af", MessageKind::accept_af},
        {"cancel_session", MessageKind::cancel_session},
        {"execute_action", MessageKind::execute_action},
    };
    for (const auto& [n, k] : kNames) {
        if (n == name) return k;
    }
    return std::nullopt;
}

std::string to_string(TraceEvent::Type type) {
    switch (type) {
        case TraceEvent::Type::message: return "message";
        case TraceEvent::Type::decision: return "decision";
        case TraceEvent::Type::framework: return "framework";
        case TraceEvent::Type::resolution: return "resolution";
        case TraceEvent::Type::violation: return "violation";
        case TraceEvent::Type::outcome: return "outcome";
    }
    return "unknown";
}

namespace {

af::Extension resolve_extension(const af::ArgumentationFramework& framework,
                                Resolution resolution) {
    switch (resolution) {
        case Resolution::maximal_ideal: return af::maximal_ideal_extension(framework);
        case Resolution::grounded: return af::grounded_extension(framework);
        case Resolution::preferred_intersection: {
            const auto preferred = af::preferred_extensions(framework);
            std::vector<af::ArgumentId> common;
            for (const af::ArgumentId& id : framework.arguments()) {
                const bool everywhere =
                    std::all_of(preferred.begin(), preferred.end(),
                                [&](const af::Extension& e) { return e.contains(id); });
                if (everywhere) common.push_back(id);
            }
            return af::Extension(std::move(common));
        }
    }
    throw InputError("unknown resolution semantics");
}

json encode_framework(const af::ArgumentationFramework& framework) {
    json attacks = json::array();
    for (const af::Attack& atk : framework.attacks()) {
        attacks.push_back(json::array({atk.attacker, atk.target}));
    }
    return json{{"arguments", framework.arguments()}, {"attacks", std::move(attacks)}};
}

} // namespace

Session::Session(Scenario scenario) : scenario_(std::move(scenario)) {
    validate_scenario(scenario_);

    persuader_.role = Role::persuader;
    persuader_.name = scenario_.persuader.name;
    persuader_.beliefs.utilities = to_utility_table(scenario_.persuader);
    persuader_.beliefs.rules = scenario_.persuader.rules;
    persuader_.repertoire = scenario_.persuader.repertoire;

    mitigator_.role = Role::mitigator;
    mitigator_.name = scenario_.mitigator.name;
    mitigator_.beliefs.utilities = to_utility_table(scenario_.mitigator);
    mitigator_.beliefs.rules = scenario_.mitigator.rules;
    mitigator_.repertoire = scenario_.mitigator.repertoire;

    // Rule pool: persuader's rules first, then the mitigator's additions.
    rule_pool_ = scenario_.persuader.rules;
    for (const agents::AcceptabilityRule& rule : scenario_.mitigator.rules) {
        const bool known = std::any_of(rule_pool_.begin(), rule_pool_.end(),
                                       [&](const auto& r) { return r.id == rule.id; });
        if (!known) rule_pool_.push_back(rule);
    }
}

af::ArgumentationFramework Session::current_framework() const {
    return build_framework(rule_pool_, claim_pool_);
}

agents::DecisionOutcome Session::expected_decision(Role seat) const {
    const AgentState& agent = (seat == Role::persuader) ? persuader_ : mitigator_;
    if (!agent.beliefs.counterpart_utilities)
        throw InputError("expected_decision before utilities were exchanged");
    const agents::UtilityTable& own = (seat == Role::persuader)
                                          ? agent.beliefs.utilities
                                          : *agent.beliefs.counterpart_utilities;
    const agents::UtilityTable& other = (seat == Role::persuader)
                                            ? *agent.beliefs.counterpart_utilities
                                            : agent.beliefs.utilities;
    return scenario_.config.variant == Variant::lazy
               ? agents::decide_lazy(own, other, agent.beliefs.rules)
               : agents::decide_full(own, other, agent.beliefs.rules);
}

Message Session::make(const AgentState& from, const AgentState& to, MessageKind kind,
                      json payload) const {
    Message m;
    m.from = from.name;
    m.to = to.name;
    m.kind = kind;
    m.payload = std::move(payload);
    return m;
}

std::string Session::phase_error(const Message& message) const {
    const auto from_is = [&](Role role) {
        return message.from == (role == Role::persuader ? persuader_.name : mitigator_.name);
    };
    switch (message.kind) {
        case MessageKind::announce_utilities:
            if (!from_is(Role::persuader)) return "announce_utilities must come from the persuader";
            if (phase_ != Phase::init || announced_) return "announce_utilities only opens a session";
            return "";
        case MessageKind::respond_utilities:
            if (!from_is(Role::mitigator)) return "respond_utilities must come from the mitigator";
            if (phase_ != Phase::init || !announced_) return "respond_utilities must answer an announcement";
            return "";
        case MessageKind::propose_action:
            if (!from_is(Role::persuader)) return "propose_action must come from the persuader";
            if (phase_ == Phase::utilities_exchanged) return "";
            if (phase_ == Phase::proposed && !approved_) return "";
            return "propose_action requires exchanged utilities";
        case MessageKind::approve:
        case MessageKind::disapprove:
            if (!from_is(Role::mitigator)) return "proposal verdicts come from the mitigator";
            if (phase_ != Phase::proposed || !proposal_ || approved_)
                return "verdict requires a pending proposal";
            return "";
        case MessageKind::request_rules:
            if (!from_is(Role::mitigator)) return "request_rules must come from the mitigator";
            if (phase_ != Phase::arguing || rules_requested_)
                return "request_rules opens argumentation exactly once";
            return "";
        case MessageKind::send_rules:
            if (!from_is(Role::persuader)) return "send_rules must come from the persuader";
            if (phase_ != Phase::arguing || !rules_requested_ || rules_sent_)
                return "send_rules must answer request_rules";
            return "";
        case MessageKind::send_attacks:
        case MessageKind::accept_af:
            if (phase_ != Phase::arguing || !rules_sent_)
                return "argumentation moves require the rules exchange";
            return "";
        case MessageKind::cancel_session:
            return "";  // allowed from any non-terminal phase
        case MessageKind::execute_action:
            if (!from_is(Role::persuader)) return "execute_action must come from the persuader";
            if (phase_ != Phase::proposed || !approved_) return "execute_action requires approval";
            return "";
    }
    return "unknown message kind";
}

DeliveryResult Session::deliver(Message message) {
    if (terminal())
        throw DeliveryError("session is closed (" + to_string(phase_) + ")");

    std::string error = phase_error(message);
    if (error.empty()) {
        // The message record precedes any event its application produces;
        // a failed application rolls the record back.
        message.seq = next_seq_++;
        const std::size_t mark = events_.size();
        events_.push_back(TraceEvent{TraceEvent::Type::message,
                                     json{{"seq", message.seq},
                                          {"from", message.from},
                                          {"to", message.to},
                                          {"kind", to_string(message.kind)},
                                          {"payload", message.payload}}});
        try {
            apply(message);
            return DeliveryResult{true, message.seq, ""};
        } catch (const ValidationError& e) {
            error = e.what();
        } catch (const InputError& e) {
            error = e.what();
        }
        events_.resize(mark);
        --next_seq_;
    }

    events_.push_back(TraceEvent{TraceEvent::Type::violation,
                                 json{{"phase", to_string(phase_)},
                                      {"from", message.from},
                                      {"kind", to_string(message.kind)},
                                      {"reason", error}}});
    return DeliveryResult{false, 0, error};
}

void Session::apply(const Message& message) {
    switch (message.kind) {
        case MessageKind::announce_utilities: {
            mitigator_.beliefs.counterpart_utilities = decode_utility_table(message.payload);
            announced_ = true;
            return;
        }
        case MessageKind::respond_utilities: {
            persuader_.beliefs.counterpart_utilities = decode_utility_table(message.payload);
            phase_ = Phase::utilities_exchanged;
            return;
        }
        case MessageKind::propose_action: {
            if (!message.payload.contains("action") || !message.payload.at("action").is_string())
                throw ValidationError("propose_action payload needs an 'action' string");
            proposal_ = message.payload.at("action").get<std::string>();
            phase_ = Phase::proposed;
            return;
        }
        case MessageKind::approve: {
            if (message.payload.contains("action") && proposal_ &&
                message.payload.at("action") != *proposal_)
                throw ValidationError("approve names a different action than the proposal");
            approved_ = true;
            return;
        }
        case MessageKind::disapprove: {
            phase_ = Phase::arguing;
            return;
        }
        case MessageKind::request_rules: {
            rules_requested_ = true;
            return;
        }
        case MessageKind::send_rules: {
            if (!message.payload.contains("rules") || !message.payload.at("rules").is_array())
                throw ValidationError("send_rules payload needs a 'rules' array");
            for (const json& r : message.payload.at("rules")) decode_rule(r);
            rules_sent_ = true;
            return;
        }
        case MessageKind::send_attacks: {
            if (!message.payload.contains("attacks") || !message.payload.at("attacks").is_array())
                throw ValidationError("send_attacks payload needs an 'attacks' array");
            AgentState& sender =
                message.from == persuader_.name ? persuader_ : mitigator_;
            // Decode and resolve the whole batch before committing anything;
            // later entries may target earlier ones.
            std::vector<AttackClaim> batch;
            std::vector<AttackClaim> visible = claim_pool_;
            for (const json& c : message.payload.at("attacks")) {
                AttackClaim claim = decode_claim(c);
                if (!target_resolvable(claim.target, rule_pool_, visible))
                    throw InputError("attack '" + claim.label + "' targets unknown '" +
                                     claim.target + "'");
                visible.push_back(claim);
                batch.push_back(std::move(claim));
            }
            for (AttackClaim& claim : batch) {
                const bool duplicate = std::find(claim_pool_.begin(), claim_pool_.end(),
                                                 claim) != claim_pool_.end();
                if (!duplicate) {
                    claim_pool_.push_back(claim);
                    sender.beliefs.attacks.push_back(std::move(claim));
                }
            }
            log_framework_snapshot();
            return;
        }
        case MessageKind::accept_af: {
            apply_resolution(resolve_pool());
            phase_ = Phase::proposed;
            approved_ = false;
            return;
        }
        case MessageKind::cancel_session: {
            phase_ = Phase::cancelled;
            log_outcome("cancelled", message.payload.value("reason", ""));
            return;
        }
        case MessageKind::execute_action: {
            if (!message.payload.contains("action") || !message.payload.at("action").is_string())
                throw ValidationError("execute_action payload needs an 'action' string");
            const auto action = message.payload.at("action").get<std::string>();
            if (!proposal_ || action != *proposal_)
                throw ValidationError("executed action differs from the approved proposal");
            agreed_action_ = action;
            phase_ = Phase::agreed;
            log_outcome("agreed", "");
            return;
        }
    }
}

Session::Resolved Session::resolve_pool() const {
    Resolved r;
    r.framework = build_framework(rule_pool_, claim_pool_);
    r.extension = resolve_extension(r.framework, scenario_.config.resolution);
    for (const agents::AcceptabilityRule& rule : rule_pool_) {
        if (!r.framework.contains(rule.id) || r.extension.contains(rule.id))
            r.surviving_rules.push_back(rule);
    }
    return r;
}

void Session::apply_resolution(const Resolved& resolved) {
    json retracted{{"persuader", json::array()}, {"mitigator", json::array()}};
    json adopted{{"persuader", json::array()}, {"mitigator", json::array()}};

    for (AgentState* agent : {&persuader_, &mitigator_}) {
        const char* key = agent->role == Role::persuader ? "persuader" : "mitigator";
        // Retract own rules defeated in the resolved framework.
        std::vector<agents::AcceptabilityRule> kept;
        for (const agents::AcceptabilityRule& rule : agent->beliefs.rules) {
            const bool survives = std::any_of(
                resolved.surviving_rules.begin(), resolved.surviving_rules.end(),
                [&](const auto& s) { return s.id == rule.id; });
            if (survives) {
                kept.push_back(rule);
            } else {
                retracted[key].push_back(rule.id);
            }
        }
        agent->beliefs.rules = std::move(kept);
        // Adopt the counterpart's surviving rules: silence concedes them.
        for (const agents::AcceptabilityRule& rule : resolved.surviving_rules) {
            const bool held = std::any_of(agent->beliefs.rules.begin(),
                                          agent->beliefs.rules.end(),
                                          [&](const auto& r) { return r.id == rule.id; });
            if (!held) {
                agent->beliefs.rules.push_back(rule);
                adopted[key].push_back(rule.id);
            }
        }
        // Drop own attack claims whose argument was defeated.
        std::vector<AttackClaim> standing;
        for (const AttackClaim& claim : agent->beliefs.attacks) {
            if (resolved.extension.contains(claim.label)) standing.push_back(claim);
        }
        agent->beliefs.attacks = std::move(standing);
    }

    events_.push_back(TraceEvent{
        TraceEvent::Type::resolution,
        json{{"round", rounds_used_},
             {"semantics", to_string(scenario_.config.resolution)},
             {"framework", encode_framework(resolved.framework)},
             {"extension", resolved.extension.members()},
             {"retracted", std::move(retracted)},
             {"adopted", std::move(adopted)}}});
}

bool Session::acceptance_consistent() const {
    const Resolved resolved = resolve_pool();
    const auto outcome_with = [&](Role seat) {
        const AgentState& agent = seat == Role::persuader ? persuader_ : mitigator_;
        const agents::UtilityTable& own = seat == Role::persuader
                                              ? agent.beliefs.utilities
                                              : *agent.beliefs.counterpart_utilities;
        const agents::UtilityTable& other = seat == Role::persuader
                                                ? *agent.beliefs.counterpart_utilities
                                                : agent.beliefs.utilities;
        return scenario_.config.variant == Variant::lazy
                   ? agents::decide_lazy(own, other, resolved.surviving_rules)
                   : agents::decide_full(own, other, resolved.surviving_rules);
    };
    return outcome_with(Role::persuader).chosen == outcome_with(Role::mitigator).chosen;
}

void Session::log_decision(const AgentState& seat_owner,
                           const agents::DecisionOutcome& outcome) {
    json considered = json::array();
    for (const auto& profile : outcome.considered) considered.push_back(encode_profile(profile));

    const agents::UtilityTable& actor_table = seat_owner.role == Role::persuader
                                                  ? persuader_.beliefs.utilities
                                                  : *mitigator_.beliefs.counterpart_utilities;
    const agents::UtilityTable& other_table = seat_owner.role == Role::persuader
                                                  ? *persuader_.beliefs.counterpart_utilities
                                                  : mitigator_.beliefs.utilities;
    const auto shared = agents::shared_utility({actor_table, other_table});

    const auto action = outcome.chosen.primary_action();
    events_.push_back(TraceEvent{
        TraceEvent::Type::decision,
        json{{"agent", seat_owner.name},
             {"role", to_string(seat_owner.role)},
             {"variant", to_string(scenario_.config.variant)},
             {"action", action ? json(*action) : json(nullptr)},
             {"rationale", agents::to_string(outcome.rationale)},
             {"considered", std::move(considered)},
             {"shared_utility_operator", "sum"},
             {"shared", encode_utility_table(shared)}}});
}

void Session::log_framework_snapshot() {
    events_.push_back(TraceEvent{
        TraceEvent::Type::framework,
        json{{"round", rounds_used_},
             {"framework", encode_framework(current_framework())}}});
}

void Session::log_outcome(const std::string& status, const std::string& reason) {
    json body{{"status", status},
              {"action", agreed_action_ ? json(*agreed_action_) : json(nullptr)},
              {"rounds", rounds_used_}};
    if (!reason.empty()) body["reason"] = reason;
    events_.push_back(TraceEvent{TraceEvent::Type::outcome, std::move(body)});
}

void Session::run() {
    if (phase_ != Phase::init)
        throw InputError("run() requires a fresh session");

    deliver(make(persuader_, mitigator_, MessageKind::announce_utilities,
                 encode_utility_table(persuader_.beliefs.utilities)));
    deliver(make(mitigator_, persuader_, MessageKind::respond_utilities,
                 encode_utility_table(mitigator_.beliefs.utilities)));

    while (!terminal()) {
        const auto persuader_outcome = expected_decision(Role::persuader);
        log_decision(persuader_, persuader_outcome);
        const auto proposal = persuader_outcome.chosen.primary_action();
        if (!proposal) throw InputError("persuader decision yielded no action");
        deliver(make(persuader_, mitigator_, MessageKind::propose_action,
                     json{{"action", *proposal}}));

        const auto mitigator_outcome = expected_decision(Role::mitigator);
        log_decision(mitigator_, mitigator_outcome);
        const auto expected = mitigator_outcome.chosen.primary_action();
        if (!expected) throw InputError("mitigator decision yielded no action");

        if (*proposal == *expected) {
            deliver(make(mitigator_, persuader_, MessageKind::approve,
                         json{{"action", *proposal}}));
            deliver(make(persuader_, mitigator_, MessageKind::execute_action,
                         json{{"action", *proposal}}));
            return;
        }

        deliver(make(mitigator_, persuader_, MessageKind::disapprove,
                     json{{"proposed", *proposal}, {"expected", *expected}}));
        synchronize_beliefs();
    }
}

void Session::synchronize_beliefs() {
    if (phase_ != Phase::arguing)
        throw InputError("synchronize_beliefs requires the arguing phase");
    if (!rules_requested_) {
        deliver(make(mitigator_, persuader_, MessageKind::request_rules, json::object()));
        json rules = json::array();
        for (const agents::AcceptabilityRule& rule : scenario_.persuader.rules)
            rules.push_back(encode_rule(rule));
        deliver(make(persuader_, mitigator_, MessageKind::send_rules,
                     json{{"rules", std::move(rules)}}));
    }

    while (phase_ == Phase::arguing) {
        if (rounds_used_ >= scenario_.config.max_rounds) {
            deliver(make(mitigator_, persuader_, MessageKind::cancel_session,
                         json{{"reason", "argumentation budget exhausted"}}));
            return;
        }
        ++rounds_used_;
        take_turn(mitigator_, persuader_);
        if (phase_ != Phase::arguing) return;
        take_turn(persuader_, mitigator_);
    }
}

void Session::take_turn(AgentState& actor, AgentState& counterpart) {
    // Launch every repertoire attack whose target resolves against the pool,
    // including targets introduced earlier in this same batch.
    std::vector<AttackClaim> batch;
    std::vector<AttackClaim> visible = claim_pool_;
    for (const AttackClaim& claim : actor.repertoire) {
        const bool launched =
            std::find(claim_pool_.begin(), claim_pool_.end(), claim) != claim_pool_.end() ||
            std::find(batch.begin(), batch.end(), claim) != batch.end();
        if (launched) continue;
        if (!target_resolvable(claim.target, rule_pool_, visible)) continue;
        batch.push_back(claim);
        visible.push_back(claim);
    }

    if (!batch.empty()) {
        json attacks = json::array();
        for (const AttackClaim& claim : batch) attacks.push_back(encode_claim(claim));
        deliver(make(actor, counterpart, MessageKind::send_attacks,
                     json{{"attacks", std::move(attacks)}}));
        return;
    }

    if (acceptance_consistent()) {
        deliver(make(actor, counterpart, MessageKind::accept_af, json::object()));
    } else {
        deliver(make(actor, counterpart, MessageKind::cancel_session,
                     json{{"reason", "no applicable attack and the resolved framework "
                                     "leaves the expected actions inconsistent"}}));
    }
}

SessionResult run_session(const Scenario& scenario) {
    Session session(scenario);
    session.run();
    SessionResult result;
    result.outcome = session.phase();
    result.action = session.agreed_action();
    result.rounds = session.rounds_used();
    result.events = session.events();
    return result;
}

SessionResult run_session(Scenario scenario, const SessionConfig& config) {
    scenario.config = config;
    return run_session(scenario);
}

} // namespace argonaut::protocol
