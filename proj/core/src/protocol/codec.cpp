#include "argonaut/protocol/codec.hpp"

#include "argonaut/errors.hpp"

namespace argonaut::protocol {

namespace {

const json& require(const json& j, const char* key, const char* context) {
    if (!j.is_object() || !j.contains(key))
        throw ValidationError(std::string(context) + ": missing field '" + key + "'");
    return j.at(key);
}

std::string require_string(const json& j, const char* key, const char* context) {
    const json& v = require(j, key, context);
    if (!v.is_string())
        throw ValidationError(std::string(context) + ": field '" + key +
                              "' must be a string");
    return v.get<std::string>();
}

} // namespace

json encode_utility_value(double v) {
    if (agents::is_positive_sentinel(v)) return "+inf";
    if (agents::is_negative_sentinel(v)) return "-inf";
    return v;
}

double decode_utility_value(const json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "+inf" || s == "inf") return agents::kPositiveInfinity;
        if (s == "-inf") return agents::kNegativeInfinity;
        throw ValidationError("utility value: unknown spelling '" + s + "'");
    }
    if (!j.is_number())
        throw ValidationError("utility value must be a number, '+inf', or '-inf'");
    return j.get<double>();
}

json encode_utility_table(const agents::UtilityTable& table) {
    json entries = json::array();
    for (const auto& [profile, value] : table.entries()) {
        const auto action = profile.primary_action();
        json e;
        e["action"] = action ? *action : "";
        e["value"] = encode_utility_value(value);
        entries.push_back(std::move(e));
    }
    return json{{"owner", table.owner()}, {"entries", std::move(entries)}};
}

agents::UtilityTable decode_utility_table(const json& j) {
    const std::string owner = require_string(j, "owner", "utility table");
    const json& entries = require(j, "entries", "utility table");
    if (!entries.is_array())
        throw ValidationError("utility table: 'entries' must be an array");
    std::vector<std::pair<agents::JointActionProfile, double>> out;
    for (const json& e : entries) {
        const std::string action = require_string(e, "action", "utility entry");
        out.emplace_back(agents::make_actor_profile(action),
                         decode_utility_value(require(e, "value", "utility entry")));
    }
    return agents::UtilityTable(owner, std::move(out));
}

json encode_rule(const agents::AcceptabilityRule& rule) {
    return json{{"id", rule.id},
                {"action", rule.action},
                {"when", rule.wildcard() ? "*" : *rule.counterpart_preference}};
}

agents::AcceptabilityRule decode_rule(const json& j) {
    agents::AcceptabilityRule rule;
    rule.action = require_string(j, "action", "acceptability rule");
    const std::string when = require_string(j, "when", "acceptability rule");
    if (when != "*") rule.counterpart_preference = when;
    if (j.contains("id")) {
        rule.id = require_string(j, "id", "acceptability rule");
    } else {
        rule.id = "acceptable(" + rule.action + "," + when + ")";
    }
    return rule;
}

json encode_claim(const AttackClaim& claim) {
    return json{{"target", claim.target}, {"label", claim.label}};
}

AttackClaim decode_claim(const json& j) {
    return AttackClaim{require_string(j, "target", "attack"),
                       require_string(j, "label", "attack")};
}

json encode_profile(const agents::JointActionProfile& profile) {
    json selections = json::array();
    for (const auto& selection : profile.selections) {
        selections.push_back(selection);
    }
    return selections;
}

namespace {

json encode_agent(const AgentDecl& agent) {
    json rules = json::array();
    for (const auto& rule : agent.rules) rules.push_back(encode_rule(rule));
    json repertoire = json::array();
    for (const auto& claim : agent.repertoire) repertoire.push_back(encode_claim(claim));
    json utilities = json::array();
    for (const auto& entry : agent.utilities) {
        utilities.push_back(
            json{{"action", entry.action}, {"value", encode_utility_value(entry.value)}});
    }
    return json{{"role", to_string(agent.role)}, {"name", agent.name},
                {"actions", agent.actions},      {"utilities", std::move(utilities)},
                {"rules", std::move(rules)},     {"repertoire", std::move(repertoire)}};
}

AgentDecl decode_agent(const json& j) {
    AgentDecl agent;
    const std::string role = require_string(j, "role", "agent");
    if (role == "persuader") {
        agent.role = Role::persuader;
    } else if (role == "mitigator") {
        agent.role = Role::mitigator;
    } else {
        throw ValidationError("agent: unknown role '" + role + "'");
    }
    agent.name = j.contains("name") ? require_string(j, "name", "agent") : role;
    if (j.contains("actions")) {
        const json& actions = j.at("actions");
        if (!actions.is_array()) throw ValidationError("agent: 'actions' must be an array");
        for (const json& a : actions) {
            if (!a.is_string()) throw ValidationError("agent: actions must be strings");
            agent.actions.push_back(a.get<std::string>());
        }
    }
    const json& utilities = require(j, "utilities", "agent");
    if (!utilities.is_array()) throw ValidationError("agent: 'utilities' must be an array");
    for (const json& e : utilities) {
        agent.utilities.push_back(
            UtilityEntry{require_string(e, "action", "utility entry"),
                         decode_utility_value(require(e, "value", "utility entry"))});
    }
    if (j.contains("rules")) {
        for (const json& r : j.at("rules")) agent.rules.push_back(decode_rule(r));
    }
    if (j.contains("repertoire")) {
        for (const json& c : j.at("repertoire")) agent.repertoire.push_back(decode_claim(c));
    }
    return agent;
}

} // namespace

json encode_scenario(const Scenario& scenario) {
    json config{{"variant", to_string(scenario.config.variant)},
                {"semantics", to_string(scenario.config.resolution)},
                {"max_rounds", scenario.config.max_rounds}};
    return json{{"schema", "argonaut-scenario/1"},
                {"agents", json::array({encode_agent(scenario.persuader),
                                        encode_agent(scenario.mitigator)})},
                {"config", std::move(config)}};
}

Scenario decode_scenario(const json& j) {
    const std::string schema = require_string(j, "schema", "scenario");
    if (schema != "argonaut-scenario/1")
        throw ValidationError("scenario: unsupported schema '" + schema + "'");
    const json& agents_json = require(j, "agents", "scenario");
    if (!agents_json.is_array() || agents_json.size() != 2)
        throw ValidationError("scenario: 'agents' must list exactly two agents");

    Scenario scenario;
    bool have_persuader = false, have_mitigator = false;
    for (const json& a : agents_json) {
        AgentDecl agent = decode_agent(a);
        if (agent.role == Role::persuader) {
            if (have_persuader) throw ValidationError("scenario: duplicate persuader");
            scenario.persuader = std::move(agent);
            have_persuader = true;
        } else {
            if (have_mitigator) throw ValidationError("scenario: duplicate mitigator");
            scenario.mitigator = std::move(agent);
            have_mitigator = true;
        }
    }
    if (!have_persuader || !have_mitigator)
        throw ValidationError("scenario: needs one persuader and one mitigator");

    if (j.contains("config")) {
        const json& c = j.at("config");
        if (c.contains("variant")) {
            const auto v = parse_variant(require_string(c, "variant", "config"));
            if (!v) throw ValidationError("config: unknown variant");
            scenario.config.variant = *v;
        }
        if (c.contains("semantics")) {
            const auto r = parse_resolution(require_string(c, "semantics", "config"));
            if (!r) throw ValidationError("config: unknown semantics");
            scenario.config.resolution = *r;
        }
        if (c.contains("max_rounds")) {
            const json& m = c.at("max_rounds");
            if (!m.is_number_integer() || m.get<int>() < 0)
                throw ValidationError("config: max_rounds must be a non-negative integer");
            scenario.config.max_rounds = m.get<int>();
        }
    }
    return scenario;
}

} // namespace argonaut::protocol
