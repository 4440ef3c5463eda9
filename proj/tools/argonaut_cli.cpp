// Command-line front end: `run` executes a negotiation scenario and writes
// its trace, `solve` prints the extensions of a framework file, `serve`
// exposes the solver over HTTP.

#include <CLI11.hpp>

#include <csignal>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "argonaut/af/semantics.hpp"
#include "argonaut/errors.hpp"
#include "argonaut/runner/framework_io.hpp"
#include "argonaut/runner/scenario_io.hpp"
#include "argonaut/runner/service.hpp"
#include "argonaut/runner/trace.hpp"
#include "argonaut/version.hpp"

namespace {

constexpr int kExitAgreed = 0;
constexpr int kExitError = 1;
constexpr int kExitCancelled = 2;

argonaut::runner::SolverService* g_service = nullptr;

int cmd_run(const std::string& scenario_path, const std::optional<std::string>& variant,
            const std::optional<std::string>& semantics, const std::optional<int>& max_rounds,
            const std::optional<std::string>& out_path) {
    using namespace argonaut;

    protocol::Scenario scenario = runner::load_scenario(scenario_path);
    if (variant) {
        const auto v = protocol::parse_variant(*variant);
        if (!v) throw ValidationError("unknown variant '" + *variant + "'");
        scenario.config.variant = *v;
    }
    if (semantics) {
        const auto r = protocol::parse_resolution(*semantics);
        if (!r) throw ValidationError("unknown semantics '" + *semantics + "'");
        scenario.config.resolution = *r;
    }
    if (max_rounds) scenario.config.max_rounds = *max_rounds;
    protocol::validate_scenario(scenario);

    const runner::Trace trace = runner::run_to_trace(scenario);
    if (out_path) runner::write_trace(trace, *out_path);

    std::cout << "outcome: " << protocol::to_string(trace.outcome) << "\n";
    if (trace.action) std::cout << "action: " << *trace.action << "\n";
    std::cout << "rounds: " << trace.rounds << "\n";
    if (out_path) std::cout << "trace: " << *out_path << "\n";

    return trace.outcome == protocol::Phase::agreed ? kExitAgreed : kExitCancelled;
}

int cmd_solve(const std::string& af_path, const std::string& semantics_name) {
    using namespace argonaut;

    const auto semantics = af::parse_semantics(semantics_name);
    if (!semantics) throw ValidationError("unknown semantics '" + semantics_name + "'");
    const auto framework = runner::load_framework(af_path);
    std::cout << runner::format_extensions(af::solve(framework, *semantics));
    return kExitAgreed;
}

int cmd_serve(const std::string& host, int port) {
    using namespace argonaut;

    runner::SolverService service;
    g_service = &service;
    std::signal(SIGINT, [](int) {
        if (g_service) g_service->stop();
    });
    std::signal(SIGTERM, [](int) {
        if (g_service) g_service->stop();
    });

    std::cout << "serving on http://" << host << ":" << port << " (POST /solve, GET /health)"
              << std::endl;
    if (!service.serve_blocking(host, port)) {
        std::cerr << "error: cannot bind " << host << ":" << port << "\n";
        return kExitError;
    }
    return kExitAgreed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abstract argumentation solver and agent negotiation engine"};
    app.set_version_flag("--version", argonaut::kEngineVersion);
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run a negotiation scenario");
    std::string scenario_path;
    std::optional<std::string> variant, semantics, out_path;
    std::optional<int> max_rounds;
    run->add_option("--scenario", scenario_path, "Scenario file")->required();
    run->add_option("--variant", variant, "Decision variant: lazy|full");
    run->add_option("--semantics", semantics,
                    "Resolution semantics: maximal_ideal|grounded|preferred_intersection");
    run->add_option("--max-rounds", max_rounds, "Argumentation round budget");
    run->add_option("--out", out_path, "Trace output file");

    auto* solve = app.add_subcommand("solve", "Solve an argumentation framework file");
    std::string af_path, solve_semantics;
    solve->add_option("--af", af_path, "Framework file")->required();
    solve->add_option("--semantics", solve_semantics,
                      "complete|preferred|grounded|maximal_ideal")
        ->required();

    auto* serve = app.add_subcommand("serve", "Serve the solver over HTTP");
    std::string host = "127.0.0.1";
    int port = 8080;
    serve->add_option("--host", host, "Bind address");
    serve->add_option("--port", port, "Port");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (run->parsed()) return cmd_run(scenario_path, variant, semantics, max_rounds, out_path);
        if (solve->parsed()) return cmd_solve(af_path, solve_semantics);
        if (serve->parsed()) return cmd_serve(host, port);
    } catch (const argonaut::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitError;
    } catch (const argonaut::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
