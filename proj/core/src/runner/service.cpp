#include "argonaut/runner/service.hpp"

#include <httplib.h>

#include "argonaut/af/oracle.hpp"
#include "argonaut/af/semantics.hpp"
#include "argonaut/errors.hpp"
#include "argonaut/json.hpp"
#include "argonaut/runner/framework_io.hpp"
#include "argonaut/version.hpp"

namespace argonaut::runner {

struct SolverService::Impl {
    httplib::Server server;
};

namespace {

void reply_json(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void handle_solve(const httplib::Request& req, httplib::Response& res) {
    json doc;
    try {
        doc = json::parse(req.body);
    } catch (const nlohmann::json::parse_error& e) {
        reply_json(res, 400, json{{"error", std::string("invalid JSON: ") + e.what()}});
        return;
    }
    if (!doc.is_object() || !doc.contains("semantics") || !doc.at("semantics").is_string()) {
        reply_json(res, 400, json{{"error", "request needs a 'semantics' string"}});
        return;
    }
    const auto semantics = af::parse_semantics(doc.at("semantics").get<std::string>());
    if (!semantics) {
        reply_json(res, 422,
                   json{{"error", "unknown semantics '" +
                                      doc.at("semantics").get<std::string>() + "'"}});
        return;
    }
    af::ArgumentationFramework framework;
    try {
        framework = framework_from_json(doc);
    } catch (const ValidationError& e) {
        reply_json(res, 400, json{{"error", e.what()}});
        return;
    }
    try {
        const auto extensions = af::solve(framework, *semantics);
        json out_extensions = json::array();
        for (const af::Extension& e : extensions) out_extensions.push_back(e.members());
        reply_json(res, 200,
                   json{{"semantics", af::to_string(*semantics)},
                        {"extensions", std::move(out_extensions)}});
    } catch (const SizeError& e) {
        reply_json(res, 422, json{{"error", e.what()}});
    }
}

void configure(httplib::Server& server) {
    server.Post("/solve", handle_solve);
    server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
        reply_json(res, 200, json{{"status", "ok"}, {"engine", kEngineVersion}});
    });
}

} // namespace

SolverService::SolverService() : impl_(std::make_unique<Impl>()) {
    configure(impl_->server);
}

SolverService::~SolverService() { stop(); }

bool SolverService::start(const std::string& host, int port) {
    if (!impl_->server.bind_to_port(host, port)) return false;
    thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return true;
}

int SolverService::start_on_any_port(const std::string& host) {
    const int port = impl_->server.bind_to_any_port(host);
    if (port < 0) return -1;
    thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return port;
}

bool SolverService::serve_blocking(const std::string& host, int port) {
    return impl_->server.listen(host, port);
}

void SolverService::stop() {
    if (impl_) impl_->server.stop();
    if (thread_.joinable()) thread_.join();
}

} // namespace argonaut::runner
