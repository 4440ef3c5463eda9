#pragma once

#include <memory>
#include <string>
#include <thread>

namespace argonaut::runner {

/// Stateless HTTP wrapper around the extension solver.
///
///   POST /solve   {"arguments": [...], "attacks": [[a,b], ...],
///                  "semantics": "preferred"}
///                 -> 200 {"semantics": ..., "extensions": [["a","c"], ...]}
///                 -> 400 on malformed documents, 422 on unknown semantics
///                    or oversized frameworks
///   GET  /health  -> 200 {"status": "ok", "engine": ...}
///
/// Each request is solved independently; the service keeps no session state.
class SolverService {
public:
    SolverService();
    ~SolverService();

    SolverService(const SolverService&) = delete;
    SolverService& operator=(const SolverService&) = delete;

    /// Binds and serves on a background thread. Returns false when the port
    /// cannot be bound.
    bool start(const std::string& host, int port);

    /// Binds an ephemeral port, serves on a background thread, and returns
    /// the bound port (useful for tests); -1 on failure.
    int start_on_any_port(const std::string& host);

    /// Serves on the calling thread until stop() is invoked elsewhere.
    bool serve_blocking(const std::string& host, int port);

    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::thread thread_;
};

} // namespace argonaut::runner
