#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace brickwang::service {

struct Options {
    /// Boards above this many cells are refused with `too_large`.
    std::size_t max_cells = 4'000'000;
};

struct Response {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

/// Query options of /api/solve. Both set is a client error.
struct SolveQuery {
    std::optional<std::string> seed;
    bool deterministic = false;
};

// Request handlers, independent of the HTTP transport. Error bodies are
// {"code": ..., "message": ..., "details": {...}} with code one of
// parse_error (400), unsolvable (422), invalid_tiling (422), too_large (413).
Response handle_solve(std::string_view body, const SolveQuery& query, const Options& options = {});
Response handle_check(std::string_view body, const Options& options = {});
Response handle_validate(std::string_view body, const Options& options = {});
Response handle_render(std::string_view body, const Options& options = {});

/// HTTP front end: POST /api/{solve,check,validate,render}, GET /healthz.
/// Responses carry permissive CORS headers.
class Server {
public:
    explicit Server(Options options = {});
    ~Server();
    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    /// Blocks until stop() is called. Returns false if the address cannot be bound.
    bool listen(const std::string& host, int port);
    /// Binds an ephemeral port and returns it (or -1); serve with listen_after_bind().
    int bind_to_any_port(const std::string& host);
    bool listen_after_bind();
    void wait_until_ready() const;
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace brickwang::service
