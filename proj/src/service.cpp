#include "brickwang/service.hpp"

#include "brickwang/error.hpp"
#include "brickwang/io.hpp"

#include <httplib.h>
#include <json.hpp>

#include <charconv>

namespace brickwang::service {

using nlohmann::json;

namespace {

Response json_response(int status, const json& body) { return {status, "application/json", body.dump() + "\n"}; }

Response api_error(int status, std::string_view code, const std::string& message, json details = nullptr) {
    json body{{"code", code}, {"message", message}};
    if (!details.is_null()) body["details"] = std::move(details);
    return json_response(status, body);
}

Response from_error(const Error& e) {
    if (e.code() == ErrorCode::TooLarge) return api_error(413, "too_large", e.what());
    if (e.code() == ErrorCode::InvalidTiling) return api_error(422, "invalid_tiling", e.what());
    json details{{"error", to_string(e.code())}};
    if (!e.path().empty()) details["path"] = e.path();
    return api_error(400, "parse_error", e.what(), details);
}

void check_size(const BoardDocument& doc, const Options& options) {
    if (doc.board.size() > options.max_cells) {
        throw Error(ErrorCode::TooLarge, "board has " + std::to_string(doc.board.size()) + " cells, limit is " +
                                             std::to_string(options.max_cells));
    }
}

/// Splits {"board": ..., "tiling": ...} into its two documents.
std::pair<BoardDocument, Tiling> parse_pair(std::string_view body, const Options& options) {
    json root;
    try {
        root = json::parse(body);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Syntax, std::string("malformed JSON: ") + e.what(), "$");
    }
    if (!root.is_object() || !root.contains("board") || !root.contains("tiling")) {
        throw Error(ErrorCode::Schema, "expected {\"board\": ..., \"tiling\": ...}", "$");
    }
    BoardDocument doc;
    try {
        doc = parse_board(root["board"].dump());
    } catch (const Error& e) {
        throw Error(e.code(), e.what(), "$.board" + e.path().substr(e.path().empty() ? 0 : 1));
    }
    check_size(doc, options);
    Tiling tiling;
    try {
        tiling = parse_tiling(root["tiling"].dump());
    } catch (const Error& e) {
        throw Error(e.code(), e.what(), "$.tiling" + e.path().substr(e.path().empty() ? 0 : 1));
    }
    return {std::move(doc), std::move(tiling)};
}

template <typename Fn>
Response guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        return from_error(e);
    }
}

}  // namespace

Response handle_solve(std::string_view body, const SolveQuery& query, const Options& options) {
    return guarded([&] {
        if (query.seed && query.deterministic) {
            return api_error(400, "parse_error", "seed and deterministic are mutually exclusive");
        }
        ChoicePolicy policy = ChoicePolicy::deterministic();
        if (query.seed) {
            std::uint64_t seed = 0;
            const auto& s = *query.seed;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
            if (ec != std::errc{} || ptr != s.data() + s.size()) {
                return api_error(400, "parse_error", "seed must be an unsigned integer");
            }
            policy = ChoicePolicy::seeded(seed);
        }
        const BoardDocument doc = parse_board(body);
        check_size(doc, options);
        const SolveReport report = solve_document(doc, policy);
        if (!report.solved()) {
            const UnsolvableWitness& w = report.witness();
            json conditions = json::object();
            for (Direction d : kDirections) conditions[std::string(1, to_char(d))] = to_string(w.conditions[ordinal(d)]);
            return api_error(422, "unsolvable", describe(w),
                             json{{"cell", {w.root.i, w.root.j}}, {"conditions", conditions}});
        }
        return Response{200, "application/json", serialize_tiling(report.tiling())};
    });
}

Response handle_check(std::string_view body, const Options& options) {
    return guarded([&] {
        const BoardDocument doc = parse_board(body);
        check_size(doc, options);
        const Problem problem = prepare(doc);
        const std::vector<Board> parts = connected_components(problem.board);
        const std::vector<bool> verdicts = always_solvable_components(problem.board);
        json components = json::array();
        for (std::size_t k = 0; k < parts.size(); ++k) {
            components.push_back({{"cells", parts[k].size()}, {"always_solvable", static_cast<bool>(verdicts[k])}});
        }
        return json_response(200, json{{"components", components}});
    });
}

Response handle_validate(std::string_view body, const Options& options) {
    return guarded([&] {
        const auto [doc, tiling] = parse_pair(body, options);
        const ValidationResult r = validate_document(doc, tiling);
        json violations = json::array();
        for (const Violation& v : r.violations) {
            json item{{"kind", to_string(v.kind)}, {"cell", {v.cell.i, v.cell.j}}, {"message", v.message}};
            if (v.leg) item["leg"] = {{"cell", {v.leg->cell.i, v.leg->cell.j}}, {"dir", std::string(1, to_char(v.leg->dir))}};
            violations.push_back(std::move(item));
        }
        return json_response(200, json{{"valid", r.valid}, {"violations", violations}});
    });
}

Response handle_render(std::string_view body, const Options& options) {
    return guarded([&] {
        const auto [doc, tiling] = parse_pair(body, options);
        return Response{200, "image/svg+xml", render_svg(doc.board, tiling)};
    });
}

struct Server::Impl {
    Options options;
    httplib::Server http;
};

Server::Server(Options options) : impl_(std::make_unique<Impl>()) {
    impl_->options = options;
    httplib::Server& http = impl_->http;

    http.set_post_routing_handler([](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
    http.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

    auto send = [](httplib::Response& res, const Response& r) {
        res.status = r.status;
        res.set_content(r.body, r.content_type);
    };
    Impl* impl = impl_.get();
    http.Get("/healthz", [](const httplib::Request&, httplib::Response& res) { res.set_content("ok", "text/plain"); });
    http.Post("/api/solve", [impl, send](const httplib::Request& req, httplib::Response& res) {
        SolveQuery q;
        if (req.has_param("seed")) q.seed = req.get_param_value("seed");
        q.deterministic = req.has_param("deterministic");
        send(res, handle_solve(req.body, q, impl->options));
    });
    http.Post("/api/check", [impl, send](const httplib::Request& req, httplib::Response& res) {
        send(res, handle_check(req.body, impl->options));
    });
    http.Post("/api/validate", [impl, send](const httplib::Request& req, httplib::Response& res) {
        send(res, handle_validate(req.body, impl->options));
    });
    http.Post("/api/render", [impl, send](const httplib::Request& req, httplib::Response& res) {
        send(res, handle_render(req.body, impl->options));
    });
}

Server::~Server() = default;

bool Server::listen(const std::string& host, int port) { return impl_->http.listen(host, port); }
int Server::bind_to_any_port(const std::string& host) { return impl_->http.bind_to_any_port(host); }
bool Server::listen_after_bind() { return impl_->http.listen_after_bind(); }
void Server::wait_until_ready() const { impl_->http.wait_until_ready(); }
void Server::stop() { impl_->http.stop(); }

}  // namespace brickwang::service
