#include "cli.hpp"

#include "brickwang/error.hpp"
#include "brickwang/io.hpp"
#include "brickwang/oracle.hpp"
#include "brickwang/service.hpp"
#include "brickwang/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace brickwang::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

BoardDocument load_board(const std::string& path) {
    try {
        return parse_board(read_file(path));
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what(), e.path());
    }
}

struct SolveArgs {
    std::string input, output;
    std::optional<std::uint64_t> seed;
    bool deterministic = false;
    bool stats = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    const BoardDocument doc = load_board(a.input);
    ChoicePolicy policy = a.seed ? ChoicePolicy::seeded(*a.seed) : ChoicePolicy::deterministic();
    const SolveReport report = solve_document(doc, policy);
    if (a.stats) {
        err << "cells " << report.stats.cells << ", visited " << report.stats.cells_visited << ", completions "
            << report.stats.completions << ", propagations " << report.stats.propagations << ", cycle length "
            << report.stats.cycle_length << ", " << report.stats.elapsed.count() / 1000 << " us\n";
    }
    if (!report.solved()) {
        err << "unsolvable: " << describe(report.witness()) << "\n";
        return kExitUnsolvable;
    }
    write_output(a.output, serialize_tiling(report.tiling()), out);
    return kExitOk;
}

int cmd_check(const std::string& input, std::ostream& out) {
    const BoardDocument doc = load_board(input);
    const Problem problem = prepare(doc);
    const std::vector<Board> parts = connected_components(problem.board);
    const std::vector<bool> cyclic = always_solvable_components(problem.board);
    int code = kExitOk;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        out << "component " << k << " (" << parts[k].size() << " cells): ";
        if (cyclic[k]) {
            out << "always-solvable\n";
            continue;
        }
        ChoicePolicy policy = ChoicePolicy::deterministic();
        const SolveReport r = solve_tree(parts[k], constraints_for(parts[k], problem.boundary), policy);
        if (r.solved()) {
            out << "tree: solvable under given boundary\n";
        } else {
            out << "tree: unsolvable under given boundary (" << describe(r.witness()) << ")\n";
            code = kExitUnsolvable;
        }
    }
    if (parts.empty()) out << "empty board: always-solvable\n";
    return code;
}

int cmd_validate(const std::string& input, const std::string& tiling_path, std::ostream& out) {
    const BoardDocument doc = load_board(input);
    const Tiling tiling = parse_tiling(read_file(tiling_path));
    const ValidationResult r = validate_document(doc, tiling);
    if (r.valid) {
        out << "valid\n";
        return kExitOk;
    }
    out << "invalid: " << r.violations.size() << " violation(s)\n";
    for (const Violation& v : r.violations) out << "  " << to_string(v.kind) << ": " << v.message << "\n";
    return kExitError;
}

struct RenderArgs {
    std::string tiling, input, output;
    bool ascii = false;
    int scale = 5;
};

int cmd_render(const RenderArgs& a, std::ostream& out) {
    const Tiling tiling = parse_tiling(read_file(a.tiling));
    const Board board = a.input.empty() ? board_from_tiling(tiling) : load_board(a.input).board;
    write_output(a.output, a.ascii ? render_ascii(board, tiling, a.scale) : render_svg(board, tiling), out);
    return kExitOk;
}

int cmd_oracle(const std::string& input, bool count, std::size_t limit, std::ostream& out) {
    const BoardDocument doc = load_board(input);
    const Problem problem = prepare(doc);
    const OracleResult r = brute_force(problem.board, problem.boundary, count, limit);
    out << (r.solvable ? "solvable" : "unsolvable");
    if (r.count) out << " (" << *r.count << " tilings)";
    out << "\n";
    return r.solvable ? kExitOk : kExitUnsolvable;
}

struct GenArgs {
    int width = 0, height = 0, colors = 3;
    std::vector<std::string> holes;
    bool random_boundary = false;
    std::uint64_t seed = 0;
    std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    std::set<CellCoord> holes;
    for (const std::string& h : a.holes) {
        CellCoord c;
        char comma = 0;
        std::istringstream in(h);
        if (!(in >> c.i >> comma >> c.j) || comma != ',' || !in.eof()) {
            throw Error(ErrorCode::Schema, "--hole expects i,j but got '" + h + "'");
        }
        holes.insert(c);
    }
    std::vector<CellCoord> cells;
    for (int j = 0; j < a.height; ++j)
        for (int i = 0; i < a.width; ++i)
            if (!holes.contains({i, j})) cells.push_back({i, j});

    BoardDocument doc;
    doc.board = Board::make(a.colors, std::move(cells));
    std::mt19937_64 rng(a.seed);
    std::uniform_int_distribution<Color> colour(0, a.colors - 1);
    for (const Leg& leg : classify_legs(doc.board).constrained) {
        doc.boundary.emplace(leg, a.random_boundary ? colour(rng) : 0);
    }
    write_output(a.output, serialize_board(doc), out);
    return kExitOk;
}

int cmd_serve(const std::string& listen, std::ostream& out) {
    const auto colon = listen.rfind(':');
    if (colon == std::string::npos) throw Error(ErrorCode::Schema, "--listen expects host:port");
    const std::string host = listen.substr(0, colon);
    const int port = std::stoi(listen.substr(colon + 1));
    service::Server server;
    out << "listening on " << host << ":" << port << std::endl;
    if (!server.listen(host, port)) throw std::runtime_error("cannot listen on " + listen);
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Brick Wang tiling solver"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Tile a board document");
    solve->add_option("-i,--input", solve_args.input, "Board document")->required();
    solve->add_option("-o,--output", solve_args.output, "Tiling document (default: stdout)");
    auto* seed_opt = solve->add_option("--seed", solve_args.seed, "Random choices from this seed");
    auto* det_flag = solve->add_flag("--deterministic", solve_args.deterministic, "Lexicographically smallest choices");
    seed_opt->excludes(det_flag);
    solve->add_flag("--stats", solve_args.stats, "Print solver statistics to stderr");

    std::string check_input;
    auto* check = app.add_subcommand("check", "Decide solvability per component");
    check->add_option("-i,--input", check_input, "Board document")->required();

    std::string validate_input, validate_tiling;
    auto* validate_cmd = app.add_subcommand("validate", "Check a tiling against a board document");
    validate_cmd->add_option("-i,--input", validate_input, "Board document")->required();
    validate_cmd->add_option("-t,--tiling", validate_tiling, "Tiling document")->required();

    RenderArgs render_args;
    auto* render = app.add_subcommand("render", "Draw a tiling as SVG or ASCII");
    render->add_option("-t,--tiling", render_args.tiling, "Tiling document")->required();
    render->add_option("-i,--input", render_args.input, "Board document (for the colour count)");
    render->add_option("-o,--output", render_args.output, "Output file (default: stdout)");
    render->add_flag("--ascii", render_args.ascii, "ASCII art instead of SVG");
    render->add_option("--scale", render_args.scale, "Characters per cell side for --ascii")
        ->check(CLI::Range(3, 64));

    std::string oracle_input;
    bool oracle_count = false;
    std::size_t oracle_limit = kDefaultOracleEdgeLimit;
    auto* oracle = app.add_subcommand("oracle", "Brute-force a small board");
    oracle->add_option("-i,--input", oracle_input, "Board document")->required();
    oracle->add_flag("--count", oracle_count, "Count all tilings");
    oracle->add_option("--limit", oracle_limit, "Maximum number of internal edges");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate a rectangular board document");
    gen->add_option("--width", gen_args.width)->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--height", gen_args.height)->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--colors", gen_args.colors, "Number of colours (>= 3)");
    gen->add_option("--hole", gen_args.holes, "Cell i,j to leave out (repeatable)");
    gen->add_flag("--random-boundary", gen_args.random_boundary, "Random boundary colours");
    gen->add_option("--seed", gen_args.seed, "Seed for --random-boundary");
    gen->add_option("-o,--output", gen_args.output, "Output file (default: stdout)");

    std::string listen = "127.0.0.1:8080";
    auto* serve = app.add_subcommand("serve", "Run the HTTP service");
    serve->add_option("--listen", listen, "host:port");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_args, out, err);
        if (check->parsed()) return cmd_check(check_input, out);
        if (validate_cmd->parsed()) return cmd_validate(validate_input, validate_tiling, out);
        if (render->parsed()) return cmd_render(render_args, out);
        if (oracle->parsed()) return cmd_oracle(oracle_input, oracle_count, oracle_limit, out);
        if (gen->parsed()) return cmd_gen(gen_args, out);
        if (serve->parsed()) return cmd_serve(listen, out);
    } catch (const Error& e) {
        err << "error [" << to_string(e.code()) << "]";
        if (!e.path().empty()) err << " at " << e.path();
        err << ": " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace brickwang::cli
