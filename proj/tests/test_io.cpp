#include "brickwang/error.hpp"
#include "brickwang/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <regex>

using namespace brickwang;
using namespace brickwang::testing;

namespace {

const char* kOneCell = R"({"num_colors": 3, "cells": [[0,0]], "boundary": [
  {"cell": [0,0], "dir": "E", "color": 0}, {"cell": [0,0], "dir": "N", "color": 1},
  {"cell": [0,0], "dir": "W", "color": 0}, {"cell": [0,0], "dir": "S", "color": 2}]})";

ErrorCode parse_error_code(const std::string& text) {
    try {
        (void)parse_board(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("document parsed but should not have: " << text);
    return ErrorCode::InternalInvariant;
}

}  // namespace

TEST_CASE("parse_board minimal document") {
    const BoardDocument doc = parse_board(kOneCell);
    CHECK(doc.board.size() == 1);
    CHECK(doc.board.num_colors() == 3);
    CHECK(doc.boundary.size() == 4);
    CHECK(doc.boundary.at({{0, 0}, Direction::S}) == 2);
    CHECK(doc.pretiled.empty());
}

TEST_CASE("parse_board errors") {
    CHECK(parse_error_code("{not json") == ErrorCode::Syntax);
    CHECK(parse_error_code(R"({"num_colors": 3})") == ErrorCode::Schema);
    CHECK(parse_error_code(R"({"num_colors": 2, "cells": [], "boundary": []})") == ErrorCode::TooFewColors);
    CHECK(parse_error_code(R"({"num_colors": 3, "cells": [[0,0],[0,0]], "boundary": []})") == ErrorCode::DuplicateCell);
    CHECK(parse_error_code(R"({"num_colors": 3, "cells": [[0,0]], "boundary": [], "extra": 1})") == ErrorCode::Schema);

    try {
        (void)parse_board(R"({"num_colors": 3, "cells": [[0,0]], "boundary": [
          {"cell": [0,0], "dir": "E", "color": 0}, {"cell": [0,0], "dir": "N", "color": 1},
          {"cell": [0,0], "dir": "W", "color": 0}]})");
        FAIL("expected MissingBoundaryLeg");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MissingBoundaryLeg);
        CHECK(std::string(e.what()).find("(0,0):S") != std::string::npos);
    }

    std::string out_of_range = kOneCell;
    out_of_range.replace(out_of_range.find("\"color\": 2"), 10, "\"color\": 3");
    try {
        (void)parse_board(out_of_range);
        FAIL("expected ColorOutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ColorOutOfRange);
        CHECK(e.path() == "$.boundary[3].color");
    }

    CHECK(parse_error_code(R"({"num_colors": 3, "cells": [[0,0],[1,0]], "boundary": [
          {"cell": [0,0], "dir": "E", "color": 0}]})") == ErrorCode::ExtraBoundaryLeg);
    CHECK(parse_error_code(R"({"num_colors": 3, "cells": [[0,0]], "boundary": [
          {"cell": [5,5], "dir": "E", "color": 0}]})") == ErrorCode::ExtraBoundaryLeg);
    std::string twice = kOneCell;
    twice.replace(twice.find("\"dir\": \"N\""), 10, "\"dir\": \"E\"");
    CHECK(parse_error_code(twice) == ErrorCode::ExtraBoundaryLeg);
    CHECK(parse_error_code(R"({"num_colors": 3, "cells": [[0,0]], "boundary": [
          {"cell": [0,0], "dir": "X", "color": 0}]})") == ErrorCode::Schema);
}

TEST_CASE("pretiled cells") {
    // 2x1 strip, right cell hand-tiled with (0,1,0,2).
    const char* text = R"({"num_colors": 3, "cells": [[0,0],[1,0]],
      "boundary": [{"cell": [0,0], "dir": "N", "color": 1}, {"cell": [0,0], "dir": "W", "color": 0},
                   {"cell": [0,0], "dir": "S", "color": 2}],
      "pretiled": [{"cell": [1,0], "tile": [0,1,0,2]}]})";
    const BoardDocument doc = parse_board(text);
    CHECK(doc.pretiled.size() == 1);
    const Problem p = prepare(doc);
    CHECK(p.board.size() == 1);
    CHECK(p.boundary.at({{0, 0}, Direction::E}) == 0);

    auto policy = ChoicePolicy::deterministic();
    const SolveReport r = solve_document(doc, policy);
    REQUIRE(r.solved());
    CHECK(r.tiling().size() == 2);
    CHECK(r.tiling().at({1, 0}) == Tile{0, 1, 0, 2});
    CHECK(r.tiling().at({0, 0}) == Tile{0, 1, 0, 2});
    CHECK(validate_document(doc, r.tiling()).valid);

    Tiling altered = r.tiling();
    altered[{1, 0}] = Tile{0, 2, 0, 1};
    const auto v = validate_document(doc, altered);
    CHECK_FALSE(v.valid);

    // An induced leg may be listed, but must agree with the tile.
    std::string agreeing = text;
    agreeing.replace(agreeing.find("\"boundary\": ["), 13,
                     "\"boundary\": [{\"cell\": [0,0], \"dir\": \"E\", \"color\": 0}, ");
    CHECK_NOTHROW(parse_board(agreeing));
    std::string clashing = text;
    clashing.replace(clashing.find("\"boundary\": ["), 13,
                     "\"boundary\": [{\"cell\": [0,0], \"dir\": \"E\", \"color\": 2}, ");
    CHECK(parse_error_code(clashing) == ErrorCode::InvalidPartial);

    std::string cross = text;
    cross.replace(cross.find("[0,1,0,2]"), 9, "[0,1,0,1]");
    CHECK(parse_error_code(cross) == ErrorCode::InvalidPartial);
}

TEST_CASE("board documents round-trip") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        BoardDocument doc;
        doc.board = random_polyomino(rng, 1 + trial % 20, 3 + trial % 3);
        doc.boundary = random_beta(doc.board, rng);
        const std::string text = serialize_board(doc);
        const BoardDocument back = parse_board(text);
        CHECK(back.boundary == doc.boundary);
        CHECK(back.board.num_colors() == doc.board.num_colors());
        CHECK(std::equal(back.board.cells().begin(), back.board.cells().end(), doc.board.cells().begin(),
                         doc.board.cells().end()));
        CHECK(serialize_board(back) == text);
    }
}

TEST_CASE("tiling documents") {
    const Tiling t{{{0, 0}, Tile{0, 1, 0, 2}}, {{1, 0}, Tile{0, 1, 0, 0}}};
    const std::string text = serialize_tiling(t);
    CHECK(text == "{\n  \"tiles\": [\n    {\"cell\":[0,0],\"tile\":[0,1,0,2]},\n    {\"cell\":[1,0],\"tile\":[0,1,0,0]}\n  ]\n}\n");
    CHECK(parse_tiling(text) == t);
    CHECK_THROWS_AS(parse_tiling(R"({"tiles": [{"cell": [0,0], "tile": [0,1,0]}]})"), Error);
    CHECK_THROWS_AS(parse_tiling(R"({"tiles": [{"cell": [0,0], "tile": [0,1,0,2]}, {"cell": [0,0], "tile": [0,1,0,2]}]})"),
                    Error);
    CHECK(serialize_tiling({}) == "{\n  \"tiles\": []\n}\n");
}

TEST_CASE("render_svg single tile geometry") {
    const Board one = Board::make(3, {{0, 0}});
    const std::string svg = render_svg(one, {{{0, 0}, Tile{0, 1, 0, 2}}});
    // E = W = 0: horizontal course at pos(0) = 1/4, N stub at pos(1) = 1/2,
    // S stub at pos(2) = 3/4. SVG y is negated.
    CHECK(svg.find(R"(<line x1="0" y1="-0.25" x2="1" y2="-0.25"/>)") != std::string::npos);
    CHECK(svg.find(R"(<line x1="0.75" y1="0" x2="0.75" y2="-0.25"/>)") != std::string::npos);
    CHECK(svg.find(R"(<line x1="0.5" y1="-1" x2="0.5" y2="-0.25"/>)") != std::string::npos);
    CHECK(svg.find(R"(viewBox="0 -1 1 1")") != std::string::npos);

    const std::string vertical = render_svg(one, {{{0, 0}, Tile{1, 0, 2, 0}}});
    CHECK(vertical.find(R"(<line x1="0.25" y1="0" x2="0.25" y2="-1"/>)") != std::string::npos);
    CHECK(vertical.find(R"(<line x1="0" y1="-0.75" x2="0.25" y2="-0.75"/>)") != std::string::npos);
    CHECK(vertical.find(R"(<line x1="1" y1="-0.5" x2="0.25" y2="-0.5"/>)") != std::string::npos);
}

TEST_CASE("render_svg joints meet across shared edges") {
    const Board square = rect(2, 2);
    auto policy = ChoicePolicy::seeded(3);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto beta = random_beta(square, rng);
        const auto r = solve(square, beta, policy);
        REQUIRE(r.solved());
        const std::string svg = render_svg(square, r.tiling());
        const std::regex line(R"re(<line x1="([-0-9.]+)" y1="([-0-9.]+)" x2="([-0-9.]+)" y2="([-0-9.]+)"/>)re");
        std::map<std::pair<std::string, std::string>, int> on_shared_edge;
        std::size_t lines = 0;
        for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line); it != std::sregex_iterator(); ++it) {
            ++lines;
            for (int e = 0; e < 2; ++e) {
                const std::string x = (*it)[1 + 2 * e], y = (*it)[2 + 2 * e];
                const bool shared = (x == "1" && y != "0" && y != "-2") || (y == "-1" && x != "0" && x != "2");
                if (shared) ++on_shared_edge[{x, y}];
            }
        }
        CHECK(lines == 12);
        CHECK(on_shared_edge.size() == 4);
        for (const auto& [pt, count] : on_shared_edge) CHECK(count == 2);
        CHECK(svg.find("<rect") != std::string::npos);
        CHECK(render_svg(square, r.tiling()) == svg);
    }
}

TEST_CASE("render rejects invalid tilings") {
    const Board one = Board::make(3, {{0, 0}});
    try {
        (void)render_svg(one, {{{0, 0}, Tile{0, 1, 0, 1}}});
        FAIL("expected InvalidTiling");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidTiling);
    }
    CHECK_THROWS_AS(render_svg(rect(2, 1), {{{0, 0}, Tile{0, 1, 0, 2}}}), Error);
    CHECK_THROWS_AS(render_ascii(one, {{{0, 0}, Tile{0, 0, 0, 0}}}), Error);
}

TEST_CASE("render_ascii") {
    const Board one = Board::make(3, {{0, 0}});
    const std::string art = render_ascii(one, {{{0, 0}, Tile{0, 1, 0, 2}}}, 5);
    CHECK(art == "..|..\n..|..\n..|..\n--++-\n...|.\n");
    CHECK(render_ascii(one, {{{0, 0}, Tile{0, 1, 0, 2}}}, 5) == art);

    const Board ring = annulus(3, 3);
    auto policy = ChoicePolicy::deterministic();
    const auto r = solve(ring, uniform_beta(ring, 0), policy);
    REQUIRE(r.solved());
    const std::string ring_art = render_ascii(ring, r.tiling(), 3);
    std::vector<std::string> rows;
    for (std::size_t pos = 0, next; (next = ring_art.find('\n', pos)) != std::string::npos; pos = next + 1) {
        rows.push_back(ring_art.substr(pos, next - pos));
    }
    REQUIRE(rows.size() == 9);
    for (int r3 = 3; r3 < 6; ++r3) CHECK(rows[static_cast<std::size_t>(r3)].substr(3, 3) == "   ");
}

TEST_CASE("board_from_tiling") {
    const Board b = board_from_tiling({{{0, 0}, Tile{0, 1, 0, 4}}, {{3, 2}, Tile{0, 1, 0, 2}}});
    CHECK(b.size() == 2);
    CHECK(b.num_colors() == 5);
    CHECK(board_from_tiling({{{0, 0}, Tile{0, 1, 0, 1}}}).num_colors() == 3);
}
