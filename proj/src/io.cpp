#include "brickwang/io.hpp"

#include "brickwang/error.hpp"

#include <json.hpp>

#include <sstream>

namespace brickwang {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::Schema, path + ": " + what, path);
}

int as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) schema_error(path, "expected an integer");
    const auto x = v.get<std::int64_t>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) schema_error(path, "integer out of range");
    return static_cast<int>(x);
}

const json& require(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) schema_error(path, std::string("missing field \"") + key + "\"");
    return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& path) {
    if (!obj.is_object()) schema_error(path, "expected an object");
    for (const auto& [k, v] : obj.items()) {
        bool known = false;
        for (const char* key : keys) known = known || k == key;
        if (!known) schema_error(path, "unknown field \"" + k + "\"");
    }
}

CellCoord as_cell(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) schema_error(path, "expected [i, j]");
    return {as_int(v[0], path + "[0]"), as_int(v[1], path + "[1]")};
}

Tile as_tile(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 4) schema_error(path, "expected [e, n, w, s]");
    Tile t{};
    for (std::size_t d = 0; d < 4; ++d) t[d] = as_int(v[d], path + "[" + std::to_string(d) + "]");
    return t;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Syntax, std::string("malformed JSON: ") + e.what(), "$");
    }
}

/// Reads a "tiles"/"pretiled" style list into a tiling.
Tiling read_tile_list(const json& list, const std::string& path) {
    if (!list.is_array()) schema_error(path, "expected an array");
    Tiling out;
    for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string p = path + "[" + std::to_string(k) + "]";
        only_keys(list[k], {"cell", "tile"}, p);
        const CellCoord c = as_cell(require(list[k], "cell", p), p + ".cell");
        const Tile t = as_tile(require(list[k], "tile", p), p + ".tile");
        for (std::size_t d = 0; d < 4; ++d) {
            if (t[d] < 0) {
                throw Error(ErrorCode::ColorOutOfRange, p + ".tile: negative colour", p + ".tile[" + std::to_string(d) + "]");
            }
        }
        if (!out.emplace(c, t).second) {
            throw Error(ErrorCode::DuplicateCell, p + ": cell " + to_string(c) + " listed twice", p + ".cell");
        }
    }
    return out;
}

std::string cell_json(CellCoord c) { return "[" + std::to_string(c.i) + "," + std::to_string(c.j) + "]"; }

std::string tile_entry(CellCoord c, const Tile& t) {
    return "{\"cell\":" + cell_json(c) + ",\"tile\":[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]) + "," + std::to_string(t[3]) + "]}";
}

template <typename Range, typename Fn>
void write_list(std::ostringstream& out, const char* key, const Range& items, Fn&& entry, bool last) {
    out << "  \"" << key << "\": [";
    bool first = true;
    for (const auto& item : items) {
        out << (first ? "\n    " : ",\n    ") << entry(item);
        first = false;
    }
    out << (first ? "]" : "\n  ]") << (last ? "\n" : ",\n");
}

}  // namespace

BoardDocument parse_board(std::string_view text) {
    const json root = parse_json(text);
    only_keys(root, {"num_colors", "cells", "boundary", "pretiled"}, "$");

    const int num_colors = as_int(require(root, "num_colors", "$"), "$.num_colors");
    const json& cells_json = require(root, "cells", "$");
    if (!cells_json.is_array()) schema_error("$.cells", "expected an array");
    std::vector<CellCoord> cells;
    cells.reserve(cells_json.size());
    for (std::size_t k = 0; k < cells_json.size(); ++k) {
        cells.push_back(as_cell(cells_json[k], "$.cells[" + std::to_string(k) + "]"));
    }

    BoardDocument doc;
    try {
        doc.board = Board::make(num_colors, cells);
    } catch (const Error& e) {
        throw Error(e.code(), e.what(), e.code() == ErrorCode::TooFewColors ? "$.num_colors" : "$.cells");
    }
    const Board& board = doc.board;

    if (auto it = root.find("pretiled"); it != root.end()) doc.pretiled = read_tile_list(*it, "$.pretiled");
    for (const auto& [c, t] : doc.pretiled) {
        const std::string p = "$.pretiled";
        if (!board.contains(c)) schema_error(p, "pretiled cell " + to_string(c) + " is not in cells");
        for (Color col : t) {
            if (col >= num_colors) {
                throw Error(ErrorCode::ColorOutOfRange, p + ": tile for " + to_string(c) + " uses colour " + std::to_string(col),
                            p);
            }
        }
    }

    const json& boundary_json = require(root, "boundary", "$");
    if (!boundary_json.is_array()) schema_error("$.boundary", "expected an array");
    for (std::size_t k = 0; k < boundary_json.size(); ++k) {
        const std::string p = "$.boundary[" + std::to_string(k) + "]";
        const json& entry = boundary_json[k];
        only_keys(entry, {"cell", "dir", "color"}, p);
        const CellCoord c = as_cell(require(entry, "cell", p), p + ".cell");
        const json& dir_json = require(entry, "dir", p);
        const std::string dir_text = dir_json.is_string() ? dir_json.get<std::string>() : std::string{};
        const auto dir = dir_text.size() == 1 ? direction_from_char(dir_text[0]) : std::nullopt;
        if (!dir) schema_error(p + ".dir", "expected one of \"E\", \"N\", \"W\", \"S\"");
        const Color colour = as_int(require(entry, "color", p), p + ".color");
        if (colour < 0 || colour >= num_colors) {
            throw Error(ErrorCode::ColorOutOfRange,
                        p + ".color: " + std::to_string(colour) + " not in [0, " + std::to_string(num_colors) + ")",
                        p + ".color");
        }

        const Leg leg{c, *dir};
        const auto idx = board.index_of(c);
        if (!idx) {
            throw Error(ErrorCode::ExtraBoundaryLeg, p + ": " + to_string(leg) + " belongs to no cell", p);
        }
        const CellCoord n = neighbour(c, *dir);
        const bool self_pretiled = doc.pretiled.contains(c);
        const bool other_pretiled = doc.pretiled.contains(n);
        if (board.contains(n) && !self_pretiled && !other_pretiled) {
            throw Error(ErrorCode::ExtraBoundaryLeg, p + ": " + to_string(leg) + " is an internal leg", p);
        }
        if (board.contains(n) && self_pretiled) {
            throw Error(ErrorCode::ExtraBoundaryLeg, p + ": " + to_string(leg) + " is inside the pretiled region", p);
        }
        if (other_pretiled && board.contains(n) && doc.pretiled.at(n)[ordinal(opposite(*dir))] != colour) {
            throw Error(ErrorCode::InvalidPartial, p + ": " + to_string(leg) + " contradicts the tile at " + to_string(n), p);
        }
        if (self_pretiled && doc.pretiled.at(c)[ordinal(*dir)] != colour) {
            throw Error(ErrorCode::InvalidPartial, p + ": " + to_string(leg) + " contradicts its own pretiled tile", p);
        }
        if (!doc.boundary.emplace(leg, colour).second) {
            throw Error(ErrorCode::ExtraBoundaryLeg, p + ": " + to_string(leg) + " coloured twice", p);
        }
    }

    for (std::size_t k = 0; k < board.size(); ++k) {
        const CellCoord c = board.cell(k);
        if (doc.pretiled.contains(c)) continue;
        for (Direction d : kDirections) {
            if (board.is_internal(k, d)) continue;
            const Leg leg{c, d};
            if (!doc.boundary.contains(leg)) {
                throw Error(ErrorCode::MissingBoundaryLeg, "$.boundary: no colour for " + to_string(leg), "$.boundary");
            }
        }
    }

    try {
        (void)prepare(doc);
    } catch (const Error& e) {
        throw Error(e.code(), e.what(), "$.pretiled");
    }
    return doc;
}

std::string serialize_board(const BoardDocument& doc) {
    std::ostringstream out;
    out << "{\n  \"num_colors\": " << doc.board.num_colors() << ",\n";
    write_list(out, "cells", doc.board.cells(), [](CellCoord c) { return cell_json(c); }, false);
    write_list(
        out, "boundary", doc.boundary,
        [](const auto& kv) {
            return "{\"cell\":" + cell_json(kv.first.cell) + ",\"dir\":\"" + to_char(kv.first.dir) +
                   "\",\"color\":" + std::to_string(kv.second) + "}";
        },
        doc.pretiled.empty());
    if (!doc.pretiled.empty()) {
        write_list(out, "pretiled", doc.pretiled, [](const auto& kv) { return tile_entry(kv.first, kv.second); }, true);
    }
    out << "}\n";
    return out.str();
}

Problem prepare(const BoardDocument& doc) {
    std::set<CellCoord> kept;
    for (const CellCoord& c : doc.board.cells())
        if (!doc.pretiled.contains(c)) kept.insert(kept.end(), c);
    auto [board, boundary] = restrict_board(doc.board, kept, doc.pretiled, doc.boundary);
    return {std::move(board), std::move(boundary)};
}

Tiling parse_tiling(std::string_view text) {
    const json root = parse_json(text);
    only_keys(root, {"tiles"}, "$");
    return read_tile_list(require(root, "tiles", "$"), "$.tiles");
}

std::string serialize_tiling(const Tiling& tiling) {
    std::ostringstream out;
    out << "{\n";
    write_list(out, "tiles", tiling, [](const auto& kv) { return tile_entry(kv.first, kv.second); }, true);
    out << "}\n";
    return out.str();
}

SolveReport solve_document(const BoardDocument& doc, ChoicePolicy& policy) {
    const Problem problem = prepare(doc);
    SolveReport report = solve(problem.board, problem.boundary, policy);
    if (report.solved()) {
        Tiling merged = std::get<Tiling>(std::move(report.status));
        merged.insert(doc.pretiled.begin(), doc.pretiled.end());
        report.status = std::move(merged);
    }
    return report;
}

ValidationResult validate_document(const BoardDocument& doc, const Tiling& tiling) {
    BoundaryConstraints full;
    for (std::size_t k = 0; k < doc.board.size(); ++k) {
        const CellCoord c = doc.board.cell(k);
        auto pre = doc.pretiled.find(c);
        for (Direction d : kDirections) {
            if (doc.board.is_internal(k, d)) continue;
            const Leg leg{c, d};
            if (auto b = doc.boundary.find(leg); b != doc.boundary.end()) {
                full.emplace(leg, b->second);
            } else if (pre != doc.pretiled.end()) {
                full.emplace(leg, pre->second[ordinal(d)]);
            }
        }
    }
    ValidationResult r = validate(doc.board, full, tiling);
    for (const auto& [c, tile] : doc.pretiled) {
        auto it = tiling.find(c);
        if (it != tiling.end() && it->second != tile) {
            r.valid = false;
            r.violations.push_back({Violation::Kind::PretiledMismatch, c, std::nullopt, std::nullopt,
                                    "tile at " + to_string(c) + " differs from the hand-placed tile"});
        }
    }
    return r;
}

Board board_from_tiling(const Tiling& tiling) {
    std::vector<CellCoord> cells;
    Color top = 2;
    for (const auto& [c, t] : tiling) {
        cells.push_back(c);
        for (Color col : t) top = std::max(top, col);
    }
    return Board::make(top + 1, std::move(cells));
}

}  // namespace brickwang
