#include "brickwang/solver.hpp"

namespace brickwang {

std::string_view to_string(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::MissingCell: return "missing_cell";
        case Violation::Kind::ExtraCell: return "extra_cell";
        case Violation::Kind::ColorOutOfRange: return "color_out_of_range";
        case Violation::Kind::NotBrick: return "not_brick";
        case Violation::Kind::EdgeMismatch: return "edge_mismatch";
        case Violation::Kind::BoundaryMismatch: return "boundary_mismatch";
        case Violation::Kind::PretiledMismatch: return "pretiled_mismatch";
    }
    return "unknown";
}

ValidationResult validate(const Board& board, const BoundaryConstraints& boundary, const Tiling& tiling) {
    ValidationResult r;
    auto report = [&](Violation v) {
        r.valid = false;
        r.violations.push_back(std::move(v));
    };

    for (const auto& [cell, tile] : tiling) {
        if (!board.contains(cell)) {
            report({Violation::Kind::ExtraCell, cell, std::nullopt, std::nullopt,
                    "tile for " + to_string(cell) + " which is not on the board"});
        }
    }

    for (std::size_t k = 0; k < board.size(); ++k) {
        const CellCoord cell = board.cell(k);
        auto it = tiling.find(cell);
        if (it == tiling.end()) {
            report({Violation::Kind::MissingCell, cell, std::nullopt, std::nullopt, "no tile for " + to_string(cell)});
            continue;
        }
        const Tile& tile = it->second;
        bool in_range = true;
        for (Color c : tile) in_range = in_range && c >= 0 && c < board.num_colors();
        if (!in_range) {
            report({Violation::Kind::ColorOutOfRange, cell, std::nullopt, std::nullopt,
                    "tile for " + to_string(cell) + " uses a colour out of range"});
        }
        if (!brick_contains(tile)) {
            report({Violation::Kind::NotBrick, cell, std::nullopt, std::nullopt,
                    "tile (" + std::to_string(tile[0]) + "," + std::to_string(tile[1]) + "," +
                        std::to_string(tile[2]) + "," + std::to_string(tile[3]) + ") at " + to_string(cell) +
                        " is not a brick tile"});
        }
        for (Direction d : kDirections) {
            const Leg leg{cell, d};
            const Color c = tile[ordinal(d)];
            if (board.is_internal(k, d)) {
                // Each shared edge is reported once, from its west/south cell.
                if (d != Direction::E && d != Direction::N) continue;
                const CellCoord n = neighbour(cell, d);
                auto other = tiling.find(n);
                if (other == tiling.end()) continue;
                const Color oc = other->second[ordinal(opposite(d))];
                if (oc != c) {
                    report({Violation::Kind::EdgeMismatch, cell, leg, Leg{n, opposite(d)},
                            to_string(leg) + "=" + std::to_string(c) + " but " + to_string(Leg{n, opposite(d)}) +
                                "=" + std::to_string(oc)});
                }
            } else {
                auto b = boundary.find(leg);
                if (b == boundary.end()) {
                    report({Violation::Kind::BoundaryMismatch, cell, leg, std::nullopt,
                            "no boundary colour for " + to_string(leg)});
                } else if (b->second != c) {
                    report({Violation::Kind::BoundaryMismatch, cell, leg, std::nullopt,
                            to_string(leg) + "=" + std::to_string(c) + " but boundary requires " +
                                std::to_string(b->second)});
                }
            }
        }
    }
    return r;
}

}  // namespace brickwang
