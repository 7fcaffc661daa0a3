#include "brickwang/board.hpp"

#include "brickwang/error.hpp"
#include "brickwang/tiles.hpp"

#include <algorithm>
#include <cassert>

namespace brickwang {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::TooFewColors: return "TooFewColors";
        case ErrorCode::DuplicateCell: return "DuplicateCell";
        case ErrorCode::InvalidPartial: return "InvalidPartial";
        case ErrorCode::ConstraintIncomplete: return "ConstraintIncomplete";
        case ErrorCode::NoCompletion: return "NoCompletion";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::Syntax: return "Syntax";
        case ErrorCode::Schema: return "Schema";
        case ErrorCode::MissingBoundaryLeg: return "MissingBoundaryLeg";
        case ErrorCode::ExtraBoundaryLeg: return "ExtraBoundaryLeg";
        case ErrorCode::ColorOutOfRange: return "ColorOutOfRange";
        case ErrorCode::InvalidTiling: return "InvalidTiling";
        case ErrorCode::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

char to_char(Direction d) {
    static constexpr char names[] = {'E', 'N', 'W', 'S'};
    return names[ordinal(d)];
}

std::optional<Direction> direction_from_char(char c) {
    switch (c) {
        case 'E': return Direction::E;
        case 'N': return Direction::N;
        case 'W': return Direction::W;
        case 'S': return Direction::S;
        default: return std::nullopt;
    }
}

std::string to_string(CellCoord c) {
    return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

std::string to_string(const Leg& leg) {
    return to_string(leg.cell) + ":" + to_char(leg.dir);
}

Board Board::make(int num_colors, std::vector<CellCoord> cells) {
    if (num_colors < 3) {
        throw Error(ErrorCode::TooFewColors,
                    "brick tiles need at least 3 colours, got " + std::to_string(num_colors));
    }
    std::sort(cells.begin(), cells.end());
    if (auto dup = std::adjacent_find(cells.begin(), cells.end()); dup != cells.end()) {
        throw Error(ErrorCode::DuplicateCell, "duplicate cell " + to_string(*dup));
    }

    Board b;
    b.num_colors_ = num_colors;
    b.cells_ = std::move(cells);
    b.index_.reserve(b.cells_.size());
    for (std::size_t k = 0; k < b.cells_.size(); ++k) b.index_.emplace(b.cells_[k], k);

    b.neighbours_.assign(b.cells_.size() * 4, kNoNeighbour);
    std::size_t half_edges = 0;
    for (std::size_t k = 0; k < b.cells_.size(); ++k) {
        for (Direction d : kDirections) {
            auto it = b.index_.find(brickwang::neighbour(b.cells_[k], d));
            if (it == b.index_.end()) continue;
            b.neighbours_[k * 4 + static_cast<std::size_t>(ordinal(d))] = static_cast<int>(it->second);
            ++half_edges;
        }
    }
    b.internal_edges_ = half_edges / 2;
    return b;
}

std::optional<std::size_t> Board::index_of(CellCoord c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Board::is_constrained(const Leg& leg) const {
    auto idx = index_of(leg.cell);
    return idx && !is_internal(*idx, leg.dir);
}

LegPartition classify_legs(const Board& board) {
    LegPartition out;
    for (std::size_t k = 0; k < board.size(); ++k) {
        const CellCoord c = board.cell(k);
        for (Direction d : kDirections) {
            if (!board.is_internal(k, d)) {
                out.constrained.push_back({c, d});
            } else if (d == Direction::E || d == Direction::N) {
                out.internal_edges.emplace_back(Leg{c, d}, Leg{neighbour(c, d), opposite(d)});
            }
        }
    }
    return out;
}

std::pair<Board, BoundaryConstraints> restrict_board(const Board& board,
                                                     const std::set<CellCoord>& kept,
                                                     const Tiling& removed_tiles,
                                                     const BoundaryConstraints& boundary) {
    std::vector<CellCoord> kept_cells;
    kept_cells.reserve(kept.size());
    for (const CellCoord& c : kept) {
        if (!board.contains(c)) {
            throw Error(ErrorCode::InvalidPartial, "kept cell " + to_string(c) + " is not on the board");
        }
        kept_cells.push_back(c);
    }

    for (const CellCoord& c : board.cells()) {
        const bool removed = !kept.contains(c);
        const bool tiled = removed_tiles.contains(c);
        if (removed && !tiled) {
            throw Error(ErrorCode::InvalidPartial, "removed cell " + to_string(c) + " has no tile");
        }
        if (!removed && tiled) {
            throw Error(ErrorCode::InvalidPartial, "kept cell " + to_string(c) + " is also pretiled");
        }
    }
    for (const auto& [c, tile] : removed_tiles) {
        if (!board.contains(c)) {
            throw Error(ErrorCode::InvalidPartial, "tile for " + to_string(c) + " lies off the board");
        }
        for (Color col : tile) {
            if (col < 0 || col >= board.num_colors()) {
                throw Error(ErrorCode::InvalidPartial, "tile for " + to_string(c) + " has colour out of range");
            }
        }
        if (!brick_contains(tile)) {
            throw Error(ErrorCode::InvalidPartial, "tile for " + to_string(c) + " is not a brick tile");
        }
        for (Direction d : kDirections) {
            const CellCoord n = neighbour(c, d);
            if (auto other = removed_tiles.find(n); other != removed_tiles.end() && board.contains(n)) {
                if (other->second[ordinal(opposite(d))] != tile[ordinal(d)]) {
                    throw Error(ErrorCode::InvalidPartial,
                                "tiles " + to_string(c) + " and " + to_string(n) + " disagree on their shared edge");
                }
            } else if (!board.contains(n)) {
                auto b = boundary.find(Leg{c, d});
                if (b != boundary.end() && b->second != tile[ordinal(d)]) {
                    throw Error(ErrorCode::InvalidPartial,
                                "tile for " + to_string(c) + " contradicts boundary colour on " +
                                    to_string(Leg{c, d}));
                }
            }
        }
    }

    Board sub = Board::make(board.num_colors(), std::move(kept_cells));
    BoundaryConstraints induced;
    for (std::size_t k = 0; k < sub.size(); ++k) {
        const CellCoord c = sub.cell(k);
        for (Direction d : kDirections) {
            if (sub.is_internal(k, d)) continue;
            const Leg leg{c, d};
            const CellCoord n = neighbour(c, d);
            if (board.contains(n)) {
                induced.emplace_hint(induced.end(), leg, removed_tiles.at(n)[ordinal(opposite(d))]);
            } else {
                auto b = boundary.find(leg);
                if (b == boundary.end()) {
                    throw Error(ErrorCode::ConstraintIncomplete, "no boundary colour for " + to_string(leg));
                }
                induced.emplace_hint(induced.end(), leg, b->second);
            }
        }
    }
    return {std::move(sub), std::move(induced)};
}

DfsForest dfs_forest(const Board& board) {
    const std::size_t n = board.size();
    DfsForest f;
    f.preorder.reserve(n);
    f.parent_dir.assign(n, std::nullopt);
    f.component.assign(n, static_cast<std::size_t>(-1));

    // Explicit stack of (cell, next direction to scan) mimicking recursion.
    std::vector<std::pair<std::size_t, int>> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (f.component[root] != static_cast<std::size_t>(-1)) continue;
        const std::size_t comp = f.component_count++;
        f.component[root] = comp;
        f.preorder.push_back(root);
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next == 4) {
                stack.pop_back();
                continue;
            }
            const Direction d = direction_from_ordinal(next++);
            const int w = board.neighbour(v, d);
            if (w == kNoNeighbour) continue;
            const auto wi = static_cast<std::size_t>(w);
            if (f.component[wi] != static_cast<std::size_t>(-1)) continue;
            f.component[wi] = comp;
            f.parent_dir[wi] = opposite(d);
            f.preorder.push_back(wi);
            stack.emplace_back(wi, 0);
        }
    }
    return f;
}

namespace detail {

std::optional<std::vector<std::size_t>> cycle_from(const Board& board, std::size_t root,
                                                   std::vector<char>& visited) {
    struct Frame {
        std::size_t cell;
        int next;
        int parent;
    };
    std::vector<Frame> stack;
    visited[root] = 1;
    stack.push_back({root, 0, kNoNeighbour});
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next == 4) {
            visited[top.cell] = 2;
            stack.pop_back();
            continue;
        }
        const Direction d = direction_from_ordinal(top.next++);
        const int w = board.neighbour(top.cell, d);
        if (w == kNoNeighbour || w == top.parent) continue;
        const auto wi = static_cast<std::size_t>(w);
        if (visited[wi] == 0) {
            visited[wi] = 1;
            stack.push_back({wi, 0, static_cast<int>(top.cell)});
            continue;
        }
        // The first non-tree edge found in an undirected DFS always leads to
        // an ancestor still on the stack.
        assert(visited[wi] == 1);
        std::vector<std::size_t> cycle;
        auto it = std::find_if(stack.begin(), stack.end(), [&](const Frame& f) { return f.cell == wi; });
        for (; it != stack.end(); ++it) cycle.push_back(it->cell);
        if (cycle.size() % 2 != 0 || cycle.size() < 4) {
            throw Error(ErrorCode::InternalInvariant,
                        "odd or degenerate cycle of length " + std::to_string(cycle.size()));
        }
        return cycle;
    }
    return std::nullopt;
}

}  // namespace detail

std::optional<std::vector<std::size_t>> find_cycle_indices(const Board& board,
                                                           std::optional<std::size_t> start) {
    std::vector<char> visited(board.size(), 0);
    if (start) return detail::cycle_from(board, *start, visited);
    for (std::size_t root = 0; root < board.size(); ++root) {
        if (visited[root] != 0) continue;
        if (auto c = detail::cycle_from(board, root, visited)) return c;
    }
    return std::nullopt;
}

std::optional<std::vector<CellCoord>> find_cycle(const Board& board) {
    auto idx = find_cycle_indices(board);
    if (!idx) return std::nullopt;
    std::vector<CellCoord> out;
    out.reserve(idx->size());
    for (std::size_t k : *idx) out.push_back(board.cell(k));
    return out;
}

std::vector<Board> connected_components(const Board& board) {
    const DfsForest f = dfs_forest(board);
    std::vector<std::vector<CellCoord>> groups(f.component_count);
    for (std::size_t k = 0; k < board.size(); ++k) groups[f.component[k]].push_back(board.cell(k));
    std::vector<Board> out;
    out.reserve(groups.size());
    for (auto& g : groups) out.push_back(Board::make(board.num_colors(), std::move(g)));
    return out;
}

BoundaryConstraints constraints_for(const Board& component, const BoundaryConstraints& boundary) {
    BoundaryConstraints out;
    for (std::size_t k = 0; k < component.size(); ++k) {
        for (Direction d : kDirections) {
            if (component.is_internal(k, d)) continue;
            const Leg leg{component.cell(k), d};
            if (auto it = boundary.find(leg); it != boundary.end()) out.emplace_hint(out.end(), leg, it->second);
        }
    }
    return out;
}

}  // namespace brickwang
