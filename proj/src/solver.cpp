#include "brickwang/solver.hpp"

#include "brickwang/error.hpp"
#include "workspace.hpp"

namespace brickwang {

std::vector<bool> always_solvable_components(const Board& board) {
    const DfsForest forest = dfs_forest(board);
    std::vector<bool> out;
    out.reserve(forest.component_count);
    std::vector<char> visited(board.size(), 0);
    for (std::size_t k = 0; k < forest.preorder.size(); ++k) {
        const std::size_t cell = forest.preorder[k];
        if (forest.parent_dir[cell]) continue;  // only roots start a component
        out.push_back(detail::cycle_from(board, cell, visited).has_value());
    }
    return out;
}

bool always_solvable(const Board& board) {
    for (bool ok : always_solvable_components(board))
        if (!ok) return false;
    return true;
}

namespace detail {

void Workspace::load_boundary(const BoundaryConstraints& boundary) {
    for (const auto& [leg, colour] : boundary) {
        const auto idx = board_.index_of(leg.cell);
        if (!idx || board_.is_internal(*idx, leg.dir)) {
            throw Error(ErrorCode::ExtraBoundaryLeg, "boundary colour given for non-constrained leg " + to_string(leg));
        }
        if (colour < 0 || colour >= board_.num_colors()) {
            throw Error(ErrorCode::ColorOutOfRange,
                        "boundary colour " + std::to_string(colour) + " on " + to_string(leg) + " out of range");
        }
        set_leg(*idx, leg.dir, colour);
    }
    for (std::size_t k = 0; k < board_.size(); ++k) {
        for (Direction d : kDirections) {
            if (!board_.is_internal(k, d) && leg(k, d) == kUnset) {
                throw Error(ErrorCode::ConstraintIncomplete,
                            "no boundary colour for " + to_string(Leg{board_.cell(k), d}));
            }
        }
    }
}

Tiling Workspace::extract_tiling() const {
    Tiling out;
    for (std::size_t k = 0; k < board_.size(); ++k) out.emplace_hint(out.end(), board_.cell(k), tile_of(k));
    return out;
}

namespace {

std::optional<Direction> direction_to(const Board& board, std::size_t from, std::size_t to) {
    for (Direction d : kDirections)
        if (board.neighbour(from, d) == static_cast<int>(to)) return d;
    return std::nullopt;
}

/// Tiles every non-cycle cell of the component leaves-first along spanning
/// trees hanging off the cycle, colours chords, then solves the cycle.
void solve_cyclic_component(Workspace& ws, const std::vector<std::size_t>& cycle, std::vector<char>& claimed) {
    const Board& board = ws.board();
    SolveStats& stats = ws.stats();
    stats.cycle_length += cycle.size();
    for (std::size_t c : cycle) claimed[c] = 1;

    std::vector<std::size_t> order;
    std::vector<std::pair<std::size_t, int>> stack;
    for (std::size_t c : cycle) {
        for (Direction d : kDirections) {
            const int start = board.neighbour(c, d);
            if (start == kNoNeighbour || claimed[static_cast<std::size_t>(start)]) continue;

            // Spanning tree of this complement component, rooted next to the
            // cycle. Preorder reversed is a leaves-first order, and each cell's
            // parent leg is still uncoloured when the cell is tiled.
            order.clear();
            claimed[static_cast<std::size_t>(start)] = 1;
            order.push_back(static_cast<std::size_t>(start));
            stack.emplace_back(static_cast<std::size_t>(start), 0);
            while (!stack.empty()) {
                auto& [v, next] = stack.back();
                if (next == 4) {
                    stack.pop_back();
                    continue;
                }
                const int w = board.neighbour(v, direction_from_ordinal(next++));
                if (w == kNoNeighbour || claimed[static_cast<std::size_t>(w)]) continue;
                claimed[static_cast<std::size_t>(w)] = 1;
                order.push_back(static_cast<std::size_t>(w));
                stack.emplace_back(static_cast<std::size_t>(w), 0);
            }
            stats.traversal_steps += order.size();
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                ++stats.completions;
                ws.place(*it, complete_brick_tile(ws.num_colors(), ws.fixed_legs(*it), ws.policy()));
            }
        }
    }

    const std::size_t len = cycle.size();
    std::vector<CycleCell> cells(len);
    for (std::size_t k = 0; k < len; ++k) {
        const std::size_t v = cycle[k];
        const auto in = direction_to(board, v, cycle[(k + len - 1) % len]);
        const auto out = direction_to(board, v, cycle[(k + 1) % len]);
        if (!in || !out) throw Error(ErrorCode::InternalInvariant, "cycle cells are not adjacent");
        cells[k].in = *in;
        cells[k].out = *out;
    }
    // Chords: legs between two cycle cells that are not cycle edges.
    for (std::size_t k = 0; k < len; ++k) {
        const std::size_t v = cycle[k];
        for (Direction d : kDirections) {
            if (d == cells[k].in || d == cells[k].out || ws.leg(v, d) != kUnset) continue;
            ws.set_leg(v, d, ws.policy().pick_colour_avoiding(ws.num_colors(), {}));
        }
        for (Direction d : kDirections) cells[k].colours[ordinal(d)] = ws.leg(v, d);
    }

    const CycleSolution sol = solve_cycle(cells, ws.num_colors(), ws.policy());
    for (std::size_t k = 0; k < len; ++k) ws.set_leg(cycle[k], cells[k].out, sol.edge_colours[k]);
    for (std::size_t k = 0; k < len; ++k) ws.place(cycle[k], ws.tile_of(cycle[k]));
}

enum class Mode { Any, TreesOnly };

SolveReport run(const Board& board, const BoundaryConstraints& boundary, ChoicePolicy& policy, Mode mode) {
    const auto started = std::chrono::steady_clock::now();
    SolveReport report;
    report.stats.cells = board.size();
    Workspace ws(board, policy, report.stats);
    ws.load_boundary(boundary);

    const DfsForest forest = dfs_forest(board);
    report.stats.traversal_steps += forest.preorder.size();
    std::vector<char> visited(board.size(), 0);
    std::vector<char> claimed(board.size(), 0);

    std::size_t begin = 0;
    while (begin < forest.preorder.size()) {
        std::size_t end = begin + 1;
        while (end < forest.preorder.size() && forest.parent_dir[forest.preorder[end]]) ++end;
        const std::span<const std::size_t> component(forest.preorder.data() + begin, end - begin);
        begin = end;

        auto cycle = detail::cycle_from(board, component.front(), visited);
        report.stats.traversal_steps += component.size();
        if (cycle) {
            if (mode == Mode::TreesOnly) {
                throw Error(ErrorCode::NotATree,
                            "component at " + to_string(board.cell(component.front())) + " contains a cycle");
            }
            solve_cyclic_component(ws, *cycle, claimed);
            continue;
        }
        if (auto witness = solve_tree_component(ws, component, forest.parent_dir)) {
            report.status = *witness;
            report.stats.elapsed = std::chrono::steady_clock::now() - started;
            return report;
        }
    }

    report.status = ws.extract_tiling();
    report.stats.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

}  // namespace
}  // namespace detail

SolveReport solve(const Board& board, const BoundaryConstraints& boundary, ChoicePolicy& policy) {
    return detail::run(board, boundary, policy, detail::Mode::Any);
}

SolveReport solve_tree(const Board& board, const BoundaryConstraints& boundary, ChoicePolicy& policy) {
    return detail::run(board, boundary, policy, detail::Mode::TreesOnly);
}

}  // namespace brickwang
