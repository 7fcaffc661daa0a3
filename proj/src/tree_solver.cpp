#include "brickwang/error.hpp"
#include "brickwang/solver.hpp"
#include "workspace.hpp"

namespace brickwang {

Condition infer_condition(const Condition& opposite, const Condition& perp1, const Condition& perp2) {
    using K = Condition::Kind;
    if (opposite.is_any() || perp1.is_any() || perp2.is_any()) return Condition::any();
    if (perp1.kind == K::Exact && perp2.kind == K::Exact) {
        // Equal sides force the through pair apart, unequal sides force it equal.
        return perp1.color == perp2.color ? opposite.negated() : opposite;
    }
    if (perp1.kind == K::Not && perp2.kind == K::Not) return Condition::any();
    const Condition& exact = perp1.kind == K::Exact ? perp1 : perp2;
    const Condition& negative = perp1.kind == K::Not ? perp1 : perp2;
    // The sides can be made unequal in any case; they can be made equal
    // only when the excluded colour differs from the fixed one.
    return negative.color == exact.color ? opposite : Condition::any();
}

std::string describe(const UnsolvableWitness& w) {
    std::string out = "no tile fits root " + to_string(w.root) + " under";
    for (Direction d : kDirections) {
        out += ' ';
        out += to_char(d);
        out += to_string(w.conditions[ordinal(d)]);
    }
    return out;
}

namespace detail {

std::optional<UnsolvableWitness> solve_tree_component(Workspace& ws, std::span<const std::size_t> preorder,
                                                      const std::vector<std::optional<Direction>>& parent_dir) {
    const Board& board = ws.board();
    SolveStats& stats = ws.stats();
    // Condition each cell hands up to its parent across their shared edge.
    std::vector<Condition> up(board.size(), Condition::any());

    auto leg_condition = [&](std::size_t cell, Direction d) {
        const int w = board.neighbour(cell, d);
        if (w == kNoNeighbour) return Condition::exact(ws.leg(cell, d));
        return up[static_cast<std::size_t>(w)];
    };

    for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
        const std::size_t cell = *it;
        const auto out = parent_dir[cell];
        if (!out) continue;
        const auto side = perpendicular(*out);
        up[cell] = infer_condition(leg_condition(cell, opposite(*out)), leg_condition(cell, side[0]),
                                   leg_condition(cell, side[1]));
        ++stats.propagations;
    }

    auto conditions_of = [&](std::size_t cell) {
        std::array<Condition, 4> conds;
        for (Direction d : kDirections) {
            conds[ordinal(d)] = parent_dir[cell] == d ? Condition::any() : leg_condition(cell, d);
        }
        return conds;
    };

    const std::size_t root = preorder.front();
    {
        const auto conds = conditions_of(root);
        ++stats.completions;
        auto tile = try_complete_brick_tile(ws.num_colors(), ws.fixed_legs(root), conds, ws.policy());
        if (!tile) return UnsolvableWitness{board.cell(root), conds};
        ws.place(root, *tile);
    }

    for (std::size_t k = 1; k < preorder.size(); ++k) {
        const std::size_t cell = preorder[k];
        ++stats.completions;
        auto tile = try_complete_brick_tile(ws.num_colors(), ws.fixed_legs(cell), conditions_of(cell), ws.policy());
        if (!tile) {
            throw Error(ErrorCode::InternalInvariant,
                        "propagated conditions left no tile for " + to_string(board.cell(cell)));
        }
        ws.place(cell, *tile);
    }
    return std::nullopt;
}

}  // namespace detail

BoundaryConstraints find_unsolvable_beta(const Board& tree) {
    if (tree.empty()) throw Error(ErrorCode::NotATree, "an empty board has no unsolvable boundary");
    if (find_cycle_indices(tree)) throw Error(ErrorCode::NotATree, "board contains a cycle");

    const DfsForest forest = dfs_forest(tree);
    // Colour each cell must force onto the edge towards its parent; roots
    // want all four legs at 0.
    std::vector<Color> target(tree.size(), 0);
    BoundaryConstraints beta;
    for (std::size_t cell : forest.preorder) {
        std::array<Color, 4> want{0, 0, 0, 0};
        if (const auto p = forest.parent_dir[cell]) {
            want[ordinal(opposite(*p))] = target[cell];
            const auto side = perpendicular(*p);
            want[ordinal(side[0])] = 1;
            want[ordinal(side[1])] = 2;
        }
        for (Direction d : kDirections) {
            if (forest.parent_dir[cell] == d) continue;
            const int w = tree.neighbour(cell, d);
            if (w == kNoNeighbour) {
                beta.emplace(Leg{tree.cell(cell), d}, want[ordinal(d)]);
            } else {
                target[static_cast<std::size_t>(w)] = want[ordinal(d)];
            }
        }
    }
    return beta;
}

}  // namespace brickwang
