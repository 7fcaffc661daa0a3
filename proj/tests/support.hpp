#pragma once

// Shared fixtures and brute-force helpers for the test suites. Nothing here
// calls into the solver; helpers are independent reference code.

#include "brickwang/board.hpp"
#include "brickwang/condition.hpp"
#include "brickwang/tiles.hpp"

#include <random>
#include <set>
#include <vector>

namespace brickwang::testing {

inline Board rect(int w, int h, int num_colors = 3) {
    std::vector<CellCoord> cells;
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) cells.push_back({i, j});
    return Board::make(num_colors, cells);
}

inline Board annulus(int w, int h, int num_colors = 3) {
    std::vector<CellCoord> cells;
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i)
            if (i == 0 || j == 0 || i == w - 1 || j == h - 1) cells.push_back({i, j});
    return Board::make(num_colors, cells);
}

inline std::vector<Leg> constrained_legs(const Board& b) {
    std::vector<Leg> out;
    for (const CellCoord& c : b.cells())
        for (Direction d : kDirections)
            if (!b.contains(neighbour(c, d))) out.push_back({c, d});
    return out;
}

inline BoundaryConstraints uniform_beta(const Board& b, Color c) {
    BoundaryConstraints beta;
    for (const Leg& leg : constrained_legs(b)) beta.emplace(leg, c);
    return beta;
}

template <typename Rng>
BoundaryConstraints random_beta(const Board& b, Rng& rng) {
    std::uniform_int_distribution<Color> colour(0, b.num_colors() - 1);
    BoundaryConstraints beta;
    for (const Leg& leg : constrained_legs(b)) beta.emplace(leg, colour(rng));
    return beta;
}

/// Connected polyomino grown cell by cell from the origin.
template <typename Rng>
Board random_polyomino(Rng& rng, std::size_t size, int num_colors = 3) {
    std::vector<CellCoord> cells{{0, 0}};
    std::set<CellCoord> present{{0, 0}};
    while (cells.size() < size) {
        const CellCoord base = cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)];
        const CellCoord c = neighbour(base, direction_from_ordinal(std::uniform_int_distribution<int>(0, 3)(rng)));
        if (present.insert(c).second) cells.push_back(c);
    }
    return Board::make(num_colors, cells);
}

/// Polyomino whose adjacency graph is a tree: every new cell touches
/// exactly one existing cell.
template <typename Rng>
Board random_tree_polyomino(Rng& rng, std::size_t size, int num_colors = 3) {
    std::vector<CellCoord> cells{{0, 0}};
    std::set<CellCoord> present{{0, 0}};
    std::size_t attempts = 0;
    while (cells.size() < size && attempts++ < 100000) {
        const CellCoord base = cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)];
        const CellCoord c = neighbour(base, direction_from_ordinal(std::uniform_int_distribution<int>(0, 3)(rng)));
        if (present.contains(c)) continue;
        int touching = 0;
        for (Direction d : kDirections) touching += present.contains(neighbour(c, d)) ? 1 : 0;
        if (touching != 1) continue;
        present.insert(c);
        cells.push_back(c);
    }
    return Board::make(num_colors, cells);
}

/// Independent cycle test: a connected graph is a tree iff E = V - 1.
inline bool has_cycle_by_counting(const Board& b) {
    std::size_t edges = 0;
    for (const CellCoord& c : b.cells()) {
        if (b.contains(neighbour(c, Direction::E))) ++edges;
        if (b.contains(neighbour(c, Direction::N))) ++edges;
    }
    return edges + 1 > b.size() && !b.empty();
}

/// Colours in [0, n) accepted by `c`.
inline std::vector<bool> satisfying_set(const Condition& c, int n) {
    std::vector<bool> out(static_cast<std::size_t>(n));
    for (Color x = 0; x < n; ++x) out[static_cast<std::size_t>(x)] = c.accepts(x);
    return out;
}

/// {x : some colours on W, N, S meeting their conditions make (x, N, W, S) a
/// brick tile}, by enumeration.
inline std::vector<bool> inferred_by_enumeration(const Condition& opp, const Condition& p1, const Condition& p2,
                                                 int n) {
    std::vector<bool> out(static_cast<std::size_t>(n), false);
    for (Color x = 0; x < n; ++x)
        for (Color w = 0; w < n; ++w)
            for (Color a = 0; a < n; ++a)
                for (Color b = 0; b < n; ++b)
                    if (opp.accepts(w) && p1.accepts(a) && p2.accepts(b) && ((x == w) != (a == b)))
                        out[static_cast<std::size_t>(x)] = true;
    return out;
}

/// All conditions over palette [0, top].
inline std::vector<Condition> all_conditions(int top) {
    std::vector<Condition> out{Condition::any()};
    for (Color c = 0; c <= top; ++c) {
        out.push_back(Condition::exact(c));
        out.push_back(Condition::not_(c));
    }
    return out;
}

/// Every connected subset of the 3x3 grid, as boards.
inline std::vector<Board> connected_subsets_3x3(int num_colors = 3) {
    std::vector<Board> out;
    for (unsigned mask = 1; mask < (1u << 9); ++mask) {
        std::vector<CellCoord> cells;
        for (int k = 0; k < 9; ++k)
            if (mask & (1u << k)) cells.push_back({k % 3, k / 3});
        // flood fill
        std::set<CellCoord> all(cells.begin(), cells.end()), seen{cells.front()};
        std::vector<CellCoord> stack{cells.front()};
        while (!stack.empty()) {
            const CellCoord c = stack.back();
            stack.pop_back();
            for (Direction d : kDirections) {
                const CellCoord n = neighbour(c, d);
                if (all.contains(n) && seen.insert(n).second) stack.push_back(n);
            }
        }
        if (seen.size() == all.size()) out.push_back(Board::make(num_colors, cells));
    }
    return out;
}

}  // namespace brickwang::testing
