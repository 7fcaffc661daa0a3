#pragma once

#include "brickwang/solver.hpp"

#include <vector>

namespace brickwang::detail {

inline constexpr Color kUnset = -1;

/// Mutable leg colouring shared by the peeling, cycle and tree passes. A
/// shared edge is stored on both of its legs and always written together.
class Workspace {
public:
    Workspace(const Board& board, ChoicePolicy& policy, SolveStats& stats)
        : board_(board), policy_(policy), stats_(stats), legs_(board.size() * 4, kUnset), placed_(board.size(), 0) {}

    const Board& board() const { return board_; }
    ChoicePolicy& policy() { return policy_; }
    SolveStats& stats() { return stats_; }
    int num_colors() const { return board_.num_colors(); }

    Color leg(std::size_t cell, Direction d) const { return legs_[cell * 4 + static_cast<std::size_t>(ordinal(d))]; }
    bool placed(std::size_t cell) const { return placed_[cell] != 0; }

    void set_leg(std::size_t cell, Direction d, Color c) {
        legs_[cell * 4 + static_cast<std::size_t>(ordinal(d))] = c;
        const int w = board_.neighbour(cell, d);
        if (w != kNoNeighbour) legs_[static_cast<std::size_t>(w) * 4 + static_cast<std::size_t>(ordinal(opposite(d)))] = c;
    }

    std::array<std::optional<Color>, 4> fixed_legs(std::size_t cell) const {
        std::array<std::optional<Color>, 4> out;
        for (int d = 0; d < 4; ++d) {
            const Color c = legs_[cell * 4 + static_cast<std::size_t>(d)];
            if (c != kUnset) out[d] = c;
        }
        return out;
    }

    void place(std::size_t cell, const Tile& tile) {
        for (Direction d : kDirections) set_leg(cell, d, tile[ordinal(d)]);
        placed_[cell] = 1;
        ++stats_.cells_visited;
    }

    Tile tile_of(std::size_t cell) const {
        return {leg(cell, Direction::E), leg(cell, Direction::N), leg(cell, Direction::W), leg(cell, Direction::S)};
    }

    /// Loads boundary colours; throws on missing, extra or out-of-range entries.
    void load_boundary(const BoundaryConstraints& boundary);

    Tiling extract_tiling() const;

private:
    const Board& board_;
    ChoicePolicy& policy_;
    SolveStats& stats_;
    std::vector<Color> legs_;
    std::vector<char> placed_;
};

/// Tree solve of the component whose DFS preorder is `order`. Returns the
/// witness when the root cannot meet its propagated conditions.
std::optional<UnsolvableWitness> solve_tree_component(Workspace& ws, std::span<const std::size_t> preorder,
                                                      const std::vector<std::optional<Direction>>& parent_dir);

}  // namespace brickwang::detail
