#pragma once

#include "brickwang/board.hpp"

#include <cstdint>
#include <optional>

namespace brickwang {

struct OracleResult {
    bool solvable = false;
    /// First tiling in enumeration order, when one exists.
    std::optional<Tiling> witness;
    /// Number of tilings; only filled when counting was requested.
    std::optional<std::uint64_t> count;
};

inline constexpr std::size_t kDefaultOracleEdgeLimit = 16;

/// Exhaustive search over colourings of the internal edges, taken in
/// lexicographic order of the edges sorted by (cell, direction). Throws
/// Error{TooLarge} past `edge_limit` internal edges and
/// Error{ConstraintIncomplete} when `boundary` is not total.
OracleResult brute_force(const Board& board, const BoundaryConstraints& boundary, bool count_all = false,
                         std::size_t edge_limit = kDefaultOracleEdgeLimit);

struct BetaCheckResult {
    bool all_solvable = true;
    std::optional<BoundaryConstraints> counterexample;
    std::uint64_t checked = 0;
};

/// Runs brute_force on every boundary colouring (lexicographic over the
/// sorted constrained legs) and stops at the first one with no tiling.
/// Throws Error{TooLarge} when num_colors^legs exceeds `beta_budget`.
BetaCheckResult exhaustive_beta_check(const Board& board, std::uint64_t beta_budget = 1'000'000,
                                      std::size_t edge_limit = kDefaultOracleEdgeLimit);

}  // namespace brickwang
