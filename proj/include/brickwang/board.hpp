#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace brickwang {

using Color = int;

/// Leg order of a cell. The ordinals are significant: tiles are stored as
/// (E, N, W, S) tuples.
enum class Direction : std::uint8_t { E = 0, N = 1, W = 2, S = 3 };

inline constexpr std::array<Direction, 4> kDirections{Direction::E, Direction::N, Direction::W,
                                                      Direction::S};

constexpr int ordinal(Direction d) { return static_cast<int>(d); }
constexpr Direction direction_from_ordinal(int k) { return static_cast<Direction>(k & 3); }
constexpr Direction opposite(Direction d) { return direction_from_ordinal(ordinal(d) + 2); }
/// The two directions perpendicular to `d`, in ordinal order.
constexpr std::array<Direction, 2> perpendicular(Direction d) {
    return ordinal(d) % 2 == 0 ? std::array{Direction::N, Direction::S}
                               : std::array{Direction::E, Direction::W};
}

char to_char(Direction d);
std::optional<Direction> direction_from_char(char c);

/// Grid cell; `i` is the column (grows east), `j` the row (grows north).
/// Cells order lexicographically by (j, i), which is the traversal order
/// used everywhere for determinism.
struct CellCoord {
    int i = 0;
    int j = 0;

    friend constexpr bool operator==(const CellCoord&, const CellCoord&) = default;
    friend constexpr std::strong_ordering operator<=>(const CellCoord& a, const CellCoord& b) {
        if (auto c = a.j <=> b.j; c != 0) return c;
        return a.i <=> b.i;
    }
};

constexpr CellCoord neighbour(CellCoord c, Direction d) {
    switch (d) {
        case Direction::E: return {c.i + 1, c.j};
        case Direction::N: return {c.i, c.j + 1};
        case Direction::W: return {c.i - 1, c.j};
        case Direction::S: return {c.i, c.j - 1};
    }
    return c;
}

struct CellHash {
    std::size_t operator()(const CellCoord& c) const noexcept {
        auto x = static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.i)) << 32 |
                 static_cast<std::uint32_t>(c.j);
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

struct Leg {
    CellCoord cell;
    Direction dir = Direction::E;

    friend constexpr bool operator==(const Leg&, const Leg&) = default;
    friend constexpr std::strong_ordering operator<=>(const Leg& a, const Leg& b) {
        if (auto c = a.cell <=> b.cell; c != 0) return c;
        return ordinal(a.dir) <=> ordinal(b.dir);
    }
};

std::string to_string(CellCoord c);
std::string to_string(const Leg& leg);

/// Colours of a cell's legs in (E, N, W, S) order.
using Tile = std::array<Color, 4>;

/// Per-cell tiles. Keys are ordered (j, i).
using Tiling = std::map<CellCoord, Tile>;

/// Colours on constrained legs. Two legs that touch the same hole corner
/// are distinct keys and may carry different colours.
using BoundaryConstraints = std::map<Leg, Color>;

inline constexpr int kNoNeighbour = -1;

/// A finite square-grid board. Immutable after construction; the cell list
/// is kept sorted by (j, i) and every cell knows the index of its four
/// neighbours (or kNoNeighbour when the leg is constrained).
class Board {
public:
    Board() = default;

    /// Throws Error{TooFewColors} when num_colors < 3 and Error{DuplicateCell}
    /// when a coordinate repeats. An empty cell list is valid.
    static Board make(int num_colors, std::vector<CellCoord> cells);

    int num_colors() const noexcept { return num_colors_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }
    std::span<const CellCoord> cells() const noexcept { return cells_; }
    const CellCoord& cell(std::size_t index) const { return cells_[index]; }

    bool contains(CellCoord c) const { return index_.contains(c); }
    std::optional<std::size_t> index_of(CellCoord c) const;

    /// Index of the neighbour through leg `d`, or kNoNeighbour.
    int neighbour(std::size_t index, Direction d) const {
        return neighbours_[index * 4 + static_cast<std::size_t>(ordinal(d))];
    }
    bool is_internal(std::size_t index, Direction d) const {
        return neighbour(index, d) != kNoNeighbour;
    }
    bool is_constrained(const Leg& leg) const;

    std::size_t internal_edge_count() const noexcept { return internal_edges_; }
    std::size_t constrained_leg_count() const noexcept { return 4 * cells_.size() - 2 * internal_edges_; }

private:
    int num_colors_ = 3;
    std::vector<CellCoord> cells_;
    std::unordered_map<CellCoord, std::size_t, CellHash> index_;
    std::vector<int> neighbours_;
    std::size_t internal_edges_ = 0;
};

struct LegPartition {
    /// Each internal edge once, as ((v, E), (v+(1,0), W)) or ((v, N), (v+(0,1), S)).
    std::vector<std::pair<Leg, Leg>> internal_edges;
    std::vector<Leg> constrained;
};

LegPartition classify_legs(const Board& board);

/// Sub-board on `kept`, with the constraints it inherits: legs facing removed
/// cells take their colour from `removed_tiles`, legs facing outside keep
/// their colour from `boundary`.
///
/// `removed_tiles` must cover exactly the removed cells, be brick-valid and
/// edge-consistent among themselves, and agree with any boundary entry on
/// their own constrained legs; otherwise Error{InvalidPartial}. A missing
/// boundary colour for a kept cell raises Error{ConstraintIncomplete}.
std::pair<Board, BoundaryConstraints> restrict_board(const Board& board,
                                                     const std::set<CellCoord>& kept,
                                                     const Tiling& removed_tiles,
                                                     const BoundaryConstraints& boundary);

/// 4-connected components in order of their smallest cell.
std::vector<Board> connected_components(const Board& board);

/// Entries of `boundary` that belong to constrained legs of `component`.
BoundaryConstraints constraints_for(const Board& component, const BoundaryConstraints& boundary);

/// Depth-first traversal order and tree shape. Roots are taken in (j, i)
/// order and neighbours are scanned E, N, W, S.
struct DfsForest {
    std::vector<std::size_t> preorder;
    /// Direction from each cell to its DFS parent; nullopt for roots.
    std::vector<std::optional<Direction>> parent_dir;
    std::vector<std::size_t> component;  // component id per cell
    std::size_t component_count = 0;
};

DfsForest dfs_forest(const Board& board);

/// Cycle closed by the first back edge met by the depth-first traversal of
/// the component containing `start` (the whole board when omitted, in which
/// case each component is tried in turn). Indices are in cycle order, the
/// closing edge runs from the last back to the first.
std::optional<std::vector<std::size_t>> find_cycle_indices(const Board& board,
                                                           std::optional<std::size_t> start = {});

std::optional<std::vector<CellCoord>> find_cycle(const Board& board);

namespace detail {
/// find_cycle_indices for the component of `root`, sharing a visited buffer
/// (0 = unseen) across calls so components can be searched one by one.
std::optional<std::vector<std::size_t>> cycle_from(const Board& board, std::size_t root,
                                                   std::vector<char>& visited);
}  // namespace detail

}  // namespace brickwang
