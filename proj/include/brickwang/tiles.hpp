#pragma once

#include "brickwang/board.hpp"
#include "brickwang/condition.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace brickwang {

/// Brick prototile membership: exactly one opposite pair (E,W) or (N,S)
/// carries equal colours. Crosses (both equal) and tiles with no straight
/// line (both unequal) are rejected.
constexpr bool brick_contains(const Tile& t) {
    return (t[0] == t[2]) != (t[1] == t[3]);
}

/// A finite prototile set W_k over colours [0, num_colors).
class ExplicitTileSet {
public:
    ExplicitTileSet(int num_colors, int arity, std::vector<std::vector<Color>> tiles);

    int num_colors() const noexcept { return num_colors_; }
    int arity() const noexcept { return arity_; }
    const std::vector<std::vector<Color>>& tiles() const noexcept { return tiles_; }

private:
    int num_colors_;
    int arity_;
    std::vector<std::vector<Color>> tiles_;
};

/// Every brick tile over [0, num_colors), in lexicographic order;
/// 2 n^2 (n-1) tuples for n colours.
ExplicitTileSet brick_tileset(int num_colors);

/// True iff, for every dropped position, each (k-1)-tuple over the colours is
/// the projection of some tile, i.e. any cell with one free leg can be tiled.
bool is_sequentially_permissive(const ExplicitTileSet& set);

/// Chooses among equally valid candidates. `deterministic` always takes the
/// first (lexicographically smallest); `seeded` picks uniformly.
class ChoicePolicy {
public:
    static ChoicePolicy deterministic() { return ChoicePolicy{}; }
    static ChoicePolicy seeded(std::uint64_t seed) { return ChoicePolicy{seed}; }

    bool is_deterministic() const noexcept { return !rng_.has_value(); }

    /// Index in [0, n); n must be positive.
    std::size_t pick(std::size_t n);

    /// A colour in [0, num_colors) that differs from every colour in
    /// `avoid`. Requires fewer than num_colors distinct colours to avoid.
    Color pick_colour_avoiding(int num_colors, std::initializer_list<Color> avoid);

private:
    ChoicePolicy() = default;
    explicit ChoicePolicy(std::uint64_t seed) : rng_(std::mt19937_64{seed}) {}

    std::optional<std::mt19937_64> rng_;
};

/// Colours worth trying for free legs: all colours mentioned by fixed legs
/// or conditions, plus the two smallest colours not mentioned. Validity of a
/// tile depends only on equalities among its legs and against those
/// colours, so any completion over the full palette has a counterpart here.
std::vector<Color> representative_palette(int num_colors, const std::array<std::optional<Color>, 4>& fixed,
                                          const std::array<Condition, 4>& conditions);

/// Brick tile agreeing with `fixed` whose every leg satisfies its condition,
/// searched over the representative palette; nullopt when none exists.
/// Conditions on fixed legs are checked too.
std::optional<Tile> try_complete_brick_tile(int num_colors, const std::array<std::optional<Color>, 4>& fixed,
                                            const std::array<Condition, 4>& conditions, ChoicePolicy& policy);

/// As above, throwing Error{NoCompletion} when no tile fits.
Tile complete_brick_tile(int num_colors, const std::array<std::optional<Color>, 4>& fixed,
                         const std::array<Condition, 4>& conditions, ChoicePolicy& policy);

/// Unconditioned convenience overload.
Tile complete_brick_tile(int num_colors, const std::array<std::optional<Color>, 4>& fixed, ChoicePolicy& policy);

}  // namespace brickwang
