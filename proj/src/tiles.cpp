#include "brickwang/tiles.hpp"

#include "brickwang/error.hpp"

#include <algorithm>

namespace brickwang {

std::string to_string(const Condition& c) {
    switch (c.kind) {
        case Condition::Kind::Exact: return "=" + std::to_string(c.color);
        case Condition::Kind::Not: return "!" + std::to_string(c.color);
        case Condition::Kind::Any: return "*";
    }
    return "*";
}

ExplicitTileSet::ExplicitTileSet(int num_colors, int arity, std::vector<std::vector<Color>> tiles)
    : num_colors_(num_colors), arity_(arity), tiles_(std::move(tiles)) {
    if (num_colors < 1 || arity < 1) {
        throw Error(ErrorCode::Schema, "tile set needs a positive colour count and arity");
    }
    for (const auto& t : tiles_) {
        if (static_cast<int>(t.size()) != arity_) {
            throw Error(ErrorCode::Schema, "tile of arity " + std::to_string(t.size()) + " in a set of arity " +
                                               std::to_string(arity_));
        }
        for (Color c : t) {
            if (c < 0 || c >= num_colors_) {
                throw Error(ErrorCode::ColorOutOfRange, "tile colour " + std::to_string(c) + " out of range");
            }
        }
    }
}

ExplicitTileSet brick_tileset(int num_colors) {
    std::vector<std::vector<Color>> tiles;
    for (Color e = 0; e < num_colors; ++e)
        for (Color n = 0; n < num_colors; ++n)
            for (Color w = 0; w < num_colors; ++w)
                for (Color s = 0; s < num_colors; ++s)
                    if (brick_contains({e, n, w, s})) tiles.push_back({e, n, w, s});
    return ExplicitTileSet(num_colors, 4, std::move(tiles));
}

bool is_sequentially_permissive(const ExplicitTileSet& set) {
    const int k = set.arity();
    const auto n = static_cast<std::size_t>(set.num_colors());
    std::size_t projections = 1;
    for (int p = 0; p + 1 < k; ++p) projections *= n;

    std::vector<char> hit(projections);
    for (int drop = 0; drop < k; ++drop) {
        std::fill(hit.begin(), hit.end(), 0);
        std::size_t distinct = 0;
        for (const auto& t : set.tiles()) {
            std::size_t code = 0;
            for (int p = 0; p < k; ++p) {
                if (p != drop) code = code * n + static_cast<std::size_t>(t[static_cast<std::size_t>(p)]);
            }
            if (!hit[code]) {
                hit[code] = 1;
                ++distinct;
            }
        }
        if (distinct != projections) return false;
    }
    return true;
}

std::size_t ChoicePolicy::pick(std::size_t n) {
    if (!rng_ || n <= 1) return 0;
    std::uniform_int_distribution<std::size_t> dist(0, n - 1);
    return dist(*rng_);
}

Color ChoicePolicy::pick_colour_avoiding(int num_colors, std::initializer_list<Color> avoid) {
    std::vector<Color> allowed;
    allowed.reserve(static_cast<std::size_t>(num_colors));
    for (Color c = 0; c < num_colors; ++c) {
        if (std::find(avoid.begin(), avoid.end(), c) == avoid.end()) allowed.push_back(c);
    }
    if (allowed.empty()) throw Error(ErrorCode::InternalInvariant, "no colour left to choose");
    return allowed[pick(allowed.size())];
}

std::vector<Color> representative_palette(int num_colors, const std::array<std::optional<Color>, 4>& fixed,
                                          const std::array<Condition, 4>& conditions) {
    std::vector<Color> palette;
    palette.reserve(10);
    auto mention = [&](Color c) {
        if (c >= 0 && c < num_colors) palette.push_back(c);
    };
    for (const auto& f : fixed)
        if (f) mention(*f);
    for (const auto& c : conditions)
        if (!c.is_any()) mention(c.color);
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

    const std::size_t mentioned = palette.size();
    int fresh = 0;
    for (Color c = 0; c < num_colors && fresh < 2; ++c) {
        if (!std::binary_search(palette.begin(), palette.begin() + static_cast<std::ptrdiff_t>(mentioned), c)) {
            palette.push_back(c);
            ++fresh;
        }
    }
    std::sort(palette.begin(), palette.end());
    return palette;
}

std::optional<Tile> try_complete_brick_tile(int num_colors, const std::array<std::optional<Color>, 4>& fixed,
                                            const std::array<Condition, 4>& conditions, ChoicePolicy& policy) {
    Tile tile{};
    std::array<int, 4> free_legs{};
    int free_count = 0;
    for (int d = 0; d < 4; ++d) {
        if (fixed[d]) {
            if (!conditions[d].accepts(*fixed[d])) return std::nullopt;
            tile[d] = *fixed[d];
        } else {
            free_legs[free_count++] = d;
        }
    }
    if (free_count == 0) {
        if (brick_contains(tile)) return tile;
        return std::nullopt;
    }

    const std::vector<Color> palette = representative_palette(num_colors, fixed, conditions);
    const std::size_t r = palette.size();
    std::array<std::size_t, 4> digit{};
    std::vector<Tile> candidates;

    // Odometer over palette^free_count; the first free leg is the most
    // significant digit so candidates come out in lexicographic order.
    while (true) {
        bool ok = true;
        for (int f = 0; f < free_count; ++f) {
            const Color c = palette[digit[f]];
            if (!conditions[free_legs[f]].accepts(c)) {
                ok = false;
                break;
            }
            tile[free_legs[f]] = c;
        }
        if (ok && brick_contains(tile)) {
            if (policy.is_deterministic()) return tile;
            candidates.push_back(tile);
        }
        int f = free_count - 1;
        while (f >= 0 && ++digit[f] == r) digit[f--] = 0;
        if (f < 0) break;
    }
    if (candidates.empty()) return std::nullopt;
    return candidates[policy.pick(candidates.size())];
}

Tile complete_brick_tile(int num_colors, const std::array<std::optional<Color>, 4>& fixed,
                         const std::array<Condition, 4>& conditions, ChoicePolicy& policy) {
    if (auto t = try_complete_brick_tile(num_colors, fixed, conditions, policy)) return *t;
    std::string what = "no brick tile completes";
    for (int d = 0; d < 4; ++d) {
        what += ' ';
        what += to_char(direction_from_ordinal(d));
        what += fixed[d] ? "=" + std::to_string(*fixed[d]) : "?" + to_string(conditions[d]);
    }
    throw Error(ErrorCode::NoCompletion, what);
}

Tile complete_brick_tile(int num_colors, const std::array<std::optional<Color>, 4>& fixed, ChoicePolicy& policy) {
    return complete_brick_tile(num_colors, fixed, {Condition::any(), Condition::any(), Condition::any(), Condition::any()},
                               policy);
}

}  // namespace brickwang
