#include "brickwang/error.hpp"
#include "brickwang/tiles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace brickwang;
using namespace brickwang::testing;

TEST_CASE("brick_contains") {
    CHECK(brick_contains({0, 1, 0, 2}));
    CHECK_FALSE(brick_contains({0, 1, 0, 1}));
    CHECK_FALSE(brick_contains({0, 1, 2, 0}));
    CHECK(brick_contains({2, 1, 0, 1}));
}

TEST_CASE("brick_contains depends only on the two equality bits") {
    for (Color e = 0; e < 4; ++e)
        for (Color n = 0; n < 4; ++n)
            for (Color w = 0; w < 4; ++w)
                for (Color s = 0; s < 4; ++s) {
                    const bool v = brick_contains({e, n, w, s});
                    CHECK(v == brick_contains({w, n, e, s}));
                    CHECK(v == brick_contains({e, s, w, n}));
                    CHECK(v == brick_contains({w, s, e, n}));
                }
}

TEST_CASE("is_sequentially_permissive") {
    CHECK(is_sequentially_permissive(ExplicitTileSet(2, 2, {{0, 0}, {1, 1}})));
    CHECK_FALSE(is_sequentially_permissive(ExplicitTileSet(2, 2, {{0, 0}})));
    for (int n = 3; n <= 5; ++n) {
        const ExplicitTileSet bricks = brick_tileset(n);
        CHECK(bricks.tiles().size() == static_cast<std::size_t>(2 * n * n * (n - 1)));
        CHECK(is_sequentially_permissive(bricks));
    }
    CHECK(brick_tileset(3).tiles().size() == 36);
    CHECK_THROWS_AS(ExplicitTileSet(3, 2, {{0, 5}}), Error);
    CHECK_THROWS_AS(ExplicitTileSet(3, 2, {{0, 1, 2}}), Error);
}

TEST_CASE("any three legs extend to a brick tile") {
    for (int n = 3; n <= 5; ++n) {
        for (int free_leg = 0; free_leg < 4; ++free_leg)
            for (Color a = 0; a < n; ++a)
                for (Color b = 0; b < n; ++b)
                    for (Color c = 0; c < n; ++c) {
                        bool found = false;
                        for (Color x = 0; x < n && !found; ++x) {
                            Tile t{};
                            const Color given[3] = {a, b, c};
                            for (int d = 0, k = 0; d < 4; ++d) t[d] = d == free_leg ? x : given[k++];
                            found = brick_contains(t);
                        }
                        CHECK(found);
                    }
    }
}

TEST_CASE("complete_brick_tile examples") {
    auto policy = ChoicePolicy::deterministic();
    using F = std::array<std::optional<Color>, 4>;
    CHECK(complete_brick_tile(3, F{0, 1, std::nullopt, 2}, policy) == Tile{0, 1, 0, 2});
    CHECK(complete_brick_tile(3, F{0, 1, 0, std::nullopt}, policy) == Tile{0, 1, 0, 0});
    try {
        (void)complete_brick_tile(3, F{0, 0, 0, std::nullopt},
                                  {Condition::any(), Condition::any(), Condition::any(), Condition::exact(0)}, policy);
        FAIL("expected NoCompletion");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoCompletion);
    }
}

TEST_CASE("representative palette") {
    using F = std::array<std::optional<Color>, 4>;
    const std::array<Condition, 4> any{Condition::any(), Condition::any(), Condition::any(), Condition::any()};
    CHECK(representative_palette(3, F{0, 1, std::nullopt, 2}, any) == std::vector<Color>{0, 1, 2});
    CHECK(representative_palette(7, F{4, std::nullopt, std::nullopt, std::nullopt}, any) == std::vector<Color>{0, 1, 4});
    CHECK(representative_palette(7, F{}, {Condition::not_(0), Condition::exact(5), Condition::any(), Condition::any()}) ==
          std::vector<Color>{0, 1, 2, 5});
}

namespace {

/// Every way to specify one leg: fixed to a colour, or free under a condition.
struct LegSpec {
    std::optional<Color> fixed;
    Condition cond;
};

std::vector<LegSpec> leg_specs(int n) {
    std::vector<LegSpec> out;
    for (Color c = 0; c < n; ++c) out.push_back({c, Condition::any()});
    for (const Condition& c : all_conditions(n - 1)) out.push_back({std::nullopt, c});
    return out;
}

bool completes_over_full_palette(int n, const std::array<std::optional<Color>, 4>& fixed,
                                 const std::array<Condition, 4>& cond) {
    for (Color e = 0; e < n; ++e)
        for (Color no = 0; no < n; ++no)
            for (Color w = 0; w < n; ++w)
                for (Color s = 0; s < n; ++s) {
                    const Tile t{e, no, w, s};
                    bool ok = brick_contains(t);
                    for (int d = 0; d < 4 && ok; ++d) ok = (fixed[d] ? *fixed[d] == t[d] : true) && cond[d].accepts(t[d]);
                    if (ok) return true;
                }
    return false;
}

}  // namespace

TEST_CASE("representative palette search agrees with full enumeration") {
    for (int n = 3; n <= 5; ++n) {
        const auto specs = leg_specs(n);
        std::size_t checked = 0, mismatches = 0;
        for (const auto& a : specs)
            for (const auto& b : specs)
                for (const auto& c : specs)
                    for (const auto& d : specs) {
                        const std::array<std::optional<Color>, 4> fixed{a.fixed, b.fixed, c.fixed, d.fixed};
                        const std::array<Condition, 4> cond{a.cond, b.cond, c.cond, d.cond};
                        if (fixed[0] && fixed[1] && fixed[2] && fixed[3]) continue;
                        auto policy = ChoicePolicy::deterministic();
                        const auto tile = try_complete_brick_tile(n, fixed, cond, policy);
                        const bool expected = completes_over_full_palette(n, fixed, cond);
                        ++checked;
                        if (tile.has_value() != expected) ++mismatches;
                        if (tile) {
                            bool ok = brick_contains(*tile);
                            for (int k = 0; k < 4; ++k) ok = ok && cond[k].accepts((*tile)[k]) && (!fixed[k] || *fixed[k] == (*tile)[k]);
                            if (!ok) ++mismatches;
                        }
                    }
        CHECK(checked > 0);
        CHECK(mismatches == 0);
    }
}

TEST_CASE("seeded completion is valid and reproducible") {
    using F = std::array<std::optional<Color>, 4>;
    auto p1 = ChoicePolicy::seeded(42);
    auto p2 = ChoicePolicy::seeded(42);
    std::set<Tile> seen;
    for (int k = 0; k < 200; ++k) {
        const Tile a = complete_brick_tile(5, F{std::nullopt, 1, std::nullopt, std::nullopt}, p1);
        const Tile b = complete_brick_tile(5, F{std::nullopt, 1, std::nullopt, std::nullopt}, p2);
        CHECK(a == b);
        CHECK(brick_contains(a));
        CHECK(a[1] == 1);
        seen.insert(a);
    }
    CHECK(seen.size() > 1);
}

TEST_CASE("condition negation") {
    CHECK(Condition::exact(2).negated() == Condition::not_(2));
    CHECK(Condition::not_(2).negated() == Condition::any());
    CHECK(Condition::any().negated() == Condition::any());
    CHECK(to_string(Condition::exact(3)) == "=3");
    CHECK(to_string(Condition::not_(1)) == "!1");
    CHECK(to_string(Condition::any()) == "*");
}
