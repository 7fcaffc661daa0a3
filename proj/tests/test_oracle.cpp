#include "brickwang/error.hpp"
#include "brickwang/oracle.hpp"
#include "brickwang/solver.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace brickwang;
using namespace brickwang::testing;

TEST_CASE("brute_force on single cells") {
    const Board one = Board::make(3, {{0, 0}});
    BoundaryConstraints beta{{{{0, 0}, Direction::E}, 0},
                             {{{0, 0}, Direction::N}, 1},
                             {{{0, 0}, Direction::W}, 0},
                             {{{0, 0}, Direction::S}, 2}};
    const auto r = brute_force(one, beta, true);
    CHECK(r.solvable);
    CHECK(r.count == 1u);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->at({0, 0}) == Tile{0, 1, 0, 2});

    const auto zero = brute_force(one, uniform_beta(one, 0), true);
    CHECK_FALSE(zero.solvable);
    CHECK(zero.count == 0u);
    CHECK_FALSE(zero.witness.has_value());
}

TEST_CASE("brute_force witnesses validate and come first in edge order") {
    const Board square = rect(2, 2);
    const auto beta = uniform_beta(square, 0);
    const auto r = brute_force(square, beta, true);
    REQUIRE(r.solvable);
    CHECK(r.count == 8u);
    CHECK(validate(square, beta, *r.witness).valid);
    const auto first = brute_force(square, beta);
    CHECK(first.witness == r.witness);
    CHECK_FALSE(first.count.has_value());
}

TEST_CASE("brute_force limits") {
    const Board big = rect(4, 4);  // 24 internal edges
    try {
        (void)brute_force(big, uniform_beta(big, 0));
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
    CHECK_NOTHROW(brute_force(rect(3, 3), uniform_beta(rect(3, 3), 0), false, 12));
    auto beta = uniform_beta(rect(2, 1), 0);
    beta.erase(beta.begin());
    CHECK_THROWS_AS(brute_force(rect(2, 1), beta), Error);
}

TEST_CASE("exhaustive_beta_check") {
    const auto square = exhaustive_beta_check(rect(2, 2));
    CHECK(square.all_solvable);
    CHECK(square.checked == 6561u);

    const auto strip = exhaustive_beta_check(rect(2, 1));
    CHECK_FALSE(strip.all_solvable);
    REQUIRE(strip.counterexample.has_value());
    CHECK_FALSE(brute_force(rect(2, 1), *strip.counterexample).solvable);

    const auto empty = exhaustive_beta_check(Board::make(3, {}));
    CHECK(empty.all_solvable);
    CHECK(empty.checked == 1u);

    CHECK_THROWS_AS(exhaustive_beta_check(rect(5, 5)), Error);
}
