#include "brickwang/oracle.hpp"

#include "brickwang/error.hpp"
#include "brickwang/tiles.hpp"

namespace brickwang {

namespace {

/// A leg is either a fixed boundary colour or a reference to an edge variable.
struct LegSource {
    bool is_edge = false;
    int value = 0;  // colour, or edge index
};

class Enumerator {
public:
    Enumerator(const Board& board, const BoundaryConstraints& boundary, bool count_all)
        : board_(board), count_all_(count_all), sources_(board.size() * 4) {
        const LegPartition legs = classify_legs(board);
        edges_ = legs.internal_edges.size();
        colours_.assign(edges_, 0);
        for (std::size_t e = 0; e < edges_; ++e) {
            for (const Leg& leg : {legs.internal_edges[e].first, legs.internal_edges[e].second}) {
                sources_[slot(leg)] = {true, static_cast<int>(e)};
            }
        }
        for (const Leg& leg : legs.constrained) {
            auto it = boundary.find(leg);
            if (it == boundary.end()) {
                throw Error(ErrorCode::ConstraintIncomplete, "no boundary colour for " + to_string(leg));
            }
            sources_[slot(leg)] = {false, it->second};
        }

        // Each cell is checked right after the last of its edges is assigned.
        completes_at_.resize(edges_);
        for (std::size_t k = 0; k < board.size(); ++k) {
            int last = -1;
            for (int d = 0; d < 4; ++d) {
                const LegSource& s = sources_[k * 4 + static_cast<std::size_t>(d)];
                if (s.is_edge) last = std::max(last, s.value);
            }
            if (last < 0) {
                always_checked_.push_back(k);
            } else {
                completes_at_[static_cast<std::size_t>(last)].push_back(k);
            }
        }
    }

    OracleResult run() {
        OracleResult r;
        for (std::size_t k : always_checked_) {
            if (!cell_ok(k)) {
                if (count_all_) r.count = 0;
                return r;
            }
        }
        search(0);
        r.solvable = found_ > 0;
        if (r.solvable) r.witness = std::move(witness_);
        if (count_all_) r.count = found_;
        return r;
    }

private:
    std::size_t slot(const Leg& leg) const {
        return *board_.index_of(leg.cell) * 4 + static_cast<std::size_t>(ordinal(leg.dir));
    }

    Color colour(std::size_t cell, int d) const {
        const LegSource& s = sources_[cell * 4 + static_cast<std::size_t>(d)];
        return s.is_edge ? colours_[static_cast<std::size_t>(s.value)] : s.value;
    }

    bool cell_ok(std::size_t cell) const {
        return brick_contains({colour(cell, 0), colour(cell, 1), colour(cell, 2), colour(cell, 3)});
    }

    // Returns true to stop the search.
    bool search(std::size_t e) {
        if (e == edges_) {
            if (found_++ == 0) {
                for (std::size_t k = 0; k < board_.size(); ++k) {
                    witness_.emplace_hint(witness_.end(), board_.cell(k),
                                          Tile{colour(k, 0), colour(k, 1), colour(k, 2), colour(k, 3)});
                }
            }
            return !count_all_;
        }
        for (Color c = 0; c < board_.num_colors(); ++c) {
            colours_[e] = c;
            bool ok = true;
            for (std::size_t k : completes_at_[e]) {
                if (!cell_ok(k)) {
                    ok = false;
                    break;
                }
            }
            if (ok && search(e + 1)) return true;
        }
        return false;
    }

    const Board& board_;
    bool count_all_;
    std::vector<LegSource> sources_;
    std::size_t edges_ = 0;
    std::vector<Color> colours_;
    std::vector<std::vector<std::size_t>> completes_at_;
    std::vector<std::size_t> always_checked_;
    std::uint64_t found_ = 0;
    Tiling witness_;
};

}  // namespace

OracleResult brute_force(const Board& board, const BoundaryConstraints& boundary, bool count_all,
                         std::size_t edge_limit) {
    if (board.internal_edge_count() > edge_limit) {
        throw Error(ErrorCode::TooLarge, "board has " + std::to_string(board.internal_edge_count()) +
                                             " internal edges, oracle limit is " + std::to_string(edge_limit));
    }
    return Enumerator(board, boundary, count_all).run();
}

BetaCheckResult exhaustive_beta_check(const Board& board, std::uint64_t beta_budget, std::size_t edge_limit) {
    const std::vector<Leg> legs = classify_legs(board).constrained;
    const auto n = static_cast<std::uint64_t>(board.num_colors());
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < legs.size(); ++k) {
        if (total > beta_budget / n) {
            throw Error(ErrorCode::TooLarge, std::to_string(legs.size()) + " constrained legs exceed the budget of " +
                                                 std::to_string(beta_budget) + " boundary colourings");
        }
        total *= n;
    }

    BetaCheckResult result;
    std::vector<Color> digits(legs.size(), 0);
    BoundaryConstraints beta;
    for (const Leg& leg : legs) beta.emplace(leg, 0);
    while (true) {
        ++result.checked;
        if (!brute_force(board, beta, false, edge_limit).solvable) {
            result.all_solvable = false;
            result.counterexample = beta;
            return result;
        }
        // Last leg varies fastest.
        std::size_t k = legs.size();
        while (k > 0) {
            --k;
            if (++digits[k] < board.num_colors()) {
                beta[legs[k]] = digits[k];
                break;
            }
            digits[k] = 0;
            beta[legs[k]] = 0;
            if (k == 0) return result;
        }
        if (legs.empty()) return result;
    }
}

}  // namespace brickwang
