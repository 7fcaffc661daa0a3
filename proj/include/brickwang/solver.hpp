#pragma once

#include "brickwang/board.hpp"
#include "brickwang/condition.hpp"
#include "brickwang/tiles.hpp"

#include <chrono>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace brickwang {

// ---------------------------------------------------------------------------
// Decision
// ---------------------------------------------------------------------------

/// Per component, in order of the component's smallest cell: true iff every
/// boundary colouring of that component can be extended, which for brick
/// tiles on a square grid holds exactly when the component has a cycle.
std::vector<bool> always_solvable_components(const Board& board);

/// All components always solvable (vacuously true for the empty board).
bool always_solvable(const Board& board);

// ---------------------------------------------------------------------------
// Cycle solver
// ---------------------------------------------------------------------------

/// Behaviour of a cycle cell once its two non-cycle legs are coloured.
struct CycleCellGate {
    enum class Kind : std::uint8_t {
        Wire,    // straight, side colours differ: out = in
        SGate,   // straight, side colours equal: out != in
        Corner,  // in = a => out != b, in != a => out = b
    };
    Kind kind = Kind::Wire;
    Color a = 0;  // colour opposite the incoming leg (Corner only)
    Color b = 0;  // colour opposite the outgoing leg (Corner only)

    /// Whether (in, out) is admissible for this gate.
    bool allows(Color in, Color out) const;

    friend bool operator==(const CycleCellGate&, const CycleCellGate&) = default;
};

/// A cell on a cycle: which legs lead to the previous and next cells, and the
/// colours of the other two legs (entries at `in` and `out` are ignored).
struct CycleCell {
    Direction in = Direction::W;
    Direction out = Direction::E;
    Tile colours{};
};

CycleCellGate classify_gate(const CycleCell& cell);

/// Which branch of the case analysis produced a cycle colouring.
enum class CycleCase : std::uint8_t {
    SGatePresent,     // some straight cell with equal side colours
    CornerMismatch,   // all corners, some consecutive pair with b != c
    CornerChain,      // all corners, b_i == a_{i+1} throughout
    WiresOnly,        // no gates left after contracting wires
};

std::string_view to_string(CycleCase c);

struct CycleSolution {
    /// edge_colours[k] is the colour of the edge from cell k to cell k+1
    /// (cyclically), i.e. out(k) = in(k+1).
    std::vector<Color> edge_colours;
    CycleCase branch = CycleCase::WiresOnly;
};

/// Colours the cycle edges so every cell is a brick tile. Always succeeds
/// for num_colors >= 3 and an even number of corners; an odd corner count
/// raises Error{InternalInvariant}.
CycleSolution solve_cycle(std::span<const CycleCell> cycle, int num_colors, ChoicePolicy& policy);

// ---------------------------------------------------------------------------
// Tree solver
// ---------------------------------------------------------------------------

/// Weakest condition on an output leg given the conditions on the opposite
/// leg and on the two perpendicular legs.
Condition infer_condition(const Condition& opposite, const Condition& perp1, const Condition& perp2);

// ---------------------------------------------------------------------------
// Full pipeline
// ---------------------------------------------------------------------------

struct SolveStats {
    std::size_t cells = 0;
    /// Cells that received their final tile; equals `cells` on success.
    std::size_t cells_visited = 0;
    /// Calls into the brick-tile completion search.
    std::size_t completions = 0;
    /// Condition inferences performed by the tree solver.
    std::size_t propagations = 0;
    /// Cells pushed by traversals (cycle search, peeling, tree ordering).
    std::size_t traversal_steps = 0;
    /// Sum of the lengths of the cycles used, 0 for pure trees.
    std::size_t cycle_length = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Root of a tree component together with the conditions propagated onto
/// its legs (boundary legs appear as Exact), none of which a brick tile can
/// meet simultaneously.
struct UnsolvableWitness {
    CellCoord root;
    std::array<Condition, 4> conditions;
};

std::string describe(const UnsolvableWitness& w);

struct SolveReport {
    std::variant<Tiling, UnsolvableWitness> status;
    SolveStats stats;

    bool solved() const { return std::holds_alternative<Tiling>(status); }
    const Tiling& tiling() const { return std::get<Tiling>(status); }
    const UnsolvableWitness& witness() const { return std::get<UnsolvableWitness>(status); }
};

/// Solves every component: cyclic components by peeling the rest of the
/// component onto a cycle and solving the cycle, tree components by
/// condition propagation. Throws Error{ConstraintIncomplete} unless
/// `boundary` colours every constrained leg with an in-range colour.
SolveReport solve(const Board& board, const BoundaryConstraints& boundary, ChoicePolicy& policy);

/// Tree-only entry point; throws Error{NotATree} if a component has a cycle.
SolveReport solve_tree(const Board& board, const BoundaryConstraints& boundary, ChoicePolicy& policy);

/// Boundary colouring of a nonempty tree board that admits no tiling.
/// Every non-root cell forces the colour of the edge to its parent; the
/// root ends up with both opposite pairs equal.
BoundaryConstraints find_unsolvable_beta(const Board& tree);

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct Violation {
    enum class Kind : std::uint8_t {
        MissingCell,
        ExtraCell,
        ColorOutOfRange,
        NotBrick,
        EdgeMismatch,
        BoundaryMismatch,
        PretiledMismatch,
    };
    Kind kind;
    CellCoord cell;
    std::optional<Leg> leg;
    std::optional<Leg> other;
    std::string message;
};

std::string_view to_string(Violation::Kind k);

struct ValidationResult {
    bool valid = true;
    std::vector<Violation> violations;
};

/// Checks coverage, colour range, the brick predicate, shared-edge agreement
/// and agreement with `boundary` on constrained legs. Constrained legs with
/// no boundary entry are reported as BoundaryMismatch.
ValidationResult validate(const Board& board, const BoundaryConstraints& boundary, const Tiling& tiling);

}  // namespace brickwang
