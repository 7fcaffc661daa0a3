#include "brickwang/error.hpp"
#include "brickwang/solver.hpp"

namespace brickwang {

bool CycleCellGate::allows(Color in, Color out) const {
    switch (kind) {
        case Kind::Wire: return in == out;
        case Kind::SGate: return in != out;
        case Kind::Corner: return (in == a) != (out == b);
    }
    return false;
}

CycleCellGate classify_gate(const CycleCell& cell) {
    if (cell.in == opposite(cell.out)) {
        const auto side = perpendicular(cell.in);
        const bool equal = cell.colours[ordinal(side[0])] == cell.colours[ordinal(side[1])];
        return {equal ? CycleCellGate::Kind::SGate : CycleCellGate::Kind::Wire, 0, 0};
    }
    return {CycleCellGate::Kind::Corner, cell.colours[ordinal(opposite(cell.in))],
            cell.colours[ordinal(opposite(cell.out))]};
}

std::string_view to_string(CycleCase c) {
    switch (c) {
        case CycleCase::SGatePresent: return "sgate";
        case CycleCase::CornerMismatch: return "corner-mismatch";
        case CycleCase::CornerChain: return "corner-chain";
        case CycleCase::WiresOnly: return "wires-only";
    }
    return "unknown";
}

namespace {

Color forward(const CycleCellGate& g, Color in, int num_colors, ChoicePolicy& policy) {
    switch (g.kind) {
        case CycleCellGate::Kind::Wire: return in;
        case CycleCellGate::Kind::SGate: return policy.pick_colour_avoiding(num_colors, {in});
        case CycleCellGate::Kind::Corner:
            return in == g.a ? policy.pick_colour_avoiding(num_colors, {g.b}) : g.b;
    }
    return in;
}

}  // namespace

CycleSolution solve_cycle(std::span<const CycleCell> cycle, int num_colors, ChoicePolicy& policy) {
    const std::size_t len = cycle.size();
    CycleSolution sol;
    if (len == 0) return sol;

    // Contract wires: only the remaining gates matter, each contracted edge
    // run carries a single colour.
    std::vector<std::size_t> pos;
    std::vector<CycleCellGate> gates;
    std::size_t corners = 0;
    for (std::size_t k = 0; k < len; ++k) {
        const CycleCellGate g = classify_gate(cycle[k]);
        if (g.kind == CycleCellGate::Kind::Wire) continue;
        if (g.kind == CycleCellGate::Kind::Corner) ++corners;
        pos.push_back(k);
        gates.push_back(g);
    }
    if (corners % 2 != 0) {
        throw Error(ErrorCode::InternalInvariant, "cycle has an odd number of corners (" + std::to_string(corners) + ")");
    }

    const std::size_t m = gates.size();
    // f[t] = colour leaving gate t, entering gate t+1.
    std::vector<Color> f(m, 0);
    auto at = [m](std::size_t t) { return t % m; };

    if (m == 0) {
        sol.branch = CycleCase::WiresOnly;
        sol.edge_colours.assign(len, policy.pick_colour_avoiding(num_colors, {}));
        return sol;
    }

    std::optional<std::size_t> sgate_start;
    for (std::size_t t = 0; t < m && !sgate_start; ++t) {
        if (gates[t].kind == CycleCellGate::Kind::SGate && gates[at(t + 1)].kind == CycleCellGate::Kind::Corner) {
            sgate_start = t;
        }
    }
    std::optional<std::size_t> mismatch_start;
    if (!sgate_start) {
        for (std::size_t t = 0; t < m && !mismatch_start; ++t) {
            if (gates[t].kind != CycleCellGate::Kind::Corner) {
                // An SGate with no corner after it would mean a gate-free cycle
                // of straight cells, impossible on a square grid.
                throw Error(ErrorCode::InternalInvariant, "straight gate without a following corner");
            }
            if (gates[t].b != gates[at(t + 1)].a) mismatch_start = t;
        }
    }

    if (sgate_start) {
        sol.branch = CycleCase::SGatePresent;
        const std::size_t s = *sgate_start;
        const CycleCellGate& corner = gates[at(s + 1)];
        f[at(s + 1)] = corner.b;  // valid once in(corner) != a
        for (std::size_t u = s + 2; u < s + m; ++u) f[at(u)] = forward(gates[at(u)], f[at(u - 1)], num_colors, policy);
        const Color into_sgate = f[at(s + m - 1)];
        f[s] = policy.pick_colour_avoiding(num_colors, {into_sgate, corner.a});
    } else if (mismatch_start) {
        sol.branch = CycleCase::CornerMismatch;
        const std::size_t s = *mismatch_start;
        const CycleCellGate& first = gates[s];
        const CycleCellGate& second = gates[at(s + 1)];
        f[at(s + 1)] = second.b;  // valid once in(second) != second.a
        for (std::size_t u = s + 2; u < s + m; ++u) f[at(u)] = forward(gates[at(u)], f[at(u - 1)], num_colors, policy);
        const Color into_first = f[at(s + m - 1)];
        f[s] = into_first == first.a ? policy.pick_colour_avoiding(num_colors, {first.b, second.a}) : first.b;
    } else {
        sol.branch = CycleCase::CornerChain;
        if (m % 2 != 0) throw Error(ErrorCode::InternalInvariant, "corner chain of odd length");
        // Even gates enter on their `a` and leave on anything but `b`; odd
        // gates then see in != a and must leave on `b`.
        for (std::size_t t = 0; t < m; ++t) {
            f[t] = t % 2 == 0 ? policy.pick_colour_avoiding(num_colors, {gates[t].b}) : gates[t].b;
        }
    }

    // Re-expand: every edge between gate t and gate t+1 carries f[t].
    sol.edge_colours.assign(len, 0);
    for (std::size_t t = 0; t < m; ++t) {
        const std::size_t from = pos[t];
        const std::size_t to = t + 1 < m ? pos[t + 1] : pos[0] + len;
        for (std::size_t k = from; k < to; ++k) sol.edge_colours[k % len] = f[t];
    }

    for (std::size_t k = 0; k < len; ++k) {
        const Color in = sol.edge_colours[(k + len - 1) % len];
        const Color out = sol.edge_colours[k];
        if (!classify_gate(cycle[k]).allows(in, out)) {
            throw Error(ErrorCode::InternalInvariant, "cycle colouring violates gate at position " + std::to_string(k));
        }
    }
    return sol;
}

}  // namespace brickwang
