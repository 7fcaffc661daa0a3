#include "brickwang/error.hpp"
#include "brickwang/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace brickwang {

namespace {

void require_valid(const Board& board, const Tiling& tiling) {
    const ValidationResult r = validate(board, {}, tiling);
    for (const Violation& v : r.violations) {
        if (v.kind != Violation::Kind::BoundaryMismatch) throw Error(ErrorCode::InvalidTiling, v.message);
    }
}

/// Shortest fixed-point form, at most 6 decimals, no trailing zeros.
std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s(buf);
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

struct Segment {
    double x0, y0, x1, y1;  // cell-local, y up
};

/// Through line plus the two stubs meeting it, in cell-local coordinates.
std::array<Segment, 3> joints(const Tile& t, int num_colors) {
    auto pos = [num_colors](Color c) { return static_cast<double>(c + 1) / (num_colors + 1); };
    const double pe = pos(t[0]), pn = pos(t[1]), pw = pos(t[2]), ps = pos(t[3]);
    if (t[1] == t[3]) {
        return {Segment{pn, 0, pn, 1}, Segment{0, pw, pn, pw}, Segment{1, pe, pn, pe}};
    }
    return {Segment{0, pe, 1, pe}, Segment{ps, 0, ps, pe}, Segment{pn, 1, pn, pe}};
}

struct Bounds {
    int min_i = 0, max_i = -1, min_j = 0, max_j = -1;
};

Bounds bounds_of(const Board& board) {
    Bounds b;
    bool first = true;
    for (const CellCoord& c : board.cells()) {
        if (first) {
            b = {c.i, c.i, c.j, c.j};
            first = false;
        }
        b.min_i = std::min(b.min_i, c.i);
        b.max_i = std::max(b.max_i, c.i);
        b.min_j = std::min(b.min_j, c.j);
        b.max_j = std::max(b.max_j, c.j);
    }
    return b;
}

}  // namespace

std::string render_svg(const Board& board, const Tiling& tiling) {
    require_valid(board, tiling);
    const Bounds b = bounds_of(board);
    const int width = b.max_i - b.min_i + 1;
    const int height = b.max_j - b.min_j + 1;
    constexpr int kPixelsPerCell = 32;

    // SVG y grows downwards: a point (x, y) of the grid maps to (x, -y).
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << b.min_i << ' ' << -(b.max_j + 1)
        << ' ' << std::max(width, 0) << ' ' << std::max(height, 0) << "\" width=\"" << std::max(width, 0) * kPixelsPerCell
        << "\" height=\"" << std::max(height, 0) * kPixelsPerCell << "\">\n";
    out << "  <g fill=\"#e9dcc9\" stroke=\"#cbb89d\" stroke-width=\"0.02\">\n";
    for (const CellCoord& c : board.cells()) {
        out << "    <rect x=\"" << c.i << "\" y=\"" << -(c.j + 1) << "\" width=\"1\" height=\"1\"/>\n";
    }
    out << "  </g>\n";
    out << "  <g stroke=\"#3b2f2f\" stroke-width=\"0.06\" stroke-linecap=\"round\" fill=\"none\">\n";
    for (const CellCoord& c : board.cells()) {
        for (const Segment& s : joints(tiling.at(c), board.num_colors())) {
            out << "    <line x1=\"" << num(c.i + s.x0) << "\" y1=\"" << num(-(c.j + s.y0)) << "\" x2=\""
                << num(c.i + s.x1) << "\" y2=\"" << num(-(c.j + s.y1)) << "\"/>\n";
        }
    }
    out << "  </g>\n</svg>\n";
    return out.str();
}

std::string render_ascii(const Board& board, const Tiling& tiling, int scale) {
    require_valid(board, tiling);
    if (scale < 3) throw Error(ErrorCode::Schema, "ascii scale must be at least 3");
    if (board.empty()) return {};
    const Bounds b = bounds_of(board);
    const auto s = static_cast<std::size_t>(scale);
    const std::size_t cols = static_cast<std::size_t>(b.max_i - b.min_i + 1) * s;
    const std::size_t rows = static_cast<std::size_t>(b.max_j - b.min_j + 1) * s;
    std::vector<std::string> canvas(rows, std::string(cols, ' '));

    auto slot = [&](Color c) {
        const double p = static_cast<double>(c + 1) / (board.num_colors() + 1);
        return std::min(s - 1, static_cast<std::size_t>(std::floor(p * static_cast<double>(s))));
    };

    for (const CellCoord& c : board.cells()) {
        const Tile& t = tiling.at(c);
        const std::size_t x0 = static_cast<std::size_t>(c.i - b.min_i) * s;
        const std::size_t y0 = static_cast<std::size_t>(b.max_j - c.j) * s;  // top row of the block
        auto put = [&](std::size_t lx, std::size_t ly_up, char ch) {
            canvas[y0 + (s - 1 - ly_up)][x0 + lx] = ch;
        };
        for (std::size_t y = 0; y < s; ++y)
            for (std::size_t x = 0; x < s; ++x) put(x, y, '.');

        if (t[1] == t[3]) {
            const std::size_t x = slot(t[1]);
            for (std::size_t y = 0; y < s; ++y) put(x, y, '|');
            for (std::size_t k = 0; k < x; ++k) put(k, slot(t[2]), '-');
            for (std::size_t k = x + 1; k < s; ++k) put(k, slot(t[0]), '-');
            if (x > 0) put(x, slot(t[2]), '+');
            if (x + 1 < s) put(x, slot(t[0]), '+');
        } else {
            const std::size_t y = slot(t[0]);
            for (std::size_t x = 0; x < s; ++x) put(x, y, '-');
            for (std::size_t k = 0; k < y; ++k) put(slot(t[3]), k, '|');
            for (std::size_t k = y + 1; k < s; ++k) put(slot(t[1]), k, '|');
            if (y > 0) put(slot(t[3]), y, '+');
            if (y + 1 < s) put(slot(t[1]), y, '+');
        }
    }

    std::string out;
    out.reserve(rows * (cols + 1));
    for (auto& line : canvas) {
        line.erase(line.find_last_not_of(' ') + 1);
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace brickwang
