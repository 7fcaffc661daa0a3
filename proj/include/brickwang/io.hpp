#pragma once

#include "brickwang/board.hpp"
#include "brickwang/solver.hpp"

#include <string>
#include <string_view>

namespace brickwang {

/// A board file: the full region, its boundary colours and optionally some
/// hand-placed tiles.
///
///     {"num_colors": 3,
///      "cells": [[0,0], [1,0]],
///      "boundary": [{"cell": [0,0], "dir": "E", "color": 0}, ...],
///      "pretiled": [{"cell": [1,0], "tile": [0,1,0,2]}]}
///
/// `boundary` must colour every leg of an untiled cell that faces outside
/// the region. It may also colour legs that touch pretiled cells, in which
/// case the colour has to agree with the tile.
struct BoardDocument {
    Board board;
    BoundaryConstraints boundary;
    Tiling pretiled;
};

/// Parses and validates a board document. Errors carry the path of the
/// offending field: Syntax, Schema, MissingBoundaryLeg, ExtraBoundaryLeg,
/// ColorOutOfRange, DuplicateCell, TooFewColors, InvalidPartial.
BoardDocument parse_board(std::string_view text);

/// Canonical form: keys in fixed order, cells in (j, i) order, boundary in
/// (cell, direction) order, one entry per line.
std::string serialize_board(const BoardDocument& doc);

/// The problem left after hand-placed tiles are taken out of the region.
struct Problem {
    Board board;
    BoundaryConstraints boundary;
};

Problem prepare(const BoardDocument& doc);

/// `{"tiles": [{"cell": [i,j], "tile": [e,n,w,s]}, ...]}`; rejects duplicate
/// cells and negative colours.
Tiling parse_tiling(std::string_view text);
std::string serialize_tiling(const Tiling& tiling);

/// Solves the document's open region and merges the result with the
/// hand-placed tiles.
SolveReport solve_document(const BoardDocument& doc, ChoicePolicy& policy);

/// Validates a full tiling of the document's region: boundary legs of
/// pretiled cells are taken from the tiles, and the tiling must reproduce
/// each pretiled cell.
ValidationResult validate_document(const BoardDocument& doc, const Tiling& tiling);

/// Board covering exactly the tiled cells, for rendering without a board file.
Board board_from_tiling(const Tiling& tiling);

/// SVG 1.1 drawing of a valid tiling: a unit square per cell with the brick
/// joints drawn inside. Joint position for colour c is (c+1)/(num_colors+1)
/// along the side. Throws Error{InvalidTiling} if the tiling does not cover
/// the board with edge-consistent brick tiles.
std::string render_svg(const Board& board, const Tiling& tiling);

/// Character-grid drawing; `scale` characters per cell side (minimum 3).
/// Holes and cells outside the board are blank.
std::string render_ascii(const Board& board, const Tiling& tiling, int scale = 5);

}  // namespace brickwang
