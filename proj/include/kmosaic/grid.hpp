// Grid diagrams as permutation pairs, the elementary moves on them
// (cyclic permutation, commutation, stabilization, destabilization), the
// rendering into mosaics, the extraction of a grid from a mosaic through the
// 5x zoom, and the translation of elementary moves into mosaic-move
// certificates.
#pragma once

#include "kmosaic/mosaic.hpp"
#include "kmosaic/search.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kmosaic {

// X decoration of column i at row sigma_x[i-1], O at row sigma_o[i-1]; rows
// and columns are one-based, row 1 at the bottom. Size 0 is the empty grid,
// the image of a blank mosaic.
struct GridDiagram {
    int size = 0;
    std::vector<int> sigma_x;
    std::vector<int> sigma_o;
    bool operator==(const GridDiagram&) const = default;
};

// Throws std::invalid_argument unless both maps are permutations of {1..N}
// that disagree at every column.
void validate_grid(const GridDiagram& g);

// Text format: a line holding N, then "X: <images>" and "O: <images>" lines.
GridDiagram parse_grid(std::string_view text);
std::string serialize_grid(const GridDiagram& g);
GridDiagram load_grid_file(const std::string& path);

// Renders the grid as a mosaic of side N: vertical segments from X to O in
// each column, horizontal segments in each row, crossings always vertical
// over horizontal. The empty grid renders as a 1x1 blank mosaic.
KnotMosaic grid_to_mosaic(const GridDiagram& g);

// Extracts a grid from any knot mosaic: zooms 5x, splits the curve into
// maximal vertical and horizontal segments, assigns one grid column per
// vertical segment and one grid row per horizontal segment preserving
// coordinate order (ties by segment start, row-major), and orients each
// component from its first corner in row-major order so vertical segments
// run X to O. A blank mosaic gives the empty grid.
GridDiagram mosaic_to_grid(const KnotMosaic& m);

// The grid mosaic_to_grid reports for this grid's own mosaic: same diagram,
// component orientations normalized.
GridDiagram canonical_orientation(const GridDiagram& g);

// ---- elementary moves ----

enum class StabCorner { NW, NE, SW, SE };
enum class CycleDirection { ColumnsLeft, ColumnsRight, RowsUp, RowsDown };

// Replaces the X (or O) decoration of the given column by a 2x2 block of
// three decorations whose lone opposite-type elbow sits at the named corner.
// Result has size N+1.
GridDiagram stabilize(const GridDiagram& g, bool on_x, StabCorner corner, int column);

// Inverse: the 2x2 block at columns {i, i+1} and rows {j, j+1} must hold
// exactly three decorations; they collapse to one decoration of the elbow's
// opposite type. Throws std::invalid_argument otherwise.
bool can_destabilize(const GridDiagram& g, int i, int j);
GridDiagram destabilize(const GridDiagram& g, int i, int j);

// Swaps adjacent columns i, i+1 (rows j, j+1). Requires the two decoration
// intervals to be strictly separated; allow_nested also accepts one interval
// strictly inside the other. Throws std::invalid_argument when violated.
bool can_commute_columns(const GridDiagram& g, int i, bool allow_nested = false);
bool can_commute_rows(const GridDiagram& g, int j, bool allow_nested = false);
GridDiagram commute_columns(const GridDiagram& g, int i, bool allow_nested = false);
GridDiagram commute_rows(const GridDiagram& g, int j, bool allow_nested = false);

// Rotates column indices or row values by one, wrapping around.
GridDiagram cycle(const GridDiagram& g, CycleDirection dir);

// ---- uniform move handles ----

enum class GridMoveKind { Stabilize, Destabilize, CommuteColumns, CommuteRows, Cycle };

struct GridMove {
    GridMoveKind kind = GridMoveKind::Stabilize;
    bool on_x = true;                     // Stabilize
    StabCorner corner = StabCorner::NW;   // Stabilize
    int i = 0;                            // column / block column / index
    int j = 0;                            // Destabilize block row
    CycleDirection dir = CycleDirection::ColumnsLeft;  // Cycle
    bool operator==(const GridMove&) const = default;
};

GridDiagram apply_grid_move(const GridDiagram& g, const GridMove& mv,
                            bool allow_nested = false);
// Every applicable move: stabilizations, destabilizations, commutations,
// the four cyclic rotations; deterministic order.
std::vector<GridMove> legal_moves(const GridDiagram& g, bool allow_nested = false);

// Move spec strings: "stab:X:NW:3", "destab:2:1", "commute:cols:2",
// "commute:rows:1", "cycle:cols:left", "cycle:rows:up".
GridMove parse_grid_move(std::string_view spec);
std::string grid_move_name(const GridMove& mv);

// Expresses one cyclic permutation as a sequence of stabilizations,
// destabilizations and commutations, found by breadth-first search over
// grids of size at most g.size + 1.
std::optional<std::vector<GridMove>> decompose_cycle(const GridDiagram& g,
                                                     CycleDirection dir,
                                                     int max_depth = 16);

// Mosaic-move certificate carrying grid_to_mosaic(g) to
// grid_to_mosaic(apply_grid_move(g, mv)). Cyclic permutations run through
// decompose_cycle first, one searched certificate per elementary step.
// Empty result means the search budget was exhausted.
std::optional<Certificate> elementary_move_as_certificate(const GridDiagram& g,
                                                          const GridMove& mv,
                                                          const SearchLimits& limits = {});

}  // namespace kmosaic
