// Square mosaics: storage, compact encodings, suitable-connectedness checks,
// submosaic access, blank-padding injection, text IO and an ascii renderer.
#pragma once

#include "kmosaic/tiles.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kmosaic {

struct Mosaic {
    int n = 0;
    std::vector<Tile> cells;  // row-major, n*n entries

    static Mosaic blank(int n);

    Tile at(int r, int c) const {
        assert(r >= 0 && r < n && c >= 0 && c < n);
        return cells[static_cast<std::size_t>(r) * n + c];
    }
    void set(int r, int c, Tile t) {
        assert(r >= 0 && r < n && c >= 0 && c < n);
        assert(t < tile_count);
        cells[static_cast<std::size_t>(r) * n + c] = t;
    }
    bool operator==(const Mosaic&) const = default;
};

// Compact encoding: one byte holding n, then the cells row-major, packed two
// per byte with the earlier cell in the high nibble while n <= 16, one byte
// per cell for larger n. For equal n, byte-wise lexicographic order on
// encodings equals row-major lexicographic order on tile indices.
using Encoding = std::string;
Encoding encode(const Mosaic& m);
Mosaic decode(const Encoding& e);

struct Violation {
    int row = 0;
    int col = 0;
    Edge edge = Edge::N;
};

// Scans cells row-major, edges in N, E, S, W order, and reports the first
// connection point that is unmatched by its neighbor or lies on the mosaic
// boundary. Empty result means the mosaic is suitably connected.
std::optional<Violation> first_violation(const Mosaic& m);
bool is_suitably_connected(const Mosaic& m);
// Same scan ignoring the outer boundary: interior edges must agree but
// connection points may sit on the boundary. Move patterns and search on
// open boards use this weaker predicate.
bool is_interior_consistent(const Mosaic& m);

// A mosaic verified suitably connected.
class KnotMosaic {
public:
    explicit KnotMosaic(Mosaic m);  // throws std::invalid_argument when unsuitable
    static std::optional<KnotMosaic> validate(Mosaic m);

    const Mosaic& mosaic() const { return m_; }
    operator const Mosaic&() const { return m_; }
    int n() const { return m_.n; }
    bool operator==(const KnotMosaic&) const = default;

private:
    struct checked_tag {};
    KnotMosaic(Mosaic m, checked_tag) : m_(std::move(m)) {}
    Mosaic m_;
};

Mosaic submosaic(const Mosaic& m, int k, int r, int c);
void write_submosaic(Mosaic& m, const Mosaic& sub, int r, int c);

// Injection into a larger mosaic: the original in the top-left corner, blank
// tiles padding the added rows and columns.
Mosaic inject(const Mosaic& m, int times = 1);

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ")"), line(line_) {}
};

// Text format: a line holding n, then n lines of n tile indices separated by
// spaces. Blank lines and '#' comments are skipped.
Mosaic parse_mosaic(std::string_view text);
std::string serialize_mosaic(const Mosaic& m);
Mosaic load_mosaic_file(const std::string& path);

// One glyph per tile: . for blank, box-drawing corners/lines for arcs and
// strands, Z/S for the double arcs, and crossed box glyphs for crossings.
std::string render_ascii(const Mosaic& m);

Mosaic transform_mosaic(const Mosaic& m, D4 g);

}  // namespace kmosaic
