// The move catalog: involutive k x k pattern substitutions generating the
// ambient equivalence on mosaics, their dihedral closure, and application
// machinery with a fast pattern index.
#pragma once

#include "kmosaic/mosaic.hpp"

#include <cstdint>
#include <functional>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kmosaic {

struct MovePattern {
    int k = 0;
    Mosaic side_a;      // encode(side_a) < encode(side_b)
    Mosaic side_b;
    std::string label;  // base name, plus ":<symmetry>" for closure variants
};

// Connection points on the outer boundary of an n-mosaic, as 4n flags in the
// order: N edge left to right, E edge top to bottom, S edge left to right,
// W edge top to bottom.
std::vector<bool> boundary_profile(const Mosaic& m);

// Base records from a data text: per record a "<k> <label>" line followed by
// two k x k mosaics in mosaic text format. Sides must be internally
// consistent, share a boundary profile, and differ.
std::vector<MovePattern> parse_move_patterns(std::string_view text);
std::string serialize_move_patterns(const std::vector<MovePattern>& patterns);

// All images of the base patterns under the eight symmetries of the square,
// duplicates removed; base order then symmetry order, first occurrence kept.
std::vector<MovePattern> close_under_symmetry(const std::vector<MovePattern>& base);

// Each record stands for a family: connection points unused by both sides may
// carry bystander strands, added identically to both sides. Returns every
// member of every family - extra arcs never share a point with either side,
// never cross a strand present on only one side, agree across interior
// edges, and keep the same over strand on both sides when they cross a
// shared strand. The all-empty choice reproduces the base; other members are
// labeled "<label>.<index>" in a fixed generation order.
std::vector<MovePattern> expand_families(const std::vector<MovePattern>& base);

// Symmetry closure of the expanded families of the built-in records; built
// once, immutable afterwards.
const std::vector<MovePattern>& generator_catalog();

struct MoveApplication {
    int pattern = 0;  // catalog index
    int row = 0;      // top-left corner of the window
    int col = 0;
    bool operator==(const MoveApplication&) const = default;
};

// True when the window at (row, col) equals either side of the pattern.
bool move_applies(const Mosaic& m, const MovePattern& p, int row, int col);
// Replaces the matching side by the other one. The application must apply.
Mosaic apply_move(const Mosaic& m, const std::vector<MovePattern>& catalog,
                  const MoveApplication& app);

// Every applicable move, ordered by (pattern, row, col).
std::vector<MoveApplication> applicable_moves(const Mosaic& m,
                                              const std::vector<MovePattern>& catalog);

// Applicability queries against a fixed catalog, keyed by packed window
// contents so a scan costs one hash lookup per window instead of a pattern
// loop. Results match applicable_moves exactly.
class MoveIndex {
public:
    explicit MoveIndex(const std::vector<MovePattern>& catalog);
    const std::vector<MovePattern>& catalog() const { return *catalog_; }
    std::vector<MoveApplication> applications(const Mosaic& m) const;
    void for_each_application(const Mosaic& m,
                              const std::function<void(const MoveApplication&)>& fn) const;

private:
    const std::vector<MovePattern>* catalog_;
    std::vector<int> sizes_;  // distinct window sizes, ascending
    // per window size: packed window -> pattern indices matching one side
    std::vector<std::unordered_map<std::uint64_t, std::vector<int>>> maps_;
};

}  // namespace kmosaic
