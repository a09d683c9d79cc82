// Equivalence certificates: bidirectional breadth-first search over move
// applications, replay validation, and the certificate text format.
#pragma once

#include "kmosaic/moves.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace kmosaic {

// A checkable witness that two mosaics are joined by moves: pad counts for
// each endpoint (blank-padding injections) and a move sequence carrying the
// padded source to the padded target.
struct Certificate {
    int pad_source = 0;
    int pad_target = 0;
    std::vector<MoveApplication> steps;
    bool operator==(const Certificate&) const = default;
};

struct SearchLimits {
    int max_depth = 12;
    int max_pad = 2;
    std::size_t max_states = 4'000'000;  // exceeded -> capacity_error
};

// True when blank-padding keeps the mosaic interior-consistent, i.e. no
// connection point sits on the south or east boundary.
bool can_inject(const Mosaic& m);

// Searches boards of increasing size: the smaller endpoint is padded up to
// the larger, then both by 0..max_pad extra. Returns the first board size
// with a path within max_depth, the shortest path there, ties broken by the
// meeting state encoding. Endpoints must be interior-consistent.
std::optional<Certificate> find_certificate(const Mosaic& source, const Mosaic& target,
                                            const std::vector<MovePattern>& catalog,
                                            const SearchLimits& limits = {});

// Applies the certificate to the padded source, checking that every step
// matches its window and every intermediate stays interior-consistent, and
// that the result equals the padded target.
bool replay(const Certificate& cert, const Mosaic& source, const Mosaic& target,
            const std::vector<MovePattern>& catalog);

// Text format: a "pad_source pad_target" line, then one "label@(row,col)"
// line per step.
std::string serialize_certificate(const Certificate& cert,
                                  const std::vector<MovePattern>& catalog);
Certificate parse_certificate(std::string_view text,
                              const std::vector<MovePattern>& catalog);

}  // namespace kmosaic
