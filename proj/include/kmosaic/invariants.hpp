// Reading a mosaic as a link diagram: strand tracing, component counting,
// canonical PD codes, and an exact Kauffman bracket state sum with writhe
// normalization. The normalized bracket plus component count serves as the
// equivalence fingerprint throughout the tests.
#pragma once

#include "kmosaic/mosaic.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kmosaic {

// Sparse Laurent polynomial in one variable A, exact 64-bit integer
// coefficients, no zero terms stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;  // zero
    static LaurentPolynomial one() { return monomial(1, 0); }
    static LaurentPolynomial monomial(long long coeff, int exp);

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const LaurentPolynomial&) const = default;

    // Substitutes A -> A^{-1} (the mirror image map on brackets).
    LaurentPolynomial inverted_variable() const;

    // Terms ascending by exponent, e.g. "-A^-4 - A^4" or "1".
    std::string str() const;
    const std::map<int, long long>& terms() const { return terms_; }

private:
    std::map<int, long long> terms_;
};

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A traced diagram: crossings in row-major cell order, arcs between crossing
// ports, and per-component reference orientations fixed by the deterministic
// trace (each component starts at its smallest (row, col, edge) connection
// point).
struct LinkDiagram {
    struct Port {
        int crossing = -1;
        Edge edge = Edge::N;
        bool operator==(const Port&) const = default;
    };
    struct Crossing {
        int row = 0;
        int col = 0;
        Tile tile = 0;                       // 9 or 10
        std::array<int, 4> arc{-1, -1, -1, -1};  // arc id per edge port
        // Reference-orientation passage directions (dr, dc) and the cycles
        // carrying them; sign is the cross product of over and under.
        std::array<int, 2> over_dir{0, 0};
        std::array<int, 2> under_dir{0, 0};
        int over_cycle = -1;
        int under_cycle = -1;
        int ref_sign = 0;
    };
    // One cycle per crossing-bearing component, arcs in reference order.
    struct Cycle {
        std::vector<int> arcs;
        std::vector<Port> from;  // port where arcs[i] begins
        std::vector<Port> to;    // port where arcs[i] ends
    };

    std::vector<Crossing> crossings;
    std::vector<Cycle> cycles;
    int arc_count = 0;
    int free_loops = 0;       // components meeting no crossing
    int component_count = 0;  // cycles + free loops
};

LinkDiagram trace_diagram(const KnotMosaic& m);

// PD code: one entry per crossing listing its four arc labels starting at the
// incoming under-strand arc and proceeding counterclockwise as drawn, plus
// the crossing sign. Canonicalized by minimizing over per-component
// orientations and starting arcs (component order is fixed intrinsically by
// smallest crossing passed), so equal diagrams yield equal codes no matter
// how they sit in the mosaic.
struct PDCode {
    struct Entry {
        std::array<int, 4> arcs{};
        int sign = 0;
        auto operator<=>(const Entry&) const = default;
    };
    std::vector<Entry> entries;  // sorted
    int arc_count = 0;
    bool operator==(const PDCode&) const = default;
    std::string str() const;
};

PDCode canonical_pd(const LinkDiagram& d);

// Exact 2^c state sum; delta = -A^2 - A^-2; a lone unknot gives 1 after
// normalization. Throws capacity_error beyond max_crossings.
LaurentPolynomial kauffman_bracket(const LinkDiagram& d, int max_crossings = 16);

// Writhe under the reference orientations.
int writhe(const LinkDiagram& d);

// Component count plus the writhe-normalized bracket (-A^3)^{-w} * <D>, with
// w minimized over per-component orientation flips so the value does not
// depend on the traced orientations.
struct Fingerprint {
    int components = 0;
    LaurentPolynomial poly;
    bool operator==(const Fingerprint&) const = default;
    std::string str() const;
};

Fingerprint fingerprint(const KnotMosaic& m, int max_crossings = 16);

}  // namespace kmosaic
