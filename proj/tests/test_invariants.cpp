// Link invariants: Laurent arithmetic, diagram tracing, canonical PD codes,
// the Kauffman bracket state sum, and the writhe-normalized fingerprint.
#include "doctest.h"

#include "kmosaic/invariants.hpp"
#include "kmosaic/mosaic.hpp"

#include <string>

using namespace kmosaic;

namespace {

const std::string kPaperDir = KMOSAIC_PAPER_DIR;

KnotMosaic unknot2() {
    return KnotMosaic(parse_mosaic("2\n2 1\n3 4\n"));
}

// A one-crossing unknot: a loop with a single kink at the center cell.
KnotMosaic kink3(Tile crossing) {
    Mosaic m = parse_mosaic("3\n0 2 1\n2 9 4\n3 4 0\n");
    m.set(1, 1, crossing);
    return KnotMosaic(m);
}

}  // namespace

// ---- Laurent polynomials ----

TEST_CASE("laurent arithmetic stays sparse and exact") {
    auto a = LaurentPolynomial::monomial(3, 2);
    auto b = LaurentPolynomial::monomial(-3, 2);
    CHECK((a + b).is_zero());
    CHECK(a - a == LaurentPolynomial());
    auto p = LaurentPolynomial::monomial(1, -2) + LaurentPolynomial::monomial(1, 2);
    auto q = p * p;
    CHECK(q.terms().at(-4) == 1);
    CHECK(q.terms().at(0) == 2);
    CHECK(q.terms().at(4) == 1);
    CHECK(LaurentPolynomial::one() * p == p);
}

TEST_CASE("polynomial strings list terms by ascending exponent") {
    CHECK(LaurentPolynomial().str() == "0");
    CHECK(LaurentPolynomial::one().str() == "1");
    auto delta = LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
    CHECK(delta.str() == "-A^-2 - A^2");
}

TEST_CASE("inverting the variable mirrors exponents") {
    auto p = LaurentPolynomial::monomial(2, 3) + LaurentPolynomial::monomial(-1, -1);
    auto q = p.inverted_variable();
    CHECK(q.terms().at(-3) == 2);
    CHECK(q.terms().at(1) == -1);
    CHECK(q.inverted_variable() == p);
}

// ---- tracing ----

TEST_CASE("tracing the small unknot finds one free loop and no crossings") {
    LinkDiagram d = trace_diagram(unknot2());
    CHECK(d.crossings.empty());
    CHECK(d.free_loops == 1);
    CHECK(d.component_count == 1);
    CHECK(d.cycles.empty());
}

TEST_CASE("tracing a kink finds one crossing on one cycle") {
    LinkDiagram d = trace_diagram(kink3(9));
    REQUIRE(d.crossings.size() == 1);
    CHECK(d.free_loops == 0);
    CHECK(d.component_count == 1);
    REQUIRE(d.cycles.size() == 1);
    CHECK(d.crossings[0].tile == 9);
    CHECK(d.crossings[0].ref_sign * d.crossings[0].ref_sign == 1);
}

TEST_CASE("the trefoil board traces to three crossings on one component") {
    KnotMosaic tre(load_mosaic_file(kPaperDir + "/trefoil_4x4.mosaic"));
    LinkDiagram d = trace_diagram(tre);
    CHECK(d.crossings.size() == 3);
    CHECK(d.component_count == 1);
    int w = writhe(d);
    CHECK((w == 3 || w == -3));
}

// ---- canonical PD codes ----

TEST_CASE("PD codes are invariant under board symmetry") {
    KnotMosaic tre(load_mosaic_file(kPaperDir + "/trefoil_4x4.mosaic"));
    PDCode base = canonical_pd(trace_diagram(tre));
    CHECK(base.entries.size() == 3);
    CHECK(base.arc_count == 6);
    for (D4 g : d4_elements) {
        KnotMosaic moved(transform_mosaic(tre.mosaic(), g));
        PDCode other = canonical_pd(trace_diagram(moved));
        // In-plane rotation preserves the code; mirroring flips every sign.
        CHECK(other.entries.size() == base.entries.size());
        CHECK(other.arc_count == base.arc_count);
        if (!g.mir) CHECK(other == base);
    }
}

TEST_CASE("a crossingless diagram has an empty PD code") {
    PDCode pd = canonical_pd(trace_diagram(unknot2()));
    CHECK(pd.entries.empty());
    CHECK(pd.arc_count == 0);
}

// ---- bracket and fingerprint ----

TEST_CASE("the unknot fingerprints to one component and unit polynomial") {
    Fingerprint f = fingerprint(unknot2());
    CHECK(f.components == 1);
    CHECK(f.poly == LaurentPolynomial::one());
}

TEST_CASE("kinks normalize away") {
    // Both kink chiralities give the unknot after writhe correction.
    CHECK(fingerprint(kink3(9)).poly == LaurentPolynomial::one());
    CHECK(fingerprint(kink3(10)).poly == LaurentPolynomial::one());
}

TEST_CASE("the trefoil fingerprint is frozen") {
    KnotMosaic tre(load_mosaic_file(kPaperDir + "/trefoil_4x4.mosaic"));
    Fingerprint f = fingerprint(tre);
    CHECK(f.components == 1);
    auto want = LaurentPolynomial::monomial(-1, -16) + LaurentPolynomial::monomial(1, -12) +
                LaurentPolynomial::monomial(1, -4);
    CHECK(f.poly == want);
}

TEST_CASE("mirroring a board inverts the fingerprint variable") {
    KnotMosaic tre(load_mosaic_file(kPaperDir + "/trefoil_4x4.mosaic"));
    KnotMosaic mirrored(transform_mosaic(tre.mosaic(), D4{0, true}));
    CHECK(fingerprint(mirrored).poly == fingerprint(tre).poly.inverted_variable());
}

TEST_CASE("a two-component unlink fingerprints to the loop factor") {
    KnotMosaic k1(load_mosaic_file(kPaperDir + "/k1_3x3.mosaic"));
    Fingerprint f = fingerprint(k1);
    CHECK(f.components == 2);
    auto delta = LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
    CHECK(f.poly == delta);
}

TEST_CASE("the bracket guards its crossing capacity") {
    KnotMosaic tre(load_mosaic_file(kPaperDir + "/trefoil_4x4.mosaic"));
    CHECK_THROWS_AS(fingerprint(tre, 2), capacity_error);
}
