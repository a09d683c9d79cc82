#include "kmosaic/invariants.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace kmosaic {

// ---- Laurent polynomials ----

LaurentPolynomial LaurentPolynomial::monomial(long long coeff, int exp) {
    LaurentPolynomial p;
    if (coeff != 0) p.terms_[exp] = coeff;
    return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) {
        long long& v = terms_[e];
        v += c;
        if (v == 0) terms_.erase(e);
    }
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) {
        long long& v = terms_[e];
        v -= c;
        if (v == 0) terms_.erase(e);
    }
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    r += o;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    r -= o;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            long long& v = r.terms_[e1 + e2];
            v += c1 * c2;
            if (v == 0) r.terms_.erase(e1 + e2);
        }
    return r;
}

LaurentPolynomial LaurentPolynomial::inverted_variable() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long long a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << '*';
            os << "A^" << e;
        }
    }
    return os.str();
}

// ---- strand tracing ----

namespace {

// Counterclockwise port order as drawn (row 0 on top): N, W, S, E.
Edge next_ccw(Edge e) {
    switch (e) {
        case Edge::N: return Edge::W;
        case Edge::W: return Edge::S;
        case Edge::S: return Edge::E;
        case Edge::E: return Edge::N;
    }
    return Edge::N;
}

struct Passage {
    int crossing;
    Edge in_edge;
    Edge out_edge;
};

}  // namespace

LinkDiagram trace_diagram(const KnotMosaic& km) {
    const Mosaic& m = km.mosaic();
    LinkDiagram d;

    std::vector<int> crossing_at(static_cast<std::size_t>(m.n) * m.n, -1);
    for (int r = 0; r < m.n; ++r)
        for (int c = 0; c < m.n; ++c)
            if (is_crossing(m.at(r, c))) {
                crossing_at[static_cast<std::size_t>(r) * m.n + c] =
                    static_cast<int>(d.crossings.size());
                LinkDiagram::Crossing x;
                x.row = r;
                x.col = c;
                x.tile = m.at(r, c);
                d.crossings.push_back(x);
            }

    // visited[cell][edge]: connection point already carried by a traced strand
    std::vector<std::array<bool, 4>> visited(static_cast<std::size_t>(m.n) * m.n,
                                             {false, false, false, false});
    auto cell_index = [&](int r, int c) { return static_cast<std::size_t>(r) * m.n + c; };

    for (int r0 = 0; r0 < m.n; ++r0) {
        for (int c0 = 0; c0 < m.n; ++c0) {
            for (Edge e0 : all_edges) {
                if (!has_point(m.at(r0, c0), e0) || visited[cell_index(r0, c0)][edge_index(e0)])
                    continue;
                // Walk the strand entering cell (r0, c0) at e0 until it closes.
                std::vector<Passage> passages;
                int r = r0, c = c0;
                Edge e = e0;
                do {
                    Tile t = m.at(r, c);
                    Edge x = strand_exit(t, e);
                    visited[cell_index(r, c)][edge_index(e)] = true;
                    visited[cell_index(r, c)][edge_index(x)] = true;
                    int xi = crossing_at[cell_index(r, c)];
                    if (xi >= 0) passages.push_back(Passage{xi, e, x});
                    r += edge_dr(x);
                    c += edge_dc(x);
                    e = opposite(x);
                } while (!(r == r0 && c == c0 && e == e0));

                if (passages.empty()) {
                    ++d.free_loops;
                    continue;
                }
                int cycle_id = static_cast<int>(d.cycles.size());
                LinkDiagram::Cycle cyc;
                int k = static_cast<int>(passages.size());
                for (int i = 0; i < k; ++i) {
                    // Arc i runs from the exit of passage i to the entry of
                    // passage i+1 (cyclically).
                    const Passage& cur = passages[i];
                    const Passage& nxt = passages[(i + 1) % k];
                    int arc = d.arc_count++;
                    cyc.arcs.push_back(arc);
                    cyc.from.push_back(LinkDiagram::Port{cur.crossing, cur.out_edge});
                    cyc.to.push_back(LinkDiagram::Port{nxt.crossing, nxt.in_edge});
                    d.crossings[cur.crossing].arc[edge_index(cur.out_edge)] = arc;
                    d.crossings[nxt.crossing].arc[edge_index(nxt.in_edge)] = arc;
                }
                for (const Passage& p : passages) {
                    LinkDiagram::Crossing& x = d.crossings[p.crossing];
                    std::array<int, 2> dir{-edge_dr(p.in_edge), -edge_dc(p.in_edge)};
                    if (over_mask(x.tile) & edge_bit(p.in_edge)) {
                        x.over_dir = dir;
                        x.over_cycle = cycle_id;
                    } else {
                        x.under_dir = dir;
                        x.under_cycle = cycle_id;
                    }
                }
                d.cycles.push_back(std::move(cyc));
            }
        }
    }

    for (LinkDiagram::Crossing& x : d.crossings) {
        assert(x.over_cycle >= 0 && x.under_cycle >= 0);
        x.ref_sign = x.over_dir[0] * x.under_dir[1] - x.over_dir[1] * x.under_dir[0];
        assert(x.ref_sign == 1 || x.ref_sign == -1);
    }
    d.component_count = static_cast<int>(d.cycles.size()) + d.free_loops;
    return d;
}

// ---- canonical PD ----

std::string PDCode::str() const {
    std::ostringstream os;
    for (const Entry& x : entries) {
        os << "X(" << x.arcs[0] << ',' << x.arcs[1] << ',' << x.arcs[2] << ',' << x.arcs[3]
           << ") " << (x.sign > 0 ? '+' : '-') << '\n';
    }
    return os.str();
}

PDCode canonical_pd(const LinkDiagram& d) {
    PDCode best;
    best.arc_count = d.arc_count;
    if (d.crossings.empty()) return best;

    int ncyc = static_cast<int>(d.cycles.size());
    // Intrinsic component order: by the smallest crossing a cycle passes,
    // the over-strand first when two cycles share that crossing.
    std::vector<int> order(ncyc);
    std::iota(order.begin(), order.end(), 0);
    auto cycle_key = [&](int ci) {
        int minx = std::numeric_limits<int>::max();
        for (const LinkDiagram::Port& p : d.cycles[ci].from) minx = std::min(minx, p.crossing);
        bool over_there = d.crossings[minx].over_cycle == ci;
        return std::make_pair(minx, over_there ? 0 : 1);
    };
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return cycle_key(a) < cycle_key(b); });

    long long combos = 1;
    for (const LinkDiagram::Cycle& c : d.cycles) combos *= 2ll * c.arcs.size();
    if (combos > 2000000) throw capacity_error("canonical PD: too many labelings");

    std::vector<int> label(d.arc_count);
    std::vector<bool> incoming(d.arc_count);  // arc ends at its to-port
    std::vector<int> choice(ncyc, 0);         // per cycle: start * 2 + reversed

    bool have_best = false;
    while (true) {
        // Assign labels walking cycles in intrinsic order with chosen
        // direction and starting arc.
        int next = 1;
        std::vector<bool> flipped(ncyc, false);
        std::vector<std::array<int, 4>> port_label(d.crossings.size());
        std::vector<std::array<bool, 4>> port_in(d.crossings.size());
        for (int oi = 0; oi < ncyc; ++oi) {
            int ci = order[oi];
            const LinkDiagram::Cycle& cyc = d.cycles[ci];
            int k = static_cast<int>(cyc.arcs.size());
            int start = choice[ci] / 2;
            bool rev = choice[ci] % 2;
            flipped[ci] = rev;
            for (int s = 0; s < k; ++s) {
                int i = rev ? (start - s % k + 2 * k) % k : (start + s) % k;
                int arc = cyc.arcs[i];
                label[arc] = next++;
                const LinkDiagram::Port from = rev ? cyc.to[i] : cyc.from[i];
                const LinkDiagram::Port to = rev ? cyc.from[i] : cyc.to[i];
                port_label[from.crossing][edge_index(from.edge)] = label[arc];
                port_in[from.crossing][edge_index(from.edge)] = false;
                port_label[to.crossing][edge_index(to.edge)] = label[arc];
                port_in[to.crossing][edge_index(to.edge)] = true;
            }
        }
        PDCode cand;
        cand.arc_count = d.arc_count;
        for (std::size_t xi = 0; xi < d.crossings.size(); ++xi) {
            const LinkDiagram::Crossing& x = d.crossings[xi];
            Edge under_in = Edge::N;
            bool found = false;
            for (Edge e : all_edges) {
                if ((over_mask(x.tile) & edge_bit(e)) == 0 && port_in[xi][edge_index(e)]) {
                    under_in = e;
                    found = true;
                    break;
                }
            }
            assert(found);
            (void)found;
            PDCode::Entry ent;
            Edge e = under_in;
            for (int i = 0; i < 4; ++i) {
                ent.arcs[i] = port_label[xi][edge_index(e)];
                e = next_ccw(e);
            }
            bool of = flipped[x.over_cycle];
            bool uf = flipped[x.under_cycle];
            ent.sign = (of != uf) ? -x.ref_sign : x.ref_sign;
            cand.entries.push_back(ent);
        }
        std::sort(cand.entries.begin(), cand.entries.end());
        if (!have_best || cand.entries < best.entries) {
            best = cand;
            have_best = true;
        }
        // next choice vector
        int ci = 0;
        for (; ci < ncyc; ++ci) {
            if (++choice[ci] < 2 * static_cast<int>(d.cycles[ci].arcs.size())) break;
            choice[ci] = 0;
        }
        if (ci == ncyc) break;
    }
    return best;
}

// ---- bracket and fingerprint ----

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Smoothing port pairs: joining A keeps the bracket convention consistent
// with the crossing signs above (checked by the R1 normalization tests).
void smoothing_pairs(Tile t, bool a_smoothing, std::array<std::pair<Edge, Edge>, 2>& out) {
    bool ne_sw;
    if (t == 10)
        ne_sw = a_smoothing;  // vertical over: A joins N-E and S-W
    else
        ne_sw = !a_smoothing;  // horizontal over: A joins N-W and S-E
    if (ne_sw)
        out = {std::make_pair(Edge::N, Edge::E), std::make_pair(Edge::S, Edge::W)};
    else
        out = {std::make_pair(Edge::N, Edge::W), std::make_pair(Edge::S, Edge::E)};
}

}  // namespace

LaurentPolynomial kauffman_bracket(const LinkDiagram& d, int max_crossings) {
    int c = static_cast<int>(d.crossings.size());
    if (c > max_crossings)
        throw capacity_error("bracket state sum limited to " + std::to_string(max_crossings) +
                             " crossings, diagram has " + std::to_string(c));
    LaurentPolynomial delta =
        LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
    // delta^0 .. delta^(max loops)
    std::vector<LaurentPolynomial> delta_pow{LaurentPolynomial::one()};
    for (int i = 0; i < c + d.component_count + 1; ++i)
        delta_pow.push_back(delta_pow.back() * delta);

    if (c == 0) {
        if (d.component_count == 0) return LaurentPolynomial::one();
        return delta_pow[d.component_count - 1];
    }

    LaurentPolynomial total;
    std::array<std::pair<Edge, Edge>, 2> pairs;
    for (std::uint32_t state = 0; state < (std::uint32_t{1} << c); ++state) {
        UnionFind uf(d.arc_count);
        int a_count = 0;
        for (int i = 0; i < c; ++i) {
            bool a_smoothing = ((state >> i) & 1) == 0;
            if (a_smoothing) ++a_count;
            smoothing_pairs(d.crossings[i].tile, a_smoothing, pairs);
            for (const auto& [e1, e2] : pairs)
                uf.unite(d.crossings[i].arc[edge_index(e1)],
                         d.crossings[i].arc[edge_index(e2)]);
        }
        int loops = d.free_loops;
        for (int a = 0; a < d.arc_count; ++a)
            if (uf.find(a) == a) ++loops;
        total += LaurentPolynomial::monomial(1, a_count - (c - a_count)) * delta_pow[loops - 1];
    }
    return total;
}

int writhe(const LinkDiagram& d) {
    int w = 0;
    for (const LinkDiagram::Crossing& x : d.crossings) w += x.ref_sign;
    return w;
}

namespace {

// (-A^3)^k
LaurentPolynomial writhe_factor(int k) {
    return LaurentPolynomial::monomial((k % 2 == 0) ? 1 : -1, 3 * k);
}

// Smallest writhe over per-component orientation flips. Self-crossings never
// change; a crossing between two cycles flips sign when exactly one of them
// is reversed.
int minimal_writhe(const LinkDiagram& d) {
    int ncyc = static_cast<int>(d.cycles.size());
    if (ncyc <= 1) return writhe(d);
    if (ncyc > 20) throw capacity_error("writhe minimization: too many components");
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t flips = 0; flips < (std::uint32_t{1} << (ncyc - 1)); ++flips) {
        // component 0 stays fixed; reversing every component changes nothing
        int w = 0;
        for (const LinkDiagram::Crossing& x : d.crossings) {
            bool of = x.over_cycle > 0 && ((flips >> (x.over_cycle - 1)) & 1);
            bool uf = x.under_cycle > 0 && ((flips >> (x.under_cycle - 1)) & 1);
            w += (of != uf) ? -x.ref_sign : x.ref_sign;
        }
        best = std::min(best, w);
    }
    return best;
}

}  // namespace

std::string Fingerprint::str() const {
    std::ostringstream os;
    os << "components=" << components << " poly=" << poly.str();
    return os.str();
}

Fingerprint fingerprint(const KnotMosaic& m, int max_crossings) {
    LinkDiagram d = trace_diagram(m);
    Fingerprint f;
    f.components = d.component_count;
    f.poly = kauffman_bracket(d, max_crossings) * writhe_factor(-minimal_writhe(d));
    return f;
}

}  // namespace kmosaic
