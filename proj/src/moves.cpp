#include "kmosaic/moves.hpp"

#include "kmosaic/embedded_data.hpp"
#include "kmosaic/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kmosaic {

std::vector<bool> boundary_profile(const Mosaic& m) {
    std::vector<bool> p;
    p.reserve(4 * m.n);
    for (int c = 0; c < m.n; ++c) p.push_back(has_point(m.at(0, c), Edge::N));
    for (int r = 0; r < m.n; ++r) p.push_back(has_point(m.at(r, m.n - 1), Edge::E));
    for (int c = 0; c < m.n; ++c) p.push_back(has_point(m.at(m.n - 1, c), Edge::S));
    for (int r = 0; r < m.n; ++r) p.push_back(has_point(m.at(r, 0), Edge::W));
    return p;
}

namespace {

void check_pattern(const MovePattern& p) {
    if (p.side_a.n != p.k || p.side_b.n != p.k)
        throw std::runtime_error("move pattern " + p.label + ": side size mismatch");
    if (p.side_a == p.side_b)
        throw std::runtime_error("move pattern " + p.label + ": sides equal");
    if (!is_interior_consistent(p.side_a) || !is_interior_consistent(p.side_b))
        throw std::runtime_error("move pattern " + p.label + ": side not consistent");
    if (boundary_profile(p.side_a) != boundary_profile(p.side_b))
        throw std::runtime_error("move pattern " + p.label + ": boundary profiles differ");
}

void orient_sides(MovePattern& p) {
    if (encode(p.side_b) < encode(p.side_a)) std::swap(p.side_a, p.side_b);
}

}  // namespace

std::vector<MovePattern> parse_move_patterns(std::string_view text) {
    std::vector<MovePattern> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    // state: waiting for a header, else collecting 2*(k+1) mosaic lines
    MovePattern cur;
    int mosaic_lines = 0;
    std::string record;
    auto finish_side = [&](Mosaic& side) {
        side = parse_mosaic(record);
        record.clear();
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (mosaic_lines == 0) {
            std::istringstream ls(line);
            std::string label;
            int k = 0;
            if (!(ls >> k >> label) || k < 2)
                throw ParseError("expected move pattern header", lineno);
            cur = MovePattern{};
            cur.k = k;
            cur.label = label;
            mosaic_lines = 2 * (k + 1);
            continue;
        }
        record += line + "\n";
        --mosaic_lines;
        if (mosaic_lines == cur.k + 1) {
            finish_side(cur.side_a);
        } else if (mosaic_lines == 0) {
            finish_side(cur.side_b);
            orient_sides(cur);
            check_pattern(cur);
            out.push_back(cur);
        }
    }
    if (mosaic_lines != 0) throw ParseError("truncated move pattern record", lineno);
    return out;
}

std::string serialize_move_patterns(const std::vector<MovePattern>& patterns) {
    std::ostringstream os;
    for (const MovePattern& p : patterns) {
        os << p.k << ' ' << p.label << '\n'
           << serialize_mosaic(p.side_a) << serialize_mosaic(p.side_b) << '\n';
    }
    return os.str();
}

namespace {

inline constexpr Tile crossing_overlay = 0xff;

// The tile carrying both t's strands and extra's, for disjoint connection
// masks. A union forming a crossing reports crossing_overlay instead of a
// tile: the over strand is decided by the caller.
Tile overlay_tile(Tile t, Tile extra) {
    if (extra == 0) return t;
    if (t == 0) return extra;
    assert((connection_mask(t) & connection_mask(extra)) == 0);
    Tile lo = std::min(t, extra), hi = std::max(t, extra);
    if (lo == 1 && hi == 3) return 7;
    if (lo == 2 && hi == 4) return 8;
    assert(lo == 5 && hi == 6);
    return crossing_overlay;
}

struct FamilyChoice {
    Tile extra;  // strands added identically to both sides
    Tile a;
    Tile b;
};

// Per-cell ways of decorating a record cell with extra strands. Points used
// by neither side may carry a bystander strand; where the bystander and one
// side's strand share a cell, that side's tile becomes a crossing whose over
// strand is a free choice, and the tangle test in expand_one keeps only the
// choices that route consistently across the whole window.
std::vector<FamilyChoice> family_choices(Tile a, Tile b) {
    std::vector<FamilyChoice> out;
    std::uint8_t used = connection_mask(a) | connection_mask(b);
    for (Tile extra = 0; extra < tile_count; ++extra) {
        if (connection_mask(extra) & used) continue;
        Tile oa = overlay_tile(a, extra);
        Tile ob = overlay_tile(b, extra);
        if (oa == crossing_overlay && ob == crossing_overlay) {
            // a strand both sides share, crossed by the extra strand; either
            // strand may run on top, the same way on both sides
            out.push_back({extra, 9, 9});
            out.push_back({extra, 10, 10});
        } else if (oa == crossing_overlay) {
            out.push_back({extra, 9, ob});
            out.push_back({extra, 10, ob});
        } else if (ob == crossing_overlay) {
            out.push_back({extra, oa, 9});
            out.push_back({extra, oa, 10});
        } else {
            out.push_back({extra, oa, ob});
        }
    }
    return out;
}

// ---- window tangles ----

// Bracket expansion of a k-window read as an open tangle: for each induced
// pairing of the window-boundary connection points, the polynomial weighting
// it, with closed loops contributing delta factors. The global bracket of any
// mosaic is bilinear in this expansion, so swapping window contents with
// equal expansions never changes a bracket computed around them.
using TangleExpansion = std::map<std::string, LaurentPolynomial>;

TangleExpansion tangle_expansion(const Mosaic& w) {
    const int k = w.n;
    auto node = [&](int r, int c, Edge e) { return ((r * k + c) << 2) | edge_index(e); };
    // boundary connection points, clockwise from the top-left corner
    std::vector<int> boundary;
    for (int c = 0; c < k; ++c)
        if (has_point(w.at(0, c), Edge::N)) boundary.push_back(node(0, c, Edge::N));
    for (int r = 0; r < k; ++r)
        if (has_point(w.at(r, k - 1), Edge::E)) boundary.push_back(node(r, k - 1, Edge::E));
    for (int c = k - 1; c >= 0; --c)
        if (has_point(w.at(k - 1, c), Edge::S)) boundary.push_back(node(k - 1, c, Edge::S));
    for (int r = k - 1; r >= 0; --r)
        if (has_point(w.at(r, 0), Edge::W)) boundary.push_back(node(r, 0, Edge::W));
    std::vector<std::pair<int, int>> crossings;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            if (is_crossing(w.at(r, c))) crossings.push_back({r, c});
    assert(crossings.size() <= 20);
    const LaurentPolynomial delta =
        LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
    TangleExpansion out;
    std::vector<int> parent(4 * k * k);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    for (unsigned state = 0; state < (1u << crossings.size()); ++state) {
        for (int i = 0; i < 4 * k * k; ++i) parent[i] = i;
        int exponent = 0;
        for (size_t i = 0; i < crossings.size(); ++i) {
            auto [r, c] = crossings[i];
            bool a_smoothing = ((state >> i) & 1) == 0;
            exponent += a_smoothing ? 1 : -1;
            // same joins as the closed-diagram bracket: on the vertical-over
            // crossing, A joins N-E and S-W
            bool ne_sw = w.at(r, c) == 10 ? a_smoothing : !a_smoothing;
            if (ne_sw) {
                unite(node(r, c, Edge::N), node(r, c, Edge::E));
                unite(node(r, c, Edge::S), node(r, c, Edge::W));
            } else {
                unite(node(r, c, Edge::N), node(r, c, Edge::W));
                unite(node(r, c, Edge::S), node(r, c, Edge::E));
            }
        }
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) {
                Tile t = w.at(r, c);
                if (!is_crossing(t))
                    for (Edge e : all_edges)
                        if (has_point(t, e) && edge_index(strand_exit(t, e)) > edge_index(e))
                            unite(node(r, c, e), node(r, c, strand_exit(t, e)));
                if (c + 1 < k && has_point(t, Edge::E))
                    unite(node(r, c, Edge::E), node(r, c + 1, Edge::W));
                if (r + 1 < k && has_point(t, Edge::S))
                    unite(node(r, c, Edge::S), node(r + 1, c, Edge::N));
            }
        std::vector<int> roots;
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c)
                for (Edge e : all_edges)
                    if (has_point(w.at(r, c), e)) roots.push_back(find(node(r, c, e)));
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        std::map<int, std::vector<int>> ends;  // strand root -> boundary indices
        for (size_t i = 0; i < boundary.size(); ++i) ends[find(boundary[i])].push_back(i);
        int loops = static_cast<int>(roots.size() - ends.size());
        std::string key;
        for (size_t i = 0; i < boundary.size(); ++i) {
            const std::vector<int>& pair = ends.at(find(boundary[i]));
            assert(pair.size() == 2);
            int partner = pair[0] == static_cast<int>(i) ? pair[1] : pair[0];
            if (partner > static_cast<int>(i))
                key += std::to_string(i) + "-" + std::to_string(partner) + ",";
        }
        LaurentPolynomial term = LaurentPolynomial::monomial(1, exponent);
        for (int i = 0; i < loops; ++i) term = term * delta;
        out[key] += term;
    }
    std::erase_if(out, [](const auto& entry) { return entry.second.is_zero(); });
    return out;
}

// Whether a : b equals the reference ratio num : den entrywise.
bool tangles_in_ratio(const TangleExpansion& a, const TangleExpansion& b,
                      const LaurentPolynomial& num, const LaurentPolynomial& den) {
    if (a.size() != b.size()) return false;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!(ia->second * den == ib->second * num)) return false;
    }
    return true;
}

void expand_one(const MovePattern& base, std::vector<MovePattern>& out) {
    const int k = base.k;
    const int cells = k * k;
    // the record's own side-to-side bracket ratio, which every family member
    // must reproduce (the strand-count-preserving moves have ratio 1, the
    // kink moves a single writhe factor)
    TangleExpansion tl_a = tangle_expansion(base.side_a);
    TangleExpansion tl_b = tangle_expansion(base.side_b);
    if (tl_a.empty() || tl_b.empty())
        throw std::runtime_error("move pattern " + base.label + ": empty tangle");
    const LaurentPolynomial num = tl_a.begin()->second;
    const LaurentPolynomial den = tl_b.begin()->second;
    if (!tangles_in_ratio(tl_a, tl_b, num, den))
        throw std::runtime_error("move pattern " + base.label + ": sides not bracket-related");
    std::vector<std::vector<FamilyChoice>> choices(cells);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            choices[r * k + c] = family_choices(base.side_a.at(r, c), base.side_b.at(r, c));
    std::vector<int> pick(cells, 0);
    int member = 0;
    auto extra_at = [&](int r, int c) { return choices[r * k + c][pick[r * k + c]].extra; };
    auto emit = [&]() {
        MovePattern q;
        q.k = k;
        q.side_a = Mosaic::blank(k);
        q.side_b = Mosaic::blank(k);
        bool any_extra = false;
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) {
                const FamilyChoice& ch = choices[r * k + c][pick[r * k + c]];
                q.side_a.set(r, c, ch.a);
                q.side_b.set(r, c, ch.b);
                any_extra = any_extra || ch.extra != 0;
            }
        if (any_extra && !tangles_in_ratio(tangle_expansion(q.side_a),
                                           tangle_expansion(q.side_b), num, den))
            return;
        q.label = any_extra ? base.label + "." + std::to_string(++member) : base.label;
        orient_sides(q);
        check_pattern(q);
        out.push_back(std::move(q));
    };
    auto consistent_so_far = [&](int r, int c) {
        Tile e = extra_at(r, c);
        if (c > 0 && has_point(e, Edge::W) != has_point(extra_at(r, c - 1), Edge::E))
            return false;
        if (r > 0 && has_point(e, Edge::N) != has_point(extra_at(r - 1, c), Edge::S))
            return false;
        return true;
    };
    auto dfs = [&](auto&& self, int cell) -> void {
        if (cell == cells) {
            emit();
            return;
        }
        int r = cell / k, c = cell % k;
        for (pick[cell] = 0; pick[cell] < static_cast<int>(choices[cell].size()); ++pick[cell])
            if (consistent_so_far(r, c)) self(self, cell + 1);
    };
    dfs(dfs, 0);
}

}  // namespace

std::vector<MovePattern> expand_families(const std::vector<MovePattern>& base) {
    std::vector<MovePattern> out;
    for (const MovePattern& p : base) {
        check_pattern(p);
        expand_one(p, out);
    }
    return out;
}

std::vector<MovePattern> close_under_symmetry(const std::vector<MovePattern>& base) {
    std::vector<MovePattern> out;
    std::map<std::pair<Encoding, Encoding>, bool> seen;
    for (const MovePattern& p : base) check_pattern(p);
    for (const MovePattern& p : base) {
        for (D4 g : d4_elements) {
            MovePattern q;
            q.k = p.k;
            q.side_a = transform_mosaic(p.side_a, g);
            q.side_b = transform_mosaic(p.side_b, g);
            orient_sides(q);
            auto key = std::make_pair(encode(q.side_a), encode(q.side_b));
            if (seen.emplace(key, true).second) {
                q.label = p.label;
                if (!(g == D4{})) q.label += ":" + d4_name(g);
                out.push_back(std::move(q));
            }
        }
    }
    return out;
}

const std::vector<MovePattern>& generator_catalog() {
    static const std::vector<MovePattern> catalog =
        close_under_symmetry(expand_families(parse_move_patterns(data::move_patterns_text())));
    return catalog;
}

bool move_applies(const Mosaic& m, const MovePattern& p, int row, int col) {
    if (row < 0 || col < 0 || row + p.k > m.n || col + p.k > m.n) return false;
    auto window_is = [&](const Mosaic& side) {
        for (int i = 0; i < p.k; ++i)
            for (int j = 0; j < p.k; ++j)
                if (m.at(row + i, col + j) != side.at(i, j)) return false;
        return true;
    };
    return window_is(p.side_a) || window_is(p.side_b);
}

Mosaic apply_move(const Mosaic& m, const std::vector<MovePattern>& catalog,
                  const MoveApplication& app) {
    assert(app.pattern >= 0 && app.pattern < static_cast<int>(catalog.size()));
    const MovePattern& p = catalog[app.pattern];
    assert(move_applies(m, p, app.row, app.col));
    bool is_a = true;
    for (int i = 0; i < p.k && is_a; ++i)
        for (int j = 0; j < p.k; ++j)
            if (m.at(app.row + i, app.col + j) != p.side_a.at(i, j)) {
                is_a = false;
                break;
            }
    Mosaic out = m;
    write_submosaic(out, is_a ? p.side_b : p.side_a, app.row, app.col);
    return out;
}

std::vector<MoveApplication> applicable_moves(const Mosaic& m,
                                              const std::vector<MovePattern>& catalog) {
    std::vector<MoveApplication> out;
    for (int pi = 0; pi < static_cast<int>(catalog.size()); ++pi) {
        const MovePattern& p = catalog[pi];
        for (int r = 0; r + p.k <= m.n; ++r)
            for (int c = 0; c + p.k <= m.n; ++c)
                if (move_applies(m, p, r, c)) out.push_back(MoveApplication{pi, r, c});
    }
    return out;
}

namespace {

std::uint64_t pack_window(const Mosaic& m, int k, int r, int c) {
    std::uint64_t key = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) key = (key << 4) | m.at(r + i, c + j);
    return key;
}

std::uint64_t pack_side(const Mosaic& side) {
    return pack_window(side, side.n, 0, 0);
}

}  // namespace

MoveIndex::MoveIndex(const std::vector<MovePattern>& catalog) : catalog_(&catalog) {
    for (const MovePattern& p : catalog) {
        assert(p.k * p.k * 4 <= 64);
        if (std::find(sizes_.begin(), sizes_.end(), p.k) == sizes_.end())
            sizes_.push_back(p.k);
    }
    std::sort(sizes_.begin(), sizes_.end());
    maps_.resize(sizes_.size());
    for (int pi = 0; pi < static_cast<int>(catalog.size()); ++pi) {
        const MovePattern& p = catalog[pi];
        std::size_t si = std::find(sizes_.begin(), sizes_.end(), p.k) - sizes_.begin();
        maps_[si][pack_side(p.side_a)].push_back(pi);
        maps_[si][pack_side(p.side_b)].push_back(pi);
    }
}

void MoveIndex::for_each_application(
    const Mosaic& m, const std::function<void(const MoveApplication&)>& fn) const {
    for (const MoveApplication& app : applications(m)) fn(app);
}

std::vector<MoveApplication> MoveIndex::applications(const Mosaic& m) const {
    std::vector<MoveApplication> out;
    for (std::size_t si = 0; si < sizes_.size(); ++si) {
        int k = sizes_[si];
        const auto& map = maps_[si];
        for (int r = 0; r + k <= m.n; ++r) {
            for (int c = 0; c + k <= m.n; ++c) {
                auto it = map.find(pack_window(m, k, r, c));
                if (it == map.end()) continue;
                for (int pi : it->second) out.push_back(MoveApplication{pi, r, c});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const MoveApplication& a, const MoveApplication& b) {
        return std::tie(a.pattern, a.row, a.col) < std::tie(b.pattern, b.row, b.col);
    });
    return out;
}

}  // namespace kmosaic
