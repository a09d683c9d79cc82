#include "kmosaic/grid.hpp"

#include "kmosaic/zoom.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace kmosaic {

// ---- validation and IO ----

void validate_grid(const GridDiagram& g) {
    if (g.size < 0) throw std::invalid_argument("negative grid size");
    std::size_t n = static_cast<std::size_t>(g.size);
    if (g.sigma_x.size() != n || g.sigma_o.size() != n)
        throw std::invalid_argument("grid permutation length differs from size");
    std::vector<bool> seen_x(n, false), seen_o(n, false);
    for (std::size_t c = 0; c < n; ++c) {
        int x = g.sigma_x[c];
        int o = g.sigma_o[c];
        if (x < 1 || x > g.size || o < 1 || o > g.size)
            throw std::invalid_argument("grid image out of range");
        if (seen_x[x - 1] || seen_o[o - 1])
            throw std::invalid_argument("grid map is not a bijection");
        seen_x[x - 1] = true;
        seen_o[o - 1] = true;
        if (x == o)
            throw std::invalid_argument("X and O share a square at column " +
                                        std::to_string(c + 1));
    }
}

GridDiagram parse_grid(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> lines;
    std::string line;
    int lineno = 0;
    std::vector<int> line_numbers;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(start, end - start + 1));
        line_numbers.push_back(lineno);
    }
    if (lines.size() != 3) throw ParseError("grid needs a size line and X/O lines", lineno);
    GridDiagram g;
    try {
        g.size = std::stoi(lines[0]);
    } catch (const std::exception&) {
        throw ParseError("bad grid size", line_numbers[0]);
    }
    auto parse_row = [&](const std::string& s, const char* prefix, int ln) {
        if (s.rfind(prefix, 0) != 0) throw ParseError("expected X:/O: line", ln);
        std::istringstream ls(s.substr(2));
        std::vector<int> vals;
        int v = 0;
        while (ls >> v) vals.push_back(v);
        if (!ls.eof()) throw ParseError("bad grid image list", ln);
        if (static_cast<int>(vals.size()) != g.size)
            throw ParseError("grid image count differs from size", ln);
        return vals;
    };
    g.sigma_x = parse_row(lines[1], "X:", line_numbers[1]);
    g.sigma_o = parse_row(lines[2], "O:", line_numbers[2]);
    validate_grid(g);
    return g;
}

std::string serialize_grid(const GridDiagram& g) {
    std::ostringstream os;
    os << g.size << '\n';
    os << "X:";
    for (int v : g.sigma_x) os << ' ' << v;
    os << '\n' << "O:";
    for (int v : g.sigma_o) os << ' ' << v;
    os << '\n';
    return os.str();
}

GridDiagram load_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_grid(buf.str());
}

// ---- rendering into a mosaic ----

namespace {

Tile corner_tile(bool vertical_up, bool horizontal_east) {
    if (vertical_up) return horizontal_east ? Tile{3} : Tile{4};
    return horizontal_east ? Tile{2} : Tile{1};
}

}  // namespace

KnotMosaic grid_to_mosaic(const GridDiagram& g) {
    if (g.size == 0) return KnotMosaic(Mosaic::blank(1));
    validate_grid(g);
    int n = g.size;
    std::vector<int> inv_x(n + 1, 0), inv_o(n + 1, 0);
    for (int c = 1; c <= n; ++c) {
        inv_x[g.sigma_x[c - 1]] = c;
        inv_o[g.sigma_o[c - 1]] = c;
    }
    // Row j of the grid is mosaic row n - j; column i is mosaic column i - 1.
    std::vector<char> vert(static_cast<std::size_t>(n) * n, 0);
    std::vector<char> horiz(static_cast<std::size_t>(n) * n, 0);
    auto idx = [n](int r, int c) { return static_cast<std::size_t>(r) * n + c; };
    for (int i = 1; i <= n; ++i) {
        int lo = std::min(g.sigma_x[i - 1], g.sigma_o[i - 1]);
        int hi = std::max(g.sigma_x[i - 1], g.sigma_o[i - 1]);
        for (int j = lo + 1; j < hi; ++j) vert[idx(n - j, i - 1)] = 1;
    }
    for (int j = 1; j <= n; ++j) {
        int lo = std::min(inv_x[j], inv_o[j]);
        int hi = std::max(inv_x[j], inv_o[j]);
        for (int i = lo + 1; i < hi; ++i) horiz[idx(n - j, i - 1)] = 1;
    }
    Mosaic m = Mosaic::blank(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            bool v = vert[idx(r, c)];
            bool h = horiz[idx(r, c)];
            if (v && h)
                m.set(r, c, 10);
            else if (v)
                m.set(r, c, 6);
            else if (h)
                m.set(r, c, 5);
        }
    auto place = [&](int i, int j, int vpartner, int hpartner) {
        assert(m.at(n - j, i - 1) == 0);
        m.set(n - j, i - 1, corner_tile(vpartner > j, hpartner > i));
    };
    for (int i = 1; i <= n; ++i) {
        int jx = g.sigma_x[i - 1];
        int jo = g.sigma_o[i - 1];
        place(i, jx, jo, inv_o[jx]);
        place(i, jo, jx, inv_x[jo]);
    }
    return KnotMosaic(std::move(m));
}

// ---- extraction from a mosaic ----

namespace {

struct Span {
    int fixed = 0;  // column for vertical spans, row for horizontal ones
    int lo = 0;
    int hi = 0;
};

bool corner_tile_p(Tile t) { return t >= 1 && t <= 4; }

}  // namespace

GridDiagram mosaic_to_grid(const KnotMosaic& km) {
    const Mosaic& base = km.mosaic();
    bool blank = std::all_of(base.cells.begin(), base.cells.end(),
                             [](Tile t) { return t == 0; });
    if (blank) return GridDiagram{};

    Mosaic z = zoom5(base);
    int zn = z.n;
    auto idx = [zn](int r, int c) { return static_cast<std::size_t>(r) * zn + c; };

    std::vector<Span> vspans, hspans;
    std::vector<int> vspan_at(static_cast<std::size_t>(zn) * zn, -1);
    std::vector<int> hspan_at(static_cast<std::size_t>(zn) * zn, -1);
    for (int c = 0; c < zn; ++c)
        for (int r = 0; r < zn; ++r) {
            Tile t = z.at(r, c);
            assert(t <= 6 || t == 10);
            if (!(has_point(t, Edge::S) && !has_point(t, Edge::N))) continue;
            int r2 = r + 1;
            while (r2 < zn && has_point(z.at(r2, c), Edge::N) &&
                   has_point(z.at(r2, c), Edge::S))
                ++r2;
            assert(r2 < zn && has_point(z.at(r2, c), Edge::N));
            vspan_at[idx(r, c)] = static_cast<int>(vspans.size());
            vspan_at[idx(r2, c)] = static_cast<int>(vspans.size());
            vspans.push_back(Span{c, r, r2});
        }
    for (int r = 0; r < zn; ++r)
        for (int c = 0; c < zn; ++c) {
            Tile t = z.at(r, c);
            if (!(has_point(t, Edge::E) && !has_point(t, Edge::W))) continue;
            int c2 = c + 1;
            while (c2 < zn && has_point(z.at(r, c2), Edge::W) &&
                   has_point(z.at(r, c2), Edge::E))
                ++c2;
            assert(c2 < zn && has_point(z.at(r, c2), Edge::W));
            hspan_at[idx(r, c)] = static_cast<int>(hspans.size());
            hspan_at[idx(r, c2)] = static_cast<int>(hspans.size());
            hspans.push_back(Span{r, c, c2});
        }
    assert(vspans.size() == hspans.size());
    int n = static_cast<int>(vspans.size());

    // Grid columns left to right; grid rows with the topmost segment at row n.
    std::vector<int> vorder(vspans.size()), horder(hspans.size());
    std::iota(vorder.begin(), vorder.end(), 0);
    std::iota(horder.begin(), horder.end(), 0);
    std::sort(vorder.begin(), vorder.end(), [&](int a, int b) {
        if (vspans[a].fixed != vspans[b].fixed) return vspans[a].fixed < vspans[b].fixed;
        return vspans[a].lo < vspans[b].lo;
    });
    std::sort(horder.begin(), horder.end(), [&](int a, int b) {
        if (hspans[a].fixed != hspans[b].fixed) return hspans[a].fixed < hspans[b].fixed;
        return hspans[a].lo < hspans[b].lo;
    });
    std::vector<int> col_of(vspans.size()), row_of(hspans.size());
    for (int k = 0; k < n; ++k) col_of[vorder[k]] = k + 1;
    for (int k = 0; k < n; ++k) row_of[horder[k]] = n - k;

    GridDiagram g;
    g.size = n;
    g.sigma_x.assign(n, 0);
    g.sigma_o.assign(n, 0);
    std::vector<char> done(static_cast<std::size_t>(zn) * zn, 0);
    for (int r0 = 0; r0 < zn; ++r0)
        for (int c0 = 0; c0 < zn; ++c0) {
            if (!corner_tile_p(z.at(r0, c0)) || done[idx(r0, c0)]) continue;
            int r = r0, c = c0;
            do {
                int v = vspan_at[idx(r, c)];
                int h = hspan_at[idx(r, c)];
                assert(v >= 0 && h >= 0);
                g.sigma_x[col_of[v] - 1] = row_of[h];
                done[idx(r, c)] = 1;
                int r2 = vspans[v].lo == r ? vspans[v].hi : vspans[v].lo;
                int h2 = hspan_at[idx(r2, c)];
                assert(h2 >= 0);
                g.sigma_o[col_of[v] - 1] = row_of[h2];
                done[idx(r2, c)] = 1;
                int c2 = hspans[h2].lo == c ? hspans[h2].hi : hspans[h2].lo;
                r = r2;
                c = c2;
            } while (r != r0 || c != c0);
        }
    validate_grid(g);
    return g;
}

GridDiagram canonical_orientation(const GridDiagram& g) {
    if (g.size == 0) return g;
    return mosaic_to_grid(grid_to_mosaic(g));
}

// ---- stabilization and destabilization ----

GridDiagram stabilize(const GridDiagram& g, bool on_x, StabCorner corner, int column) {
    assert(column >= 1 && column <= g.size);
    const std::vector<int>& a = on_x ? g.sigma_x : g.sigma_o;
    const std::vector<int>& b = on_x ? g.sigma_o : g.sigma_x;
    int i = column;
    int j = a[i - 1];
    bool col_after = corner == StabCorner::NE || corner == StabCorner::SE;
    bool row_above = corner == StabCorner::NW || corner == StabCorner::NE;
    int p = col_after ? i + 1 : i;
    int q = row_above ? j + 1 : j;
    auto shift_c = [p](int c) { return c >= p ? c + 1 : c; };
    auto shift_r = [q](int r) { return r >= q ? r + 1 : r; };
    std::vector<int> na(g.size + 1, 0), nb(g.size + 1, 0);
    for (int c = 1; c <= g.size; ++c) {
        na[shift_c(c) - 1] = shift_r(a[c - 1]);
        nb[shift_c(c) - 1] = shift_r(b[c - 1]);
    }
    // The stabilized decoration becomes two same-type decorations on the
    // diagonal away from the elbow; the elbow takes the opposite type.
    switch (corner) {
        case StabCorner::NW: na[i - 1] = j;     na[i] = j + 1; nb[i - 1] = j + 1; break;
        case StabCorner::NE: na[i - 1] = j + 1; na[i] = j;     nb[i]     = j + 1; break;
        case StabCorner::SW: na[i - 1] = j + 1; na[i] = j;     nb[i - 1] = j;     break;
        case StabCorner::SE: na[i - 1] = j;     na[i] = j + 1; nb[i]     = j;     break;
    }
    GridDiagram out;
    out.size = g.size + 1;
    out.sigma_x = on_x ? na : nb;
    out.sigma_o = on_x ? nb : na;
    validate_grid(out);
    return out;
}

namespace {

int block_decorations(const GridDiagram& g, int i, int j) {
    int count = 0;
    for (int c = i; c <= i + 1; ++c)
        for (int r = j; r <= j + 1; ++r) {
            if (g.sigma_x[c - 1] == r) ++count;
            if (g.sigma_o[c - 1] == r) ++count;
        }
    return count;
}

}  // namespace

bool can_destabilize(const GridDiagram& g, int i, int j) {
    if (i < 1 || i >= g.size || j < 1 || j >= g.size) return false;
    return block_decorations(g, i, j) == 3;
}

GridDiagram destabilize(const GridDiagram& g, int i, int j) {
    if (!can_destabilize(g, i, j))
        throw std::invalid_argument("no three-decoration block at the site");
    int empty_c = 0, empty_r = 0;
    for (int c = i; c <= i + 1; ++c)
        for (int r = j; r <= j + 1; ++r)
            if (g.sigma_x[c - 1] != r && g.sigma_o[c - 1] != r) {
                empty_c = c;
                empty_r = r;
            }
    assert(empty_c != 0);
    int elbow_c = empty_c == i ? i + 1 : i;
    int elbow_r = empty_r == j ? j + 1 : j;
    bool elbow_is_x = g.sigma_x[elbow_c - 1] == elbow_r;
    assert(elbow_is_x || g.sigma_o[elbow_c - 1] == elbow_r);

    auto map_c = [i](int c) { return c <= i ? c : (c == i + 1 ? i : c - 1); };
    auto map_r = [j](int r) { return r <= j ? r : (r == j + 1 ? j : r - 1); };
    GridDiagram out;
    out.size = g.size - 1;
    out.sigma_x.assign(out.size, 0);
    out.sigma_o.assign(out.size, 0);
    auto in_block = [&](int c, int r) {
        return (c == i || c == i + 1) && (r == j || r == j + 1);
    };
    for (int c = 1; c <= g.size; ++c) {
        int rx = g.sigma_x[c - 1];
        if (!in_block(c, rx)) {
            assert(out.sigma_x[map_c(c) - 1] == 0);
            out.sigma_x[map_c(c) - 1] = map_r(rx);
        }
        int ro = g.sigma_o[c - 1];
        if (!in_block(c, ro)) {
            assert(out.sigma_o[map_c(c) - 1] == 0);
            out.sigma_o[map_c(c) - 1] = map_r(ro);
        }
    }
    // The block collapses to one decoration of the elbow's opposite type at
    // the merged position of the formerly empty square.
    std::vector<int>& placed = elbow_is_x ? out.sigma_o : out.sigma_x;
    assert(placed[i - 1] == 0);
    placed[i - 1] = j;
    validate_grid(out);
    return out;
}

// ---- commutation and cyclic permutation ----

namespace {

bool intervals_ok(int a1, int b1, int a2, int b2, bool allow_nested) {
    if (a1 > b1) std::swap(a1, b1);
    if (a2 > b2) std::swap(a2, b2);
    if (b1 < a2 || b2 < a1) return true;
    if (allow_nested && ((a1 < a2 && b2 < b1) || (a2 < a1 && b1 < b2))) return true;
    return false;
}

}  // namespace

bool can_commute_columns(const GridDiagram& g, int i, bool allow_nested) {
    if (i < 1 || i >= g.size) return false;
    return intervals_ok(g.sigma_x[i - 1], g.sigma_o[i - 1], g.sigma_x[i], g.sigma_o[i],
                        allow_nested);
}

bool can_commute_rows(const GridDiagram& g, int j, bool allow_nested) {
    if (j < 1 || j >= g.size) return false;
    int x1 = 0, o1 = 0, x2 = 0, o2 = 0;
    for (int c = 1; c <= g.size; ++c) {
        if (g.sigma_x[c - 1] == j) x1 = c;
        if (g.sigma_o[c - 1] == j) o1 = c;
        if (g.sigma_x[c - 1] == j + 1) x2 = c;
        if (g.sigma_o[c - 1] == j + 1) o2 = c;
    }
    return intervals_ok(x1, o1, x2, o2, allow_nested);
}

GridDiagram commute_columns(const GridDiagram& g, int i, bool allow_nested) {
    if (!can_commute_columns(g, i, allow_nested))
        throw std::invalid_argument("column decorations are not strictly separated");
    GridDiagram out = g;
    std::swap(out.sigma_x[i - 1], out.sigma_x[i]);
    std::swap(out.sigma_o[i - 1], out.sigma_o[i]);
    return out;
}

GridDiagram commute_rows(const GridDiagram& g, int j, bool allow_nested) {
    if (!can_commute_rows(g, j, allow_nested))
        throw std::invalid_argument("row decorations are not strictly separated");
    GridDiagram out = g;
    for (int c = 0; c < g.size; ++c) {
        for (std::vector<int>* s : {&out.sigma_x, &out.sigma_o}) {
            if ((*s)[c] == j)
                (*s)[c] = j + 1;
            else if ((*s)[c] == j + 1)
                (*s)[c] = j;
        }
    }
    return out;
}

GridDiagram cycle(const GridDiagram& g, CycleDirection dir) {
    GridDiagram out = g;
    if (g.size == 0) return out;
    switch (dir) {
        case CycleDirection::ColumnsLeft:
            std::rotate(out.sigma_x.begin(), out.sigma_x.begin() + 1, out.sigma_x.end());
            std::rotate(out.sigma_o.begin(), out.sigma_o.begin() + 1, out.sigma_o.end());
            break;
        case CycleDirection::ColumnsRight:
            std::rotate(out.sigma_x.begin(), out.sigma_x.end() - 1, out.sigma_x.end());
            std::rotate(out.sigma_o.begin(), out.sigma_o.end() - 1, out.sigma_o.end());
            break;
        case CycleDirection::RowsUp:
            for (int c = 0; c < g.size; ++c) {
                out.sigma_x[c] = out.sigma_x[c] % g.size + 1;
                out.sigma_o[c] = out.sigma_o[c] % g.size + 1;
            }
            break;
        case CycleDirection::RowsDown:
            for (int c = 0; c < g.size; ++c) {
                out.sigma_x[c] = out.sigma_x[c] == 1 ? g.size : out.sigma_x[c] - 1;
                out.sigma_o[c] = out.sigma_o[c] == 1 ? g.size : out.sigma_o[c] - 1;
            }
            break;
    }
    return out;
}

// ---- uniform move handles ----

GridDiagram apply_grid_move(const GridDiagram& g, const GridMove& mv, bool allow_nested) {
    switch (mv.kind) {
        case GridMoveKind::Stabilize:
            return stabilize(g, mv.on_x, mv.corner, mv.i);
        case GridMoveKind::Destabilize:
            return destabilize(g, mv.i, mv.j);
        case GridMoveKind::CommuteColumns:
            return commute_columns(g, mv.i, allow_nested);
        case GridMoveKind::CommuteRows:
            return commute_rows(g, mv.i, allow_nested);
        case GridMoveKind::Cycle:
            return cycle(g, mv.dir);
    }
    throw std::invalid_argument("unknown grid move");
}

std::vector<GridMove> legal_moves(const GridDiagram& g, bool allow_nested) {
    std::vector<GridMove> moves;
    if (g.size == 0) return moves;
    for (int i = 1; i <= g.size; ++i)
        for (bool on_x : {true, false})
            for (StabCorner corner : {StabCorner::NW, StabCorner::NE, StabCorner::SW,
                                      StabCorner::SE}) {
                GridMove mv;
                mv.kind = GridMoveKind::Stabilize;
                mv.on_x = on_x;
                mv.corner = corner;
                mv.i = i;
                moves.push_back(mv);
            }
    for (int i = 1; i < g.size; ++i)
        for (int j = 1; j < g.size; ++j)
            if (can_destabilize(g, i, j)) {
                GridMove mv;
                mv.kind = GridMoveKind::Destabilize;
                mv.i = i;
                mv.j = j;
                moves.push_back(mv);
            }
    for (int i = 1; i < g.size; ++i)
        if (can_commute_columns(g, i, allow_nested)) {
            GridMove mv;
            mv.kind = GridMoveKind::CommuteColumns;
            mv.i = i;
            moves.push_back(mv);
        }
    for (int j = 1; j < g.size; ++j)
        if (can_commute_rows(g, j, allow_nested)) {
            GridMove mv;
            mv.kind = GridMoveKind::CommuteRows;
            mv.i = j;
            moves.push_back(mv);
        }
    for (CycleDirection dir : {CycleDirection::ColumnsLeft, CycleDirection::ColumnsRight,
                               CycleDirection::RowsUp, CycleDirection::RowsDown}) {
        GridMove mv;
        mv.kind = GridMoveKind::Cycle;
        mv.dir = dir;
        moves.push_back(mv);
    }
    return moves;
}

namespace {

const char* corner_name(StabCorner c) {
    switch (c) {
        case StabCorner::NW: return "NW";
        case StabCorner::NE: return "NE";
        case StabCorner::SW: return "SW";
        case StabCorner::SE: return "SE";
    }
    return "";
}

std::vector<std::string> split_colon(std::string_view s) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(':', pos);
        if (next == std::string_view::npos) {
            parts.emplace_back(s.substr(pos));
            break;
        }
        parts.emplace_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return parts;
}

int parse_index(const std::string& s) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad index in move spec: " + s);
    }
}

}  // namespace

GridMove parse_grid_move(std::string_view spec) {
    std::vector<std::string> parts = split_colon(spec);
    GridMove mv;
    if (parts.empty()) throw std::invalid_argument("empty move spec");
    const std::string& head = parts[0];
    if (head == "stab" && parts.size() == 4) {
        mv.kind = GridMoveKind::Stabilize;
        if (parts[1] == "X")
            mv.on_x = true;
        else if (parts[1] == "O")
            mv.on_x = false;
        else
            throw std::invalid_argument("stab type must be X or O");
        if (parts[2] == "NW")
            mv.corner = StabCorner::NW;
        else if (parts[2] == "NE")
            mv.corner = StabCorner::NE;
        else if (parts[2] == "SW")
            mv.corner = StabCorner::SW;
        else if (parts[2] == "SE")
            mv.corner = StabCorner::SE;
        else
            throw std::invalid_argument("stab corner must be NW/NE/SW/SE");
        mv.i = parse_index(parts[3]);
        return mv;
    }
    if (head == "destab" && parts.size() == 3) {
        mv.kind = GridMoveKind::Destabilize;
        mv.i = parse_index(parts[1]);
        mv.j = parse_index(parts[2]);
        return mv;
    }
    if (head == "commute" && parts.size() == 3) {
        if (parts[1] == "cols")
            mv.kind = GridMoveKind::CommuteColumns;
        else if (parts[1] == "rows")
            mv.kind = GridMoveKind::CommuteRows;
        else
            throw std::invalid_argument("commute axis must be cols or rows");
        mv.i = parse_index(parts[2]);
        return mv;
    }
    if (head == "cycle" && parts.size() == 3) {
        mv.kind = GridMoveKind::Cycle;
        if (parts[1] == "cols" && parts[2] == "left")
            mv.dir = CycleDirection::ColumnsLeft;
        else if (parts[1] == "cols" && parts[2] == "right")
            mv.dir = CycleDirection::ColumnsRight;
        else if (parts[1] == "rows" && parts[2] == "up")
            mv.dir = CycleDirection::RowsUp;
        else if (parts[1] == "rows" && parts[2] == "down")
            mv.dir = CycleDirection::RowsDown;
        else
            throw std::invalid_argument("cycle spec must be cols:left/right or rows:up/down");
        return mv;
    }
    throw std::invalid_argument("unrecognized move spec: " + std::string(spec));
}

std::string grid_move_name(const GridMove& mv) {
    std::ostringstream os;
    switch (mv.kind) {
        case GridMoveKind::Stabilize:
            os << "stab:" << (mv.on_x ? 'X' : 'O') << ':' << corner_name(mv.corner) << ':'
               << mv.i;
            break;
        case GridMoveKind::Destabilize:
            os << "destab:" << mv.i << ':' << mv.j;
            break;
        case GridMoveKind::CommuteColumns:
            os << "commute:cols:" << mv.i;
            break;
        case GridMoveKind::CommuteRows:
            os << "commute:rows:" << mv.i;
            break;
        case GridMoveKind::Cycle:
            os << "cycle:";
            switch (mv.dir) {
                case CycleDirection::ColumnsLeft: os << "cols:left"; break;
                case CycleDirection::ColumnsRight: os << "cols:right"; break;
                case CycleDirection::RowsUp: os << "rows:up"; break;
                case CycleDirection::RowsDown: os << "rows:down"; break;
            }
            break;
    }
    return os.str();
}

// ---- cyclic permutation decomposition ----

namespace {

std::string grid_key(const GridDiagram& g) {
    std::string s;
    s.push_back(static_cast<char>(g.size));
    for (int v : g.sigma_x) s.push_back(static_cast<char>(v));
    for (int v : g.sigma_o) s.push_back(static_cast<char>(v));
    return s;
}

}  // namespace

std::optional<std::vector<GridMove>> decompose_cycle(const GridDiagram& g,
                                                     CycleDirection dir, int max_depth) {
    GridDiagram target = cycle(g, dir);
    if (target == g) return std::vector<GridMove>{};
    int max_size = g.size + 1;
    constexpr std::size_t state_cap = 1'500'000;

    struct Step {
        std::string parent;
        GridMove move;
    };
    std::unordered_map<std::string, Step> visited;
    std::string start_key = grid_key(g);
    std::string target_key = grid_key(target);
    visited.emplace(start_key, Step{});
    std::deque<std::pair<GridDiagram, int>> queue;
    queue.emplace_back(g, 0);
    while (!queue.empty()) {
        auto [cur, depth] = std::move(queue.front());
        queue.pop_front();
        if (depth >= max_depth) continue;
        std::string cur_key = grid_key(cur);
        for (const GridMove& mv : legal_moves(cur)) {
            if (mv.kind == GridMoveKind::Cycle) continue;
            if (mv.kind == GridMoveKind::Stabilize && cur.size >= max_size) continue;
            GridDiagram next = apply_grid_move(cur, mv);
            std::string key = grid_key(next);
            if (!visited.emplace(key, Step{cur_key, mv}).second) continue;
            if (key == target_key) {
                std::vector<GridMove> path;
                std::string at = key;
                while (at != start_key) {
                    const Step& step = visited.at(at);
                    path.push_back(step.move);
                    at = step.parent;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (visited.size() > state_cap) return std::nullopt;
            queue.emplace_back(std::move(next), depth + 1);
        }
    }
    return std::nullopt;
}

// ---- translation to mosaic certificates ----

std::optional<Certificate> elementary_move_as_certificate(const GridDiagram& g,
                                                          const GridMove& mv,
                                                          const SearchLimits& limits) {
    const std::vector<MovePattern>& catalog = generator_catalog();
    if (mv.kind != GridMoveKind::Cycle) {
        GridDiagram moved = apply_grid_move(g, mv);
        return find_certificate(grid_to_mosaic(g), grid_to_mosaic(moved), catalog, limits);
    }
    auto steps = decompose_cycle(g, mv.dir);
    if (!steps) return std::nullopt;
    Certificate acc;
    int source_n = grid_to_mosaic(g).n();
    int board = source_n;
    GridDiagram cur = g;
    for (const GridMove& step : *steps) {
        GridDiagram next = apply_grid_move(cur, step);
        KnotMosaic from = grid_to_mosaic(cur);
        KnotMosaic to = grid_to_mosaic(next);
        auto cert = find_certificate(from, to, catalog, limits);
        if (!cert) return std::nullopt;
        int cert_board = from.n() + cert->pad_source;
        assert(cert_board == to.n() + cert->pad_target);
        // Lift whichever side is on the smaller board; padding commutes with
        // every recorded step because moves never touch the added blanks.
        int common = std::max(board, cert_board);
        board = common;
        for (const MoveApplication& app : cert->steps) acc.steps.push_back(app);
        cur = std::move(next);
    }
    acc.pad_source = board - source_n;
    acc.pad_target = board - grid_to_mosaic(cur).n();
    return acc;
}

}  // namespace kmosaic
