#include "kmosaic/mosaic.hpp"

#include <fstream>
#include <sstream>

namespace kmosaic {

Mosaic Mosaic::blank(int n) {
    assert(n >= 1);
    Mosaic m;
    m.n = n;
    m.cells.assign(static_cast<std::size_t>(n) * n, 0);
    return m;
}

Encoding encode(const Mosaic& m) {
    assert(m.n >= 1 && m.n <= 255);
    Encoding e;
    e.push_back(static_cast<char>(m.n));
    if (m.n <= 16) {
        e.reserve(1 + (m.cells.size() + 1) / 2);
        for (std::size_t i = 0; i < m.cells.size(); i += 2) {
            unsigned hi = m.cells[i];
            unsigned lo = (i + 1 < m.cells.size()) ? m.cells[i + 1] : 0;
            e.push_back(static_cast<char>((hi << 4) | lo));
        }
    } else {
        e.append(m.cells.begin(), m.cells.end());
    }
    return e;
}

Mosaic decode(const Encoding& e) {
    assert(!e.empty());
    int n = static_cast<unsigned char>(e[0]);
    Mosaic m = Mosaic::blank(n);
    std::size_t count = m.cells.size();
    if (n <= 16) {
        assert(e.size() == 1 + (count + 1) / 2);
        for (std::size_t i = 0; i < count; ++i) {
            unsigned char b = static_cast<unsigned char>(e[1 + i / 2]);
            m.cells[i] = static_cast<Tile>((i % 2 == 0) ? (b >> 4) : (b & 0xf));
        }
    } else {
        assert(e.size() == 1 + count);
        for (std::size_t i = 0; i < count; ++i)
            m.cells[i] = static_cast<Tile>(static_cast<unsigned char>(e[1 + i]));
    }
    return m;
}

namespace {

std::optional<Violation> scan_violations(const Mosaic& m, bool boundary_counts) {
    for (int r = 0; r < m.n; ++r) {
        for (int c = 0; c < m.n; ++c) {
            Tile t = m.at(r, c);
            for (Edge e : all_edges) {
                bool p = has_point(t, e);
                int nr = r + edge_dr(e);
                int nc = c + edge_dc(e);
                if (nr < 0 || nr >= m.n || nc < 0 || nc >= m.n) {
                    if (p && boundary_counts) return Violation{r, c, e};
                    continue;
                }
                if (p != has_point(m.at(nr, nc), opposite(e))) return Violation{r, c, e};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Violation> first_violation(const Mosaic& m) {
    return scan_violations(m, true);
}

bool is_suitably_connected(const Mosaic& m) {
    return !first_violation(m).has_value();
}

bool is_interior_consistent(const Mosaic& m) {
    return !scan_violations(m, false).has_value();
}

KnotMosaic::KnotMosaic(Mosaic m) : m_(std::move(m)) {
    if (auto v = first_violation(m_)) {
        std::ostringstream os;
        os << "mosaic is not suitably connected: cell (" << v->row << "," << v->col
           << ") edge " << edge_name(v->edge);
        throw std::invalid_argument(os.str());
    }
}

std::optional<KnotMosaic> KnotMosaic::validate(Mosaic m) {
    if (!is_suitably_connected(m)) return std::nullopt;
    return KnotMosaic(std::move(m), checked_tag{});
}

Mosaic submosaic(const Mosaic& m, int k, int r, int c) {
    assert(k >= 1 && r >= 0 && c >= 0 && r + k <= m.n && c + k <= m.n);
    Mosaic s = Mosaic::blank(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) s.set(i, j, m.at(r + i, c + j));
    return s;
}

void write_submosaic(Mosaic& m, const Mosaic& sub, int r, int c) {
    assert(r >= 0 && c >= 0 && r + sub.n <= m.n && c + sub.n <= m.n);
    for (int i = 0; i < sub.n; ++i)
        for (int j = 0; j < sub.n; ++j) m.set(r + i, c + j, sub.at(i, j));
}

Mosaic inject(const Mosaic& m, int times) {
    assert(times >= 0);
    Mosaic out = Mosaic::blank(m.n + times);
    write_submosaic(out, m, 0, 0);
    return out;
}

Mosaic parse_mosaic(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    int n = -1;
    Mosaic m;
    int row = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) { n = -1; continue; }
                throw ParseError("expected mosaic size", lineno);
            }
            if (n < 1 || n > 255) throw ParseError("mosaic size out of range", lineno);
            std::string rest;
            if (ls >> rest) throw ParseError("trailing tokens after size", lineno);
            m = Mosaic::blank(n);
            continue;
        }
        if (row >= n) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ParseError("trailing tokens after last row", lineno);
            continue;
        }
        int v = 0;
        int col = 0;
        while (ls >> v) {
            if (col >= n) throw ParseError("too many entries in row", lineno);
            if (v < 0 || v >= tile_count) throw ParseError("tile index out of range", lineno);
            m.set(row, col, static_cast<Tile>(v));
            ++col;
        }
        if (!ls.eof()) throw ParseError("bad token in row", lineno);
        if (col == 0) continue;  // blank or comment-only line
        if (col != n) throw ParseError("too few entries in row", lineno);
        ++row;
    }
    if (n < 0) throw ParseError("empty input", lineno);
    if (row != n) throw ParseError("missing rows", lineno);
    return m;
}

std::string serialize_mosaic(const Mosaic& m) {
    std::ostringstream os;
    os << m.n << '\n';
    for (int r = 0; r < m.n; ++r) {
        for (int c = 0; c < m.n; ++c) {
            if (c) os << ' ';
            os << static_cast<int>(m.at(r, c));
        }
        os << '\n';
    }
    return os.str();
}

Mosaic load_mosaic_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_mosaic(os.str());
}

std::string render_ascii(const Mosaic& m) {
    static const char* glyph[tile_count] = {
        "·", "┐", "┌", "└", "┘",
        "─", "│", "Z", "S", "╪", "╫"};
    std::string out;
    for (int r = 0; r < m.n; ++r) {
        for (int c = 0; c < m.n; ++c) out += glyph[m.at(r, c)];
        out += '\n';
    }
    return out;
}

Mosaic transform_mosaic(const Mosaic& m, D4 g) {
    Mosaic out = Mosaic::blank(m.n);
    for (int r = 0; r < m.n; ++r) {
        for (int c = 0; c < m.n; ++c) {
            int rr = r, cc = c;
            if (g.mir) cc = m.n - 1 - cc;
            for (int i = 0; i < g.rot; ++i) {
                int nr = cc, nc = m.n - 1 - rr;
                rr = nr;
                cc = nc;
            }
            out.set(rr, cc, transform_tile(m.at(r, c), g));
        }
    }
    return out;
}

}  // namespace kmosaic
