#include "kmosaic/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace kmosaic {

namespace {

// Tiles admitted at a cell given the required west/north points and whether
// the east/south sides lie on the mosaic boundary. Indexed
// [west][north][east_boundary][south_boundary], tiles ascending.
struct AdmissibleTable {
    std::vector<Tile> lists[2][2][2][2];
    AdmissibleTable() {
        for (int w = 0; w < 2; ++w)
            for (int no = 0; no < 2; ++no)
                for (int eb = 0; eb < 2; ++eb)
                    for (int sb = 0; sb < 2; ++sb)
                        for (Tile t = 0; t < tile_count; ++t) {
                            if (has_point(t, Edge::W) != (w != 0)) continue;
                            if (has_point(t, Edge::N) != (no != 0)) continue;
                            if (eb && has_point(t, Edge::E)) continue;
                            if (sb && has_point(t, Edge::S)) continue;
                            lists[w][no][eb][sb].push_back(t);
                        }
    }
};

const AdmissibleTable& admissible() {
    static const AdmissibleTable table;
    return table;
}

template <typename Emit>
void backtrack_rows(Mosaic& m, int idx, const Emit& emit) {
    int n = m.n;
    if (idx == n * n) {
        emit(m);
        return;
    }
    int r = idx / n;
    int c = idx % n;
    bool west = c > 0 && has_point(m.at(r, c - 1), Edge::E);
    bool north = r > 0 && has_point(m.at(r - 1, c), Edge::S);
    const std::vector<Tile>& tiles =
        admissible().lists[west][north][c == n - 1][r == n - 1];
    for (Tile t : tiles) {
        m.set(r, c, t);
        backtrack_rows(m, idx + 1, emit);
    }
    m.set(r, c, 0);
}

}  // namespace

void enumerate_knot_mosaics(int n, const std::function<void(const Mosaic&)>& emit) {
    assert(n >= 1);
    Mosaic m = Mosaic::blank(n);
    backtrack_rows(m, 0, emit);
}

std::vector<Mosaic> all_knot_mosaics(int n) {
    std::vector<Mosaic> out;
    enumerate_knot_mosaics(n, [&](const Mosaic& m) { out.push_back(m); });
    return out;
}

namespace {

// First-row assignments admissible on their own (W/E matching, no point on
// the mosaic's N edge, S free unless n == 1), ascending.
std::vector<std::vector<Tile>> first_rows(int n) {
    std::vector<std::vector<Tile>> rows;
    std::vector<Tile> row(n, 0);
    std::function<void(int)> rec = [&](int c) {
        if (c == n) {
            rows.push_back(row);
            return;
        }
        bool west = c > 0 && has_point(row[c - 1], Edge::E);
        for (Tile t : admissible().lists[west][0][c == n - 1][n == 1]) {
            row[c] = t;
            rec(c + 1);
        }
        row[c] = 0;
    };
    rec(0);
    return rows;
}

std::uint64_t count_rest(Mosaic& m) {
    std::uint64_t count = 0;
    backtrack_rows(m, m.n, [&](const Mosaic&) { ++count; });
    return count;
}

}  // namespace

std::uint64_t count_knot_mosaics(int n, int jobs) {
    assert(n >= 1 && jobs >= 1);
    if (jobs == 1) {
        std::uint64_t count = 0;
        enumerate_knot_mosaics(n, [&](const Mosaic&) { ++count; });
        return count;
    }
    std::vector<std::vector<Tile>> rows = first_rows(n);
    std::atomic<std::size_t> next{0};
    std::vector<std::uint64_t> partial(jobs, 0);
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) {
        threads.emplace_back([&, j] {
            for (std::size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
                Mosaic m = Mosaic::blank(n);
                for (int c = 0; c < n; ++c) m.set(0, c, rows[i][c]);
                if (n == 1) {
                    partial[j] += 1;
                    continue;
                }
                partial[j] += count_rest(m);
            }
        });
    }
    for (std::thread& t : threads) t.join();
    std::uint64_t total = 0;
    for (std::uint64_t p : partial) total += p;
    return total;
}

std::uint64_t count_knot_mosaics_profile_dp(int n) {
    assert(n >= 1 && n <= 7);  // counts overflow unsigned 64-bit past n=7
    // State: which columns require a point on the row's top edge (the previous
    // row's S profile). Within a row, sweep columns carrying (east point
    // pending, partial S profile).
    std::size_t states = std::size_t{1} << n;
    std::vector<std::uint64_t> cur(states, 0), nxt;
    cur[0] = 1;  // the top boundary requires nothing
    for (int r = 0; r < n; ++r) {
        // row_out[s'] accumulated over rows compatible with in-profile s
        nxt.assign(states, 0);
        for (std::size_t s = 0; s < states; ++s) {
            if (cur[s] == 0) continue;
            // inner DP over one row: key = (pending east point, S bits so far)
            std::vector<std::uint64_t> inner(2 * states, 0), inner2;
            inner[0] = 1;
            for (int c = 0; c < n; ++c) {
                inner2.assign(2 * states, 0);
                bool north = (s >> c) & 1;
                for (std::size_t key = 0; key < 2 * states; ++key) {
                    if (inner[key] == 0) continue;
                    bool west = key & 1;
                    std::size_t sbits = key >> 1;
                    for (Tile t = 0; t < tile_count; ++t) {
                        if (has_point(t, Edge::W) != west) continue;
                        if (has_point(t, Edge::N) != north) continue;
                        if (c == n - 1 && has_point(t, Edge::E)) continue;
                        if (r == n - 1 && has_point(t, Edge::S)) continue;
                        std::size_t nkey = (sbits | (has_point(t, Edge::S) ? std::size_t{1} << c : 0)) << 1 |
                                           (has_point(t, Edge::E) ? 1 : 0);
                        inner2[nkey] += inner[key];
                    }
                }
                inner.swap(inner2);
            }
            for (std::size_t sbits = 0; sbits < states; ++sbits)
                if (inner[sbits << 1]) nxt[sbits] += cur[s] * inner[sbits << 1];
        }
        cur.swap(nxt);
    }
    return cur[0];
}

void enumerate_knot_mosaics_by_columns(int n,
                                       const std::function<void(const Mosaic&)>& emit) {
    assert(n >= 1);
    Mosaic m = Mosaic::blank(n);
    // Column-major sweep: cell order (c, r); the admissibility roles of N/W
    // swap relative to the row-major scan.
    std::function<void(int)> rec = [&](int idx) {
        if (idx == n * n) {
            emit(m);
            return;
        }
        int c = idx / n;
        int r = idx % n;
        bool west = c > 0 && has_point(m.at(r, c - 1), Edge::E);
        bool north = r > 0 && has_point(m.at(r - 1, c), Edge::S);
        for (Tile t = 0; t < tile_count; ++t) {
            if (has_point(t, Edge::W) != west) continue;
            if (has_point(t, Edge::N) != north) continue;
            if (c == n - 1 && has_point(t, Edge::E)) continue;
            if (r == n - 1 && has_point(t, Edge::S)) continue;
            m.set(r, c, t);
            rec(idx + 1);
        }
        m.set(r, c, 0);
    };
    rec(0);
}

std::vector<Mosaic> brute_force_knot_mosaics(int n) {
    if (n > 2) throw std::invalid_argument("brute force enumeration limited to n <= 2");
    std::vector<Mosaic> out;
    Mosaic m = Mosaic::blank(n);
    std::size_t cells = m.cells.size();
    std::vector<int> digits(cells, 0);
    while (true) {
        for (std::size_t i = 0; i < cells; ++i) m.cells[i] = static_cast<Tile>(digits[i]);
        if (is_suitably_connected(m)) out.push_back(m);
        std::size_t i = cells;
        while (i > 0) {
            --i;
            if (++digits[i] < tile_count) break;
            digits[i] = 0;
            if (i == 0) return out;
        }
    }
}

}  // namespace kmosaic
