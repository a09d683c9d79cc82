#include "kmosaic/orbits.hpp"

#include "kmosaic/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace kmosaic {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

int index_of(const std::vector<Encoding>& sorted, const Encoding& e) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
    assert(it != sorted.end() && *it == e);
    return static_cast<int>(it - sorted.begin());
}

}  // namespace

Census compute_census(int n, const std::vector<MovePattern>& catalog, int jobs) {
    assert(n >= 1 && jobs >= 1);
    std::vector<Encoding> states;
    enumerate_knot_mosaics(n, [&](const Mosaic& m) { states.push_back(encode(m)); });
    // Emission order is encoding order, which keeps index_of a binary search
    // and makes the union-find representative the encoding-minimal member.
    assert(std::is_sorted(states.begin(), states.end()));

    MoveIndex index(catalog);
    UnionFind uf(states.size());
    auto scan = [&](std::size_t lo, std::size_t hi, std::vector<std::pair<int, int>>& edges) {
        for (std::size_t i = lo; i < hi; ++i) {
            Mosaic m = decode(states[i]);
            for (const MoveApplication& app : index.applications(m)) {
                Encoding e = encode(apply_move(m, catalog, app));
                edges.emplace_back(static_cast<int>(i), index_of(states, e));
            }
        }
    };
    if (jobs == 1 || states.size() < 1024) {
        std::vector<std::pair<int, int>> edges;
        scan(0, states.size(), edges);
        for (auto [a, b] : edges) uf.unite(a, b);
    } else {
        std::vector<std::vector<std::pair<int, int>>> shard_edges(jobs);
        std::vector<std::thread> threads;
        std::size_t chunk = (states.size() + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            std::size_t lo = std::min(states.size(), j * chunk);
            std::size_t hi = std::min(states.size(), lo + chunk);
            threads.emplace_back([&, lo, hi, j] { scan(lo, hi, shard_edges[j]); });
        }
        for (std::thread& t : threads) t.join();
        for (const auto& edges : shard_edges)
            for (auto [a, b] : edges) uf.unite(a, b);
    }

    std::map<int, std::uint64_t> sizes;
    for (std::size_t i = 0; i < states.size(); ++i) ++sizes[uf.find(static_cast<int>(i))];

    Census census;
    census.n = n;
    for (const auto& [root, size] : sizes) {
        EquivalenceClass cls;
        cls.canonical = decode(states[root]);
        cls.size = size;
        census.classes.push_back(std::move(cls));
    }
    std::sort(census.classes.begin(), census.classes.end(),
              [](const EquivalenceClass& a, const EquivalenceClass& b) {
                  if (a.size != b.size) return a.size < b.size;
                  return encode(a.canonical) < encode(b.canonical);
              });
    return census;
}

Census compute_census(int n) { return compute_census(n, generator_catalog()); }

const Census& cached_census(int n) {
    static std::mutex mu;
    static std::map<int, Census> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_census(n)).first;
    return it->second;
}

std::string serialize_census(const Census& census) {
    std::ostringstream os;
    os << "n " << census.n << " classes " << census.classes.size() << '\n';
    for (std::size_t i = 0; i < census.classes.size(); ++i) {
        const EquivalenceClass& cls = census.classes[i];
        os << i << ' ' << cls.size << " canonical:";
        std::string text = serialize_mosaic(cls.canonical);
        if (!text.empty() && text.back() == '\n') text.pop_back();
        std::replace(text.begin(), text.end(), '\n', ';');
        os << text << '\n';
    }
    return os.str();
}

Census parse_census(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string word;
    Census census;
    std::size_t count = 0;
    if (!(in >> word) || word != "n" || !(in >> census.n) || !(in >> word) ||
        word != "classes" || !(in >> count))
        throw std::runtime_error("bad census header");
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::size_t id = 0;
        EquivalenceClass cls;
        if (!(ls >> id >> cls.size)) throw std::runtime_error("bad census class line");
        std::string rest;
        std::getline(ls, rest);
        auto pos = rest.find("canonical:");
        if (pos == std::string::npos) throw std::runtime_error("bad census class line");
        std::string mosaic_text = rest.substr(pos + 10);
        std::replace(mosaic_text.begin(), mosaic_text.end(), ';', '\n');
        cls.canonical = parse_mosaic(mosaic_text);
        if (id != census.classes.size()) throw std::runtime_error("census ids out of order");
        census.classes.push_back(std::move(cls));
    }
    if (census.classes.size() != count) throw std::runtime_error("census class count mismatch");
    return census;
}

namespace {

// Encoding-minimal member of the orbit of m, by exhausting the orbit.
Encoding orbit_minimum(const Mosaic& m, const std::vector<MovePattern>& catalog) {
    MoveIndex index(catalog);
    std::unordered_set<std::string> seen;
    std::deque<Encoding> queue;
    Encoding start = encode(m);
    Encoding best = start;
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        Encoding cur = queue.front();
        queue.pop_front();
        Mosaic mm = decode(cur);
        for (const MoveApplication& app : index.applications(mm)) {
            Encoding e = encode(apply_move(mm, catalog, app));
            if (seen.insert(e).second) {
                if (e < best) best = e;
                queue.push_back(e);
            }
        }
    }
    return best;
}

}  // namespace

int census_class_of(const Census& census, const Mosaic& m,
                    const std::vector<MovePattern>& catalog) {
    if (m.n != census.n) return -1;
    Encoding canon = orbit_minimum(m, catalog);
    for (std::size_t i = 0; i < census.classes.size(); ++i)
        if (encode(census.classes[i].canonical) == canon) return static_cast<int>(i);
    return -1;
}

bool same_type(const KnotMosaic& a, const KnotMosaic& b) {
    if (a.n() != b.n()) return false;
    const std::vector<MovePattern>& catalog = generator_catalog();
    return orbit_minimum(a.mosaic(), catalog) == orbit_minimum(b.mosaic(), catalog);
}

MosaicNumberBounds mosaic_number_bounds(const KnotMosaic& witness, int max_n) {
    assert(max_n >= 1);
    Fingerprint target = fingerprint(witness);
    for (int n = 1; n <= max_n; ++n) {
        const Census& census = cached_census(n);
        for (const EquivalenceClass& cls : census.classes) {
            KnotMosaic rep{cls.canonical};
            if (fingerprint(rep) == target) return MosaicNumberBounds{n, n};
        }
    }
    return MosaicNumberBounds{max_n + 1, witness.n()};
}

}  // namespace kmosaic
