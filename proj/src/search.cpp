#include "kmosaic/search.hpp"

#include "kmosaic/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace kmosaic {

bool can_inject(const Mosaic& m) {
    for (int c = 0; c < m.n; ++c)
        if (has_point(m.at(m.n - 1, c), Edge::S)) return false;
    for (int r = 0; r < m.n; ++r)
        if (has_point(m.at(r, m.n - 1), Edge::E)) return false;
    return true;
}

namespace {

struct Node {
    Encoding parent;      // empty for a root
    MoveApplication app;  // move carrying parent to this state
    int depth = 0;
};

using Visited = std::unordered_map<Encoding, Node>;

// Walks parent links to the root. Forward chains come out root-first after a
// reversal; backward chains replay as-is because every move is an involution.
std::vector<MoveApplication> chain_to_root(const Visited& visited, Encoding at) {
    std::vector<MoveApplication> apps;
    for (;;) {
        const Node& node = visited.at(at);
        if (node.parent.empty()) break;
        apps.push_back(node.app);
        at = node.parent;
    }
    return apps;
}

std::optional<Certificate> search_fixed_board(const Mosaic& source, const Mosaic& target,
                                              const MoveIndex& index,
                                              const SearchLimits& limits, int pad_source,
                                              int pad_target) {
    const std::vector<MovePattern>& catalog = index.catalog();
    Encoding src = encode(source);
    Encoding tgt = encode(target);
    if (src == tgt) return Certificate{pad_source, pad_target, {}};

    Visited fwd{{src, Node{}}};
    Visited bwd{{tgt, Node{}}};
    std::vector<Encoding> fwd_layer{src};
    std::vector<Encoding> bwd_layer{tgt};
    int fwd_depth = 0;
    int bwd_depth = 0;

    int best_total = limits.max_depth + 1;
    Encoding best_meet;

    while (!fwd_layer.empty() && !bwd_layer.empty() &&
           fwd_depth + bwd_depth < limits.max_depth && best_total > fwd_depth + bwd_depth) {
        bool expand_fwd = fwd_layer.size() <= bwd_layer.size();
        Visited& mine = expand_fwd ? fwd : bwd;
        Visited& other = expand_fwd ? bwd : fwd;
        std::vector<Encoding>& layer = expand_fwd ? fwd_layer : bwd_layer;
        int depth = (expand_fwd ? fwd_depth : bwd_depth) + 1;

        std::vector<Encoding> next;
        for (const Encoding& cur : layer) {
            Mosaic m = decode(cur);
            for (const MoveApplication& app : index.applications(m)) {
                Encoding child = encode(apply_move(m, catalog, app));
                auto [it, fresh] = mine.try_emplace(child, Node{cur, app, depth});
                if (!fresh) continue;
                next.push_back(child);
                auto hit = other.find(child);
                if (hit != other.end()) {
                    int total = depth + hit->second.depth;
                    if (total < best_total || (total == best_total && child < best_meet)) {
                        best_total = total;
                        best_meet = child;
                    }
                }
            }
        }
        if (fwd.size() + bwd.size() > limits.max_states)
            throw capacity_error("state cap exceeded in certificate search");
        layer = std::move(next);
        (expand_fwd ? fwd_depth : bwd_depth) = depth;
    }

    if (best_total > limits.max_depth) return std::nullopt;
    Certificate cert;
    cert.pad_source = pad_source;
    cert.pad_target = pad_target;
    std::vector<MoveApplication> to_src = chain_to_root(fwd, best_meet);
    std::reverse(to_src.begin(), to_src.end());
    cert.steps = std::move(to_src);
    std::vector<MoveApplication> to_tgt = chain_to_root(bwd, best_meet);
    cert.steps.insert(cert.steps.end(), to_tgt.begin(), to_tgt.end());
    assert(static_cast<int>(cert.steps.size()) == best_total);
    return cert;
}

}  // namespace

std::optional<Certificate> find_certificate(const Mosaic& source, const Mosaic& target,
                                            const std::vector<MovePattern>& catalog,
                                            const SearchLimits& limits) {
    assert(is_interior_consistent(source) && is_interior_consistent(target));
    MoveIndex index(catalog);
    int base = std::max(source.n, target.n);
    for (int extra = 0; extra <= limits.max_pad; ++extra) {
        int board = base + extra;
        int pad_source = board - source.n;
        int pad_target = board - target.n;
        if (pad_source > 0 && !can_inject(source)) continue;
        if (pad_target > 0 && !can_inject(target)) continue;
        Mosaic s = pad_source > 0 ? inject(source, pad_source) : source;
        Mosaic t = pad_target > 0 ? inject(target, pad_target) : target;
        if (auto cert = search_fixed_board(s, t, index, limits, pad_source, pad_target))
            return cert;
    }
    return std::nullopt;
}

bool replay(const Certificate& cert, const Mosaic& source, const Mosaic& target,
            const std::vector<MovePattern>& catalog) {
    if (cert.pad_source < 0 || cert.pad_target < 0) return false;
    Mosaic cur = cert.pad_source > 0 ? inject(source, cert.pad_source) : source;
    Mosaic goal = cert.pad_target > 0 ? inject(target, cert.pad_target) : target;
    if (cur.n != goal.n) return false;
    if (!is_interior_consistent(cur) || !is_interior_consistent(goal)) return false;
    for (const MoveApplication& app : cert.steps) {
        if (app.pattern < 0 || app.pattern >= static_cast<int>(catalog.size())) return false;
        const MovePattern& p = catalog[app.pattern];
        if (app.row < 0 || app.col < 0 || app.row + p.k > cur.n || app.col + p.k > cur.n)
            return false;
        if (!move_applies(cur, p, app.row, app.col)) return false;
        cur = apply_move(cur, catalog, app);
        if (!is_interior_consistent(cur)) return false;
    }
    return cur == goal;
}

std::string serialize_certificate(const Certificate& cert,
                                  const std::vector<MovePattern>& catalog) {
    std::ostringstream os;
    os << cert.pad_source << ' ' << cert.pad_target << '\n';
    for (const MoveApplication& app : cert.steps) {
        assert(app.pattern >= 0 && app.pattern < static_cast<int>(catalog.size()));
        os << catalog[app.pattern].label << "@(" << app.row << ',' << app.col << ")\n";
    }
    return os.str();
}

Certificate parse_certificate(std::string_view text,
                              const std::vector<MovePattern>& catalog) {
    std::unordered_map<std::string, int> by_label;
    for (std::size_t i = 0; i < catalog.size(); ++i)
        by_label.emplace(catalog[i].label, static_cast<int>(i));

    std::istringstream in{std::string(text)};
    Certificate cert;
    if (!(in >> cert.pad_source >> cert.pad_target))
        throw std::runtime_error("bad certificate header");
    std::string line;
    std::getline(in, line);
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        std::string entry = line.substr(start, end - start + 1);
        std::size_t at = entry.rfind('@');
        if (at == std::string::npos || at + 1 >= entry.size() || entry[at + 1] != '(' ||
            entry.back() != ')')
            throw ParseError("bad certificate step", lineno);
        auto it = by_label.find(entry.substr(0, at));
        if (it == by_label.end()) throw ParseError("unknown move label", lineno);
        MoveApplication app;
        app.pattern = it->second;
        std::string coords = entry.substr(at + 2, entry.size() - at - 3);
        std::size_t comma = coords.find(',');
        if (comma == std::string::npos) throw ParseError("bad certificate step", lineno);
        try {
            app.row = std::stoi(coords.substr(0, comma));
            app.col = std::stoi(coords.substr(comma + 1));
        } catch (const std::exception&) {
            throw ParseError("bad certificate step", lineno);
        }
        cert.steps.push_back(app);
    }
    return cert;
}

}  // namespace kmosaic
