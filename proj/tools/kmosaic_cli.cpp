// Command-line front end: validation, enumeration, orbit census, equivalence
// certificates, zooming, grid conversions and moves, fingerprints, rendering,
// and mosaic-number bounds.
#include "kmosaic/enumerate.hpp"
#include "kmosaic/grid.hpp"
#include "kmosaic/invariants.hpp"
#include "kmosaic/orbits.hpp"
#include "kmosaic/search.hpp"
#include "kmosaic/zoom.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;

// Exit codes: 0 success, 1 negative verdict, 2 error.
constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_error = 2;

json mosaic_json(const kmosaic::Mosaic& m) {
    json cells = json::array();
    for (int r = 0; r < m.n; ++r) {
        json row = json::array();
        for (int c = 0; c < m.n; ++c) row.push_back(static_cast<int>(m.at(r, c)));
        cells.push_back(std::move(row));
    }
    return json{{"n", m.n}, {"cells", std::move(cells)}};
}

json grid_json(const kmosaic::GridDiagram& g) {
    return json{{"size", g.size}, {"x", g.sigma_x}, {"o", g.sigma_o}};
}

void emit(bool as_json, const json& doc, const std::string& text) {
    if (as_json)
        std::cout << doc.dump(2) << '\n';
    else
        std::cout << text;
}

void write_or_print(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

int run(int argc, char** argv) {
    CLI::App app{"knot mosaic toolkit"};
    app.require_subcommand(1);
    std::string format = "text";
    int jobs = 1;
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", jobs, "worker threads for enumeration and orbits")
        ->check(CLI::PositiveNumber);

    std::string file_a, file_b, out_path, move_spec;
    int n = 0, depth = 12, pad = 2;
    bool count_only = false;
    std::vector<std::string> witness_files;
    int max_n = 4;

    CLI::App* validate = app.add_subcommand("validate", "check a mosaic file");
    validate->add_option("mosaic", file_a)->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "list or count all knot mosaics");
    enumerate->add_option("-n", n, "mosaic side")->required()->check(CLI::PositiveNumber);
    enumerate->add_flag("--count-only", count_only);
    enumerate->add_option("-o", out_path, "output file");

    CLI::App* orbits = app.add_subcommand("orbits", "equivalence-class census");
    orbits->add_option("-n", n, "mosaic side")->required()->check(CLI::PositiveNumber);
    orbits->add_option("-o", out_path, "census output file");

    CLI::App* equiv = app.add_subcommand("equiv", "decide equivalence of two mosaics");
    equiv->add_option("a", file_a)->required();
    equiv->add_option("b", file_b)->required();
    CLI::Option* equiv_n = equiv->add_option("-n", n, "census lookup at this side");
    equiv->add_option("--depth", depth, "search depth bound");
    equiv->add_option("--pad", pad, "extra blank padding allowance");
    equiv->add_option("-o", out_path, "certificate output file");

    CLI::App* zoom = app.add_subcommand("zoom", "expand a mosaic five-fold");
    zoom->add_option("mosaic", file_a)->required();

    CLI::App* g2m = app.add_subcommand("grid2mosaic", "render a grid file as a mosaic");
    g2m->add_option("grid", file_a)->required();

    CLI::App* m2g = app.add_subcommand("mosaic2grid", "extract a grid from a mosaic");
    m2g->add_option("mosaic", file_a)->required();

    CLI::App* gridmove = app.add_subcommand("gridmove", "apply an elementary grid move");
    gridmove->add_option("grid", file_a)->required();
    gridmove->add_option("--move", move_spec, "move spec, e.g. stab:X:NW:2")->required();

    CLI::App* fingerprint = app.add_subcommand("fingerprint", "component count and polynomial");
    fingerprint->add_option("mosaic", file_a)->required();

    CLI::App* render = app.add_subcommand("render", "draw a mosaic with box glyphs");
    render->add_option("mosaic", file_a)->required();

    CLI::App* mnumber = app.add_subcommand("mosaic-number", "bounds from witness mosaics");
    mnumber->add_option("--witness", witness_files, "witness mosaic files")->required();
    mnumber->add_option("--max-n", max_n, "census sides to scan")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }
    bool as_json = format == "json";

    if (validate->parsed()) {
        kmosaic::Mosaic m = kmosaic::load_mosaic_file(file_a);
        auto violation = kmosaic::first_violation(m);
        if (!violation) {
            emit(as_json, json{{"command", "validate"}, {"file", file_a}, {"n", m.n}, {"valid", true}},
                 "valid knot mosaic, side " + std::to_string(m.n) + "\n");
            return exit_ok;
        }
        std::string where = "cell (" + std::to_string(violation->row) + "," +
                            std::to_string(violation->col) + ") edge " +
                            kmosaic::edge_name(violation->edge);
        emit(as_json,
             json{{"command", "validate"},
                  {"file", file_a},
                  {"n", m.n},
                  {"valid", false},
                  {"violation",
                   {{"row", violation->row},
                    {"col", violation->col},
                    {"edge", kmosaic::edge_name(violation->edge)}}}},
             "not suitably connected: " + where + "\n");
        return exit_negative;
    }

    if (enumerate->parsed()) {
        if (count_only) {
            std::uint64_t count = kmosaic::count_knot_mosaics(n, jobs);
            emit(as_json, json{{"command", "enumerate"}, {"n", n}, {"count", count}},
                 std::to_string(count) + "\n");
            return exit_ok;
        }
        std::string text;
        json list = json::array();
        std::uint64_t count = 0;
        kmosaic::enumerate_knot_mosaics(n, [&](const kmosaic::Mosaic& m) {
            ++count;
            if (as_json)
                list.push_back(mosaic_json(m));
            else
                text += kmosaic::serialize_mosaic(m) + "\n";
        });
        if (as_json) {
            json doc{{"command", "enumerate"}, {"n", n}, {"count", count}, {"mosaics", list}};
            write_or_print(out_path, doc.dump(2) + "\n");
        } else {
            write_or_print(out_path, text);
        }
        return exit_ok;
    }

    if (orbits->parsed()) {
        kmosaic::Census census =
            kmosaic::compute_census(n, kmosaic::generator_catalog(), jobs);
        if (!out_path.empty()) write_or_print(out_path, kmosaic::serialize_census(census));
        if (as_json) {
            json classes = json::array();
            for (const auto& cls : census.classes)
                classes.push_back(
                    json{{"size", cls.size}, {"canonical", mosaic_json(cls.canonical)}});
            emit(true,
                 json{{"command", "orbits"},
                      {"n", n},
                      {"classes", census.classes.size()},
                      {"class_list", classes}},
                 "");
        } else {
            std::cout << census.classes.size() << " classes\n";
        }
        return exit_ok;
    }

    if (equiv->parsed()) {
        kmosaic::Mosaic a = kmosaic::load_mosaic_file(file_a);
        kmosaic::Mosaic b = kmosaic::load_mosaic_file(file_b);
        const auto& catalog = kmosaic::generator_catalog();
        if (equiv_n->count() > 0) {
            kmosaic::Mosaic pa = a.n < n ? kmosaic::inject(a, n - a.n) : a;
            kmosaic::Mosaic pb = b.n < n ? kmosaic::inject(b, n - b.n) : b;
            if (pa.n != n || pb.n != n) throw std::runtime_error("mosaics exceed -n side");
            const kmosaic::Census& census = kmosaic::cached_census(n);
            int ca = kmosaic::census_class_of(census, pa, catalog);
            int cb = kmosaic::census_class_of(census, pb, catalog);
            bool same = ca >= 0 && ca == cb;
            emit(as_json,
                 json{{"command", "equiv"},
                      {"mode", "census"},
                      {"n", n},
                      {"class_a", ca},
                      {"class_b", cb},
                      {"equivalent", same}},
                 same ? "same class (" + std::to_string(ca) + ")\n" : "distinct classes\n");
            return same ? exit_ok : exit_negative;
        }
        kmosaic::SearchLimits limits;
        limits.max_depth = depth;
        limits.max_pad = pad;
        auto cert = kmosaic::find_certificate(a, b, catalog, limits);
        if (!cert) {
            emit(as_json, json{{"command", "equiv"}, {"mode", "search"}, {"found", false}},
                 "no certificate within depth " + std::to_string(depth) + ", pad " +
                     std::to_string(pad) + "\n");
            return exit_negative;
        }
        std::string text = kmosaic::serialize_certificate(*cert, catalog);
        if (!out_path.empty()) write_or_print(out_path, text);
        if (as_json) {
            json steps = json::array();
            for (const auto& app_ : cert->steps)
                steps.push_back(json{{"label", catalog[app_.pattern].label},
                                     {"row", app_.row},
                                     {"col", app_.col}});
            emit(true,
                 json{{"command", "equiv"},
                      {"mode", "search"},
                      {"found", true},
                      {"pad_source", cert->pad_source},
                      {"pad_target", cert->pad_target},
                      {"steps", steps}},
                 "");
        } else {
            std::cout << text;
        }
        return exit_ok;
    }

    if (zoom->parsed()) {
        kmosaic::Mosaic m = kmosaic::load_mosaic_file(file_a);
        kmosaic::Mosaic z = kmosaic::zoom5(m);
        emit(as_json, json{{"command", "zoom"}, {"result", mosaic_json(z)}},
             kmosaic::serialize_mosaic(z));
        return exit_ok;
    }

    if (g2m->parsed()) {
        kmosaic::GridDiagram g = kmosaic::load_grid_file(file_a);
        kmosaic::KnotMosaic m = kmosaic::grid_to_mosaic(g);
        emit(as_json, json{{"command", "grid2mosaic"}, {"result", mosaic_json(m.mosaic())}},
             kmosaic::serialize_mosaic(m.mosaic()));
        return exit_ok;
    }

    if (m2g->parsed()) {
        kmosaic::Mosaic m = kmosaic::load_mosaic_file(file_a);
        auto valid = kmosaic::KnotMosaic::validate(m);
        if (!valid) {
            emit(as_json, json{{"command", "mosaic2grid"}, {"valid", false}},
                 "not suitably connected\n");
            return exit_negative;
        }
        kmosaic::GridDiagram g = kmosaic::mosaic_to_grid(*valid);
        std::string text =
            g.size == 0 ? "empty grid (blank mosaic)\n" : kmosaic::serialize_grid(g);
        emit(as_json, json{{"command", "mosaic2grid"}, {"result", grid_json(g)}}, text);
        return exit_ok;
    }

    if (gridmove->parsed()) {
        kmosaic::GridDiagram g = kmosaic::load_grid_file(file_a);
        kmosaic::GridMove mv = kmosaic::parse_grid_move(move_spec);
        kmosaic::GridDiagram moved;
        try {
            moved = kmosaic::apply_grid_move(g, mv);
        } catch (const std::invalid_argument& e) {
            emit(as_json,
                 json{{"command", "gridmove"},
                      {"move", move_spec},
                      {"applied", false},
                      {"reason", e.what()}},
                 std::string("move not applicable: ") + e.what() + "\n");
            return exit_negative;
        }
        emit(as_json,
             json{{"command", "gridmove"},
                  {"move", move_spec},
                  {"applied", true},
                  {"result", grid_json(moved)}},
             kmosaic::serialize_grid(moved));
        return exit_ok;
    }

    if (fingerprint->parsed()) {
        kmosaic::Mosaic m = kmosaic::load_mosaic_file(file_a);
        auto valid = kmosaic::KnotMosaic::validate(m);
        if (!valid) {
            emit(as_json, json{{"command", "fingerprint"}, {"valid", false}},
                 "not suitably connected\n");
            return exit_negative;
        }
        kmosaic::Fingerprint fp = kmosaic::fingerprint(*valid);
        emit(as_json,
             json{{"command", "fingerprint"},
                  {"components", fp.components},
                  {"polynomial", fp.poly.str()}},
             "components " + std::to_string(fp.components) + "\npolynomial " + fp.poly.str() +
                 "\n");
        return exit_ok;
    }

    if (render->parsed()) {
        kmosaic::Mosaic m = kmosaic::load_mosaic_file(file_a);
        std::string art = kmosaic::render_ascii(m);
        emit(as_json, json{{"command", "render"}, {"art", art}}, art);
        return exit_ok;
    }

    if (mnumber->parsed()) {
        json results = json::array();
        std::string text;
        for (const std::string& path : witness_files) {
            kmosaic::KnotMosaic witness{kmosaic::load_mosaic_file(path)};
            kmosaic::MosaicNumberBounds bounds = kmosaic::mosaic_number_bounds(witness, max_n);
            results.push_back(
                json{{"file", path}, {"lower", bounds.lower}, {"upper", bounds.upper}});
            if (bounds.lower == bounds.upper)
                text += path + ": mosaic number " + std::to_string(bounds.lower) + "\n";
            else
                text += path + ": mosaic number in [" + std::to_string(bounds.lower) + ", " +
                        std::to_string(bounds.upper) + "]\n";
        }
        emit(as_json, json{{"command", "mosaic-number"}, {"max_n", max_n}, {"witnesses", results}},
             text);
        return exit_ok;
    }

    return exit_error;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
}
