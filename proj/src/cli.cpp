#include "orthocover/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <new>
#include <optional>

#include <CLI11.hpp>

#include "orthocover/io.hpp"
#include "orthocover/lattice_oracle.hpp"
#include "orthocover/solver_poly.hpp"
#include "orthocover/solver_recursive.hpp"
#include "orthocover/svg.hpp"
#include "orthocover/testgen.hpp"

namespace orthocover {

namespace {

void write_pack_line(std::ostream& out, const RecPack& r) {
    out << r.anchor.x << ' ' << r.anchor.y << ' ' << r.t << ' ' << r.eta << ' '
        << (r.orientation == Orientation::Horizontal ? 'H' : 'V');
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
    return f;
}

// k <= n^0.9 favours the recursive solver.
bool prefer_recursive(const Polygon& p) {
    const double n = static_cast<double>(p.size());
    return static_cast<double>(knobs(p).size()) <= std::pow(n, 0.9);
}

struct SolveArgs {
    std::string path;
    std::string method = "auto";
    std::string out_path;
    bool steps = false;
    bool fix = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    const Polygon p = read_polygon_file(a.path, a.fix);
    if (a.method == "oracle") {
        OracleOptions opts;
        opts.cap = oracle_cap_from_env();
        out << oracle_solve(p, opts) << '\n';
        if (!a.out_path.empty()) err << "note: the oracle method produces no cover; --out ignored\n";
        return kExitOk;
    }
    std::string method = a.method;
    if (method == "auto") method = prefer_recursive(p) ? "recursive" : "poly";

    BigInt count;
    Cover cover;
    if (method == "poly") {
        PolyOptions opts;
        if (a.steps) {
            opts.on_step = [&err](const PolyStep& s) {
                err << "step " << s.iteration << " square " << s.seed.corner.x << ' ' << s.seed.corner.y << ' '
                    << s.seed.side << '\n';
                for (const RecPack& r : s.packs) {
                    err << "  pack ";
                    write_pack_line(err, r);
                    err << '\n';
                }
            };
        }
        SolveResult r = solve_poly(p, opts);
        count = r.count;
        cover = std::move(r.cover);
    } else {
        RecursiveResult r = solve_recursive(p);
        for (const std::string& w : r.stats.warnings) err << "warning: " << w << '\n';
        if (a.steps) {
            err << "recursion internal=" << r.stats.internal_nodes << " leaves=" << r.stats.leaves
                << " fallbacks=" << r.stats.fallbacks << " depth=" << r.stats.max_depth << '\n';
        }
        count = r.count;
        cover = std::move(r.cover);
    }
    out << count << '\n';
    if (!a.out_path.empty()) {
        std::ofstream f = open_output(a.out_path);
        write_cover(f, cover);
    }
    return kExitOk;
}

int cmd_check(const std::string& poly_path, const std::string& cover_path, std::ostream& out) {
    const Polygon p = read_polygon_file(poly_path);
    const Cover c = read_cover_file(cover_path);
    if (const auto i = first_pack_outside(p, c)) {
        out << "PACK_OUTSIDE_POLYGON " << *i << '\n';
        return kExitCheckFailed;
    }
    if (const auto pair = first_collision(c.packs())) {
        out << "PACKS_COLLIDE " << pair->first << ' ' << pair->second << '\n';
        return kExitCheckFailed;
    }
    const std::vector<Rect> rects = c.rects();
    const UWide covered = union_area_wide(rects);
    const UWide total = static_cast<UWide>(p.area_wide());
    if (covered < total) {
        out << "UNCOVERED_AREA " << to_decimal(total - covered) << '\n';
        return kExitCheckFailed;
    }
    out << c.total() << '\n';
    return kExitOk;
}

struct RenderArgs {
    std::string poly_path;
    std::string cover_path;
    std::string out_path;
    RenderSpec spec;
    bool no_polygon = false;
    bool no_cover = false;
    bool no_grid = false;
    bool no_labels = false;
};

int cmd_render(RenderArgs a, std::ostream& out) {
    const Polygon p = read_polygon_file(a.poly_path);
    std::optional<Cover> c;
    if (!a.cover_path.empty()) {
        c = read_cover_file(a.cover_path);
        // Rendering an invalid cover is allowed, but packs must at least fit the polygon.
        if (const auto i = first_pack_outside(p, *c)) {
            throw Error(ErrorCode::PackOutsidePolygon, "pack " + std::to_string(*i) + " is not inside the polygon");
        }
    }
    a.spec.show_polygon = !a.no_polygon;
    a.spec.show_cover = !a.no_cover;
    a.spec.show_grid = !a.no_grid;
    a.spec.show_labels = !a.no_labels;
    const std::string svg = render_svg(p, c ? &*c : nullptr, a.spec);
    if (a.out_path.empty()) {
        out << svg;
    } else {
        std::ofstream f = open_output(a.out_path);
        f << svg;
    }
    return kExitOk;
}

int cmd_info(const std::string& path, bool fix, std::ostream& out) {
    const Polygon p = read_polygon_file(path, fix);
    const std::vector<Knob> ks = knobs(p);
    out << "n=" << p.size() << " area=" << area(p) << " knobs=" << ks.size()
        << " nkcv=" << non_knob_convex_vertices(p).size()
        << " orthoconvex=" << (is_orthogonally_convex(p) ? "true" : "false") << '\n';
    std::size_t left = 0, right = 0, top = 0, bottom = 0;
    for (const Knob& k : ks) {
        switch (k.direction) {
            case Direction::Left: ++left; break;
            case Direction::Right: ++right; break;
            case Direction::Top: ++top; break;
            case Direction::Bottom: ++bottom; break;
        }
    }
    out << "knob_directions left=" << left << " right=" << right << " top=" << top << " bottom=" << bottom << '\n';
    return kExitOk;
}

int cmd_oracle(const std::string& path, bool exhaustive, std::optional<std::size_t> cap, std::ostream& out) {
    const Polygon p = read_polygon_file(path);
    if (exhaustive) {
        out << exhaustive_solve(p) << '\n';
        return kExitOk;
    }
    OracleOptions opts;
    opts.cap = cap ? *cap : oracle_cap_from_env();
    out << oracle_solve(p, opts) << '\n';
    return kExitOk;
}

int exit_for(const Error& e) {
    if (is_input_error(e.code()) || e.code() == ErrorCode::GenerationFailed) return kExitInvalidInput;
    if (is_cap_error(e.code())) return kExitCapExceeded;
    if (e.code() == ErrorCode::PackOutsidePolygon) return kExitCheckFailed;
    return kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact minimum square covers of orthogonal polygons"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "orthocover 1.0");

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Compute a minimum square cover");
    solve_cmd->add_option("polygon", solve.path, "OPOLY file")->required();
    solve_cmd->add_option("--method", solve.method, "poly, recursive, oracle or auto")
        ->check(CLI::IsMember({"poly", "recursive", "oracle", "auto"}));
    solve_cmd->add_option("--out,-o", solve.out_path, "Write the cover as OCOVER");
    solve_cmd->add_flag("--steps", solve.steps, "Log solver progress to standard error");
    solve_cmd->add_flag("--fix", solve.fix, "Merge repeated and collinear vertices before validating");

    std::string check_poly, check_cover;
    auto* check_cmd = app.add_subcommand("check", "Verify a cover against a polygon");
    check_cmd->add_option("polygon", check_poly, "OPOLY file")->required();
    check_cmd->add_option("cover", check_cover, "OCOVER file")->required();

    RenderArgs render;
    auto* render_cmd = app.add_subcommand("render", "Draw a polygon and optional cover as SVG");
    render_cmd->add_option("polygon", render.poly_path, "OPOLY file")->required();
    render_cmd->add_option("cover", render.cover_path, "OCOVER file");
    render_cmd->add_option("--out,-o", render.out_path, "Output file, standard output by default");
    render_cmd->add_option("--scale", render.spec.scale, "Pixels per unit")->check(CLI::Range(1, 1'000'000));
    render_cmd->add_flag("--no-polygon", render.no_polygon);
    render_cmd->add_flag("--no-cover", render.no_cover);
    render_cmd->add_flag("--no-grid", render.no_grid);
    render_cmd->add_flag("--no-labels", render.no_labels);

    GenSpec gen;
    std::string gen_kind = "rect-union";
    auto* gen_cmd = app.add_subcommand("gen", "Generate a polygon as OPOLY on standard output");
    gen_cmd->add_option("--kind", gen_kind, "rect-union, staircase, ortho-convex, comb or rectangle")
        ->check(CLI::IsMember({"rect-union", "staircase", "ortho-convex", "comb", "rectangle"}));
    gen_cmd->add_option("--seed", gen.seed);
    gen_cmd->add_option("--t", gen.t, "Rectangle length")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--steps", gen.steps, "Staircase steps")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--unit", gen.unit, "Staircase step size, 0 for random")->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--columns", gen.columns, "Ortho-convex columns")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--teeth", gen.teeth, "Comb teeth per side")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--grid", gen.grid, "Rect-union grid size")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--pieces", gen.pieces, "Rect-union rectangle count")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--max-cell", gen.max_cell, "Widest cell")->check(CLI::PositiveNumber);

    std::string info_path;
    bool info_fix = false;
    auto* info_cmd = app.add_subcommand("info", "Describe a polygon");
    info_cmd->add_option("polygon", info_path, "OPOLY file")->required();
    info_cmd->add_flag("--fix", info_fix);

    std::string oracle_path;
    bool oracle_exhaustive = false;
    std::optional<std::size_t> oracle_cap;
    auto* oracle_cmd = app.add_subcommand("oracle", "Reference lattice solver for small polygons");
    oracle_cmd->add_option("polygon", oracle_path, "OPOLY file")->required();
    oracle_cmd->add_flag("--exhaustive", oracle_exhaustive, "Use the branching search instead of clique covers");
    oracle_cmd->add_option("--cap", oracle_cap, "Block cap, overrides ORTHOCOVER_ORACLE_CAP");

    // CLI11 wants argv-style input.
    std::vector<const char*> argv{"orthocover"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << "orthocover 1.0\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve, out, err);
        if (*check_cmd) return cmd_check(check_poly, check_cover, out);
        if (*render_cmd) return cmd_render(render, out);
        if (*gen_cmd) {
            gen.kind = *parse_gen_kind(gen_kind);
            write_polygon(out, generate(gen));
            return kExitOk;
        }
        if (*info_cmd) return cmd_info(info_path, info_fix, out);
        if (*oracle_cmd) return cmd_oracle(oracle_path, oracle_exhaustive, oracle_cap, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_for(e);
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}

}  // namespace orthocover
