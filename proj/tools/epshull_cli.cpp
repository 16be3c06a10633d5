// epshull command line: stream generation, algorithm runs, validation and
// benchmark suites over the point-stream file format.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "epshull/bench.hpp"
#include "epshull/epsdelta.hpp"
#include "epshull/errors.hpp"
#include "epshull/geom.hpp"
#include "epshull/multipass.hpp"
#include "epshull/oracles.hpp"
#include "epshull/roa.hpp"
#include "epshull/stream_io.hpp"
#include "epshull/streamgen.hpp"

using namespace epshull;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

GrowthTable parse_growth_table(const std::string& s) {
    if (s.rfind("const:", 0) == 0) {
        long long c = std::stoll(s.substr(6));
        return [c](long long) { return c; };
    }
    if (s == "x") return [](long long x) { return x; };
    if (s == "2x") return [](long long x) { return 2 * x; };
    throw InvalidInputError("unknown f table '" + s + "' (use const:<c>, x, or 2x)");
}

// Affine map used by the multipass driver to bring streams to diameter <= 1.
struct ScaleMap {
    Vec2 center{0, 0};
    double scale = 1.0;
    Vec2 forward(Vec2 p) const { return scale * (p - center); }
    Vec2 inverse(Vec2 p) const { return center + (1.0 / scale) * p; }
};

class ScaledSource final : public PointSource2D {
public:
    ScaledSource(PointSource2D& inner, const ScaleMap& map) : inner_(inner), map_(map) {}
    void reset() override { inner_.reset(); }
    bool next(Vec2& out) override {
        if (!inner_.next(out)) return false;
        out = map_.forward(out);
        return true;
    }

private:
    PointSource2D& inner_;
    const ScaleMap& map_;
};

int cmd_gen(const std::string& kind, std::size_t n, std::uint64_t seed, double radius, int k,
            int dim, bool random_angles, const std::string& f_str, int r,
            const std::string& out) {
    if (kind == "lower_bound_3d") {
        auto art = gen_lower_bound_3d(parse_growth_table(f_str), r);
        write_point_stream(out, art.stream);
        nlohmann::json meta;
        meta["eps_star"] = art.eps_star;
        meta["layer_offsets"] = art.layer_offsets;
        meta["layer_sizes"] = art.layer_sizes;
        meta["layer_margins"] = art.layer_margins;
        meta["group_map"] = art.group_map;
        std::ofstream ms(out + ".meta.json");
        ms << meta.dump(2) << '\n';
        std::printf("wrote %zu points (%zu layers, eps_star=%s) to %s\n", art.stream.size(),
                    art.layers(), format_double(art.eps_star).c_str(), out.c_str());
        return 0;
    }
    StreamSpec spec;
    spec.n = n;
    spec.seed = seed;
    spec.radius = radius;
    spec.ngon_k = k;
    spec.dim = dim;
    spec.equally_spaced = !random_angles;
    if (kind == "circle") spec.kind = StreamKind::Circle;
    else if (kind == "disk") spec.kind = StreamKind::Disk;
    else if (kind == "square_grid") spec.kind = StreamKind::SquareGrid;
    else if (kind == "gaussian") spec.kind = StreamKind::Gaussian;
    else if (kind == "ngon_boundary") spec.kind = StreamKind::NgonBoundary;
    else throw InvalidInputError("unknown kind '" + kind + "'");
    auto pts = generate(spec);
    write_point_stream(out, pts);
    std::printf("wrote %zu points to %s\n", pts.size(), out.c_str());
    return 0;
}

int cmd_run(const std::string& algo, const std::string& input, double eps, double delta,
            double gamma, int k, std::int64_t seed, const std::string& mode,
            std::int64_t shuffle_seed, const std::string& output, const std::string& csv) {
    double t0 = now_ms();
    ResultRow row;
    row.algo = algo;
    row.eps = eps;
    row.seed = seed;

    std::vector<PointN> out_points;

    if (algo == "roa") {
        auto pts = read_point_stream(input);
        auto p2 = to_vec2(pts);
        if (shuffle_seed >= 0) {
            p2 = shuffle_random_order_2d(p2, static_cast<std::uint64_t>(shuffle_seed));
            row.mode = "shuffled";
        }
        Roa roa(eps);
        for (Vec2 p : p2) roa.insert(p);
        for (Vec2 p : roa.current()) out_points.push_back({p.x, p.y});
        row.n = p2.size();
        row.d = 2;
        row.passes = 1;
        row.stored_final = roa.size();
        row.stored_peak = roa.peak_size();
        auto rep = is_eps_hull_2d(p2, roa.current(), eps);
        row.is_eps_hull = rep.is_valid;
        row.max_violation = rep.max_violation;
    } else if (algo == "multipass") {
        FileSource2D file(input);
        // Preliminary scan-and-scale traversal: not counted as a pass,
        // reported in the mode column.
        ScaleMap map;
        {
            Vec2 p;
            Vec2 lo{0, 0}, hi{0, 0};
            bool first = true;
            std::size_t count = 0;
            file.reset();
            while (file.next(p)) {
                ++count;
                if (first) {
                    lo = hi = p;
                    first = false;
                } else {
                    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
                    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
                }
            }
            if (count == 0) throw InvalidInputError("multipass: empty stream");
            double diag = dist(lo, hi);
            map.center = 0.5 * (lo + hi);
            map.scale = diag > 0 ? 1.0 / diag : 1.0;
            row.n = count;
        }
        ScaledSource scaled(file, map);
        auto res = multipass_run(scaled, eps);
        for (Vec2 q : res.hull) {
            Vec2 orig = map.inverse(q);
            out_points.push_back({orig.x, orig.y});
        }
        row.d = 2;
        row.passes = res.passes;
        row.stored_final = res.hull.size();
        row.stored_peak = res.peak_words;
        row.mode += row.mode.empty() ? "normalized;prelim_traversals=1"
                                     : ";normalized;prelim_traversals=1";
        // Validity is checked in scaled coordinates, where eps was applied.
        std::vector<Vec2> scaled_pts;
        Vec2 p;
        scaled.reset();
        while (scaled.next(p)) scaled_pts.push_back(p);
        auto rep = is_eps_hull_2d(scaled_pts, res.hull, eps);
        row.is_eps_hull = rep.is_valid;
        row.max_violation = rep.max_violation;
    } else if (algo == "epsdelta") {
        auto pts = read_point_stream(input);
        if (pts.empty()) throw InvalidInputError("epsdelta: empty stream");
        SketchParams params;
        params.k = k;
        params.delta = delta;
        params.gamma = gamma;
        params.dim = static_cast<int>(pts[0].size());
        params.seed = static_cast<std::uint64_t>(seed);
        params.mode = (mode == "full") ? SketchMode::Full : SketchMode::Practical;
        DirectionSketch sk(params);
        for (const auto& p : pts) sk.update(p);
        out_points = sk.output();
        row.n = pts.size();
        row.d = params.dim;
        row.passes = 1;
        row.delta = delta;
        row.gamma = gamma;
        row.k = k;
        row.stored_final = out_points.size();
        row.stored_peak = sk.slot_count();
        row.bad_fraction = eps_delta_bad_fraction(pts, out_points, eps, 100000,
                                                  static_cast<std::uint64_t>(seed) + 999);
        row.is_eps_hull = row.bad_fraction <= delta;
        row.mode = (params.mode == SketchMode::Full) ? "full" : "practical";
    } else {
        throw InvalidInputError("unknown algo '" + algo + "'");
    }

    write_point_stream(output, out_points);
    row.wall_ms = now_ms() - t0;
    if (!csv.empty()) append_result_row(csv, row);
    std::printf("%s: n=%zu stored_final=%zu stored_peak=%zu passes=%d %s\n", algo.c_str(), row.n,
                row.stored_final, row.stored_peak, row.passes,
                row.bad_fraction >= 0
                    ? ("bad_fraction=" + format_double(row.bad_fraction)).c_str()
                    : (row.is_eps_hull ? "is_eps_hull=true" : "is_eps_hull=false"));
    return 0;
}

int cmd_validate(const std::string& input, const std::string& subset, double eps, double delta,
                 int samples, std::int64_t seed) {
    auto p = read_point_stream(input);
    auto s = read_point_stream(subset);
    auto rep = is_eps_hull(p, s, eps);
    std::string witness;
    for (std::size_t i = 0; i < rep.witness.size(); ++i)
        witness += (i ? " " : "") + format_double(rep.witness[i]);
    std::printf("eps-hull check: %s  max_violation=%s  witness=(%s)\n",
                rep.is_valid ? "PASS" : "FAIL", format_double(rep.max_violation).c_str(),
                witness.c_str());
    bool ok = rep.is_valid;
    if (delta >= 0.0) {
        double bad = eps_delta_bad_fraction(p, s, eps, samples, static_cast<std::uint64_t>(seed));
        bool dok = bad <= delta;
        std::printf("(eps,delta) check: %s  bad_fraction=%s  delta=%s  samples=%d\n",
                    dok ? "PASS" : "FAIL", format_double(bad).c_str(),
                    format_double(delta).c_str(), samples);
        // with --delta the direction test is the verdict
        ok = dok;
    }
    return ok ? 0 : 1;
}

int cmd_bench(const std::string& suite, int trials, std::uint64_t seed, const std::string& out) {
    bench::SuiteReport rep;
    if (suite == "roa_growth") {
        rep = bench::roa_space(trials, trials / 2, seed);
    } else if (suite == "multipass_bounds") {
        auto a = bench::multipass_pass_bound(trials, seed);
        auto b = bench::multipass_card_space(trials, seed + 1);
        rep.name = "multipass_bounds";
        rep.pass = a.pass && b.pass;
        rep.detail = a.detail + " | " + b.detail;
        rep.rows = a.rows;
        rep.rows.insert(rep.rows.end(), b.rows.begin(), b.rows.end());
    } else if (suite == "epsdelta_guarantee") {
        rep = bench::epsdelta_guarantee(trials, seed);
    } else if (suite == "lower_bound_demo") {
        rep = bench::lower_bound_demo();
    } else {
        std::fprintf(stderr, "unknown suite '%s'\n", suite.c_str());
        return 2;
    }
    if (!out.empty())
        for (const auto& row : rep.rows) append_result_row(out, row);
    std::printf("[%s] %s: %s\n", rep.pass ? "PASS" : "FAIL", rep.name.c_str(),
                rep.detail.c_str());
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"epshull: streaming approximate convex hulls with oracles and benchmarks"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a point-stream file");
    std::string g_kind, g_out = "stream.txt", g_f = "const:1";
    std::size_t g_n = 100;
    std::uint64_t g_seed = 0;
    double g_radius = 1.0;
    int g_k = 4, g_dim = 2, g_r = 2;
    bool g_random_angles = false;
    gen->add_option("--kind", g_kind,
                    "circle|disk|square_grid|gaussian|ngon_boundary|lower_bound_3d")
        ->required();
    gen->add_option("--n", g_n, "number of points");
    gen->add_option("--seed", g_seed, "generator seed");
    gen->add_option("--radius", g_radius, "circle/disk/ngon radius");
    gen->add_option("--k", g_k, "ngon_boundary vertex count");
    gen->add_option("--dim", g_dim, "gaussian dimension");
    gen->add_flag("--random-angles", g_random_angles, "circle: random instead of equal spacing");
    gen->add_option("--f", g_f, "lower_bound_3d growth table: const:<c>|x|2x");
    gen->add_option("--r", g_r, "lower_bound_3d layer parameter (r+1 layers)");
    gen->add_option("--out", g_out, "output file");

    // run
    auto* run = app.add_subcommand("run", "run an algorithm over a stream file");
    std::string r_algo, r_input, r_output = "hull.txt", r_csv, r_mode = "practical";
    double r_eps = 0.1, r_delta = 0.1, r_gamma = 0.1;
    int r_k = 4;
    std::int64_t r_seed = 0, r_shuffle_seed = -1;
    run->add_option("--algo", r_algo, "roa|multipass|epsdelta")->required();
    run->add_option("--input", r_input)->required();
    run->add_option("--eps", r_eps, "epsilon");
    run->add_option("--delta", r_delta, "epsdelta: bad-direction budget");
    run->add_option("--gamma", r_gamma, "epsdelta: failure probability");
    run->add_option("--k", r_k, "epsdelta: assumed OPT bound");
    run->add_option("--seed", r_seed, "epsdelta: direction seed");
    run->add_option("--mode", r_mode, "epsdelta: practical|full");
    run->add_option("--shuffle-seed", r_shuffle_seed, "roa: shuffle stream before feeding");
    run->add_option("--output", r_output, "output subset file");
    run->add_option("--csv", r_csv, "append a ResultRow to this CSV");

    // validate
    auto* val = app.add_subcommand("validate", "check a subset against a stream");
    std::string v_input, v_subset;
    double v_eps = 0.0, v_delta = -1.0;
    int v_samples = 100000;
    std::int64_t v_seed = 0;
    val->add_option("--input", v_input)->required();
    val->add_option("--subset", v_subset)->required();
    val->add_option("--eps", v_eps)->required();
    val->add_option("--delta", v_delta, "also run the Monte-Carlo direction check");
    val->add_option("--samples", v_samples);
    val->add_option("--seed", v_seed);

    // bench
    auto* ben = app.add_subcommand("bench", "run a benchmark suite");
    std::string b_suite, b_out;
    int b_trials = 20;
    std::uint64_t b_seed = 1;
    ben->add_option("--suite", b_suite,
                    "roa_growth|multipass_bounds|epsdelta_guarantee|lower_bound_demo")
        ->required();
    ben->add_option("--trials", b_trials);
    ben->add_option("--seed", b_seed);
    ben->add_option("--output", b_out, "CSV of ResultRows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(g_kind, g_n, g_seed, g_radius, g_k, g_dim, g_random_angles, g_f, g_r,
                           g_out);
        if (run->parsed())
            return cmd_run(r_algo, r_input, r_eps, r_delta, r_gamma, r_k, r_seed, r_mode,
                           r_shuffle_seed, r_output, r_csv);
        if (val->parsed()) return cmd_validate(v_input, v_subset, v_eps, v_delta, v_samples, v_seed);
        if (ben->parsed()) return cmd_bench(b_suite, b_trials, b_seed, b_out);
    } catch (const InvalidInputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const CapacityError& e) {
        std::fprintf(stderr, "capacity error: %s\n", e.what());
        return 2;
    } catch (const NumericFailureError& e) {
        std::fprintf(stderr, "numeric failure: %s (best bound %g)\n", e.what(), e.best_bound);
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
