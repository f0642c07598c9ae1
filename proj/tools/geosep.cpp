// geosep: generate point sets, solve the three separability problems, verify
// against the brute-force references, and benchmark.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geosep/alloc_stats.hpp"
#include "geosep/kdtree.hpp"
#include "geosep/lmc.hpp"
#include "geosep/lmr.hpp"
#include "geosep/lwr.hpp"
#include "geosep/oracles.hpp"
#include "geosep/pointio.hpp"

using json = nlohmann::ordered_json;
using namespace geosep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

// Measures heap traffic of one call: allocations made and peak bytes above
// the live total at entry.
struct AllocWindow {
    alloc::Snapshot start;
    std::uint64_t allocs = 0;
    std::int64_t peak = 0;

    AllocWindow() {
        alloc::reset_peak();
        start = alloc::snapshot();
    }

    void stop() {
        const alloc::Snapshot now = alloc::snapshot();
        allocs = now.allocations - start.allocations;
        peak = now.peak_bytes - start.current_bytes;
    }
};

template <class P>
std::vector<P> load(const std::string& path, std::vector<P> (*reader)(std::istream&, int), int digits) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return reader(in, digits);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

template <class P>
bool same_multiset(std::vector<P> a, std::vector<P> b) {
    auto by_id = [](const P& x, const P& y) { return x.id < y.id; };
    std::sort(a.begin(), a.end(), by_id);
    std::sort(b.begin(), b.end(), by_id);
    return a == b;
}

std::string coord_text(Coord v, int digits) {
    if (v == kCoordNegInf) return "-inf";
    if (v == kCoordPosInf) return "inf";
    return format_decimal(v, digits);
}

// ---- generation ----------------------------------------------------------

struct GenSpec {
    std::uint64_t seed = 1;
    std::size_t n = 0;
    std::size_t m = 0;
    int dim = 2;
    std::string distribution = "uniform";
    bool weighted = false;
};

// Coordinates are drawn in hundredths on [0, 1000) and rescaled.
Coord from_hundredths(std::int64_t h, int digits) {
    if (digits >= 2) {
        Coord f = 1;
        for (int i = 2; i < digits; ++i) f *= 10;
        return h * f;
    }
    return digits == 1 ? h / 10 : h / 100;
}

struct Generator {
    std::mt19937_64 rng;
    const GenSpec& spec;
    int digits;
    std::vector<std::array<std::int64_t, 3>> centers;

    Generator(const GenSpec& s, int d) : rng(s.seed), spec(s), digits(d) {
        if (spec.distribution == "clustered") {
            const std::size_t k = std::max<std::size_t>(1, (spec.n + spec.m) / 20);
            std::uniform_int_distribution<std::int64_t> pos(0, 99999);
            for (std::size_t i = 0; i < k; ++i) centers.push_back({pos(rng), pos(rng), pos(rng)});
        }
    }

    std::array<Coord, 3> point() {
        std::array<std::int64_t, 3> h{};
        if (centers.empty()) {
            std::uniform_int_distribution<std::int64_t> pos(0, 99999);
            for (auto& v : h) v = pos(rng);
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, centers.size() - 1);
            std::normal_distribution<double> spread(0.0, 2000.0);
            const auto& c = centers[pick(rng)];
            for (int d = 0; d < 3; ++d)
                h[d] = std::clamp<std::int64_t>(c[d] + std::llround(spread(rng)), 0, 99999);
        }
        return {from_hundredths(h[0], digits), from_hundredths(h[1], digits), from_hundredths(h[2], digits)};
    }
};

void generate(const GenSpec& spec, std::ostream& out) {
    const int digits = scale_digits();
    if (spec.dim != 2 && spec.dim != 3) throw InputError("--dim must be 2 or 3");
    if (spec.weighted && spec.dim != 2) throw InputError("--weighted requires --dim 2");
    if (spec.distribution != "uniform" && spec.distribution != "clustered")
        throw InputError("--distribution must be uniform or clustered");

    out << "# geosep gen seed=" << spec.seed << " n=" << spec.n << " m=" << spec.m << " dim=" << spec.dim
        << " distribution=" << spec.distribution << (spec.weighted ? " weighted" : "") << '\n';

    Generator gen(spec, digits);
    std::vector<std::pair<std::array<Coord, 3>, bool>> raw;
    for (std::size_t i = 0; i < spec.n + spec.m; ++i) raw.emplace_back(gen.point(), i < spec.n);
    std::shuffle(raw.begin(), raw.end(), gen.rng);

    if (spec.weighted) {
        std::uniform_int_distribution<std::int64_t> mag(1, 9);
        std::vector<WeightedPoint2> pts;
        for (const auto& [c, red] : raw) {
            Coord unit = 1;
            for (int i = 0; i < digits; ++i) unit *= 10;
            const Coord w = mag(gen.rng) * unit;
            pts.push_back({c[0], c[1], red ? w : -w, 0});
        }
        write_points(out, std::span<const WeightedPoint2>(pts), digits);
    } else if (spec.dim == 2) {
        std::vector<Point2> pts;
        for (const auto& [c, red] : raw) pts.push_back({c[0], c[1], red ? Color::Red : Color::Blue, 0});
        write_points(out, std::span<const Point2>(pts), digits);
    } else {
        std::vector<Point3> pts;
        for (const auto& [c, red] : raw) pts.push_back({c[0], c[1], c[2], red ? Color::Red : Color::Blue, 0});
        write_points(out, std::span<const Point3>(pts), digits);
    }
}

// In-memory generation for benchmarks (ids are sequential).
std::vector<Point2> random_points2(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    std::uniform_int_distribution<Coord> pos(0, 999999);
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < n + m; ++i)
        pts.push_back({pos(rng), pos(rng), i < n ? Color::Red : Color::Blue, static_cast<std::uint32_t>(i + 1)});
    return pts;
}

std::vector<Point3> random_points3(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    std::uniform_int_distribution<Coord> pos(0, 999999);
    std::vector<Point3> pts;
    for (std::size_t i = 0; i < n + m; ++i)
        pts.push_back(
            {pos(rng), pos(rng), pos(rng), i < n ? Color::Red : Color::Blue, static_cast<std::uint32_t>(i + 1)});
    return pts;
}

std::vector<WeightedPoint2> random_weighted(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    std::uniform_int_distribution<Coord> pos(0, 999999);
    std::uniform_int_distribution<std::int64_t> mag(1, 9);
    std::vector<WeightedPoint2> pts;
    for (std::size_t i = 0; i < n + m; ++i) {
        const std::int64_t w = mag(rng);
        pts.push_back({pos(rng), pos(rng), i < n ? w : -w, static_cast<std::uint32_t>(i + 1)});
    }
    return pts;
}

}  // namespace

namespace {

// ---- result records ------------------------------------------------------

std::string scaled_text(long double v, int digits) {
    long double unit = 1;
    for (int i = 0; i < digits; ++i) unit *= 10;
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << static_cast<double>(v / unit);
    return os.str();
}

json point_json(Coord x, Coord y, std::uint32_t id, int digits) {
    return json{{"id", id}, {"x", format_decimal(x, digits)}, {"y", format_decimal(y, digits)}};
}

struct FrameExtent {
    Wide u_min = 0, u_max = 0, v_max = 0;
};

template <class P>
FrameExtent frame_extent(std::span<const P> pts, const Frame& f, int side) {
    FrameExtent e;
    for (const P& p : pts) {
        const FrameCoords c = frame_coords(p, f);
        e.u_min = std::min(e.u_min, c.u);
        e.u_max = std::max(e.u_max, c.u);
        e.v_max = std::max(e.v_max, side * c.v);
    }
    return e;
}

// Frame bounds as strings plus, when every bound is finite (or clamped to
// the data extent), the four corners in input coordinates.
template <class P>
json framed_json(const Frame& f, int side, Wide left, Wide right, Wide top, std::span<const P> pts, bool clamp,
                 int digits) {
    json out;
    out["p"] = point_json(f.px, f.py, f.p_id, digits);
    out["q"] = point_json(f.qx, f.qy, f.q_id, digits);
    out["side"] = side;
    out["bounds"] = {{"left", ext_to_string(left)}, {"right", ext_to_string(right)}, {"bottom", "0"},
                     {"top", ext_to_string(top)}};
    if (clamp) {
        const FrameExtent e = frame_extent(pts, f, side);
        if (left <= kWideNegInf) left = std::min<Wide>(e.u_min, 0);
        if (right >= kWidePosInf) right = std::max(e.u_max, f.u_of_q());
        if (top >= kWidePosInf) top = e.v_max;
    }
    if (left > kWideNegInf && right < kWidePosInf && top < kWidePosInf) {
        const long double dx = f.dx(), dy = f.dy();
        const long double len2 = dx * dx + dy * dy;
        json corners = json::array();
        for (auto [u, v] : {std::pair{left, Wide{0}}, std::pair{right, Wide{0}}, std::pair{right, top},
                            std::pair{left, top}}) {
            const long double a = static_cast<long double>(u) / len2;
            const long double b = static_cast<long double>(side * v) / len2;
            corners.push_back({scaled_text(f.px + a * dx + b * dy, digits), scaled_text(f.py + a * dy - b * dx, digits)});
        }
        out["corners"] = corners;
    }
    return out;
}

json rect_json(const OrientedRect& r, std::span<const Point2> pts, bool clamp, int digits) {
    switch (r.kind) {
        case RectKind::Plane:
            return json{{"kind", "plane"}};
        case RectKind::Point:
            return json{{"kind", "point"}, {"at", point_json(r.frame.px, r.frame.py, r.frame.p_id, digits)}};
        case RectKind::Framed:
            break;
    }
    json out = framed_json(r.frame, r.side, r.left, r.right, r.top, pts, clamp, digits);
    out["kind"] = "framed";
    return out;
}

json weighted_json(const WeightedRect& r, std::span<const WeightedPoint2> pts, bool clamp, int digits) {
    if (r.kind == RectKind::Point)
        return json{{"kind", "point"}, {"at", point_json(r.frame.px, r.frame.py, r.frame.p_id, digits)}};
    json out = framed_json(r.frame, r.side, r.left, r.right, r.top, pts, clamp, digits);
    out["kind"] = "framed";
    return out;
}

json cuboid_json(const AxisCuboid& c, std::span<const Point3> pts, bool clamp, int digits) {
    std::array<Coord, 3> lo = c.lo, hi = c.hi;
    if (clamp && !pts.empty()) {
        for (int d = 0; d < 3; ++d) {
            Coord mn = kCoordPosInf, mx = kCoordNegInf;
            for (const Point3& p : pts) {
                const Coord v = d == 0 ? p.x : (d == 1 ? p.y : p.z);
                mn = std::min(mn, v);
                mx = std::max(mx, v);
            }
            if (lo[d] == kCoordNegInf) lo[d] = mn;
            if (hi[d] == kCoordPosInf) hi[d] = mx;
        }
    }
    json out;
    out["lo"] = json::array({coord_text(lo[0], digits), coord_text(lo[1], digits), coord_text(lo[2], digits)});
    out["hi"] = json::array({coord_text(hi[0], digits), coord_text(hi[1], digits), coord_text(hi[2], digits)});
    return out;
}

json stats_json(const SolveStats& s, double wall_ms, const AllocWindow& w) {
    return json{{"candidate_pairs", s.candidate_pairs}, {"trees_built", s.trees_built},
                {"kd_nodes_visited", s.visited_nodes},  {"peak_aux_bytes", std::max<std::int64_t>(0, w.peak)},
                {"allocations", w.allocs},               {"wall_ms", wall_ms}};
}

template <class P>
std::pair<std::size_t, std::size_t> color_counts(const std::vector<P>& pts) {
    std::size_t n = 0;
    for (const P& p : pts) {
        if constexpr (std::is_same_v<P, WeightedPoint2>) {
            n += p.red() ? 1 : 0;
        } else {
            n += p.color == Color::Red ? 1 : 0;
        }
    }
    return {n, pts.size() - n};
}

// ---- solve / verify ------------------------------------------------------

struct SolveOptions {
    std::string file;
    std::string problem;
    bool clamp = false;
    unsigned threads = 1;
    bool verify = false;
    bool corrupt_witness = false;
};

int run_problem(const SolveOptions& o) {
    const int digits = scale_digits();
    json rec;
    rec["problem"] = o.problem;
    bool ok = true;

    auto finish_verify = [&](const json& solver_value, const json& oracle_value, bool rescan_ok) {
        const bool match = solver_value == oracle_value;
        rec["oracle"] = oracle_value;
        rec["status"] = match && rescan_ok ? "pass" : "fail";
        if (!match) rec["diff"] = {{"solver", solver_value}, {"oracle", oracle_value}};
        ok = match && rescan_ok;
    };

    if (o.problem == "lmr") {
        auto pts = load(o.file, read_colored2, digits);
        const auto original = pts;
        const auto [n, m] = color_counts(pts);
        if (o.verify && pts.size() > kLmrOracleCap) throw OracleCapExceeded(pts.size(), kLmrOracleCap);
        SolveStats stats;
        const auto t0 = std::chrono::steady_clock::now();
        AllocWindow window;
        OrientedRect rect = solve_lmr(pts, stats, LmrOptions{o.threads});
        window.stop();
        const double ms = elapsed_ms(t0);
        rec["n"] = n;
        rec["m"] = m;
        if (o.corrupt_witness) rect.size += 1;
        rec["size"] = rect.size;
        rec["color"] = color_name(rect.color);
        rec["witness"] = rect_json(rect, original, o.clamp, digits);
        rec["stats"] = stats_json(stats, ms, window);
        rec["stats"]["permutation_ok"] = same_multiset(pts, original);
        const auto rescan = rescan_rect(original, rect);
        const bool rescan_ok = rescan && *rescan == rect.size;
        rec["rescan"] = {{"ok", rescan_ok}, {"size", rescan ? json(*rescan) : json(nullptr)}};
        ok = rescan_ok;
        if (o.verify) finish_verify(json(rect.size), json(brute_lmr(original)), rescan_ok);
    } else if (o.problem == "lwr") {
        const auto pts = load(o.file, read_weighted2, digits);
        const auto [n, m] = color_counts(pts);
        if (o.verify && pts.size() > kLwrOracleCap) throw OracleCapExceeded(pts.size(), kLwrOracleCap);
        SolveStats stats;
        const auto t0 = std::chrono::steady_clock::now();
        AllocWindow window;
        WeightedRect rect = solve_lwr(pts, stats);
        window.stop();
        const double ms = elapsed_ms(t0);
        rec["n"] = n;
        rec["m"] = m;
        if (o.corrupt_witness) rect.weight += 1;
        rec["weight"] = format_decimal(rect.weight, digits);
        rec["weight_scaled"] = rect.weight;
        rec["witness"] = weighted_json(rect, pts, o.clamp, digits);
        rec["stats"] = stats_json(stats, ms, window);
        const std::int64_t rescan = pts.empty() ? 0 : rescan_weight(pts, rect);
        const bool rescan_ok = rescan == rect.weight;
        rec["rescan"] = {{"ok", rescan_ok}, {"weight_scaled", rescan}};
        ok = rescan_ok;
        if (o.verify) finish_verify(json(rect.weight), json(brute_lwr(pts)), rescan_ok);
    } else if (o.problem == "lmc") {
        auto pts = load(o.file, read_colored3, digits);
        const auto original = pts;
        const auto [n, m] = color_counts(pts);
        if (o.verify && pts.size() > kLmcOracleCap) throw OracleCapExceeded(pts.size(), kLmcOracleCap);
        SolveStats stats;
        const auto t0 = std::chrono::steady_clock::now();
        AllocWindow window;
        AxisCuboid box = solve_lmc(pts, stats);
        window.stop();
        const double ms = elapsed_ms(t0);
        rec["n"] = n;
        rec["m"] = m;
        if (o.corrupt_witness) box.size += 1;
        rec["size"] = box.size;
        rec["color"] = color_name(box.color);
        rec["witness"] = cuboid_json(box, original, o.clamp, digits);
        rec["stats"] = stats_json(stats, ms, window);
        rec["stats"]["permutation_ok"] = same_multiset(pts, original);
        const auto rescan = rescan_cuboid(original, box);
        const bool rescan_ok = rescan && *rescan == box.size;
        rec["rescan"] = {{"ok", rescan_ok}, {"size", rescan ? json(*rescan) : json(nullptr)}};
        ok = rescan_ok;
        if (o.verify) finish_verify(json(box.size), json(brute_lmc(original)), rescan_ok);
    } else {
        throw InputError("unknown problem '" + o.problem + "' (expected lmr, lwr or lmc)");
    }
    std::cout << rec.dump(2) << '\n';
    return ok ? kExitOk : kExitMismatch;
}

// ---- bench ---------------------------------------------------------------

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw InputError("bad size '" + item + "' in --sizes");
        }
    }
    return out;
}

int run_bench(const std::string& problem, const std::string& sizes_text, std::uint64_t seed, std::size_t queries) {
    if (problem != "kdtree" && problem != "lmr" && problem != "lwr" && problem != "lmc")
        throw InputError("unknown bench problem '" + problem + "'");
    const auto sizes = parse_sizes(sizes_text);
    std::cout << "problem,n,m,wall_ms,visited_nodes,aux_bytes\n";
    std::mt19937_64 rng(seed);
    for (std::size_t size : sizes) {
        double ms = 0;
        std::uint64_t visited = 0;
        std::int64_t aux = 0;
        std::size_t n = size, m = size;
        if (problem == "kdtree") {
            m = 0;
            auto pts = random_points2(rng, size, 0);
            std::uniform_int_distribution<Coord> pos(0, 999999);
            std::vector<QueryBox<Coord, 2>> boxes(queries);
            for (auto& b : boxes) {
                for (int d = 0; d < 2; ++d) {
                    Coord a = pos(rng), c = pos(rng);
                    if (a > c) std::swap(a, c);
                    b.lo[d] = a;
                    b.hi[d] = c;
                }
            }
            QueryScratch<2> scratch;
            const auto t0 = std::chrono::steady_clock::now();
            AllocWindow window;
            build_kdtree(std::span<Point2>(pts), AxisKeys<2>{});
            std::uint64_t total = 0;
            for (const auto& b : boxes) {
                count_in_range(std::span<const Point2>(pts), AxisKeys<2>{}, b, scratch);
                total += scratch.visited;
            }
            window.stop();
            ms = elapsed_ms(t0);
            visited = queries ? total / queries : 0;
            aux = window.peak;
        } else if (problem == "lmr") {
            auto pts = random_points2(rng, n, m);
            SolveStats stats;
            const auto t0 = std::chrono::steady_clock::now();
            AllocWindow window;
            solve_lmr(pts, stats);
            window.stop();
            ms = elapsed_ms(t0);
            visited = stats.visited_nodes;
            aux = window.peak;
        } else if (problem == "lwr") {
            const auto pts = random_weighted(rng, n, m);
            SolveStats stats;
            const auto t0 = std::chrono::steady_clock::now();
            AllocWindow window;
            solve_lwr(pts, stats);
            window.stop();
            ms = elapsed_ms(t0);
            visited = stats.candidate_pairs;
            aux = window.peak;
        } else {
            auto pts = random_points3(rng, n, m);
            SolveStats stats;
            const auto t0 = std::chrono::steady_clock::now();
            AllocWindow window;
            solve_lmc(pts, stats);
            window.stop();
            ms = elapsed_ms(t0);
            visited = stats.visited_nodes;
            aux = window.peak;
        }
        std::cout << problem << ',' << n << ',' << m << ',' << ms << ',' << visited << ',' << std::max<std::int64_t>(0, aux)
                  << '\n';
    }
    return kExitOk;
}

// ---- kdtree --------------------------------------------------------------

std::vector<Coord> parse_coord_list(const std::string& text, int digits, std::size_t want, const char* flag) {
    std::vector<Coord> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "-inf") {
            out.push_back(kCoordNegInf);
        } else if (item == "inf") {
            out.push_back(kCoordPosInf);
        } else if (auto v = parse_decimal(item, digits)) {
            out.push_back(*v);
        } else {
            throw InputError(std::string("bad coordinate '") + item + "' in " + flag);
        }
    }
    if (out.size() != want) throw InputError(std::string(flag) + " needs " + std::to_string(want) + " values");
    return out;
}

template <class P, int K>
int run_kdtree_query(std::vector<P> pts, const std::vector<Coord>& lo, const std::vector<Coord>& hi, bool report) {
    QueryBox<Coord, K> box;
    for (int d = 0; d < K; ++d) {
        box.lo[d] = lo[d];
        box.hi[d] = hi[d];
        if (lo[d] > hi[d]) throw InputError("--lo must not exceed --hi");
    }
    QueryScratch<K> scratch;
    AllocWindow window;
    build_kdtree(std::span<P>(pts), AxisKeys<K>{});
    json rec;
    std::vector<std::uint32_t> ids;
    std::size_t count;
    if (report) {
        ids.reserve(pts.size());
        count = report_in_range(std::span<const P>(pts), AxisKeys<K>{}, box, scratch,
                                [&](const P& p) { ids.push_back(p.id); });
    } else {
        count = count_in_range(std::span<const P>(pts), AxisKeys<K>{}, box, scratch);
    }
    window.stop();
    rec["n"] = pts.size();
    rec["count"] = count;
    rec["visited_nodes"] = scratch.visited;
    rec["allocations"] = window.allocs;
    if (report) {
        std::sort(ids.begin(), ids.end());
        rec["ids"] = ids;
    }
    std::cout << rec.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bichromatic separability: largest monochromatic rectangles and cuboids"};
    app.require_subcommand(1);

    GenSpec gen_spec;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a random point file");
    gen->add_option("--seed", gen_spec.seed, "RNG seed");
    gen->add_option("--n", gen_spec.n, "Red points");
    gen->add_option("--m", gen_spec.m, "Blue points");
    gen->add_option("--dim", gen_spec.dim, "Dimension (2 or 3)");
    gen->add_option("--distribution", gen_spec.distribution, "uniform or clustered");
    gen->add_flag("--weighted", gen_spec.weighted, "Emit signed weights instead of colors (2D)");
    gen->add_option("--out", gen_out, "Output file (default stdout)");

    SolveOptions solve_opts;
    auto* solve = app.add_subcommand("solve", "Solve one instance and print a JSON result record");
    solve->add_option("file", solve_opts.file, "Point file")->required();
    solve->add_option("--problem", solve_opts.problem, "lmr, lwr or lmc")->required();
    solve->add_flag("--clamp", solve_opts.clamp, "Clamp unbounded witness sides to the data extent");
    solve->add_option("--threads", solve_opts.threads, "Worker threads for lmr");

    SolveOptions verify_opts;
    verify_opts.verify = true;
    auto* verify = app.add_subcommand("verify", "Solve and compare with the brute-force reference");
    verify->add_option("file", verify_opts.file, "Point file")->required();
    verify->add_option("--problem", verify_opts.problem, "lmr, lwr or lmc")->required();
    verify->add_flag("--corrupt-witness", verify_opts.corrupt_witness)->group("");

    std::string bench_problem = "kdtree";
    std::string bench_sizes = "256,1024,4096,16384";
    std::uint64_t bench_seed = 1;
    std::size_t bench_queries = 200;
    auto* bench = app.add_subcommand("bench", "Print a CSV of timings, visited nodes and auxiliary bytes");
    bench->add_option("--problem", bench_problem, "kdtree, lmr, lwr or lmc");
    bench->add_option("--sizes", bench_sizes, "Comma-separated sizes (n, and m = n for solvers); empty for none")
        ->expected(0, 1);
    bench->add_option("--seed", bench_seed, "RNG seed");
    bench->add_option("--queries", bench_queries, "Random boxes per size (kdtree)");

    std::string kd_file, kd_lo, kd_hi;
    int kd_dim = 2;
    bool kd_report = false;
    auto* kd = app.add_subcommand("kdtree", "Build the implicit k-d tree over a file and run one box query");
    kd->add_option("file", kd_file, "Colored point file")->required();
    kd->add_option("--dim", kd_dim, "2 or 3");
    kd->add_option("--lo", kd_lo, "Comma-separated lower corner (-inf allowed)")->required();
    kd->add_option("--hi", kd_hi, "Comma-separated upper corner (inf allowed)")->required();
    kd->add_flag("--report", kd_report, "List the ids of the points inside");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*gen) {
            if (gen_out.empty()) {
                generate(gen_spec, std::cout);
            } else {
                std::ofstream out(gen_out);
                if (!out) throw InputError("cannot write " + gen_out);
                generate(gen_spec, out);
            }
            return kExitOk;
        }
        if (*solve) return run_problem(solve_opts);
        if (*verify) return run_problem(verify_opts);
        if (*bench) return run_bench(bench_problem, bench_sizes, bench_seed, bench_queries);
        if (*kd) {
            const int digits = scale_digits();
            if (kd_dim == 2) {
                return run_kdtree_query<Point2, 2>(load(kd_file, read_colored2, digits),
                                                   parse_coord_list(kd_lo, digits, 2, "--lo"),
                                                   parse_coord_list(kd_hi, digits, 2, "--hi"), kd_report);
            }
            if (kd_dim == 3) {
                return run_kdtree_query<Point3, 3>(load(kd_file, read_colored3, digits),
                                                   parse_coord_list(kd_lo, digits, 3, "--lo"),
                                                   parse_coord_list(kd_hi, digits, 3, "--hi"), kd_report);
            }
            throw InputError("--dim must be 2 or 3");
        }
    } catch (const OracleCapExceeded& e) {
        std::cerr << "geosep: " << e.what() << '\n';
        return kExitCap;
    } catch (const InputError& e) {
        std::cerr << "geosep: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "geosep: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
