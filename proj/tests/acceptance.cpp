// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "geosep/alloc_stats.hpp"
#include "geosep/kdtree.hpp"
#include "geosep/lmc.hpp"
#include "geosep/lmr.hpp"
#include "geosep/lwr.hpp"
#include "geosep/mer.hpp"
#include "geosep/oracles.hpp"
#include "geosep/weight_tree.hpp"
#include "support.hpp"

using namespace geosep;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Permutation checks made by every criterion feed criterion 8.
struct PermutationTally {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;

    template <class P>
    void record(const std::vector<P>& after, const std::vector<P>& before) {
        ++checks;
        if (!testing::same_multiset(after, before)) ++failures;
    }
};

PermutationTally tally;

int failures = 0;

void report(int number, const char* title, double limit_s, const std::function<Outcome()>& run) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = run();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double took = seconds_since(start);
    const bool in_time = limit_s <= 0 || took < limit_s;
    const bool pass = out.pass && in_time;
    if (!pass) ++failures;
    std::printf("criterion %d: %s  %s  (%s; %.2f s", number, pass ? "PASS" : "FAIL", title, out.detail.c_str(), took);
    if (limit_s > 0) std::printf(" of %.0f s", limit_s);
    std::printf(")\n");
    std::fflush(stdout);
}

template <int K>
QueryBox<Coord, K> random_box(std::mt19937_64& rng, Coord span) {
    std::uniform_int_distribution<Coord> pos(-span / 20, span + span / 20);
    QueryBox<Coord, K> b;
    for (int d = 0; d < K; ++d) {
        Coord a = pos(rng), c = pos(rng);
        if (a > c) std::swap(a, c);
        b.lo[d] = a;
        b.hi[d] = c;
    }
    return b;
}

template <class P, int K>
bool kdtree_instance(std::mt19937_64& rng, std::vector<P> pts) {
    const auto before = pts;
    build_kdtree(std::span<P>(pts), AxisKeys<K>{});
    tally.record(pts, before);
    QueryScratch<K> scratch;
    const Coord span = 1000;
    for (int q = 0; q < 50; ++q) {
        const auto box = random_box<K>(rng, span);
        const std::size_t want = brute_count(std::span<const P>(pts), AxisKeys<K>{}, box);
        if (count_in_range(std::span<const P>(pts), AxisKeys<K>{}, box, scratch) != want) return false;
        std::multiset<std::uint32_t> seen, expect;
        report_in_range(std::span<const P>(pts), AxisKeys<K>{}, box, scratch, [&](const P& p) { seen.insert(p.id); });
        for (const P& p : pts)
            if (box.contains(p, AxisKeys<K>{})) expect.insert(p.id);
        if (seen != expect) return false;
    }
    return true;
}

Outcome kdtree_exactness() {
    std::mt19937_64 rng(1001);
    int instances = 0, mismatches = 0;
    for (int i = 0; i < 600; ++i) {
        const std::size_t n = 1 + rng() % 512;
        // Alternate coarse and fine grids so duplicates and ties appear.
        const Coord span = i % 4 == 0 ? 1000 / 50 : 1000;
        bool ok;
        if (i % 2 == 0) {
            auto pts = testing::random_colored2(rng, n, 0, span);
            ok = kdtree_instance<Point2, 2>(rng, pts);
        } else {
            auto pts = testing::random_colored3(rng, n, 0, span);
            ok = kdtree_instance<Point3, 3>(rng, pts);
        }
        ++instances;
        if (!ok) ++mismatches;
    }
    return {mismatches == 0, std::to_string(instances) + " instances x 50 boxes, " + std::to_string(mismatches) +
                                 " mismatching instances"};
}

Outcome structural_validity() {
    std::size_t shape_failures = 0, invariant_failures = 0;
    for (std::size_t n = 1; n <= 4096; ++n) {
        for (std::size_t t = 1; t <= n; ++t)
            if (subtree_size(n, t) != 1 + subtree_size(n, 2 * t) + subtree_size(n, 2 * t + 1)) ++shape_failures;
        if (subtree_size(n, 1) != n) ++shape_failures;
        const std::size_t h = floor_log2(n);
        for (std::size_t i = 0; i <= h; ++i) {
            const BlockParams bp = block_params(n, i);
            std::size_t next = bp.level_begin;
            for (std::size_t j = 1; j <= bp.nodes; ++j) {
                if (bp.block_begin(j) != next) ++shape_failures;
                next += bp.block_size(j);
            }
            if (next != n + 1) ++shape_failures;
        }
    }
    std::mt19937_64 rng(1002);
    std::size_t built = 0;
    for (std::size_t n = 1; n <= 4096; n += 1 + n / 64) {
        auto pts = testing::random_colored2(rng, n, 0, n % 3 == 0 ? 16 : 1000000);
        const auto before = pts;
        build_kdtree(std::span<Point2>(pts), AxisKeys<2>{});
        tally.record(pts, before);
        if (!check_kdtree(std::span<const Point2>(pts), AxisKeys<2>{})) ++invariant_failures;
        auto pts3 = testing::random_colored3(rng, n, 0, n % 3 == 0 ? 16 : 1000000);
        const auto before3 = pts3;
        build_kdtree(std::span<Point3>(pts3), AxisKeys<3>{});
        tally.record(pts3, before3);
        if (!check_kdtree(std::span<const Point3>(pts3), AxisKeys<3>{})) ++invariant_failures;
        built += 2;
    }
    return {shape_failures == 0 && invariant_failures == 0,
            "shapes n<=4096: " + std::to_string(shape_failures) + " failures; " + std::to_string(built) +
                " random builds: " + std::to_string(invariant_failures) + " partition failures"};
}

Outcome workspace_contract() {
    std::mt19937_64 rng(1003);
    std::uint64_t kd_allocs = 0;
    std::int64_t kd_peak_growth = 0;
    for (std::size_t n = 256; n <= 16384; n *= 2) {
        auto pts = testing::random_colored2(rng, n, 0, 1000000);
        const auto box = random_box<2>(rng, 1000000);
        QueryScratch<2> scratch;
        alloc::reset_peak();
        const auto before = alloc::snapshot();
        build_kdtree(std::span<Point2>(pts), AxisKeys<2>{});
        std::size_t reported = 0;
        for (int q = 0; q < 20; ++q) {
            count_in_range(std::span<const Point2>(pts), AxisKeys<2>{}, box, scratch);
            report_in_range(std::span<const Point2>(pts), AxisKeys<2>{}, box, scratch, [&](const Point2&) { ++reported; });
        }
        const auto after = alloc::snapshot();
        kd_allocs += after.allocations - before.allocations;
        kd_peak_growth = std::max(kd_peak_growth, after.peak_bytes - before.current_bytes);
    }

    // Peak heap growth during whole LWR solves, over a doubling grid of n + m.
    std::string lwr_detail;
    bool lwr_ok = true;
    std::int64_t prev = 0;
    for (std::size_t total = 64; total <= 512; total *= 2) {
        const auto pts = testing::random_weighted2(rng, total, 1000000);
        SolveStats stats;
        std::size_t aux = 0;
        alloc::reset_peak();
        const auto before = alloc::snapshot();
        solve_lwr(std::span<const WeightedPoint2>(pts), stats, &aux);
        const std::int64_t peak = alloc::snapshot().peak_bytes - before.current_bytes;
        if (prev > 0 && peak > 4 * prev) lwr_ok = false;
        lwr_detail += (lwr_detail.empty() ? "" : ", ") + std::to_string(total) + ":" + std::to_string(peak);
        prev = peak;
    }
    return {kd_allocs == 0 && kd_peak_growth == 0 && lwr_ok,
            "kd-tree allocations " + std::to_string(kd_allocs) + ", scratch " +
                std::to_string(sizeof(QueryScratch<2>)) + " bytes for every n; lwr peak bytes by n+m " + lwr_detail};
}

Outcome query_scaling() {
    std::mt19937_64 rng(1004);
    std::vector<double> means;
    std::string detail;
    for (std::size_t n = 256; n <= 16384; n *= 2) {
        auto pts = testing::random_colored2(rng, n, 0, 1000000);
        build_kdtree(std::span<Point2>(pts), AxisKeys<2>{});
        QueryScratch<2> scratch;
        const int queries = 2000;
        double visited = 0;
        for (int q = 0; q < queries; ++q) {
            count_in_range(std::span<const Point2>(pts), AxisKeys<2>{}, random_box<2>(rng, 1000000), scratch);
            visited += static_cast<double>(scratch.visited);
        }
        means.push_back(visited / queries);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s%zu:%.1f", detail.empty() ? "" : ", ", n, means.back());
        detail += buf;
    }
    double worst = 0;
    for (std::size_t i = 1; i < means.size(); ++i) worst = std::max(worst, means[i] / means[i - 1]);
    const double limit = 1.6 * std::sqrt(2.0);
    char buf[96];
    std::snprintf(buf, sizeof buf, "; worst doubling ratio %.3f, limit %.3f", worst, limit);
    return {worst <= limit, "mean visited by n " + detail + buf};
}

Outcome lmr_correctness() {
    std::mt19937_64 rng(1005);
    int mismatches = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng() % 28;
        const std::size_t m = rng() % (41 - n);
        const Coord span = i % 3 == 0 ? 5 : (i % 3 == 1 ? 30 : 1000000);
        const auto pts = testing::random_colored2(rng, n, m, span);
        auto work = pts;
        SolveStats stats;
        const auto rect = solve_lmr(std::span<Point2>(work), stats);
        tally.record(work, pts);
        const auto rescanned = rescan_rect(std::span<const Point2>(pts), rect);
        if (rect.size != brute_lmr(std::span<const Point2>(pts)) || rescanned != rect.size) ++mismatches;
    }

    int violations = 0;
    for (int s = 0; s < 100; ++s) {
        auto pts = testing::random_colored2(rng, 2, 2, 25);
        auto solve = [&](Color target) {
            auto work = pts;
            SolveStats stats;
            const std::size_t size = solve_lrr(std::span<Point2>(work), target, stats).size;
            tally.record(work, pts);
            return size;
        };
        std::size_t red = solve(Color::Red), blue = solve(Color::Blue);
        for (int step = 0; step < 14; ++step) {
            const Color c = rng() % 2 ? Color::Red : Color::Blue;
            pts.push_back({static_cast<Coord>(rng() % 26), static_cast<Coord>(rng() % 26), c,
                           static_cast<std::uint32_t>(pts.size() + 1)});
            const std::size_t red_now = solve(Color::Red), blue_now = solve(Color::Blue);
            // A new point of a color helps that color and hurts the other.
            if (c == Color::Red && (red_now < red || blue_now > blue)) ++violations;
            if (c == Color::Blue && (blue_now < blue || red_now > red)) ++violations;
            red = red_now;
            blue = blue_now;
        }
    }
    return {mismatches == 0 && violations == 0, "200 oracle instances: " + std::to_string(mismatches) +
                                                    " mismatches; 100 incremental sequences: " +
                                                    std::to_string(violations) + " monotonicity violations"};
}

Outcome lwr_correctness() {
    std::mt19937_64 rng(1006);
    int mismatches = 0;
    for (int i = 0; i < 200; ++i) {
        const auto pts = testing::random_weighted2(rng, 1 + rng() % 30, i % 3 == 0 ? 5 : (i % 3 == 1 ? 30 : 1000000));
        SolveStats stats;
        const auto rect = solve_lwr(std::span<const WeightedPoint2>(pts), stats);
        if (rect.weight != brute_lwr(std::span<const WeightedPoint2>(pts)) ||
            rescan_weight(std::span<const WeightedPoint2>(pts), rect) != rect.weight)
            ++mismatches;
    }

    int tree_mismatches = 0;
    for (int seq = 0; seq < 10000; ++seq) {
        WeightTree tree;
        std::map<Wide, std::int64_t> own;
        const int ops = 1 + static_cast<int>(rng() % 60);
        const Wide span = seq % 2 ? 16 : 1000000;
        bool ok = true;
        for (int op = 0; op < ops && ok; ++op) {
            const Wide key = static_cast<Wide>(rng() % span);
            const std::int64_t w = static_cast<std::int64_t>(rng() % 19) - 9;
            tree.insert(key, w == 0 ? 1 : w);
            own[key] += w == 0 ? 1 : w;
            const Wide bound = static_cast<Wide>(rng() % (span + 1));
            std::optional<std::int64_t> lo, hi;
            std::int64_t sum = 0;
            for (auto [k, v] : own) {
                sum += v;
                if (k < bound) lo = lo ? std::min(*lo, sum) : sum;
                if (k >= bound) hi = hi ? std::max(*hi, sum) : sum;
            }
            const auto tlo = tree.prefix_min(bound), thi = tree.suffix_max(bound);
            ok = tlo.has_value() == lo.has_value() && thi.has_value() == hi.has_value() &&
                 (!lo || tlo->weight == *lo) && (!hi || thi->weight == *hi);
        }
        std::vector<std::pair<Wide, std::int64_t>> flat;
        std::int64_t sum = 0;
        for (auto [k, v] : own) flat.emplace_back(k, sum += v);
        if (!ok || tree.effective_leaves() != flat || !tree.check_invariants()) ++tree_mismatches;
    }
    return {mismatches == 0 && tree_mismatches == 0, "200 oracle instances: " + std::to_string(mismatches) +
                                                         " mismatches; 10000 tree sequences: " +
                                                         std::to_string(tree_mismatches) + " mismatches"};
}

struct Xy {
    Coord x = 0;
    Coord y = 0;
    std::uint32_t id = 0;
};

// Staircases built by sweeping every point, then compared with the naive
// rectangles through the pivot and a probe.
bool mer_instance(std::mt19937_64& rng, std::size_t m, Coord span) {
    std::vector<Xy> pts;
    for (std::size_t i = 0; i < m; ++i)
        pts.push_back({static_cast<Coord>(rng() % (span + 1)), static_cast<Coord>(rng() % (span + 1)),
                       static_cast<std::uint32_t>(i + 1)});
    const Coord cx = static_cast<Coord>(rng() % (span + 1)), cy = static_cast<Coord>(rng() % (span + 1));
    std::stable_sort(pts.begin(), pts.end(), [&](const Xy& a, const Xy& b) {
        return quadrant_of(a.x, a.y, cx, cy) < quadrant_of(b.x, b.y, cx, cy);
    });
    StairSet s{cx, cy, {}};
    std::size_t at = 0;
    for (int q = 0; q < 4; ++q) {
        s.blocks[q].begin = at;
        while (at < pts.size() && quadrant_of(pts[at].x, pts[at].y, cx, cy) == q) ++at;
        s.blocks[q].end = at;
    }
    for (int q = 0; q < 4; ++q) {
        QuadrantBlock& b = s.blocks[q];
        while (b.begin + b.swept < b.end) {
            if (stair_shadows(std::span<const Xy>(pts), s, q, pts[b.begin + b.swept]))
                ++b.swept;
            else
                update_stair(std::span<Xy>(pts), s, q);
            if (!stair_matches_scratch(std::span<const Xy>(pts), s, q)) return false;
        }
    }
    std::vector<std::pair<Coord, Coord>> xy;
    for (const Xy& p : pts) xy.emplace_back(p.x, p.y);
    const auto all = naive_mers(xy);
    for (int probe = 0; probe < 4; ++probe) {
        const Coord bx = probe == 0 ? cx : static_cast<Coord>(rng() % (span + 1));
        const Coord by = probe == 0 ? cy : static_cast<Coord>(rng() % (span + 1));
        if (stairs_block(std::span<const Xy>(pts), s, bx, by)) continue;
        std::vector<Rect2> want, got;
        for (const Rect2& r : all)
            if (r.contains_open(cx, cy) && r.contains_open(bx, by)) want.push_back(r);
        compute_max_mer(std::span<const Xy>(pts), s, bx, by, [&](const Rect2& r) { got.push_back(r); });
        std::sort(got.begin(), got.end());
        got.erase(std::unique(got.begin(), got.end()), got.end());
        if (got != want) return false;
    }
    return true;
}

Outcome lmc_correctness() {
    std::mt19937_64 rng(1007);
    int mismatches = 0;
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = 1 + rng() % 18;
        const std::size_t m = rng() % (25 - n);
        const auto pts = testing::random_colored3(rng, n, m, i % 3 == 0 ? 4 : (i % 3 == 1 ? 12 : 1000000));
        auto work = pts;
        SolveStats stats;
        // check_stairs compares every staircase with a from-scratch one after
        // each update and throws on disagreement.
        const auto c = solve_lmc(std::span<Point3>(work), stats, LmcOptions{true});
        tally.record(work, pts);
        if (c.size != brute_lmc(std::span<const Point3>(pts)) || rescan_cuboid(std::span<const Point3>(pts), c) != c.size)
            ++mismatches;
    }
    int mer_mismatches = 0;
    for (int i = 0; i < 1000; ++i)
        if (!mer_instance(rng, rng() % 13, i % 2 ? 8 : 100)) ++mer_mismatches;
    return {mismatches == 0 && mer_mismatches == 0, "150 oracle instances with stair checks: " +
                                                        std::to_string(mismatches) + " mismatches; 1000 MER sets (m<=12): " +
                                                        std::to_string(mer_mismatches) + " mismatches"};
}

Outcome permutation_contract() {
    return {tally.failures == 0 && tally.checks > 0,
            std::to_string(tally.checks) + " arrays checked, " + std::to_string(tally.failures) + " not permutations"};
}

Outcome desk_performance() {
    std::mt19937_64 rng(1009);
    char buf[160];

    auto pts2 = testing::random_colored2(rng, 100, 100, 1000000);
    auto work2 = pts2;
    SolveStats stats;
    auto start = Clock::now();
    solve_lmr(std::span<Point2>(work2), stats);
    const double lmr_s = seconds_since(start);
    tally.record(work2, pts2);

    auto pts3 = testing::random_colored3(rng, 60, 60, 1000000);
    auto work3 = pts3;
    start = Clock::now();
    solve_lmc(std::span<Point3>(work3), stats);
    const double lmc_s = seconds_since(start);
    tally.record(work3, pts3);

    auto big = testing::random_colored2(rng, 1000000, 0, 1000000);
    start = Clock::now();
    build_kdtree(std::span<Point2>(big), AxisKeys<2>{});
    const double kd_s = seconds_since(start);

    std::snprintf(buf, sizeof buf, "lmr n=m=100 %.2f s (<10), lmc n=m=60 %.2f s (<60), kd build 1e6 %.2f s (<5)", lmr_s,
                  lmc_s, kd_s);
    return {lmr_s < 10 && lmc_s < 60 && kd_s < 5, buf};
}

}  // namespace

int main() {
    report(1, "k-d tree exactness", 30, kdtree_exactness);
    report(2, "structural validity", 60, structural_validity);
    report(3, "workspace contract", 0, workspace_contract);
    report(4, "query scaling", 120, query_scaling);
    report(5, "LMR correctness", 300, lmr_correctness);
    report(6, "LWR correctness", 300, lwr_correctness);
    report(7, "LMC correctness", 600, lmc_correctness);
    report(8, "in-place permutation contract", 0, permutation_contract);
    report(9, "desk-scale performance", 0, desk_performance);
    std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
