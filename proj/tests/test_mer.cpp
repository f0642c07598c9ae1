#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "geosep/mer.hpp"
#include "geosep/oracles.hpp"

using namespace geosep;

namespace {

struct Xy {
    Coord x = 0;
    Coord y = 0;
    std::uint32_t id = 0;
    friend bool operator==(const Xy&, const Xy&) = default;
};

std::vector<Xy> random_xy(std::mt19937_64& rng, std::size_t m, Coord span) {
    std::vector<Xy> pts;
    for (std::size_t i = 0; i < m; ++i)
        pts.push_back({static_cast<Coord>(rng() % (span + 1)), static_cast<Coord>(rng() % (span + 1)),
                       static_cast<std::uint32_t>(i + 1)});
    return pts;
}

std::vector<std::pair<Coord, Coord>> coords_of(std::span<const Xy> pts) {
    std::vector<std::pair<Coord, Coord>> out;
    for (const Xy& p : pts) out.emplace_back(p.x, p.y);
    return out;
}

void sort_unique(std::vector<Rect2>& rects) {
    std::sort(rects.begin(), rects.end());
    rects.erase(std::unique(rects.begin(), rects.end()), rects.end());
}

// Lays the points out in four contiguous quadrant blocks around the pivot,
// all unswept.
StairSet make_blocks(std::vector<Xy>& pts, Coord cx, Coord cy) {
    std::stable_sort(pts.begin(), pts.end(),
                     [&](const Xy& a, const Xy& b) { return quadrant_of(a.x, a.y, cx, cy) < quadrant_of(b.x, b.y, cx, cy); });
    StairSet s{cx, cy, {}};
    std::size_t at = 0;
    for (int q = 0; q < 4; ++q) {
        s.blocks[q].begin = at;
        while (at < pts.size() && quadrant_of(pts[at].x, pts[at].y, cx, cy) == q) ++at;
        s.blocks[q].end = at;
    }
    return s;
}

// Sweeps one more point of quadrant q the way the cuboid search does.
void sweep_one(std::vector<Xy>& pts, StairSet& s, int q) {
    QuadrantBlock& b = s.blocks[q];
    const Xy& next = pts[b.begin + b.swept];
    if (stair_shadows(std::span<const Xy>(pts), s, q, next))
        ++b.swept;
    else
        update_stair(std::span<Xy>(pts), s, q);
}

}  // namespace

TEST_CASE("no obstacles give the whole plane") {
    std::vector<Xy> pts;
    std::vector<Rect2> got;
    enumerate_mers(std::span<Xy>(pts), [&](const Rect2& r) { got.push_back(r); });
    CHECK(got == std::vector<Rect2>{Rect2{}});
    CHECK(naive_mers({}) == std::vector<Rect2>{Rect2{}});
}

TEST_CASE("a single obstacle has exactly four maximal empty rectangles") {
    std::vector<Xy> pts{{3, 4, 1}};
    std::vector<Rect2> got;
    enumerate_mers(std::span<Xy>(pts), [&](const Rect2& r) { got.push_back(r); });
    sort_unique(got);
    CHECK(got.size() == 4);
    CHECK(got == naive_mers(coords_of(pts)));
}

TEST_CASE("enumerate_mers matches the naive enumeration") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        auto pts = random_xy(rng, rng() % 13, trial % 2 ? 5 : 60);
        const auto want = naive_mers(coords_of(pts));
        const auto before = pts;
        std::vector<Rect2> got;
        enumerate_mers(std::span<Xy>(pts), [&](const Rect2& r) { got.push_back(r); });
        sort_unique(got);
        REQUIRE(got == want);
        CHECK(std::is_sorted(pts.begin(), pts.end(), less_by_y<Xy>));
        auto a = pts, b = before;
        std::sort(a.begin(), a.end(), less_by_x<Xy>);
        std::sort(b.begin(), b.end(), less_by_x<Xy>);
        CHECK(a == b);
    }
}

TEST_CASE("update_stair removes the points the new one shadows") {
    std::vector<Xy> pts{{2, 6, 1}, {4, 4, 2}, {6, 2, 3}, {3, 3, 4}, {7, 1, 5}};
    StairSet s = make_blocks(pts, 0, 0);
    REQUIRE(s.blocks[0].end == 5);
    for (int i = 0; i < 3; ++i) sweep_one(pts, s, 0);
    CHECK(s.blocks[0].stair_len == 3);

    update_stair(std::span<Xy>(pts), s, 0);
    REQUIRE(s.blocks[0].stair_len == 3);
    CHECK(pts[0] == Xy{2, 6, 1});
    CHECK(pts[1] == Xy{3, 3, 4});
    CHECK(pts[2] == Xy{6, 2, 3});

    // Extends the stair at its far end; nothing is shadowed.
    update_stair(std::span<Xy>(pts), s, 0);
    REQUIRE(s.blocks[0].stair_len == 4);
    CHECK(pts[3] == Xy{7, 1, 5});
    CHECK(stair_matches_scratch(std::span<const Xy>(pts), s, 0));
}

TEST_CASE("random sweeps keep every staircase equal to the from-scratch one") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 300; ++trial) {
        auto pts = random_xy(rng, 1 + rng() % 30, trial % 2 ? 8 : 100);
        const auto before = pts;
        StairSet s = make_blocks(pts, static_cast<Coord>(rng() % 9) * (trial % 2 ? 1 : 12),
                                 static_cast<Coord>(rng() % 9) * (trial % 2 ? 1 : 12));
        for (;;) {
            std::vector<int> open;
            for (int q = 0; q < 4; ++q)
                if (s.blocks[q].begin + s.blocks[q].swept < s.blocks[q].end) open.push_back(q);
            if (open.empty()) break;
            sweep_one(pts, s, open[rng() % open.size()]);
            for (int q = 0; q < 4; ++q) REQUIRE(stair_matches_scratch(std::span<const Xy>(pts), s, q));
        }
        auto a = pts, b = before;
        std::sort(a.begin(), a.end(), less_by_x<Xy>);
        std::sort(b.begin(), b.end(), less_by_x<Xy>);
        CHECK(a == b);
    }
}

TEST_CASE("with empty stairs the rectangles are bounded only by infinity") {
    std::vector<Xy> pts;
    StairSet s{5, 5, {}};
    std::vector<Rect2> got;
    compute_max_mer(std::span<const Xy>(pts), s, 8, 2, [&](const Rect2& r) { got.push_back(r); });
    CHECK(got == std::vector<Rect2>{Rect2{}});
}

TEST_CASE("compute_max_mer matches naive rectangles through pivot and probe") {
    std::mt19937_64 rng(43);
    int compared = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const Coord span = trial % 2 ? 8 : 60;
        auto pts = random_xy(rng, rng() % 13, span);
        const Coord cx = static_cast<Coord>(rng() % (span + 1)), cy = static_cast<Coord>(rng() % (span + 1));
        StairSet s = make_blocks(pts, cx, cy);
        for (int q = 0; q < 4; ++q)
            while (s.blocks[q].begin + s.blocks[q].swept < s.blocks[q].end) sweep_one(pts, s, q);
        const auto all = naive_mers(coords_of(pts));
        for (int probe = 0; probe < 5; ++probe) {
            Coord bx = static_cast<Coord>(rng() % (span + 1)), by = static_cast<Coord>(rng() % (span + 1));
            if (probe == 0) bx = cx, by = cy;
            if (stairs_block(std::span<const Xy>(pts), s, bx, by)) continue;
            std::vector<Rect2> want;
            for (const Rect2& r : all)
                if (r.contains_open(cx, cy) && r.contains_open(bx, by)) want.push_back(r);
            std::vector<Rect2> got;
            compute_max_mer(std::span<const Xy>(pts), s, bx, by, [&](const Rect2& r) { got.push_back(r); });
            sort_unique(got);
            REQUIRE(got == want);
            ++compared;
        }
    }
    CHECK(compared > 1000);
}
