#include <doctest.h>

#include <cmath>
#include <random>

#include "geosep/geom.hpp"

using namespace geosep;

namespace {

struct Xy {
    Coord x, y;
    std::uint32_t id;
};

int sign(double v, double eps) { return v > eps ? 1 : (v < -eps ? -1 : 0); }
int sign(Wide v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

TEST_CASE("frame origin and the far anchor") {
    const auto f = *Frame::make(Xy{0, 0, 1}, Xy{3, 4, 2});
    CHECK(frame_coords(Coord{0}, Coord{0}, f) == FrameCoords{0, 0});
    CHECK(frame_coords(Coord{3}, Coord{4}, f) == FrameCoords{25, 0});
    CHECK(f.u_of_q() == 25);
    CHECK_FALSE(Frame::make(Xy{1, 1, 1}, Xy{1, 1, 2}).has_value());
}

TEST_CASE("frame coordinates agree with a floating-point rotation") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<Coord> pos(-1000, 1000);
    for (int i = 0; i < 10000; ++i) {
        const Xy p{pos(rng), pos(rng), 1}, q{pos(rng), pos(rng), 2}, r{pos(rng), pos(rng), 3}, s{pos(rng), pos(rng), 4};
        const auto f = Frame::make(p, q);
        if (!f) continue;
        const double angle = std::atan2(static_cast<double>(f->dy()), static_cast<double>(f->dx()));
        const double len = std::hypot(static_cast<double>(f->dx()), static_cast<double>(f->dy()));
        auto rotate = [&](const Xy& t) {
            const double rx = static_cast<double>(t.x - p.x), ry = static_cast<double>(t.y - p.y);
            // Rotating by -angle puts the anchor line on the x-axis; v is the
            // negated rotated y.
            return std::pair{len * (rx * std::cos(angle) + ry * std::sin(angle)),
                             -len * (-rx * std::sin(angle) + ry * std::cos(angle))};
        };
        const auto [ur, vr] = rotate(r);
        const auto [us, vs] = rotate(s);
        const FrameCoords cr = frame_coords(r, *f), cs = frame_coords(s, *f);
        const double eps = 1e-6;
        REQUIRE(sign(ur, eps) == sign(cr.u));
        REQUIRE(sign(vr, eps) == sign(cr.v));
        REQUIRE(sign(us - ur, eps) == sign(cs.u - cr.u));
        REQUIRE(sign(vs - vr, eps) == sign(cs.v - cr.v));
    }
}

TEST_CASE("v vanishes exactly on the anchor line") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Coord> pos(-20, 20);
    for (int i = 0; i < 10000; ++i) {
        const Xy p{pos(rng), pos(rng), 1}, q{pos(rng), pos(rng), 2}, r{pos(rng), pos(rng), 3};
        const auto f = Frame::make(p, q);
        if (!f) continue;
        const Wide cross = Wide{q.x - p.x} * (r.y - p.y) - Wide{q.y - p.y} * (r.x - p.x);
        REQUIRE((frame_coords(r, *f).v == 0) == (cross == 0));
    }
}

TEST_CASE("extreme coordinates stay exact") {
    const Coord big = kCoordLimit - 1;
    const auto f = *Frame::make(Xy{-big, -big, 1}, Xy{big, big, 2});
    const FrameCoords c = frame_coords(big, -big, f);
    const Wide four_b2 = Wide{2 * big} * (2 * big);
    CHECK(c.u == four_b2);
    CHECK(c.v == four_b2);
    CHECK(f.u_of_q() == 2 * four_b2);
}

TEST_CASE("orders by u and v survive uniform scaling") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<Coord> pos(-500, 500);
    for (int i = 0; i < 2000; ++i) {
        const Xy p{pos(rng), pos(rng), 1}, q{pos(rng), pos(rng), 2}, r{pos(rng), pos(rng), 3}, s{pos(rng), pos(rng), 4};
        const auto f = Frame::make(p, q);
        if (!f) continue;
        const Coord k = 7;
        const auto g = *Frame::make(Xy{p.x * k, p.y * k, 1}, Xy{q.x * k, q.y * k, 2});
        const auto a = frame_coords(r, *f), b = frame_coords(s, *f);
        const auto a2 = frame_coords(r.x * k, r.y * k, g), b2 = frame_coords(s.x * k, s.y * k, g);
        REQUIRE(sign(a.u - b.u) == sign(a2.u - b2.u));
        REQUIRE(sign(a.v - b.v) == sign(a2.v - b2.v));
    }
}

TEST_CASE("dominance is strict in both coordinates") {
    CHECK(dominates({1, 1}, {2, 2}));
    CHECK_FALSE(dominates({1, 2}, {2, 2}));
    CHECK_FALSE(dominates({2, 1}, {2, 2}));
}

TEST_CASE("dominance is transitive on a small grid") {
    std::vector<FrameCoords> grid;
    for (Wide u = 0; u < 4; ++u)
        for (Wide v = 0; v < 4; ++v) grid.push_back({u, v});
    for (const auto& a : grid)
        for (const auto& b : grid)
            for (const auto& c : grid)
                if (dominates(a, b) && dominates(b, c)) REQUIRE(dominates(a, c));
}

TEST_CASE("wide values render as decimal text") {
    CHECK(to_string(Wide{0}) == "0");
    CHECK(to_string(Wide{-42}) == "-42");
    CHECK(to_string(Wide{1} << 100) == "1267650600228229401496703205376");
    CHECK(to_string(-(Wide{1} << 126)) == "-85070591730234615865843651857942052864");
    CHECK(ext_to_string(kWidePosInf) == "inf");
    CHECK(ext_to_string(kWideNegInf) == "-inf");
    CHECK(ext_to_string(kCoordNegInf) == "-inf");
    CHECK(ext_to_string(Coord{17}) == "17");
}
