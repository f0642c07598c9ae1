#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "geosep/geom.hpp"

namespace geosep::testing {

// Small integer grids make ties, collinear triples and duplicates common.
inline std::vector<Point2> random_colored2(std::mt19937_64& rng, std::size_t n, std::size_t m, Coord span) {
    std::uniform_int_distribution<Coord> pos(0, span);
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < n + m; ++i)
        pts.push_back({pos(rng), pos(rng), i < n ? Color::Red : Color::Blue, static_cast<std::uint32_t>(i + 1)});
    std::shuffle(pts.begin(), pts.end(), rng);
    return pts;
}

inline std::vector<Point3> random_colored3(std::mt19937_64& rng, std::size_t n, std::size_t m, Coord span) {
    std::uniform_int_distribution<Coord> pos(0, span);
    std::vector<Point3> pts;
    for (std::size_t i = 0; i < n + m; ++i)
        pts.push_back(
            {pos(rng), pos(rng), pos(rng), i < n ? Color::Red : Color::Blue, static_cast<std::uint32_t>(i + 1)});
    std::shuffle(pts.begin(), pts.end(), rng);
    return pts;
}

inline std::vector<WeightedPoint2> random_weighted2(std::mt19937_64& rng, std::size_t count, Coord span) {
    std::uniform_int_distribution<Coord> pos(0, span);
    std::uniform_int_distribution<std::int64_t> w(-9, 9);
    std::vector<WeightedPoint2> pts;
    for (std::size_t i = 0; i < count; ++i) {
        std::int64_t weight = 0;
        while (weight == 0) weight = w(rng);
        pts.push_back({pos(rng), pos(rng), weight, static_cast<std::uint32_t>(i + 1)});
    }
    return pts;
}

template <class P>
bool same_multiset(std::vector<P> a, std::vector<P> b) {
    auto by_id = [](const P& x, const P& y) { return x.id < y.id; };
    std::sort(a.begin(), a.end(), by_id);
    std::sort(b.begin(), b.end(), by_id);
    return a == b;
}

}  // namespace geosep::testing
