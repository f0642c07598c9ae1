#include "geosep/lmr.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "geosep/kdtree.hpp"
#include "geosep/select.hpp"

namespace geosep {

namespace {

// (u, side*v) of a point, computed on demand so the tree is built over the
// original records.
struct FrameKeys {
    static constexpr int dims = 2;
    using value_type = Wide;

    Frame frame;
    int side;

    Wide operator()(const Point2& p, int d) const {
        const FrameCoords c = frame_coords(p, frame);
        return d == 0 ? c.u : side * c.v;
    }
};

constexpr std::uint32_t kNoId = UINT32_MAX;

// Smallest id greater than `after` (or any id when after == kNoId) among
// points of the given color; kNoId when none.
std::uint32_t next_id(std::span<const Point2> pts, std::optional<Color> color, std::uint32_t after) {
    std::uint32_t best = kNoId;
    for (const Point2& p : pts) {
        if (color && p.color != *color) continue;
        if (after != kNoId && p.id <= after) continue;
        if (best == kNoId || p.id < best) best = p.id;
    }
    return best;
}

const Point2& find_id(std::span<const Point2> pts, std::uint32_t id) {
    for (const Point2& p : pts)
        if (p.id == id) return p;
    assert(false && "id not present");
    return pts.front();
}

struct PairKey {
    std::uint32_t p_id = kNoId;
    std::uint32_t q_id = kNoId;
    int side = 1;

    bool operator<(const PairKey& o) const {
        if (p_id != o.p_id) return p_id < o.p_id;
        if (q_id != o.q_id) return q_id < o.q_id;
        return side > o.side;
    }
};

struct Candidate {
    OrientedRect rect;
    PairKey key;
    bool found = false;

    void offer(const OrientedRect& r, const PairKey& k) {
        if (!found || r.size > rect.size || (r.size == rect.size && k < key)) {
            rect = r;
            key = k;
            found = true;
        }
    }
};

// Runs the candidate pairs whose obstacle anchor has ordinal = offset (mod stride).
Candidate sweep_pairs(std::span<Point2> pts, Color target, SolveStats& stats,
                      unsigned stride, unsigned offset) {
    const Color obstacle = opposite(target);
    Candidate best;
    unsigned ordinal = 0;
    for (std::uint32_t pid = next_id(pts, obstacle, kNoId); pid != kNoId;
         pid = next_id(pts, obstacle, pid), ++ordinal) {
        if (ordinal % stride != offset) continue;
        const Point2 p = find_id(pts, pid);
        for (std::uint32_t qid = next_id(pts, std::nullopt, kNoId); qid != kNoId;
             qid = next_id(pts, std::nullopt, qid)) {
            const Point2 q = find_id(pts, qid);
            const auto frame = Frame::make(p, q);
            if (!frame) continue;
            for (int side : {1, -1}) {
                ++stats.candidate_pairs;
                if (auto r = process_candidate_pair(pts, *frame, side, target, stats))
                    best.offer(*r, PairKey{pid, qid, side});
            }
        }
    }
    return best;
}

bool all_coincident(std::span<const Point2> pts) {
    for (const Point2& p : pts)
        if (p.x != pts.front().x || p.y != pts.front().y) return false;
    return true;
}

}  // namespace

std::optional<OrientedRect> process_candidate_pair(std::span<Point2> pts, const Frame& frame, int side,
                                                   Color target, SolveStats& stats) {
    const Color obstacle = opposite(target);
    const FrameKeys keys{frame, side};

    // [0, reds) targets on the closed side, then [reds, reds + blues)
    // obstacles strictly above the line. Obstacles on the line sit on the
    // bottom edge and never enter the interior.
    auto red_end = std::partition(pts.begin(), pts.end(), [&](const Point2& r) {
        return r.color == target && keys(r, 1) >= 0;
    });
    auto blue_end = std::partition(red_end, pts.end(), [&](const Point2& r) {
        return r.color == obstacle && keys(r, 1) > 0;
    });
    const std::size_t reds = static_cast<std::size_t>(red_end - pts.begin());
    const std::size_t blue_begin = reds;
    const std::size_t blue_stop = static_cast<std::size_t>(blue_end - pts.begin());

    heap_sort(red_end, blue_end, [&](const Point2& a, const Point2& b) {
        const Wide va = keys(a, 1), vb = keys(b, 1);
        if (va != vb) return va < vb;
        const Wide ua = keys(a, 0), ub = keys(b, 0);
        if (ua != ub) return ua < ub;
        return a.id < b.id;
    });

    const std::span<Point2> red_span = pts.first(reds);
    build_kdtree(red_span, keys);
    ++stats.trees_built;

    const Wide uq = frame.u_of_q();
    Wide alpha = kWideNegInf;
    Wide beta = kWidePosInf;
    QueryScratch<2> scratch;
    std::optional<OrientedRect> best;

    auto evaluate = [&](Wide top) {
        QueryBox<Wide, 2> box;
        box.lo = {alpha, 0};
        box.hi = {beta, top};
        const std::size_t count = count_in_range(std::span<const Point2>(red_span), keys, box, scratch);
        stats.visited_nodes += scratch.visited;
        if (!best || count > best->size) {
            best = OrientedRect{RectKind::Framed, frame, side, alpha, beta, top, count, target};
        }
    };

    std::size_t k = blue_begin;
    while (k < blue_stop) {
        const Wide level = keys(pts[k], 1);
        std::size_t e = k;
        bool hit = false;
        bool stop = false;
        Wide next_alpha = alpha;
        Wide next_beta = beta;
        // The whole cohort is tested against the interval it found on arrival.
        for (; e < blue_stop && keys(pts[e], 1) == level; ++e) {
            const Wide u = keys(pts[e], 0);
            if (alpha < u && u < beta) hit = true;
            // An obstacle level with an anchor can still sit on a side edge.
            if (0 < u && u < uq) stop = true;
            if (u <= 0 && u > next_alpha) next_alpha = u;
            if (u >= uq && u < next_beta) next_beta = u;
        }
        if (hit) evaluate(level);
        if (stop) return best;
        alpha = next_alpha;
        beta = next_beta;
        k = e;
    }
    evaluate(kWidePosInf);
    return best;
}

OrientedRect solve_lrr(std::span<Point2> pts, Color target, SolveStats& stats) {
    const std::size_t targets =
        static_cast<std::size_t>(std::count_if(pts.begin(), pts.end(), [&](const Point2& p) { return p.color == target; }));
    OrientedRect out;
    out.color = target;
    if (targets == pts.size()) {
        out.kind = RectKind::Plane;
        out.size = targets;
        return out;
    }
    if (all_coincident(pts)) {
        // Every rectangle with this spot on its boundary is empty inside.
        out.kind = RectKind::Point;
        out.frame = Frame{pts.front().x, pts.front().y, pts.front().x, pts.front().y, pts.front().id,
                          pts.front().id};
        out.size = targets;
        return out;
    }
    Candidate best = sweep_pairs(pts, target, stats, 1, 0);
    return best.rect;
}

OrientedRect solve_lmr(std::span<Point2> pts, SolveStats& stats, const LmrOptions& opts) {
    if (opts.threads <= 1) {
        const OrientedRect red = solve_lrr(pts, Color::Red, stats);
        const OrientedRect blue = solve_lrr(pts, Color::Blue, stats);
        return blue.size > red.size ? blue : red;
    }

    // Each worker owns a copy of the array; the shared input is only read.
    auto solve_color = [&](Color target) {
        {
            std::vector<Point2> copy(pts.begin(), pts.end());
            const std::size_t targets = static_cast<std::size_t>(
                std::count_if(copy.begin(), copy.end(), [&](const Point2& p) { return p.color == target; }));
            if (targets == copy.size() || all_coincident(copy)) return solve_lrr(copy, target, stats);
        }
        const unsigned workers = opts.threads;
        std::vector<Candidate> results(workers);
        std::vector<SolveStats> worker_stats(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                std::vector<Point2> copy(pts.begin(), pts.end());
                results[w] = sweep_pairs(copy, target, worker_stats[w], workers, w);
            });
        }
        for (auto& t : pool) t.join();
        Candidate best;
        for (unsigned w = 0; w < workers; ++w) {
            stats += worker_stats[w];
            if (results[w].found) best.offer(results[w].rect, results[w].key);
        }
        return best.rect;
    };
    const OrientedRect red = solve_color(Color::Red);
    const OrientedRect blue = solve_color(Color::Blue);
    return blue.size > red.size ? blue : red;
}

bool rect_contains_closed(const OrientedRect& rect, const Point2& p) {
    switch (rect.kind) {
        case RectKind::Plane:
            return true;
        case RectKind::Point:
            return p.x == rect.frame.px && p.y == rect.frame.py;
        case RectKind::Framed:
            break;
    }
    const FrameCoords c = frame_coords(p, rect.frame);
    const Wide v = rect.side * c.v;
    return rect.left <= c.u && c.u <= rect.right && 0 <= v && v <= rect.top;
}

bool rect_contains_open(const OrientedRect& rect, const Point2& p) {
    switch (rect.kind) {
        case RectKind::Plane:
            return true;
        case RectKind::Point:
            return false;
        case RectKind::Framed:
            break;
    }
    const FrameCoords c = frame_coords(p, rect.frame);
    const Wide v = rect.side * c.v;
    return rect.left < c.u && c.u < rect.right && 0 < v && v < rect.top;
}

std::optional<std::size_t> rescan_rect(std::span<const Point2> pts, const OrientedRect& rect) {
    std::size_t count = 0;
    for (const Point2& p : pts) {
        if (p.color == rect.color) {
            if (rect_contains_closed(rect, p)) ++count;
        } else if (rect_contains_open(rect, p)) {
            return std::nullopt;
        }
    }
    return count;
}

}  // namespace geosep
