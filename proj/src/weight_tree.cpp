#include "geosep/weight_tree.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace geosep {

void WeightTree::clear() {
    nodes_.clear();
    free_.clear();
    root_ = -1;
    total_ = 0;
}

void WeightTree::reserve(std::size_t keys) {
    const std::size_t slots = keys == 0 ? 1 : 2 * keys;
    nodes_.reserve(slots);
    free_.reserve(slots);
    scratch_.reserve(keys + 1);
}

std::size_t WeightTree::storage_bytes() const {
    return nodes_.capacity() * sizeof(Node) + (free_.capacity() + scratch_.capacity()) * sizeof(std::int32_t);
}

std::int32_t WeightTree::make_leaf(Wide key, std::int64_t cumulative, std::int64_t own) {
    Node n;
    n.key = key;
    n.cumulative = cumulative;
    n.own = own;
    n.lo = n.hi = cumulative;
    n.leaves = 1;
    if (!free_.empty()) {
        const std::int32_t idx = free_.back();
        free_.pop_back();
        nodes_[idx] = n;
        return idx;
    }
    nodes_.push_back(n);
    return static_cast<std::int32_t>(nodes_.size() - 1);
}

std::int32_t WeightTree::make_internal(std::int32_t left, std::int32_t right) {
    // The router is the largest key on the left.
    std::int32_t r = left;
    while (!nodes_[r].leaf()) r = nodes_[r].right;
    Node n;
    n.key = nodes_[r].key;
    n.left = left;
    n.right = right;
    std::int32_t idx;
    if (!free_.empty()) {
        idx = free_.back();
        free_.pop_back();
        nodes_[idx] = n;
    } else {
        nodes_.push_back(n);
        idx = static_cast<std::int32_t>(nodes_.size() - 1);
    }
    pull(idx);
    return idx;
}

void WeightTree::release(std::int32_t idx) { free_.push_back(idx); }

void WeightTree::apply(std::int32_t idx, std::int64_t delta) {
    Node& n = nodes_[idx];
    if (n.leaf()) {
        n.cumulative += delta;
    } else {
        n.excess += delta;
    }
    n.lo += delta;
    n.hi += delta;
}

void WeightTree::push_down(std::int32_t idx) {
    Node& n = nodes_[idx];
    if (n.leaf() || n.excess == 0) return;
    const std::int64_t e = n.excess;
    n.excess = 0;
    apply(n.left, e);
    apply(n.right, e);
}

void WeightTree::pull(std::int32_t idx) {
    Node& n = nodes_[idx];
    if (n.leaf()) {
        n.lo = n.hi = n.cumulative;
        n.leaves = 1;
        return;
    }
    const Node& l = nodes_[n.left];
    const Node& r = nodes_[n.right];
    n.lo = std::min(l.lo, r.lo) + n.excess;
    n.hi = std::max(l.hi, r.hi) + n.excess;
    n.leaves = l.leaves + r.leaves;
}

bool WeightTree::unbalanced(std::int32_t idx) const {
    const Node& n = nodes_[idx];
    if (n.leaf()) return false;
    const double total = n.leaves + 1.0;
    const double l = nodes_[n.left].leaves + 1.0;
    const double r = nodes_[n.right].leaves + 1.0;
    return l < kBalance * total || r < kBalance * total;
}

void WeightTree::collect(std::int32_t idx) {
    if (nodes_[idx].leaf()) {
        scratch_.push_back(idx);
        return;
    }
    push_down(idx);
    collect(nodes_[idx].left);
    collect(nodes_[idx].right);
    release(idx);
}

std::int32_t WeightTree::build_range(std::size_t begin, std::size_t end) {
    if (end - begin == 1) return scratch_[begin];
    const std::size_t mid = begin + (end - begin) / 2;
    const std::int32_t l = build_range(begin, mid);
    const std::int32_t r = build_range(mid, end);
    return make_internal(l, r);
}

std::int32_t WeightTree::rebuild(std::int32_t idx) {
    ++rebuilds_;
    scratch_.clear();
    collect(idx);
    return build_range(0, scratch_.size());
}

void WeightTree::insert(Wide key, std::int64_t weight) {
    total_ += weight;
    if (root_ < 0) {
        root_ = make_leaf(key, weight, weight);
        return;
    }

    // A weight-balanced tree with parameter 1/4 has depth below 2.5 log2(n).
    std::array<std::int32_t, 160> path{};
    std::size_t depth = 0;
    std::int32_t cur = root_;
    while (!nodes_[cur].leaf()) {
        push_down(cur);
        path[depth++] = cur;
        if (key <= nodes_[cur].key) {
            apply(nodes_[cur].right, weight);
            cur = nodes_[cur].left;
        } else {
            cur = nodes_[cur].right;
        }
    }

    if (nodes_[cur].key == key) {
        nodes_[cur].cumulative += weight;
        nodes_[cur].own += weight;
        pull(cur);
    } else {
        std::int32_t joined;
        if (key < nodes_[cur].key) {
            // cur is the successor; everything up to the predecessor sums to
            // cur's cumulative minus its own weight.
            const std::int64_t before = nodes_[cur].cumulative - nodes_[cur].own;
            const std::int32_t fresh = make_leaf(key, before + weight, weight);
            apply(cur, weight);
            joined = make_internal(fresh, cur);
        } else {
            const std::int32_t fresh = make_leaf(key, nodes_[cur].cumulative + weight, weight);
            joined = make_internal(cur, fresh);
        }
        if (depth == 0) {
            root_ = joined;
        } else {
            Node& parent = nodes_[path[depth - 1]];
            (parent.left == cur ? parent.left : parent.right) = joined;
        }
        path[depth++] = joined;
    }

    for (std::size_t i = depth; i-- > 0;) pull(path[i]);

    for (std::size_t i = 0; i < depth; ++i) {
        if (!unbalanced(path[i])) continue;
        const std::int32_t fresh = rebuild(path[i]);
        if (i == 0) {
            root_ = fresh;
        } else {
            Node& parent = nodes_[path[i - 1]];
            (parent.left == path[i] ? parent.left : parent.right) = fresh;
        }
        break;
    }
}

std::int32_t WeightTree::descend_to_min(std::int32_t idx, std::int64_t& acc) const {
    const std::int64_t target = nodes_[idx].lo + acc;
    while (!nodes_[idx].leaf()) {
        acc += nodes_[idx].excess;
        const std::int32_t l = nodes_[idx].left;
        idx = nodes_[l].lo + acc == target ? l : nodes_[idx].right;
    }
    return idx;
}

std::int32_t WeightTree::descend_to_max(std::int32_t idx, std::int64_t& acc) const {
    const std::int64_t target = nodes_[idx].hi + acc;
    while (!nodes_[idx].leaf()) {
        acc += nodes_[idx].excess;
        const std::int32_t l = nodes_[idx].left;
        idx = nodes_[l].hi + acc == target ? l : nodes_[idx].right;
    }
    return idx;
}

std::optional<WeightTree::Extreme> WeightTree::prefix_min(Wide bound) const {
    if (root_ < 0) return std::nullopt;
    std::int32_t best = -1;
    std::int64_t best_acc = 0;
    std::int64_t best_val = 0;
    auto offer = [&](std::int32_t idx, std::int64_t acc) {
        const std::int64_t val = nodes_[idx].lo + acc;
        if (best < 0 || val < best_val) {
            best = idx;
            best_acc = acc;
            best_val = val;
        }
    };
    std::int64_t acc = 0;
    std::int32_t cur = root_;
    while (!nodes_[cur].leaf()) {
        const Node& n = nodes_[cur];
        acc += n.excess;
        if (bound > n.key) {
            offer(n.left, acc);
            cur = n.right;
        } else {
            cur = n.left;
        }
    }
    if (nodes_[cur].key < bound) offer(cur, acc);
    if (best < 0) return std::nullopt;
    const std::int32_t leaf = descend_to_min(best, best_acc);
    return Extreme{nodes_[leaf].cumulative + best_acc, nodes_[leaf].key};
}

std::optional<WeightTree::Extreme> WeightTree::suffix_max(Wide bound) const {
    if (root_ < 0) return std::nullopt;
    std::int32_t best = -1;
    std::int64_t best_acc = 0;
    std::int64_t best_val = 0;
    auto offer = [&](std::int32_t idx, std::int64_t acc) {
        const std::int64_t val = nodes_[idx].hi + acc;
        if (best < 0 || val > best_val) {
            best = idx;
            best_acc = acc;
            best_val = val;
        }
    };
    std::int64_t acc = 0;
    std::int32_t cur = root_;
    while (!nodes_[cur].leaf()) {
        const Node& n = nodes_[cur];
        acc += n.excess;
        if (bound <= n.key) {
            offer(n.right, acc);
            cur = n.left;
        } else {
            cur = n.right;
        }
    }
    if (nodes_[cur].key >= bound) offer(cur, acc);
    if (best < 0) return std::nullopt;
    const std::int32_t leaf = descend_to_max(best, best_acc);
    return Extreme{nodes_[leaf].cumulative + best_acc, nodes_[leaf].key};
}

std::vector<std::pair<Wide, std::int64_t>> WeightTree::effective_leaves() const {
    std::vector<std::pair<Wide, std::int64_t>> out;
    if (root_ < 0) return out;
    // Explicit stack of (node, accumulated excess above it).
    std::vector<std::pair<std::int32_t, std::int64_t>> stack{{root_, 0}};
    while (!stack.empty()) {
        auto [idx, acc] = stack.back();
        stack.pop_back();
        const Node& n = nodes_[idx];
        if (n.leaf()) {
            out.emplace_back(n.key, n.cumulative + acc);
            continue;
        }
        stack.emplace_back(n.right, acc + n.excess);
        stack.emplace_back(n.left, acc + n.excess);
    }
    return out;
}

namespace {

struct Summary {
    bool ok = true;
    Wide min_key = 0;
    Wide max_key = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::uint32_t leaves = 0;
};

}  // namespace

bool WeightTree::check_invariants() const {
    if (root_ < 0) return true;
    auto visit = [&](auto&& self, std::int32_t idx) -> Summary {
        const Node& n = nodes_[idx];
        Summary s;
        if (n.leaf()) {
            s.min_key = s.max_key = n.key;
            s.lo = s.hi = n.cumulative;
            s.leaves = 1;
            s.ok = n.lo == n.cumulative && n.hi == n.cumulative && n.leaves == 1;
            return s;
        }
        const Summary l = self(self, n.left);
        const Summary r = self(self, n.right);
        s.ok = l.ok && r.ok;
        s.ok = s.ok && n.key == l.max_key && l.max_key < r.min_key;
        s.min_key = l.min_key;
        s.max_key = r.max_key;
        s.lo = std::min(l.lo, r.lo) + n.excess;
        s.hi = std::max(l.hi, r.hi) + n.excess;
        s.leaves = l.leaves + r.leaves;
        s.ok = s.ok && s.lo == n.lo && s.hi == n.hi && s.leaves == n.leaves && !unbalanced(idx);
        return s;
    };
    return visit(visit, root_).ok;
}

std::size_t WeightTree::height() const {
    if (root_ < 0) return 0;
    auto visit = [&](auto&& self, std::int32_t idx) -> std::size_t {
        const Node& n = nodes_[idx];
        if (n.leaf()) return 1;
        return 1 + std::max(self(self, n.left), self(self, n.right));
    };
    return visit(visit, root_);
}

}  // namespace geosep
