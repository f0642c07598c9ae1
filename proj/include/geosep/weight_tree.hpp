#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "geosep/geom.hpp"

namespace geosep {

/// Weight-balanced leaf-search tree over keys. Each distinct key is a leaf
/// holding the cumulative weight W(key) = sum of inserted weights with key'
/// <= key. Inserting (key, w) adds w to every leaf at or right of key; the
/// update is deferred through per-node `excess` values, and every node keeps
/// the min and max of W over its subtree.
class WeightTree {
public:
    struct Extreme {
        std::int64_t weight = 0;
        Wide key = 0;
    };

    static constexpr double kBalance = 0.25;

    void clear();
    void reserve(std::size_t keys);

    void insert(Wide key, std::int64_t weight);

    /// min W over keys strictly below `bound`.
    std::optional<Extreme> prefix_min(Wide bound) const;
    /// max W over keys at or above `bound`.
    std::optional<Extreme> suffix_max(Wide bound) const;

    std::int64_t total() const { return total_; }
    std::size_t leaf_count() const { return root_ < 0 ? 0 : nodes_[root_].leaves; }
    std::size_t rebuilds() const { return rebuilds_; }
    std::size_t storage_bytes() const;

    /// (key, effective W) for every leaf in key order.
    std::vector<std::pair<Wide, std::int64_t>> effective_leaves() const;
    /// Checks routing, min/max and balance invariants.
    bool check_invariants() const;
    std::size_t height() const;

private:
    struct Node {
        Wide key = 0;  // leaf: its key; internal: largest key in the left subtree
        std::int32_t left = -1;
        std::int32_t right = -1;
        std::int64_t cumulative = 0;  // leaf only
        std::int64_t own = 0;         // leaf only: weight inserted at exactly this key
        std::int64_t excess = 0;      // internal only: pending delta for the subtree
        std::int64_t lo = 0;          // min W below, including this node's excess
        std::int64_t hi = 0;          // max W below, including this node's excess
        std::uint32_t leaves = 1;

        bool leaf() const { return left < 0; }
    };

    std::int32_t make_leaf(Wide key, std::int64_t cumulative, std::int64_t own);
    std::int32_t make_internal(std::int32_t left, std::int32_t right);
    void release(std::int32_t idx);
    void apply(std::int32_t idx, std::int64_t delta);
    void push_down(std::int32_t idx);
    void pull(std::int32_t idx);
    bool unbalanced(std::int32_t idx) const;
    std::int32_t rebuild(std::int32_t idx);
    std::int32_t build_range(std::size_t begin, std::size_t end);
    void collect(std::int32_t idx);
    std::int32_t descend_to_min(std::int32_t idx, std::int64_t& acc) const;
    std::int32_t descend_to_max(std::int32_t idx, std::int64_t& acc) const;

    std::vector<Node> nodes_;
    std::vector<std::int32_t> free_;
    std::vector<std::int32_t> scratch_;
    std::int32_t root_ = -1;
    std::int64_t total_ = 0;
    std::size_t rebuilds_ = 0;
};

}  // namespace geosep
