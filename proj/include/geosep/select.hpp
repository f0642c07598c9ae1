#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <span>
#include <utility>

namespace geosep {

namespace detail {

template <class T, class Less>
std::size_t median_of_three(std::span<T> a, std::size_t i, std::size_t j, std::size_t k, Less& less) {
    if (less(a[j], a[i])) std::swap(i, j);
    if (less(a[k], a[j])) {
        j = k;
        if (less(a[j], a[i])) j = i;
    }
    return j;
}

// Lomuto partition of a[lo, hi) around a[lo]; returns the pivot's final slot.
template <class T, class Less>
std::size_t partition_at_head(std::span<T> a, std::size_t lo, std::size_t hi, Less& less) {
    std::size_t store = lo + 1;
    for (std::size_t j = lo + 1; j < hi; ++j) {
        if (less(a[j], a[lo])) {
            std::swap(a[store], a[j]);
            ++store;
        }
    }
    std::swap(a[lo], a[store - 1]);
    return store - 1;
}

}  // namespace detail

/// Places the element of 1-based `rank` (under the strict total order `less`)
/// at block[0], with the rank-1 smaller elements in block[1 .. rank-1] and the
/// larger ones after. Iterative quickselect; no heap or stack growth.
template <class T, class Less>
void select_and_partition(std::span<T> block, Less less, std::size_t rank) {
    const std::size_t n = block.size();
    assert(rank >= 1 && rank <= n);
    if (n <= 1) return;
    const std::size_t target = rank - 1;

    std::size_t lo = 0;
    std::size_t hi = n;
    // Quickselect degenerates only on adversarial inputs; bound the rounds and
    // fall back to the library introselect, which is also in-place.
    std::size_t budget = 2 * static_cast<std::size_t>(std::bit_width(n)) + 8;
    while (hi - lo > 1) {
        if (budget-- == 0) {
            std::nth_element(block.begin() + lo, block.begin() + target, block.begin() + hi, less);
            break;
        }
        const std::size_t len = hi - lo;
        const std::size_t mid = lo + len / 2;
        std::size_t pivot;
        if (len >= 64) {
            const std::size_t step = len / 8;
            const auto m1 = detail::median_of_three(block, lo, lo + step, lo + 2 * step, less);
            const auto m2 = detail::median_of_three(block, mid - step, mid, mid + step, less);
            const auto m3 = detail::median_of_three(block, hi - 1 - 2 * step, hi - 1 - step, hi - 1, less);
            pivot = detail::median_of_three(block, m1, m2, m3, less);
        } else {
            pivot = detail::median_of_three(block, lo, mid, hi - 1, less);
        }
        std::swap(block[lo], block[pivot]);
        const std::size_t pos = detail::partition_at_head(block, lo, hi, less);
        if (pos == target) break;
        if (target < pos) {
            hi = pos;
        } else {
            lo = pos + 1;
        }
    }
    // a[target] is in its sorted slot; everything before is smaller.
    std::swap(block[0], block[target]);
}

/// In-place heapsort (no recursion, no allocation).
template <class It, class Less>
void heap_sort(It first, It last, Less less) {
    std::make_heap(first, last, less);
    std::sort_heap(first, last, less);
}

}  // namespace geosep
