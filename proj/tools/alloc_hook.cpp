// Replacement global operator new/delete that counts allocations and tracks
// live and peak bytes. Each block carries a small header with its size.

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <new>

#include "geosep/alloc_stats.hpp"

namespace {

std::atomic<std::uint64_t> g_allocations{0};
std::atomic<std::int64_t> g_current{0};
std::atomic<std::int64_t> g_peak{0};

constexpr std::size_t kHeader = alignof(std::max_align_t);

void* counted_alloc(std::size_t size) {
    void* raw = std::malloc(size + kHeader);
    if (!raw) return nullptr;
    *static_cast<std::size_t*>(raw) = size;
    g_allocations.fetch_add(1, std::memory_order_relaxed);
    const std::int64_t now = g_current.fetch_add(static_cast<std::int64_t>(size), std::memory_order_relaxed) +
                             static_cast<std::int64_t>(size);
    std::int64_t peak = g_peak.load(std::memory_order_relaxed);
    while (now > peak && !g_peak.compare_exchange_weak(peak, now, std::memory_order_relaxed)) {
    }
    return static_cast<char*>(raw) + kHeader;
}

void counted_free(void* p) {
    if (!p) return;
    void* raw = static_cast<char*>(p) - kHeader;
    const std::size_t size = *static_cast<std::size_t*>(raw);
    g_current.fetch_sub(static_cast<std::int64_t>(size), std::memory_order_relaxed);
    std::free(raw);
}

}  // namespace

namespace geosep::alloc {

Snapshot snapshot() {
    return {g_allocations.load(std::memory_order_relaxed), g_current.load(std::memory_order_relaxed),
            g_peak.load(std::memory_order_relaxed)};
}

void reset_peak() { g_peak.store(g_current.load(std::memory_order_relaxed), std::memory_order_relaxed); }

}  // namespace geosep::alloc

void* operator new(std::size_t size) {
    if (void* p = counted_alloc(size)) return p;
    throw std::bad_alloc();
}

void* operator new[](std::size_t size) {
    if (void* p = counted_alloc(size)) return p;
    throw std::bad_alloc();
}

void* operator new(std::size_t size, const std::nothrow_t&) noexcept { return counted_alloc(size); }
void* operator new[](std::size_t size, const std::nothrow_t&) noexcept { return counted_alloc(size); }

void operator delete(void* p) noexcept { counted_free(p); }
void operator delete[](void* p) noexcept { counted_free(p); }
void operator delete(void* p, std::size_t) noexcept { counted_free(p); }
void operator delete[](void* p, std::size_t) noexcept { counted_free(p); }
void operator delete(void* p, const std::nothrow_t&) noexcept { counted_free(p); }
void operator delete[](void* p, const std::nothrow_t&) noexcept { counted_free(p); }
