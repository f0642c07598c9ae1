#pragma once

#include <cstddef>
#include <cstdint>

namespace geosep::alloc {

/// Process-wide heap counters, maintained by the replacement operator
/// new/delete in alloc_hook.cpp. Only binaries that link that file count.
struct Snapshot {
    std::uint64_t allocations = 0;
    std::int64_t current_bytes = 0;
    std::int64_t peak_bytes = 0;
};

Snapshot snapshot();

/// Resets the peak to the current live byte count.
void reset_peak();

}  // namespace geosep::alloc
