#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace mbe {

/// Receives one maximal biclique as two sorted spans of dense vertex
/// indices. Returning false asks the producer to stop early.
using ResultSink =
    std::function<bool(std::span<const uint32_t> left, std::span<const uint32_t> right)>;

}  // namespace mbe
