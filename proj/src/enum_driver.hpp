#pragma once

#include <chrono>

#include "mbe/enumerate.hpp"

namespace mbe::detail {

// Recursive node runner shared by the plain entry point and the
// instance-decomposed driver. One driver owns one sequential search.
class EnumDriver {
 public:
  EnumDriver(const BipartiteGraph& g, const EnumConfig& cfg, const ResultSink& sink,
             BranchObserver* observer)
      : g_(g), cfg_(cfg), sink_(sink), observer_(observer) {
    start_ = std::chrono::steady_clock::now();
    last_output_ = start_;
  }

  void run(Branch& branch, uint32_t depth);
  bool stopped() const { return stop_; }

  EnumStats& stats() { return stats_; }
  Workspace& workspace() { return ws_; }

 private:
  bool deliver(std::span<const uint32_t> left, std::span<const uint32_t> right);

  const BipartiteGraph& g_;
  const EnumConfig& cfg_;
  const ResultSink& sink_;
  BranchObserver* observer_;
  EnumStats stats_;
  Workspace ws_;
  std::chrono::steady_clock::time_point start_, last_output_;
  bool stop_ = false;
};

}  // namespace mbe::detail
