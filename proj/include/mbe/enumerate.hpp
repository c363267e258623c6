#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "mbe/branch.hpp"
#include "mbe/graph.hpp"
#include "mbe/sink.hpp"

namespace mbe {

enum class IeMode { Off, Arbitrary, Degree, Degeneracy, Unilateral };

struct EnumConfig {
  AlgoTier tier = AlgoTier::Ips;
  SizeConstraints constraints{1, 1};
  IeMode ie_mode = IeMode::Off;
  bool stats_enabled = false;  // record inter-output delay samples
  std::optional<uint64_t> emit_limit;
  std::optional<std::chrono::nanoseconds> time_budget;
  bool parallel_instances = false;  // decomposed instances only; reorders deliveries
  std::vector<uint64_t>* batch_work_samples = nullptr;  // batch work probe
};

struct EnumStats {
  uint64_t branches = 0;
  uint64_t biplex_batches = 0;
  uint64_t trivial_terminals = 0;
  uint64_t pruned_p1 = 0;
  uint64_t pruned_p2 = 0;
  uint64_t outputs = 0;
  uint32_t max_depth = 0;
  bool partial = false;  // stopped by emit_limit / time_budget / sink
  std::vector<uint64_t> delay_samples;  // ns between consecutive outputs

  void merge_from(const EnumStats& other);
};

/// A reported maximal biclique in external id space.
struct BicliqueResult {
  std::vector<uint64_t> left;
  std::vector<uint64_t> right;
};

/// Test hook: sees every branch discarded by rule (P2).
struct BranchObserver {
  virtual ~BranchObserver() = default;
  virtual void on_p2_prune(const BipartiteGraph& g, const Branch& b) = 0;
};

/// Enumerates every maximal biclique of g that meets the size constraints,
/// delivering each exactly once. Per node: terminal classification, then
/// (P1), then (P2), then pivoting and expansion of the branch targets in
/// order. With ie_mode other than Off the run is delegated to the
/// instance-decomposed driver.
EnumStats enumerate(const BipartiteGraph& g, const EnumConfig& cfg, const ResultSink& sink,
                    BranchObserver* observer = nullptr);

/// Direct check that r is a biclique of g, maximal, and within the size
/// constraints. Ids are external; unknown ids throw std::invalid_argument.
bool verify_result(const BipartiteGraph& g, const BicliqueResult& r, SizeConstraints k = {1, 1});

}  // namespace mbe
