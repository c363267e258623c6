#pragma once

#include <optional>
#include <vector>

#include "mbe/branch.hpp"

namespace mbe {

/// Chosen pivot plus the candidates to branch on, in processing order: the
/// pivot itself first when it sits in C, then its non-neighbors within C on
/// the opposite side in ascending index order.
struct PivotDecision {
  VertexRef pivot;
  bool pivot_in_c = false;
  std::vector<VertexRef> targets;
};

/// The candidate subset that already behaves like a 2-biplex region:
///   C_L' = { v in C_L : cd(v, X_R) = 0 and cd(v, C_R) <= 2 },  same on the right.
struct Partition {
  std::vector<uint32_t> c_prime_left;
  std::vector<uint32_t> c_prime_right;
};

/// Minimum-non-neighbor rule over all of C and X. Ties break by smaller
/// complement degree, then Left before Right, then C before X, then index.
/// Requires a nonempty C (terminal branches must be classified first).
PivotDecision pivot_basic(const BipartiteGraph& g, const Branch& b);

Partition compute_partition(const Branch& b);

/// Candidate pivots of the partition strategy:
///   (C1) every vertex of (C \ C') and of X;
///   (C2) every vertex of C' with a non-neighbor in the opposite C \ C'.
/// Returned sorted by (side, C before X, index).
std::vector<VertexRef> candidate_pivots(const BipartiteGraph& g, const Branch& b,
                                        const Partition& p, Workspace& ws);

/// Partition-based rule: empty candidate set means the branch satisfies the
/// batch stopping criterion and absent is returned. Otherwise the candidate
/// with the fewest non-neighbors in the opposite C wins; ties prefer X over
/// C, then Left before Right, then ascending index.
std::optional<PivotDecision> pivot_partitioned(const BipartiteGraph& g, const Branch& b,
                                               Workspace& ws);

/// Non-neighbors of v inside the opposite side's candidate list, ascending.
std::vector<uint32_t> non_neighbors_in(const BipartiteGraph& g, VertexRef v,
                                       const std::vector<uint32_t>& pool);

}  // namespace mbe
