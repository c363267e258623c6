#pragma once

#include <vector>

#include "mbe/branch.hpp"
#include "mbe/sink.hpp"

namespace mbe {

/// Structure of the cross-side non-edges inside a batch-terminal branch.
/// Every vertex of S u C lands in exactly one component: `isolated` holds
/// the vertices with no non-edge (all of S included), while paths and
/// cycles list their vertices in walk order, sides alternating. Cycles have
/// even length >= 4; paths have length >= 2.
struct ComplementDecomposition {
  std::vector<VertexRef> isolated;
  std::vector<std::vector<VertexRef>> paths;
  std::vector<std::vector<VertexRef>> cycles;
};

/// Splits a branch that satisfies the batch stopping criterion into its
/// complement components. Paths start at their smaller endpoint and cycles
/// at their smallest vertex (Left before Right, then index), so the result
/// is deterministic. Throws std::logic_error if the branch is not terminal.
ComplementDecomposition decompose_complement(const BipartiteGraph& g, const Branch& b);

/// All maximal independent sets of a path of non-edges, in the order given
/// by seeding with the first or second vertex and repeatedly jumping two or
/// three positions ahead.
std::vector<std::vector<VertexRef>> mis_from_path(const std::vector<VertexRef>& path);

/// All maximal independent sets of an even cycle of non-edges: either the
/// first vertex is in, or the second is, or neither is (which forces the
/// last and third vertices). Each case reduces to a path enumeration.
std::vector<std::vector<VertexRef>> mis_from_cycle(const std::vector<VertexRef>& cycle);

/// Streams every maximal biclique of the terminal branch to the sink: one
/// maximal independent set per component, merged with the always-included
/// isolated vertices, filtered by the size constraints. Combinations are
/// produced by patching one component choice at a time, so the per-result
/// cost is proportional to the output size. Returns the number emitted.
///
/// `work_samples`, when given, receives the cumulative elementary-work
/// counter after each emission (used by the benchmark growth checks).
uint64_t emit_batch(const BipartiteGraph& g, const Branch& b, const ComplementDecomposition& d,
                    SizeConstraints k, const ResultSink& sink,
                    std::vector<uint64_t>* work_samples = nullptr);

}  // namespace mbe
