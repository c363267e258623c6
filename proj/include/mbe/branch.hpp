#pragma once

#include <array>
#include <span>
#include <vector>

#include "mbe/graph.hpp"

namespace mbe {

/// One side of a branch. The three vertex lists are sorted ascending; the
/// counter vectors run parallel to them:
///   c_cd[i]  = number of non-neighbors of c[i] in the opposite C
///   c_cdx[i] = number of non-neighbors of c[i] in the opposite X
///   x_cd[i]  = number of non-neighbors of x[i] in the opposite C
struct BranchSide {
  std::vector<uint32_t> s, c, x;
  std::vector<uint32_t> c_cd, c_cdx, x_cd;
};

/// Search-space node: S is the partial biclique, C the candidates that can
/// still extend it, X the excluded vertices that witness non-maximality.
/// Invariants (enforced by make_branch / checked in tests):
///   - the six lists are pairwise disjoint and sorted;
///   - G[S] is a biclique;
///   - every vertex of C and X is adjacent to all of S on the other side;
///   - the cached counters match their definitions above.
struct Branch {
  std::array<BranchSide, 2> side;

  BranchSide& at(Side s) { return side[side_index(s)]; }
  const BranchSide& at(Side s) const { return side[side_index(s)]; }

  bool c_empty() const { return side[0].c.empty() && side[1].c.empty(); }
  bool x_empty() const { return side[0].x.empty() && side[1].x.empty(); }
  size_t c_size() const { return side[0].c.size() + side[1].c.size(); }
  size_t x_size() const { return side[0].x.size() + side[1].x.size(); }
};

enum class AlgoTier { Basic, Bps, Ips };

enum class TerminalKind {
  NotTerminal,
  TrivialMaximal,  // C empty, X empty (basic tier only)
  TrivialDead,     // C empty, X nonempty
  BiplexBatch,     // X empty and G[S u C] is a 2-biplex (bps/ips tiers)
};

/// Reusable scratch marks sized to the graph; keeps expand() allocation free.
class Workspace {
 public:
  void ensure(const BipartiteGraph& g);
  std::vector<uint8_t>& marks(Side s) { return marks_[side_index(s)]; }

 private:
  std::array<std::vector<uint8_t>, 2> marks_;
};

/// Root branch: S = X = empty, C = every vertex of positive degree.
Branch make_root(const BipartiteGraph& g, Workspace& ws);

/// Builds a branch from explicit sorted vertex lists, computing all cached
/// counters and validating the branch invariants (throws std::logic_error).
Branch make_branch(const BipartiteGraph& g, std::vector<uint32_t> s_left,
                   std::vector<uint32_t> s_right, std::vector<uint32_t> c_left,
                   std::vector<uint32_t> c_right, std::vector<uint32_t> x_left,
                   std::vector<uint32_t> x_right, Workspace& ws);

/// Child branch that moves v from C into S, moves `preceding` (the targets
/// already branched on at this node) from C into X, and drops every
/// opposite-side vertex of C and X that is not adjacent to v.
Branch expand(const BipartiteGraph& g, const Branch& b, VertexRef v,
              std::span<const VertexRef> preceding, Workspace& ws);

TerminalKind classify_terminal(const Branch& b, AlgoTier tier);

/// (P1) upper-bound prune: true iff |S_L|+|C_L| < tau_l or |S_R|+|C_R| < tau_r.
bool prune_p1(const Branch& b, SizeConstraints k);

/// (P2) exclusion prune: true iff some excluded vertex is adjacent to every
/// candidate on the other side, so nothing in G[S u C] can be maximal.
bool prune_p2(const Branch& b);

/// Full invariant scan (disjointness, biclique property, adjacency to S,
/// counters vs. direct recomputation). Throws std::logic_error on violation.
void check_branch_invariants(const BipartiteGraph& g, const Branch& b);

}  // namespace mbe
