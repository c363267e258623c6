#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mbe {

enum class Side : uint8_t { Left = 0, Right = 1 };

constexpr Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
constexpr size_t side_index(Side s) { return static_cast<size_t>(s); }

/// A vertex identified by its side and dense 0-based index within that side.
struct VertexRef {
  Side side;
  uint32_t index;

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

/// Minimum side sizes a reported maximal biclique must satisfy.
struct SizeConstraints {
  uint32_t tau_l = 1;
  uint32_t tau_r = 1;
};

/// Immutable bipartite graph with sorted cross-side adjacency lists.
///
/// Vertices carry dense per-side indices; the external ids they were loaded
/// with (or 1-based defaults for generated graphs) are kept for output.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Builds a graph from (left index, right index) pairs. Duplicate edges are
  /// collapsed; adjacency lists come out sorted. Indices must be < the counts.
  static BipartiteGraph from_edges(uint32_t left_count, uint32_t right_count,
                                   std::vector<std::pair<uint32_t, uint32_t>> edges);

  uint32_t count(Side s) const { return static_cast<uint32_t>(adj_[side_index(s)].size()); }
  uint32_t left_count() const { return count(Side::Left); }
  uint32_t right_count() const { return count(Side::Right); }
  uint32_t total_count() const { return left_count() + right_count(); }
  uint64_t edge_count() const { return edge_count_; }

  std::span<const uint32_t> neighbors(Side s, uint32_t v) const {
    return adj_[side_index(s)][v];
  }
  std::span<const uint32_t> neighbors(VertexRef v) const { return neighbors(v.side, v.index); }
  uint32_t degree(Side s, uint32_t v) const {
    return static_cast<uint32_t>(adj_[side_index(s)][v].size());
  }
  uint32_t max_degree() const;

  /// True iff (v on side s) is adjacent to u on the opposite side.
  bool adjacent(Side s, uint32_t v, uint32_t u) const;
  bool adjacent(VertexRef v, uint32_t u) const { return adjacent(v.side, v.index, u); }

  uint64_t original_id(Side s, uint32_t v) const { return ids_[side_index(s)][v]; }
  /// Maps an external id back to its dense index; returns false if unknown.
  bool index_of(Side s, uint64_t id, uint32_t& out) const;

  void set_original_ids(std::vector<uint64_t> left_ids, std::vector<uint64_t> right_ids);

 private:
  std::array<std::vector<std::vector<uint32_t>>, 2> adj_;
  std::array<std::vector<uint64_t>, 2> ids_;
  uint64_t edge_count_ = 0;
};

struct NormalizedGraph {
  BipartiteGraph graph;
  bool swapped = false;
};

/// Reads a KONECT-style edge list: '%' lines are comments, data lines hold
/// two positive integers (left id, right id); trailing columns are ignored
/// and duplicate edges collapse. Throws std::runtime_error with a line
/// number on malformed input.
BipartiteGraph load_konect(std::istream& in);

/// Writes the graph in the same format: "% bip |L| |R| m" then one
/// "leftId rightId" line per edge, ascending by original ids.
void save_konect(const BipartiteGraph& g, std::ostream& out);

/// Returns the graph oriented so that left_count <= right_count, with a flag
/// recording whether the sides were exchanged. Ties keep the input orientation.
NormalizedGraph normalize_sides(const BipartiteGraph& g);

/// Crown graph on 2*half vertices: u_i is adjacent to every v_j except v_i.
BipartiteGraph gen_crown(uint32_t half);

/// Erdos-Renyi style bipartite graph; every potential edge is present
/// independently with probability p. Deterministic in (left, right, p, seed).
BipartiteGraph gen_random_bipartite(uint32_t left, uint32_t right, double p, uint64_t seed);

/// Random graph whose cross-side complement has maximum degree <= 2: the
/// complement is stitched out of isolated vertices, alternating paths and
/// even cycles over shuffled sides. The 2-biplex property is verified on the
/// result before returning.
BipartiteGraph gen_random_2biplex(uint32_t left, uint32_t right, uint64_t seed);

/// |pool| minus the number of v's neighbors inside pool. The pool must be a
/// sorted list of indices on v's opposite side.
uint32_t complement_degree(const BipartiteGraph& g, VertexRef v, std::span<const uint32_t> pool);

/// True iff every vertex has at most two non-neighbors on the other side.
bool is_two_biplex(const BipartiteGraph& g);

}  // namespace mbe
