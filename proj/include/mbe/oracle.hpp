#pragma once

#include <string>
#include <vector>

#include "mbe/graph.hpp"

namespace mbe {

/// Canonical set of maximal bicliques: each entry is a pair of sorted dense
/// index lists (left, right), the whole collection sorted and duplicate free.
struct ResultSet {
  using Pair = std::pair<std::vector<uint32_t>, std::vector<uint32_t>>;
  std::vector<Pair> pairs;

  void add(std::vector<uint32_t> left, std::vector<uint32_t> right);
  void canonicalize();
  size_t size() const { return pairs.size(); }

  friend bool operator==(const ResultSet&, const ResultSet&) = default;
};

struct DiffReport {
  std::vector<ResultSet::Pair> only_a;
  std::vector<ResultSet::Pair> only_b;

  bool empty() const { return only_a.empty() && only_b.empty(); }
  std::string to_string(size_t max_entries = 8) const;
};

/// Brute-force reference enumerator: iterates all nonempty subsets of the
/// smaller side in Gray-code order, keeps those whose common-neighbor
/// closure returns the subset itself, and filters by the size constraints.
/// Guarded to min(|L|,|R|) <= 24.
ResultSet oracle_enumerate(const BipartiteGraph& g, SizeConstraints k = {1, 1});

/// Symmetric difference of two canonical result sets.
DiffReport compare_results(const ResultSet& a, const ResultSet& b);

}  // namespace mbe
