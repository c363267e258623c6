#include "mbe/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace mbe {

void ResultSet::add(std::vector<uint32_t> left, std::vector<uint32_t> right) {
  pairs.emplace_back(std::move(left), std::move(right));
}

void ResultSet::canonicalize() {
  for (auto& [l, r] : pairs) {
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

std::string DiffReport::to_string(size_t max_entries) const {
  auto dump = [&](const char* label, const std::vector<ResultSet::Pair>& v, std::ostream& os) {
    os << label << ": " << v.size() << '\n';
    size_t shown = 0;
    for (const auto& [l, r] : v) {
      if (shown++ == max_entries) {
        os << "  ...\n";
        break;
      }
      os << "  L:";
      for (uint32_t u : l) os << ' ' << u;
      os << " | R:";
      for (uint32_t u : r) os << ' ' << u;
      os << '\n';
    }
  };
  std::ostringstream os;
  dump("only in a", only_a, os);
  dump("only in b", only_b, os);
  return os.str();
}

ResultSet oracle_enumerate(const BipartiteGraph& g, SizeConstraints k) {
  const Side small = g.left_count() <= g.right_count() ? Side::Left : Side::Right;
  const Side big = opposite(small);
  const uint32_t ns = g.count(small);
  const uint32_t nb = g.count(big);
  if (ns > 24) throw std::invalid_argument("oracle guard: smaller side exceeds 24 vertices");
  if (ns == 0 || nb == 0) return {};

  // Gray-code walk over subsets of the small side; cover[w] counts how many
  // chosen vertices w is adjacent to, so the common neighborhood is
  // {w : cover[w] == |subset|}.
  std::vector<uint32_t> cover(nb, 0);
  std::vector<uint32_t> closure_hits(ns, 0);
  uint32_t popcount = 0;
  uint64_t chosen_mask = 0;

  ResultSet out;
  const uint64_t total = 1ull << ns;
  for (uint64_t step = 1; step < total; ++step) {
    const uint32_t bit = std::countr_zero(step);
    const uint64_t gray_bit = 1ull << bit;
    if (chosen_mask & gray_bit) {
      --popcount;
      for (uint32_t w : g.neighbors(small, bit)) --cover[w];
    } else {
      ++popcount;
      for (uint32_t w : g.neighbors(small, bit)) ++cover[w];
    }
    chosen_mask ^= gray_bit;

    std::vector<uint32_t> common;
    for (uint32_t w = 0; w < nb; ++w)
      if (cover[w] == popcount) common.push_back(w);
    if (common.empty()) continue;

    // Closure: the common neighbors of `common` must be exactly the subset.
    std::fill(closure_hits.begin(), closure_hits.end(), 0);
    for (uint32_t w : common)
      for (uint32_t u : g.neighbors(big, w)) ++closure_hits[u];
    bool closed = true;
    for (uint32_t u = 0; u < ns && closed; ++u) {
      const bool in_subset = (chosen_mask >> u) & 1;
      const bool in_closure = closure_hits[u] == common.size();
      closed = in_subset == in_closure;
    }
    if (!closed) continue;

    std::vector<uint32_t> subset;
    for (uint32_t u = 0; u < ns; ++u)
      if ((chosen_mask >> u) & 1) subset.push_back(u);
    if (small == Side::Left)
      out.add(std::move(subset), std::move(common));
    else
      out.add(std::move(common), std::move(subset));
  }

  out.canonicalize();
  std::erase_if(out.pairs, [&](const ResultSet::Pair& p) {
    return p.first.size() < k.tau_l || p.second.size() < k.tau_r;
  });
  return out;
}

DiffReport compare_results(const ResultSet& a, const ResultSet& b) {
  DiffReport d;
  std::set_difference(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(),
                      std::back_inserter(d.only_a));
  std::set_difference(b.pairs.begin(), b.pairs.end(), a.pairs.begin(), a.pairs.end(),
                      std::back_inserter(d.only_b));
  return d;
}

}  // namespace mbe
