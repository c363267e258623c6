#include "mbe/biplex_batch.hpp"

#include <algorithm>
#include <stdexcept>

#include "mbe/pivot.hpp"

namespace mbe {

namespace {

// Jump-ahead enumeration shared by paths and cycles: from the last chosen
// position, either position+2 or position+3 is chosen next, and a set is
// complete once position+2 falls past `hi`.
void extend_chain(const std::vector<VertexRef>& comp, size_t hi, std::vector<size_t>& chosen,
                  std::vector<std::vector<VertexRef>>& out) {
  const size_t last = chosen.back();
  if (last + 2 > hi) {
    std::vector<VertexRef> set;
    set.reserve(chosen.size());
    for (size_t pos : chosen) set.push_back(comp[pos]);
    out.push_back(std::move(set));
    return;
  }
  chosen.push_back(last + 2);
  extend_chain(comp, hi, chosen, out);
  chosen.pop_back();
  if (last + 3 <= hi) {
    chosen.push_back(last + 3);
    extend_chain(comp, hi, chosen, out);
    chosen.pop_back();
  }
}

struct ComponentChoices {
  // Each choice pre-split into side index lists, ready to splice into the
  // running candidate.
  struct Choice {
    std::vector<uint32_t> left, right;
  };
  std::vector<Choice> choices;
  uint32_t max_left = 0, max_right = 0;
};

ComponentChoices split_choices(std::vector<std::vector<VertexRef>> sets) {
  ComponentChoices cc;
  cc.choices.reserve(sets.size());
  for (auto& set : sets) {
    ComponentChoices::Choice ch;
    for (VertexRef v : set)
      (v.side == Side::Left ? ch.left : ch.right).push_back(v.index);
    cc.max_left = std::max(cc.max_left, static_cast<uint32_t>(ch.left.size()));
    cc.max_right = std::max(cc.max_right, static_cast<uint32_t>(ch.right.size()));
    cc.choices.push_back(std::move(ch));
  }
  return cc;
}

}  // namespace

ComplementDecomposition decompose_complement(const BipartiteGraph& g, const Branch& b) {
  if (classify_terminal(b, AlgoTier::Ips) != TerminalKind::BiplexBatch)
    throw std::logic_error("decompose_complement: branch is not batch-terminal");

  ComplementDecomposition d;
  for (Side s : {Side::Left, Side::Right})
    for (uint32_t v : b.at(s).s) d.isolated.push_back({s, v});

  // Non-edge adjacency, at most two entries per candidate.
  struct Node {
    VertexRef nbr[2];
    uint8_t deg = 0;
    bool visited = false;
  };
  std::array<std::vector<Node>, 2> nodes;
  for (Side s : {Side::Left, Side::Right}) {
    const auto& side = b.at(s);
    auto& mine = nodes[side_index(s)];
    mine.resize(side.c.size());
    for (size_t i = 0; i < side.c.size(); ++i) {
      if (side.c_cd[i] == 0) {
        d.isolated.push_back({s, side.c[i]});
        mine[i].visited = true;
        continue;
      }
      for (uint32_t u : non_neighbors_in(g, {s, side.c[i]}, b.at(opposite(s)).c))
        mine[i].nbr[mine[i].deg++] = {opposite(s), u};
    }
  }
  std::sort(d.isolated.begin(), d.isolated.end());

  auto pos_of = [&](VertexRef v) {
    const auto& c = b.at(v.side).c;
    return static_cast<size_t>(std::lower_bound(c.begin(), c.end(), v.index) - c.begin());
  };
  auto node_of = [&](VertexRef v) -> Node& { return nodes[side_index(v.side)][pos_of(v)]; };

  auto walk = [&](VertexRef start, VertexRef second) {
    std::vector<VertexRef> trail{start};
    node_of(start).visited = true;
    VertexRef prev = start, cur = second;
    while (true) {
      Node& n = node_of(cur);
      if (n.visited) break;  // closed a cycle
      n.visited = true;
      trail.push_back(cur);
      VertexRef next = n.nbr[0] == prev && n.deg == 2 ? n.nbr[1] : n.nbr[0];
      if (n.deg == 1 || (next == prev)) break;  // end of a path
      prev = cur;
      cur = next;
    }
    return trail;
  };

  // Paths first, each traced from its smaller endpoint; the ascending scan
  // guarantees the smaller endpoint is seen before the larger one.
  for (Side s : {Side::Left, Side::Right}) {
    const auto& side = b.at(s);
    for (size_t i = 0; i < side.c.size(); ++i) {
      const Node& n = nodes[side_index(s)][i];
      if (n.visited || n.deg != 1) continue;
      d.paths.push_back(walk({s, side.c[i]}, n.nbr[0]));
    }
  }
  // Everything left with non-edges sits on cycles; start at the smallest
  // vertex and step toward its smaller neighbor.
  for (Side s : {Side::Left, Side::Right}) {
    const auto& side = b.at(s);
    for (size_t i = 0; i < side.c.size(); ++i) {
      const Node& n = nodes[side_index(s)][i];
      if (n.visited) continue;
      VertexRef first = std::min(n.nbr[0], n.nbr[1]);
      auto cyc = walk({s, side.c[i]}, first);
      if (cyc.size() < 4 || cyc.size() % 2 != 0)
        throw std::logic_error("decompose_complement: malformed complement cycle");
      d.cycles.push_back(std::move(cyc));
    }
  }

  // Left < Right ordering means the left endpoints scan first, so any path
  // starting on the right has both endpoints there; the sort above plus the
  // scan order keep the whole decomposition deterministic.
  return d;
}

std::vector<std::vector<VertexRef>> mis_from_path(const std::vector<VertexRef>& path) {
  if (path.size() < 2) throw std::logic_error("mis_from_path: need at least two vertices");
  std::vector<std::vector<VertexRef>> out;
  std::vector<size_t> chosen;
  for (size_t seed : {size_t{0}, size_t{1}}) {
    chosen.assign(1, seed);
    extend_chain(path, path.size() - 1, chosen, out);
  }
  return out;
}

std::vector<std::vector<VertexRef>> mis_from_cycle(const std::vector<VertexRef>& cycle) {
  const size_t n = cycle.size();
  if (n < 4 || n % 2 != 0) throw std::logic_error("mis_from_cycle: need an even cycle of length >= 4");
  if (n == 4) return {{cycle[0], cycle[2]}, {cycle[1], cycle[3]}};

  std::vector<std::vector<VertexRef>> out;
  std::vector<size_t> chosen;
  // First vertex in: its cycle neighbor at the far end is excluded.
  chosen.assign(1, 0);
  extend_chain(cycle, n - 2, chosen, out);
  // Second vertex in, first out.
  chosen.assign(1, 1);
  extend_chain(cycle, n - 1, chosen, out);
  // Neither of the first two in: the last and third vertices are forced.
  chosen.assign({n - 1, 2});
  const size_t before = out.size();
  extend_chain(cycle, n - 3, chosen, out);
  // The forced seed lists the last vertex first; restore walk order.
  for (size_t i = before; i < out.size(); ++i)
    std::rotate(out[i].begin(), out[i].begin() + 1, out[i].end());
  return out;
}

uint64_t emit_batch(const BipartiteGraph& g, const Branch& b, const ComplementDecomposition& d,
                    SizeConstraints k, const ResultSink& sink,
                    std::vector<uint64_t>* work_samples) {
  std::vector<ComponentChoices> comps;
  comps.reserve(d.paths.size() + d.cycles.size());
  for (const auto& p : d.paths) comps.push_back(split_choices(mis_from_path(p)));
  for (const auto& c : d.cycles) comps.push_back(split_choices(mis_from_cycle(c)));

  std::vector<uint32_t> base_left, base_right;
  for (VertexRef v : d.isolated)
    (v.side == Side::Left ? base_left : base_right).push_back(v.index);

  // Optimistic per-side completions for pruning: what the components from
  // position j onward can still contribute.
  const size_t nc = comps.size();
  std::vector<uint32_t> rest_left(nc + 1, 0), rest_right(nc + 1, 0);
  for (size_t j = nc; j-- > 0;) {
    rest_left[j] = rest_left[j + 1] + comps[j].max_left;
    rest_right[j] = rest_right[j + 1] + comps[j].max_right;
  }

  uint64_t emitted = 0;
  uint64_t work = 0;
  std::vector<uint32_t> cur_left = base_left, cur_right = base_right;
  std::vector<uint32_t> out_left, out_right;

  auto emit_current = [&]() {
    if (cur_left.size() < k.tau_l || cur_right.size() < k.tau_r) return true;
    if (cur_left.empty() || cur_right.empty()) return true;
    out_left = cur_left;
    out_right = cur_right;
    std::sort(out_left.begin(), out_left.end());
    std::sort(out_right.begin(), out_right.end());
    ++emitted;
    work += out_left.size() + out_right.size();
    if (work_samples) work_samples->push_back(work);
    return sink(out_left, out_right);
  };

  auto rec = [&](auto&& self, size_t j) -> bool {
    if (j == nc) return emit_current();
    if (cur_left.size() + rest_left[j] < k.tau_l) return true;
    if (cur_right.size() + rest_right[j] < k.tau_r) return true;
    for (const auto& choice : comps[j].choices) {
      cur_left.insert(cur_left.end(), choice.left.begin(), choice.left.end());
      cur_right.insert(cur_right.end(), choice.right.begin(), choice.right.end());
      work += choice.left.size() + choice.right.size() + 1;
      const bool keep_going = self(self, j + 1);
      cur_left.resize(cur_left.size() - choice.left.size());
      cur_right.resize(cur_right.size() - choice.right.size());
      if (!keep_going) return false;
    }
    return true;
  };
  rec(rec, 0);
  return emitted;
}

}  // namespace mbe
