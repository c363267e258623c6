#include "mbe/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "enum_driver.hpp"
#include "mbe/biplex_batch.hpp"
#include "mbe/ie.hpp"
#include "mbe/pivot.hpp"

namespace mbe {

void EnumStats::merge_from(const EnumStats& other) {
  branches += other.branches;
  biplex_batches += other.biplex_batches;
  trivial_terminals += other.trivial_terminals;
  pruned_p1 += other.pruned_p1;
  pruned_p2 += other.pruned_p2;
  outputs += other.outputs;
  max_depth = std::max(max_depth, other.max_depth);
  partial = partial || other.partial;
  delay_samples.insert(delay_samples.end(), other.delay_samples.begin(),
                       other.delay_samples.end());
}

namespace detail {

bool EnumDriver::deliver(std::span<const uint32_t> left, std::span<const uint32_t> right) {
  ++stats_.outputs;
  if (cfg_.stats_enabled) {
    const auto now = std::chrono::steady_clock::now();
    stats_.delay_samples.push_back(
        std::chrono::duration_cast<std::chrono::nanoseconds>(now - last_output_).count());
    last_output_ = now;
  }
  bool keep_going = sink_(left, right);
  if (cfg_.emit_limit && stats_.outputs >= *cfg_.emit_limit) keep_going = false;
  if (!keep_going) {
    stop_ = true;
    stats_.partial = true;
  }
  return keep_going;
}

void EnumDriver::run(Branch& branch, uint32_t depth) {
  if (stop_) return;
  ++stats_.branches;
  stats_.max_depth = std::max(stats_.max_depth, depth);
  if (cfg_.time_budget && std::chrono::steady_clock::now() - start_ > *cfg_.time_budget) {
    stop_ = true;
    stats_.partial = true;
    return;
  }

  switch (classify_terminal(branch, cfg_.tier)) {
    case TerminalKind::TrivialMaximal: {
      ++stats_.trivial_terminals;
      const auto& sl = branch.at(Side::Left).s;
      const auto& sr = branch.at(Side::Right).s;
      if (sl.size() >= cfg_.constraints.tau_l && sr.size() >= cfg_.constraints.tau_r)
        deliver(sl, sr);
      return;
    }
    case TerminalKind::TrivialDead:
      ++stats_.trivial_terminals;
      return;
    case TerminalKind::BiplexBatch: {
      ++stats_.biplex_batches;
      const auto decomposition = decompose_complement(g_, branch);
      emit_batch(g_, branch, decomposition, cfg_.constraints,
                 [this](std::span<const uint32_t> l, std::span<const uint32_t> r) {
                   return deliver(l, r);
                 },
                 cfg_.batch_work_samples);
      return;
    }
    case TerminalKind::NotTerminal:
      break;
  }

  if (prune_p1(branch, cfg_.constraints)) {
    ++stats_.pruned_p1;
    return;
  }
  if (prune_p2(branch)) {
    ++stats_.pruned_p2;
    if (observer_) observer_->on_p2_prune(g_, branch);
    return;
  }

  PivotDecision decision;
  if (cfg_.tier == AlgoTier::Ips) {
    auto chosen = pivot_partitioned(g_, branch, ws_);
    if (!chosen)
      throw std::logic_error("no pivot candidates on a non-terminal branch");
    decision = std::move(*chosen);
  } else {
    decision = pivot_basic(g_, branch);
  }

  std::vector<VertexRef> preceding;
  preceding.reserve(decision.targets.size());
  for (VertexRef target : decision.targets) {
    Branch child = expand(g_, branch, target, preceding, ws_);
    run(child, depth + 1);
    if (stop_) return;
    preceding.push_back(target);
  }
}

}  // namespace detail

EnumStats enumerate(const BipartiteGraph& g, const EnumConfig& cfg, const ResultSink& sink,
                    BranchObserver* observer) {
  if (cfg.constraints.tau_l < 1 || cfg.constraints.tau_r < 1)
    throw std::invalid_argument("size constraints must be at least 1");
  if (cfg.emit_limit && *cfg.emit_limit == 0)
    throw std::invalid_argument("emit limit must be positive");
  if (cfg.time_budget && cfg.time_budget->count() <= 0)
    throw std::invalid_argument("time budget must be positive");

  if (cfg.ie_mode != IeMode::Off) return enumerate_ie(g, cfg, sink, observer);

  detail::EnumDriver driver(g, cfg, sink, observer);
  Branch root = make_root(g, driver.workspace());
  driver.run(root, 0);
  return driver.stats();
}

bool verify_result(const BipartiteGraph& g, const BicliqueResult& r, SizeConstraints k) {
  auto resolve = [&](Side s, const std::vector<uint64_t>& ids) {
    std::vector<uint32_t> out;
    out.reserve(ids.size());
    for (uint64_t id : ids) {
      uint32_t v = 0;
      if (!g.index_of(s, id, v)) throw std::invalid_argument("unknown vertex id");
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto left = resolve(Side::Left, r.left);
  const auto right = resolve(Side::Right, r.right);

  if (left.empty() || right.empty()) return false;
  if (left.size() < k.tau_l || right.size() < k.tau_r) return false;
  for (uint32_t u : left)
    for (uint32_t v : right)
      if (!g.adjacent(Side::Left, u, v)) return false;

  // Maximality: no outside vertex may be adjacent to the entire other side.
  for (uint32_t u = 0; u < g.left_count(); ++u) {
    if (std::binary_search(left.begin(), left.end(), u)) continue;
    bool covers = true;
    for (uint32_t v : right) covers = covers && g.adjacent(Side::Left, u, v);
    if (covers) return false;
  }
  for (uint32_t v = 0; v < g.right_count(); ++v) {
    if (std::binary_search(right.begin(), right.end(), v)) continue;
    bool covers = true;
    for (uint32_t u : left) covers = covers && g.adjacent(Side::Right, v, u);
    if (covers) return false;
  }
  return true;
}

}  // namespace mbe
