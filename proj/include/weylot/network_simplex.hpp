#pragma once

// Primal network simplex for balanced uncapacitated transportation problems with
// integer data, on strongly feasible spanning trees.

#include <cstdint>
#include <limits>
#include <vector>

#include "weylot/error.hpp"

namespace weylot {

enum class PivotRule { Bland, BlockSearch };

struct TransportationSolution {
  struct Flow {
    std::size_t source;
    std::size_t target;
    std::int64_t amount;
  };
  std::vector<Flow> flows;                // positive flows, sorted by (source, target)
  std::vector<std::int64_t> source_potential;  // pi on sources
  std::vector<std::int64_t> target_potential;  // pi on targets; cost(i,j) + pi_i - pi_j >= 0
  std::int64_t cost = 0;
  std::size_t pivots = 0;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::ArithmeticOverflow, "transport cost overflow");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::ArithmeticOverflow, "transport cost overflow");
  return r;
}

class NetworkSimplex {
 public:
  NetworkSimplex(const std::vector<std::int64_t>& supply, const std::vector<std::int64_t>& demand,
                 std::vector<std::int64_t> cost, PivotRule rule)
      : n1_(supply.size()), n2_(demand.size()), cost_(std::move(cost)), rule_(rule) {
    const std::size_t nodes = n1_ + n2_;
    root_ = nodes;
    real_arcs_ = n1_ * n2_;
    std::int64_t max_cost = 0;
    for (auto c : cost_) max_cost = std::max(max_cost, c < 0 ? -c : c);
    art_cost_ = checked_mul(checked_add(max_cost, 1), static_cast<std::int64_t>(nodes + 1));
    checked_mul(art_cost_, 4 * static_cast<std::int64_t>(nodes + 1));

    flow_.assign(real_arcs_ + nodes, 0);
    parent_.assign(nodes + 1, root_);
    pred_.assign(nodes + 1, 0);
    up_.assign(nodes + 1, false);
    pi_.assign(nodes + 1, 0);
    depth_.assign(nodes + 1, 1);
    depth_[root_] = 0;
    for (std::size_t i = 0; i < n1_; ++i) {
      pred_[i] = real_arcs_ + i;
      up_[i] = true;  // artificial arc i -> root
      flow_[pred_[i]] = supply[i];
      pi_[i] = -art_cost_;
    }
    for (std::size_t j = 0; j < n2_; ++j) {
      const std::size_t v = n1_ + j;
      pred_[v] = real_arcs_ + v;
      up_[v] = false;  // artificial arc root -> v
      flow_[pred_[v]] = demand[j];
      pi_[v] = art_cost_;
    }
    block_ = 1;
    while (block_ * block_ < real_arcs_) ++block_;
    block_ = std::max<std::size_t>(block_, 10);
  }

  TransportationSolution run() {
    TransportationSolution out;
    while (true) {
      auto in = rule_ == PivotRule::Bland ? find_bland() : find_block();
      if (in == kNone) break;
      pivot(in);
      ++out.pivots;
    }
    for (std::size_t v = 0; v < n1_ + n2_; ++v)
      if (pred_[v] >= real_arcs_ && flow_[pred_[v]] != 0)
        throw Error(ErrorCode::InternalError, "transportation problem left artificial flow");
    for (std::size_t a = 0; a < real_arcs_; ++a)
      if (flow_[a] > 0) {
        out.flows.push_back({a / n2_, a % n2_, flow_[a]});
        out.cost = checked_add(out.cost, checked_mul(flow_[a], cost_[a]));
      }
    for (std::size_t i = 0; i < n1_; ++i) out.source_potential.push_back(pi_[i]);
    for (std::size_t j = 0; j < n2_; ++j) out.target_potential.push_back(pi_[n1_ + j]);
    return out;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::int64_t reduced(std::size_t a) const {
    return cost_[a] + pi_[a / n2_] - pi_[n1_ + a % n2_];
  }

  std::size_t find_bland() const {
    for (std::size_t a = 0; a < real_arcs_; ++a)
      if (flow_[a] == 0 && reduced(a) < 0) return a;
    return kNone;
  }

  std::size_t find_block() {
    std::size_t best = kNone;
    std::int64_t best_rc = 0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < real_arcs_; ++k) {
      const std::size_t a = next_;
      next_ = next_ + 1 == real_arcs_ ? 0 : next_ + 1;
      const std::int64_t rc = reduced(a);
      if (rc < best_rc) {
        best_rc = rc;
        best = a;
      }
      if (++count == block_) {
        if (best != kNone) return best;
        count = 0;
      }
    }
    return best;
  }

  std::int64_t arc_cost(std::size_t a) const { return a < real_arcs_ ? cost_[a] : art_cost_; }

  void pivot(std::size_t in) {
    const std::size_t first = in / n2_;
    const std::size_t second = n1_ + in % n2_;
    std::size_t u = first, v = second;
    while (u != v) {
      if (depth_[u] >= depth_[v]) u = parent_[u];
      else v = parent_[v];
    }
    const std::size_t join = u;

    // Strongly feasible leaving arc: last blocking arc on the cycle oriented from join.
    std::int64_t delta = std::numeric_limits<std::int64_t>::max();
    std::size_t out = kNone;
    int side = 0;
    for (std::size_t w = first; w != join; w = parent_[w])
      if (up_[w] && flow_[pred_[w]] < delta) {
        delta = flow_[pred_[w]];
        out = w;
        side = 1;
      }
    for (std::size_t w = second; w != join; w = parent_[w])
      if (!up_[w] && flow_[pred_[w]] <= delta) {
        delta = flow_[pred_[w]];
        out = w;
        side = 2;
      }
    if (out == kNone) throw Error(ErrorCode::InternalError, "unbounded transportation problem");

    if (delta != 0) {
      flow_[in] += delta;
      for (std::size_t w = first; w != join; w = parent_[w]) flow_[pred_[w]] += up_[w] ? -delta : delta;
      for (std::size_t w = second; w != join; w = parent_[w]) flow_[pred_[w]] += up_[w] ? delta : -delta;
    }

    // Re-hang the subtree cut off below `out` from the entering endpoint on its side.
    std::size_t w = side == 1 ? first : second;
    std::size_t new_parent = side == 1 ? second : first;
    std::size_t new_pred = in;
    bool new_up = side == 1;
    while (true) {
      const std::size_t old_parent = parent_[w];
      const std::size_t old_pred = pred_[w];
      const bool old_up = up_[w];
      parent_[w] = new_parent;
      pred_[w] = new_pred;
      up_[w] = new_up;
      if (w == out) break;
      new_parent = w;
      new_pred = old_pred;
      new_up = !old_up;
      w = old_parent;
    }
    refresh(side == 1 ? first : second);
  }

  /// Recomputes depth and potentials in the subtree hanging at `top`.
  void refresh(std::size_t top) {
    const std::size_t nodes = n1_ + n2_ + 1;
    if (children_start_.size() != nodes + 1) children_start_.assign(nodes + 1, 0);
    std::fill(children_start_.begin(), children_start_.end(), 0);
    for (std::size_t x = 0; x < nodes; ++x)
      if (x != root_) ++children_start_[parent_[x] + 1];
    for (std::size_t x = 0; x < nodes; ++x) children_start_[x + 1] += children_start_[x];
    children_.resize(nodes);
    auto fill = children_start_;
    for (std::size_t x = 0; x < nodes; ++x)
      if (x != root_) children_[fill[parent_[x]]++] = x;

    stack_.clear();
    stack_.push_back(top);
    while (!stack_.empty()) {
      const std::size_t x = stack_.back();
      stack_.pop_back();
      const std::size_t p = parent_[x];
      depth_[x] = depth_[p] + 1;
      const std::int64_t c = arc_cost(pred_[x]);
      // Tree arcs have zero reduced cost c + pi_tail - pi_head.
      pi_[x] = up_[x] ? pi_[p] - c : pi_[p] + c;
      for (std::size_t k = children_start_[x]; k < children_start_[x + 1]; ++k) stack_.push_back(children_[k]);
    }
  }

  std::size_t n1_, n2_, root_, real_arcs_;
  std::vector<std::int64_t> cost_;
  PivotRule rule_;
  std::int64_t art_cost_ = 0;
  std::vector<std::int64_t> flow_;
  std::vector<std::size_t> parent_, pred_, depth_;
  std::vector<bool> up_;
  std::vector<std::int64_t> pi_;
  std::size_t block_ = 0, next_ = 0;
  std::vector<std::size_t> children_start_, children_, stack_;
};

}  // namespace detail

/// Minimum-cost transportation plan. `cost` is row-major (source, target); supplies and
/// demands must be positive with equal totals.
inline TransportationSolution solve_transportation(const std::vector<std::int64_t>& supply,
                                                   const std::vector<std::int64_t>& demand,
                                                   std::vector<std::int64_t> cost,
                                                   PivotRule rule = PivotRule::BlockSearch) {
  if (supply.empty() || demand.empty() || cost.size() != supply.size() * demand.size())
    throw Error(ErrorCode::InvalidArgument, "malformed transportation problem");
  std::int64_t s = 0, t = 0;
  for (auto x : supply) {
    if (x <= 0) throw Error(ErrorCode::InvalidArgument, "supplies must be positive");
    s = detail::checked_add(s, x);
  }
  for (auto x : demand) {
    if (x <= 0) throw Error(ErrorCode::InvalidArgument, "demands must be positive");
    t = detail::checked_add(t, x);
  }
  if (s != t) throw Error(ErrorCode::UnbalancedMasses, "supply and demand totals differ");
  return detail::NetworkSimplex(supply, demand, std::move(cost), rule).run();
}

}  // namespace weylot
