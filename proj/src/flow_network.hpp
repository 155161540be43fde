#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace hlmenger::detail {

// Residual network with integer capacities, augmented along BFS shortest
// paths. Every augmentation on a unit-capacity graph adds exactly one unit, and
// the flows we need are bounded by a vertex degree, so Edmonds-Karp is plenty.
class FlowNetwork {
 public:
  using Node = std::uint32_t;
  using Capacity = std::int64_t;

  explicit FlowNetwork(std::size_t nodes) : head_(nodes, kNone) {}

  // Returns the arc id of the forward arc; its reverse arc is id ^ 1.
  std::size_t add_arc(Node from, Node to, Capacity cap, Capacity reverse_cap = 0) {
    std::size_t id = arcs_.size();
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = id;
    arcs_.push_back({from, reverse_cap, head_[to]});
    head_[to] = id + 1;
    return id;
  }

  // Undirected unit edge: one arc pair with capacity 1 each way.
  std::size_t add_undirected(Node a, Node b, Capacity cap = 1) { return add_arc(a, b, cap, cap); }

  // Pushes flow from s to t until no augmenting path remains or the flow
  // reaches `limit`.
  Capacity max_flow(Node s, Node t, Capacity limit = std::numeric_limits<Capacity>::max()) {
    Capacity total = 0;
    std::vector<std::size_t> via(head_.size());
    std::vector<Node> queue;
    queue.reserve(head_.size());
    while (total < limit) {
      std::fill(via.begin(), via.end(), kNone);
      queue.clear();
      queue.push_back(s);
      via[s] = kRoot;
      for (std::size_t qi = 0; qi < queue.size() && via[t] == kNone; ++qi) {
        Node x = queue[qi];
        for (std::size_t a = head_[x]; a != kNone; a = arcs_[a].next) {
          if (arcs_[a].cap > 0 && via[arcs_[a].to] == kNone) {
            via[arcs_[a].to] = a;
            queue.push_back(arcs_[a].to);
          }
        }
      }
      if (via[t] == kNone) break;
      Capacity push = limit - total;
      for (Node x = t; x != s; x = arcs_[via[x] ^ 1].to) push = std::min(push, arcs_[via[x]].cap);
      for (Node x = t; x != s; x = arcs_[via[x] ^ 1].to) {
        arcs_[via[x]].cap -= push;
        arcs_[via[x] ^ 1].cap += push;
      }
      total += push;
    }
    return total;
  }

  // Nodes reachable from s in the residual network.
  std::vector<char> source_side(Node s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<Node> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Node x = stack.back();
      stack.pop_back();
      for (std::size_t a = head_[x]; a != kNone; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kRoot = kNone - 1;

  struct Arc {
    Node to;
    Capacity cap;
    std::size_t next;
  };

  std::vector<std::size_t> head_;
  std::vector<Arc> arcs_;
};

}  // namespace hlmenger::detail
