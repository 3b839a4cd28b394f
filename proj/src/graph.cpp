#include "commalg/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>

#include "commalg/errors.hpp"

namespace commalg {

std::vector<std::size_t> ComponentPartition::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.size());
  return out;
}

ReachabilityPattern ReachabilityPattern::reordered(
    const std::vector<VertexIndex>& new_order) const {
  const std::size_t n = order.size();
  if (new_order.size() != n) {
    throw ValidationError("reordering has the wrong number of vertices");
  }
  // position of each original vertex in the current order
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) pos.at(order[i]) = i;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (new_order[i] >= n || pos[new_order[i]] == n) {
      throw ValidationError("reordering is not a permutation");
    }
    perm[i] = pos[new_order[i]];
  }
  std::vector<char> used(n, 0);
  for (std::size_t p : perm) {
    if (used[p]++) throw ValidationError("reordering is not a permutation");
  }
  return ReachabilityPattern{new_order, bits.permuted(perm)};
}

ReachabilityPattern reachability(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  ReachabilityPattern r;
  r.order.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.order[i] = i;
  r.bits = BoolMatrix(n);
  // One breadth-first search per source vertex.
  for (VertexIndex s = 0; s < n; ++s) {
    std::deque<VertexIndex> queue{s};
    r.bits.set(s, s);
    while (!queue.empty()) {
      const VertexIndex u = queue.front();
      queue.pop_front();
      for (ArrowIndex a : q.outgoing(u)) {
        const VertexIndex t = q.arrow(a).target;
        if (!r.bits(s, t)) {
          r.bits.set(s, t);
          queue.push_back(t);
        }
      }
    }
  }
  return r;
}

ComponentPartition path_components(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  const BoolMatrix reach = reachability(q).bits;
  ComponentPartition p;
  p.membership.assign(n, n);
  for (VertexIndex v = 0; v < n; ++v) {
    if (p.membership[v] != n) continue;
    const std::size_t id = p.components.size();
    std::vector<VertexIndex> members;
    for (VertexIndex w = v; w < n; ++w) {
      if (reach(v, w) && reach(w, v)) {
        members.push_back(w);
        p.membership[w] = id;
      }
    }
    p.components.push_back(std::move(members));
  }
  return p;
}

CondensationOrder condensation(const ComponentPartition& p,
                               const ReachabilityPattern& r) {
  const std::size_t m = p.count();
  const std::size_t n = r.order.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos.at(r.order[i]) = i;

  CondensationOrder c{BoolMatrix(m)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const bool first =
          r.bits(pos[p.components[i].front()], pos[p.components[j].front()]);
      for (VertexIndex u : p.components[i]) {
        for (VertexIndex w : p.components[j]) {
          if (r.bits(pos[u], pos[w]) != first) {
            throw InvariantViolation(
                "component reachability depends on the representative");
          }
        }
      }
      c.relation.set(i, j, first);
    }
  }
  return c;
}

std::vector<VertexIndex> consistent_ordering(const Quiver& q,
                                             const ComponentPartition& p) {
  const CondensationOrder c = condensation(p, reachability(q));
  const std::size_t m = p.count();

  std::vector<std::size_t> indegree(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && c.relation(i, j)) ++indegree[j];
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>,
                      std::greater<std::size_t>>
      ready;
  for (std::size_t i = 0; i < m; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<VertexIndex> order;
  order.reserve(q.vertex_count());
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    for (VertexIndex v : p.components[i]) order.push_back(v);
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && c.relation(i, j) && --indegree[j] == 0) ready.push(j);
    }
  }
  if (order.size() != q.vertex_count()) {
    throw InvariantViolation("component relation contains a cycle");
  }
  return order;
}

std::size_t longest_chain(const BoolMatrix& order) {
  const std::size_t m = order.size();
  if (m == 0) return 0;
  if (!order.is_antisymmetric() || !order.is_transitive()) {
    throw ValidationError("longest_chain needs a partial order");
  }
  // Strict part of a partial order is acyclic; memoised depth-first search.
  std::vector<std::size_t> best(m, 0);
  std::function<std::size_t(std::size_t)> chain_from = [&](std::size_t i) {
    if (best[i]) return best[i];
    std::size_t longest = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i && order(i, j)) longest = std::max(longest, 1 + chain_from(j));
    }
    return best[i] = longest;
  };
  std::size_t result = 0;
  for (std::size_t i = 0; i < m; ++i) result = std::max(result, chain_from(i));
  return result;
}

}  // namespace commalg
