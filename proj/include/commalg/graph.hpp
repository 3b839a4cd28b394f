#pragma once

#include <cstddef>
#include <vector>

#include "commalg/bool_matrix.hpp"
#include "commalg/quiver.hpp"

namespace commalg {

// Partition of the vertices into path connected components (strongly
// connected components). Components are ordered by their first vertex in
// declaration order; vertices within a component ascend.
struct ComponentPartition {
  std::vector<std::vector<VertexIndex>> components;
  std::vector<std::size_t> membership;  // vertex -> component index

  std::size_t count() const noexcept { return components.size(); }
  std::vector<std::size_t> sizes() const;
};

// bits(i, j) is true iff a path order[i] -> order[j] exists.
struct ReachabilityPattern {
  std::vector<VertexIndex> order;
  BoolMatrix bits;

  // Same pattern listed in a new vertex order (a permutation of `order`'s
  // vertices, given as original vertex indices).
  ReachabilityPattern reordered(const std::vector<VertexIndex>& new_order) const;
};

// relation(i, j) is true iff vertices of component i reach those of j.
struct CondensationOrder {
  BoolMatrix relation;

  std::size_t size() const noexcept { return relation.size(); }
};

ComponentPartition path_components(const Quiver& q);

// Reflexive-transitive closure of the arrow relation, in declaration order.
ReachabilityPattern reachability(const Quiver& q);

// Vertex order listing each component contiguously, components in a
// deterministic topological order (Kahn, smallest component index first).
std::vector<VertexIndex> consistent_ordering(const Quiver& q,
                                             const ComponentPartition& p);

// Component order induced by `r` (which must be in declaration order, as
// produced by reachability()). Throws InvariantViolation if two
// representatives of the same pair of components disagree.
CondensationOrder condensation(const ComponentPartition& p,
                               const ReachabilityPattern& r);

// Number of elements in a longest strictly increasing chain; at least 1 for
// a nonempty order.
std::size_t longest_chain(const BoolMatrix& order);
inline std::size_t longest_chain(const CondensationOrder& c) {
  return longest_chain(c.relation);
}

}  // namespace commalg
