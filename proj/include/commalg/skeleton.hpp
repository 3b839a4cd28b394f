#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "commalg/field.hpp"
#include "commalg/graph.hpp"
#include "commalg/poset.hpp"
#include "commalg/quiver.hpp"

namespace commalg {

// The basic algebra Morita equivalent to KQ/C: one element per path connected
// component, ordered by reachability between chosen representatives.
struct Skeleton {
  Quiver quiver;
  ComponentPartition components;
  std::vector<VertexIndex> representatives;  // component index -> vertex
  Poset poset;
};

// Representatives are the smallest-index vertex of each component.
Skeleton skeleton(const Quiver& q);
// Explicit representatives, one per component in component order; throws
// ValidationError if a representative lies outside its component.
Skeleton skeleton(const Quiver& q, std::vector<VertexIndex> representatives);

// Incidence algebra of a poset. Basis p^x_y for x <= y (diagonal pairs
// included), enumerated row-major; p^x_y p^w_z = p^x_z if y == w, else 0.
class IncidenceAlgebra {
 public:
  explicit IncidenceAlgebra(Poset poset, Field field = Field::rationals());

  const Poset& poset() const noexcept { return poset_; }
  const Field& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<CoverEdge>& basis() const noexcept { return basis_; }
  std::optional<std::size_t> index_of(std::size_t x, std::size_t y) const;
  // Product of basis elements; nullopt when it is zero.
  std::optional<std::size_t> product(std::size_t a, std::size_t b) const;

 private:
  Poset poset_;
  Field field_;
  std::vector<CoverEdge> basis_;
  std::vector<std::size_t> index_;  // x * m + y -> basis index or npos
};

IncidenceAlgebra incidence_algebra(const Poset& p,
                                   const Field& field = Field::rationals());

// Explicit isomorphism Incid(P) -> Sk(Q): p^{x_i}_{x_j} goes to the matrix
// unit e_{w_i w_j} of the commuting algebra, restricted to representatives.
struct IsoWitness {
  struct Entry {
    CoverEdge pair;
    VertexIndex source;
    VertexIndex target;
  };
  std::vector<Entry> mapping;  // indexed like the incidence basis
  std::size_t products_checked = 0;
};

// Builds the witness and checks every product of basis pairs; throws
// InvariantViolation on any mismatch.
IsoWitness skeleton_iso_incidence(const Skeleton& s,
                                  const Field& field = Field::rationals());

// dim Hom(rho(w_i) KQ/C, rho(w_j) KQ/C), computed in the commuting algebra;
// 1 iff there is a path w_j -> w_i.
int end_hom_dims(const Skeleton& s, std::size_t i, std::size_t j);

// True iff the commuting algebra of the Hasse quiver of P has pattern leq(P)
// and the skeleton of that quiver is P again.
bool idempotence_check(const Poset& p);

}  // namespace commalg
