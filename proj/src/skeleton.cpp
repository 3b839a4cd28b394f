#include "commalg/skeleton.hpp"

#include <limits>

#include "commalg/algebra.hpp"
#include "commalg/errors.hpp"

namespace commalg {

namespace {

constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

}  // namespace

Skeleton skeleton(const Quiver& q) {
  ComponentPartition parts = path_components(q);
  std::vector<VertexIndex> reps;
  for (const auto& c : parts.components) reps.push_back(c.front());
  return skeleton(q, std::move(reps));
}

Skeleton skeleton(const Quiver& q, std::vector<VertexIndex> representatives) {
  ComponentPartition parts = path_components(q);
  const std::size_t m = parts.count();
  if (representatives.size() != m) {
    throw ValidationError("need exactly one representative per component");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (representatives[i] >= q.vertex_count() ||
        parts.membership[representatives[i]] != i) {
      throw ValidationError("representative of component " +
                            std::to_string(i + 1) + " lies outside it");
    }
  }
  const BoolMatrix reach = reachability(q).bits;
  BoolMatrix leq(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      leq.set(i, j, reach(representatives[i], representatives[j]));
    }
  }
  return Skeleton{q, std::move(parts), std::move(representatives),
                  Poset(std::move(leq))};
}

IncidenceAlgebra::IncidenceAlgebra(Poset poset, Field field)
    : poset_(std::move(poset)), field_(field) {
  const std::size_t m = poset_.size();
  index_.assign(m * m, kNoIndex);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (poset_.leq(x, y)) {
        index_[x * m + y] = basis_.size();
        basis_.emplace_back(x, y);
      }
    }
  }
}

std::optional<std::size_t> IncidenceAlgebra::index_of(std::size_t x,
                                                      std::size_t y) const {
  const std::size_t m = poset_.size();
  if (x >= m || y >= m || index_[x * m + y] == kNoIndex) return std::nullopt;
  return index_[x * m + y];
}

std::optional<std::size_t> IncidenceAlgebra::product(std::size_t a,
                                                     std::size_t b) const {
  const auto [x, y] = basis_.at(a);
  const auto [w, z] = basis_.at(b);
  if (y != w) return std::nullopt;
  auto c = index_of(x, z);
  if (!c) throw InvariantViolation("incidence product leaves the order");
  return c;
}

IncidenceAlgebra incidence_algebra(const Poset& p, const Field& field) {
  return IncidenceAlgebra(p, field);
}

IsoWitness skeleton_iso_incidence(const Skeleton& s, const Field& field) {
  const CommutingAlgebra a = commuting_algebra(s.quiver, field);
  const IncidenceAlgebra incid(s.poset, field);
  const auto& reps = s.representatives;
  const std::size_t m = s.poset.size();

  // The corner algebra spanned by e_{w_i w_j} has exactly the incidence
  // pairs as its nonzero entries.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (hom_dimension(a, reps[i], reps[j]) != (s.poset.leq(i, j) ? 1 : 0)) {
        throw InvariantViolation("skeleton order disagrees with the corner "
                                 "algebra at (" + std::to_string(i + 1) +
                                 ", " + std::to_string(j + 1) + ")");
      }
    }
  }

  IsoWitness witness;
  std::vector<AlgebraElement> images;
  for (const auto& [x, y] : incid.basis()) {
    witness.mapping.push_back({{x, y}, reps[x], reps[y]});
    images.push_back(basis_element(a, reps[x], reps[y]));
  }
  const AlgebraElement zero = zero_element(a);
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < images.size(); ++j) {
      const AlgebraElement lhs = multiply(a, images[i], images[j]);
      const auto k = incid.product(i, j);
      if (!(lhs == (k ? images[*k] : zero))) {
        throw InvariantViolation("skeleton and incidence products differ");
      }
      ++witness.products_checked;
    }
  }
  return witness;
}

int end_hom_dims(const Skeleton& s, std::size_t i, std::size_t j) {
  const std::size_t m = s.poset.size();
  if (i >= m || j >= m) throw ValidationError("skeleton index out of range");
  // Hom(e A, f A) = f A e for idempotents e, f.
  const CommutingAlgebra a = commuting_algebra(s.quiver);
  return hom_dimension(a, s.representatives[j], s.representatives[i]);
}

bool idempotence_check(const Poset& p) {
  const Quiver q = hasse_quiver(p);
  const CommutingAlgebra a = commuting_algebra(q);
  std::vector<VertexIndex> declaration(q.vertex_count());
  for (std::size_t i = 0; i < declaration.size(); ++i) declaration[i] = i;
  if (!(a.pattern().reordered(declaration).bits == p.matrix())) return false;
  return skeleton(q).poset == p;
}

}  // namespace commalg
