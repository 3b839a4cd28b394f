#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "commalg/field.hpp"
#include "commalg/linalg.hpp"
#include "commalg/poset.hpp"

namespace commalg {

// A module over the incidence algebra of a poset, presented as a
// representation: a vector space per element and a linear map along each
// cover edge (covariant in the order). Construction checks that composites
// along different chains of covers agree.
class PosetRepresentation {
 public:
  // cover_maps[(x, y)] is a dims[y] x dims[x] matrix for each cover x < y.
  // Throws ValidationError on missing or misshapen maps, InvariantViolation
  // if functoriality fails.
  PosetRepresentation(Poset poset, Field field, std::vector<std::size_t> dims,
                      std::map<CoverEdge, Matrix> cover_maps);

  const Poset& poset() const noexcept { return poset_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<CoverEdge>& covers() const noexcept { return covers_; }
  std::size_t dim(std::size_t x) const { return dims_.at(x); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t total_dimension() const;
  bool is_zero() const { return total_dimension() == 0; }

  const Matrix& cover_map(std::size_t x, std::size_t y) const;
  // Structure map M(x) -> M(y) for x <= y (identity when x == y).
  const Matrix& map(std::size_t x, std::size_t y) const;

 private:
  Poset poset_;
  Field field_;
  std::vector<CoverEdge> covers_;
  std::vector<std::size_t> dims_;
  std::map<CoverEdge, Matrix> cover_maps_;
  std::map<CoverEdge, Matrix> composites_;
};

// Indecomposable projective P_x: K at every y >= x, identity maps.
PosetRepresentation projective(const Poset& p, std::size_t x,
                               const Field& field = Field::rationals());

// Simple S_x: K at x, zero elsewhere.
PosetRepresentation simple(const Poset& p, std::size_t x,
                           const Field& field = Field::rationals());

// Direct sum of projectives P_{label(g)} indexed by generators g. Its space
// at z has one coordinate per generator g with label(g) <= z, in generator
// order.
PosetRepresentation projective_sum(const Poset& p,
                                   const std::vector<std::size_t>& labels,
                                   const Field& field);

// Coordinates of the space at z of the projective sum with these labels.
std::vector<std::size_t> generators_below(const Poset& p,
                                          const std::vector<std::size_t>& labels,
                                          std::size_t z);

struct ProjectiveCover {
  // Element of P at which each generator lives; one generator per basis
  // vector of top(M) = M / rad M.
  std::vector<std::size_t> generators;
  // Image of each generator, a column vector in M(label).
  std::vector<Matrix> generator_images;
  PosetRepresentation cover;
  // Per element z: the surjection P(z) -> M(z).
  std::vector<Matrix> surjection;
  PosetRepresentation kernel;
  // Per element z: columns are a basis of ker(P(z) -> M(z)) inside P(z).
  std::vector<Matrix> kernel_inclusion;
};

// Projective cover via M / rad M, rad M(y) being the span of images of the
// structure maps from elements below y. M must be nonzero.
ProjectiveCover projective_cover(const PosetRepresentation& m);

// Minimal projective resolution
//   ... -> P_2 -> P_1 -> P_0 -> M -> 0.
// differentials[k] (k >= 1) maps P_k to P_{k-1}: entry (a, b) is the
// coefficient of generator a of P_{k-1} in the image of generator b of P_k,
// nonzero only when labels[k-1][a] <= labels[k][b].
struct Resolution {
  PosetRepresentation module;
  std::vector<std::vector<std::size_t>> labels;
  std::vector<Matrix> differentials;  // differentials[0] is unused (empty)
  std::vector<Matrix> augmentation;   // image in M of each generator of P_0

  std::size_t length() const { return labels.empty() ? 0 : labels.size() - 1; }
  // P_k(z) -> P_{k-1}(z) for k >= 1, or P_0(z) -> M(z) for k == 0.
  Matrix differential_at(std::size_t k, std::size_t z) const;
};

// Iterates projective covers of kernels. Throws InvariantViolation if more
// than `max_terms` projective terms would be needed.
Resolution minimal_resolution(const PosetRepresentation& m,
                              std::size_t max_terms);

// Exactness at every element by rank-nullity, surjectivity of the
// augmentation, vanishing composites, and minimality of each differential.
bool verify_resolution(const Resolution& r);

std::size_t projective_dimension(const Poset& p, std::size_t x,
                                 const Field& field = Field::rationals());

std::size_t global_dimension(const Poset& p,
                             const Field& field = Field::rationals());

}  // namespace commalg
