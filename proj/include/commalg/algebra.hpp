#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commalg/bool_matrix.hpp"
#include "commalg/field.hpp"
#include "commalg/graph.hpp"
#include "commalg/quiver.hpp"

namespace commalg {

// Multiplicative coefficient function: f(path) is the product of its arrow
// weights, f(vertex) = 1.
class CoefficientFunction {
 public:
  // f == 1 on every path.
  static CoefficientFunction uniform(const Quiver& q);
  // Weights as declared in the quiver (default 1).
  static CoefficientFunction from_quiver(const Quiver& q);
  // Throws ValidationError on a zero weight or a size mismatch.
  CoefficientFunction(const Quiver& q, std::vector<Scalar> weights);

  const std::vector<Scalar>& weights() const noexcept { return weights_; }
  Scalar operator()(const Path& p) const;

 private:
  std::vector<Scalar> weights_;
};

namespace detail {
struct AlgebraState;
}

// The commuting algebra KQ/C as a pattern-supported subalgebra of the n x n
// matrices. Rows and columns follow a consistent vertex ordering, so the
// pattern is in block form with one block per path connected component.
class CommutingAlgebra {
 public:
  const Quiver& quiver() const;
  const Field& field() const;
  const ComponentPartition& components() const;
  // Consistent ordering: position -> vertex.
  const std::vector<VertexIndex>& order() const;
  std::size_t position(VertexIndex v) const;
  // Reachability in the consistent ordering.
  const ReachabilityPattern& pattern() const;
  // Component indices in block order.
  const std::vector<std::size_t>& block_components() const;
  std::vector<std::size_t> block_sizes() const;
  // m x m pattern of blocks in block order.
  const BoolMatrix& block_pattern() const;
  std::size_t size() const;

  bool same_algebra(const CommutingAlgebra& other) const {
    return state_ == other.state_;
  }

 private:
  friend class AlgebraElement;
  friend CommutingAlgebra commuting_algebra(const Quiver&, const Field&);
  explicit CommutingAlgebra(std::shared_ptr<const detail::AlgebraState> s)
      : state_(std::move(s)) {}

  std::shared_ptr<const detail::AlgebraState> state_;
};

// Sparse element of a commuting algebra; keys are (row, column) positions in
// the algebra's consistent ordering. Zero entries are never stored.
class AlgebraElement {
 public:
  using Entries = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

  // Throws ValidationError if an entry lies outside the pattern.
  AlgebraElement(const CommutingAlgebra& algebra, Entries entries);

  CommutingAlgebra algebra() const { return CommutingAlgebra(owner_); }
  const Entries& entries() const noexcept { return entries_; }
  Scalar entry(std::size_t row, std::size_t col) const;
  bool is_zero() const noexcept { return entries_.empty(); }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.owner_ == b.owner_ && a.entries_ == b.entries_;
  }

 private:
  std::shared_ptr<const detail::AlgebraState> owner_;
  Entries entries_;
};

CommutingAlgebra commuting_algebra(const Quiver& q,
                                   const Field& field = Field::rationals());

// dim_K v(KQ/C)w, which is 0 or 1.
int hom_dimension(const CommutingAlgebra& a, VertexIndex v, VertexIndex w);
int hom_dimension(const CommutingAlgebra& a, std::string_view v,
                  std::string_view w);

std::size_t total_dimension(const CommutingAlgebra& a);

// Matrix unit e_vw; throws ValidationError if v(KQ/C)w = 0.
AlgebraElement basis_element(const CommutingAlgebra& a, VertexIndex v,
                             VertexIndex w);

AlgebraElement zero_element(const CommutingAlgebra& a);
// Sum of the diagonal matrix units.
AlgebraElement identity_element(const CommutingAlgebra& a);

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const Scalar& c, const AlgebraElement& x);
// Throws ValidationError if x or y belongs to another algebra.
AlgebraElement multiply(const CommutingAlgebra& a, const AlgebraElement& x,
                        const AlgebraElement& y);

// f(p) f(q) / f(pq): the structure constant of the normalized basis. Always 1
// for multiplicative f. Throws ValidationError if p and q do not compose.
Scalar quasi_structure_constant(const CoefficientFunction& f, const Path& p,
                                const Path& q);

// Normalized basis vector b_vw = f(p) [p] for a chosen path p: v -> w.
struct NormalizedBasisEntry {
  VertexIndex source;
  VertexIndex target;
  Path representative;
  Scalar scale;
};

// KQ/C^f presented through the isomorphism with KQ/C that sends b_vw to the
// matrix unit e_vw.
struct QuasiCommutingAlgebra {
  CommutingAlgebra algebra;
  CoefficientFunction coefficients;
  std::vector<NormalizedBasisEntry> basis;

  // Image of the class of path p: f(p)^{-1} e_{start,end}.
  AlgebraElement class_of(const Path& p) const;
};

QuasiCommutingAlgebra quasi_commuting_algebra(
    const Quiver& q, const CoefficientFunction& f,
    const Field& field = Field::rationals());

// Block-form shape: diagonal blocks full, each off-diagonal block constant,
// and no pair of distinct blocks nonzero in both directions.
bool has_block_form(const CommutingAlgebra& a);

// Rows of space-separated "K"/"0" entries in the consistent ordering.
std::string pretty_block_display(const CommutingAlgebra& a);

}  // namespace commalg
