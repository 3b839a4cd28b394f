#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "commalg/field.hpp"
#include "commalg/quiver.hpp"

namespace commalg {

// Finite presentation of an arbitrary coefficient function f: paths -> K*.
// Listed paths take their tabulated value; every other path takes the
// product of its arrow weights (1 on vertices).
class GeneralCoefficientTable {
 public:
  // f == 1.
  static GeneralCoefficientTable uniform(const Quiver& q);
  // Multiplicative extension of the given arrow weights.
  GeneralCoefficientTable(const Quiver& q, std::vector<Scalar> arrow_weights);

  // Throws ValidationError on a zero value or a path of another quiver.
  void set(const Path& p, Scalar value);

  Scalar operator()(const Path& p) const;

  // No tabulated overrides: f is the multiplicative extension of its weights.
  bool is_multiplicative() const noexcept { return entries_.empty(); }
  bool is_uniform() const;

 private:
  std::size_t vertex_count_;
  std::size_t arrow_count_;
  std::vector<Scalar> weights_;
  std::map<std::pair<VertexIndex, std::vector<ArrowIndex>>, Scalar> entries_;
};

struct TruncatedQuotientReport {
  VertexIndex source = 0;
  VertexIndex target = 0;
  std::size_t truncation = 0;
  std::size_t path_count = 0;
  std::size_t relation_rank = 0;
  std::size_t relation_count = 0;
  int dimension = 0;
  // True when the dimension is known to equal dim v(KQ/C^f)w, not just its
  // truncation.
  bool certified = false;
};

inline constexpr std::size_t kDefaultPathCap = 20000;

// dim of span{paths v -> w of length <= L} modulo the span of all
// r (f(p) p - f(q) q) s with p || q and both terms of length <= L.
// Throws TruncationOverflow beyond `path_cap` paths and InvariantViolation
// if the quotient dimension exceeds 1.
TruncatedQuotientReport truncated_hom_dimension(
    const Quiver& q, const GeneralCoefficientTable& f, VertexIndex v,
    VertexIndex w, std::size_t truncation,
    const Field& field = Field::rationals(),
    std::size_t path_cap = kDefaultPathCap);

// Every vertex idempotent survives: truncated dim v(KQ/C^f)v == 1 for all v.
bool vertex_nondegeneracy(const Quiver& q, const GeneralCoefficientTable& f,
                          std::size_t truncation,
                          const Field& field = Field::rationals());

// With f == 1, the oracle dimension matches path existence at every pair.
bool pattern_equivalence(const Quiver& q, std::size_t truncation,
                         const Field& field = Field::rationals());

// Reports for all n^2 pairs in row-major order.
std::vector<TruncatedQuotientReport> truncated_dimension_table(
    const Quiver& q, const GeneralCoefficientTable& f, std::size_t truncation,
    const Field& field = Field::rationals());

}  // namespace commalg
