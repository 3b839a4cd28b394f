#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "commalg/bool_matrix.hpp"
#include "commalg/quiver.hpp"

namespace commalg {

// Finite partial order on {0, ..., m-1}.
class Poset {
 public:
  // Throws ValidationError unless `leq` is reflexive, antisymmetric and
  // transitive.
  explicit Poset(BoolMatrix leq);

  std::size_t size() const noexcept { return leq_.size(); }
  bool leq(std::size_t x, std::size_t y) const { return leq_(x, y); }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq_(x, y); }
  const BoolMatrix& matrix() const noexcept { return leq_; }

  // Display name of element i: "x1", "x2", ...
  static std::string element_name(std::size_t i) {
    return "x" + std::to_string(i + 1);
  }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  BoolMatrix leq_;
};

using CoverEdge = std::pair<std::size_t, std::size_t>;

// Cover relation: (x, y) with x < y and nothing strictly between.
struct HasseDiagram {
  std::size_t size = 0;
  std::vector<CoverEdge> covers;  // sorted lexicographically
};

HasseDiagram hasse(const Poset& p);

// Reflexive-transitive closure of a set of edges on m elements.
BoolMatrix transitive_closure(std::size_t m, const std::vector<CoverEdge>& edges);

std::size_t longest_chain(const Poset& p);

bool is_antichain(const Poset& p);

// Quiver Q(P): vertices x1..xm, one arrow per cover edge.
Quiver hasse_quiver(const Poset& p);

}  // namespace commalg
