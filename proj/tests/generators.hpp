#pragma once

// Seeded generators shared by the unit, property and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "commalg/bool_matrix.hpp"
#include "commalg/poset.hpp"
#include "commalg/quiver.hpp"
#include "commalg/random.hpp"

namespace testgen {

using commalg::Arrow;
using commalg::BoolMatrix;
using commalg::Poset;
using commalg::Quiver;

inline std::vector<std::string> vertex_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i + 1));
  return out;
}

// Quiver on v1..vn from (source, target) index pairs; arrows a1, a2, ...
inline Quiver make_quiver(std::size_t n,
                          const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                          std::string name = "q") {
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string id = "a" + std::to_string(k + 1);
    arrows.push_back({id, id, edges[k].first, edges[k].second, std::nullopt});
  }
  return Quiver(std::move(name), vertex_names(n), std::move(arrows));
}

inline Quiver cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return make_quiver(n, edges, "cycle");
}

inline Quiver kronecker(std::size_t arrows) {
  return make_quiver(2, std::vector<std::pair<std::size_t, std::size_t>>(arrows, {0, 1}),
                     "kronecker");
}

// Linear quiver v1 -> v2 -> ... -> vn.
inline Quiver line(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_quiver(n, edges, "line");
}

struct Sampler {
  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

  // Random quiver with 1 <= n <= max_n vertices and at most max_arrows arrows.
  Quiver quiver(std::size_t max_n, std::size_t max_arrows) {
    const std::size_t n = uniform(1, max_n);
    const std::size_t k = uniform(0, max_arrows);
    return commalg::random_quiver(n, k, rng());
  }

  // Orientation of a uniformly grown random tree on n vertices.
  Quiver tree(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 1; v < n; ++v) {
      const std::size_t parent = uniform(0, v - 1);
      edges.push_back(coin() ? std::pair{parent, v} : std::pair{v, parent});
    }
    return make_quiver(n, edges, "tree");
  }

  // Random partial order on m elements: closure of random forward edges
  // under a random relabelling.
  Poset poset(std::size_t m, double density = 0.3) {
    std::vector<std::size_t> label(m);
    for (std::size_t i = 0; i < m; ++i) label[i] = i;
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<commalg::CoverEdge> edges;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (coin(density)) edges.emplace_back(label[i], label[j]);
      }
    }
    return Poset(commalg::transitive_closure(m, edges));
  }

  // Nonzero rational with small numerator and denominator.
  commalg::Scalar weight() {
    std::int64_t num = static_cast<std::int64_t>(uniform(1, 9));
    if (coin()) num = -num;
    const auto den = static_cast<std::int64_t>(uniform(1, 7));
    commalg::Scalar w(num, den);
    w.canonicalize();
    return w;
  }

  std::mt19937_64 rng;
};

inline Poset chain(std::size_t m) {
  std::vector<commalg::CoverEdge> edges;
  for (std::size_t i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  return Poset(commalg::transitive_closure(m, edges));
}

// 0 < 1, 0 < 2, 1 < 3, 2 < 3.
inline Poset diamond() {
  return Poset(commalg::transitive_closure(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

inline Poset antichain(std::size_t m) { return Poset(BoolMatrix::identity(m)); }

}  // namespace testgen
