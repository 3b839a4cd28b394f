#include "commalg/poset.hpp"

#include "commalg/errors.hpp"
#include "commalg/graph.hpp"

namespace commalg {

Poset::Poset(BoolMatrix leq) : leq_(std::move(leq)) {
  if (!leq_.is_reflexive() || !leq_.is_antisymmetric() ||
      !leq_.is_transitive()) {
    throw ValidationError("relation is not a partial order");
  }
}

HasseDiagram hasse(const Poset& p) {
  HasseDiagram h{p.size(), {}};
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.less(x, y)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < p.size() && cover; ++z) {
        if (p.less(x, z) && p.less(z, y)) cover = false;
      }
      if (cover) h.covers.emplace_back(x, y);
    }
  }
  return h;
}

BoolMatrix transitive_closure(std::size_t m,
                              const std::vector<CoverEdge>& edges) {
  BoolMatrix c = BoolMatrix::identity(m);
  for (const auto& [x, y] : edges) {
    if (x >= m || y >= m) throw ValidationError("edge endpoint out of range");
    c.set(x, y);
  }
  // Warshall
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!c(i, k)) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (c(k, j)) c.set(i, j);
      }
    }
  }
  return c;
}

std::size_t longest_chain(const Poset& p) { return longest_chain(p.matrix()); }

bool is_antichain(const Poset& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.less(x, y)) return false;
    }
  }
  return true;
}

Quiver hasse_quiver(const Poset& p) {
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < p.size(); ++i) {
    vertices.push_back(Poset::element_name(i));
  }
  std::vector<Arrow> arrows;
  for (const auto& [x, y] : hasse(p).covers) {
    const std::string id = "c" + std::to_string(x + 1) + "_" + std::to_string(y + 1);
    arrows.push_back(Arrow{id, id, x, y, std::nullopt});
  }
  return Quiver("hasse", std::move(vertices), std::move(arrows));
}

}  // namespace commalg
