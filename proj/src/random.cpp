#include "commalg/random.hpp"

#include <random>
#include <string>

#include "commalg/errors.hpp"

namespace commalg {

Quiver random_quiver(std::size_t vertices, std::size_t arrows,
                     std::uint64_t seed) {
  if (vertices == 0) throw ValidationError("a quiver needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vertices; ++i) names.push_back("v" + std::to_string(i + 1));
  std::vector<Arrow> list;
  for (std::size_t k = 0; k < arrows; ++k) {
    const std::string id = "a" + std::to_string(k + 1);
    const VertexIndex s = pick(rng);
    const VertexIndex t = pick(rng);
    list.push_back(Arrow{id, id, s, t, std::nullopt});
  }
  return Quiver("random", std::move(names), std::move(list));
}

}  // namespace commalg
