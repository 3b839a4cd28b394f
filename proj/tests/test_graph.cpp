#include <doctest.h>

#include <numeric>

#include "commalg/errors.hpp"
#include "commalg/graph.hpp"
#include "commalg/parser.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace commalg;

namespace {

Quiver ex71() {
  return parse_quiver(R"(quiver ex71 { vertices: v1, v2, v3, v4, v5, v6;
    a: v1 -> v2; b: v1 -> v5; c: v2 -> v3; d: v3 -> v4;
    e: v3 -> v5; f: v4 -> v1; g: v5 -> v6; h: v6 -> v5; })");
}

Quiver ex73() {
  return parse_quiver(R"(quiver ex73 { vertices: v1, v2, v3, v4, v5, v6;
    a: v1 -> v2; g: v2 -> v3; b: v2 -> v5; c: v5 -> v6;
    f: v4 -> v1; e: v3 -> v4; d: v3 -> v6; })");
}

using Groups = std::vector<std::vector<VertexIndex>>;

}  // namespace

TEST_CASE("path components of the examples") {
  const auto p = path_components(ex71());
  CHECK(p.components == Groups{{0, 1, 2, 3}, {4, 5}});
  CHECK(p.membership == std::vector<std::size_t>{0, 0, 0, 0, 1, 1});
  CHECK(p.sizes() == std::vector<std::size_t>{4, 2});

  CHECK(path_components(ex73()).components == Groups{{0, 1, 2, 3}, {4}, {5}});
  CHECK(path_components(testgen::cycle(7)).count() == 1);
  CHECK(path_components(testgen::make_quiver(4, {})).count() == 4);
}

TEST_CASE("reachability") {
  const auto none = reachability(testgen::make_quiver(3, {}));
  CHECK(none.bits == BoolMatrix::identity(3));

  const auto cyc = reachability(testgen::cycle(5));
  CHECK(cyc.bits.count() == 25);

  const Quiver q = ex73();
  const auto parts = path_components(q);
  const auto order = consistent_ordering(q, parts);
  CHECK(order == std::vector<VertexIndex>{0, 1, 2, 3, 4, 5});
  CHECK(reachability(q).reordered(order).bits.rows() ==
        std::vector<std::string>{"111111", "111111", "111111", "111111", "000011",
                                 "000001"});
}

TEST_CASE("consistent ordering moves later components after earlier ones") {
  // v1 <- v2 <- v3 with v2 <-> v4: components {v1}, {v2, v4}, {v3}.
  const Quiver q = testgen::make_quiver(4, {{1, 0}, {2, 1}, {1, 3}, {3, 1}});
  const auto parts = path_components(q);
  CHECK(parts.components == Groups{{0}, {1, 3}, {2}});
  CHECK(consistent_ordering(q, parts) == std::vector<VertexIndex>{2, 1, 3, 0});

  CHECK(consistent_ordering(ex71(), path_components(ex71())) ==
        std::vector<VertexIndex>{0, 1, 2, 3, 4, 5});
  const Quiver c = testgen::cycle(4);
  CHECK(consistent_ordering(c, path_components(c)) ==
        std::vector<VertexIndex>{0, 1, 2, 3});
}

TEST_CASE("condensation") {
  const Quiver q = ex71();
  const auto cond = condensation(path_components(q), reachability(q));
  CHECK(cond.relation.rows() == std::vector<std::string>{"11", "01"});
  const Quiver c = testgen::cycle(6);
  CHECK(condensation(path_components(c), reachability(c)).size() == 1);
  const Quiver e = testgen::make_quiver(3, {});
  CHECK(condensation(path_components(e), reachability(e)).relation ==
        BoolMatrix::identity(3));

  // A pattern that is not closed under the components is rejected.
  ReachabilityPattern broken = reachability(q);
  broken.bits.set(5, 0);
  CHECK_THROWS_AS(condensation(path_components(q), broken), InvariantViolation);
}

TEST_CASE("longest chain") {
  CHECK(longest_chain(BoolMatrix::identity(1)) == 1);
  CHECK(longest_chain(BoolMatrix::identity(4)) == 1);
  CHECK(longest_chain(testgen::chain(3).matrix()) == 3);
  CHECK(longest_chain(testgen::diamond().matrix()) == 3);
  const Quiver q = ex73();
  CHECK(longest_chain(condensation(path_components(q), reachability(q))) == 3);
  BoolMatrix cyclic = BoolMatrix::identity(2);
  cyclic.set(0, 1);
  cyclic.set(1, 0);
  CHECK_THROWS_AS(longest_chain(cyclic), ValidationError);
}

TEST_CASE("graph invariants on random quivers") {
  testgen::Sampler s(7001);
  for (int i = 0; i < 500; ++i) {
    const Quiver q = s.quiver(10, 25);
    const std::size_t n = q.vertex_count();
    const auto parts = path_components(q);
    const auto reach = reachability(q);
    const auto ref = oracle::closure(q);
    const auto labels = oracle::component_labels(q);

    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) REQUIRE(reach.bits(u, v) == ref[u][v]);
    CHECK(reach.bits.is_reflexive());
    CHECK(reach.bits.is_transitive());

    // Partition: disjoint, covering, same classes as mutual reachability.
    std::size_t total = 0;
    for (std::size_t c = 0; c < parts.count(); ++c) {
      total += parts.components[c].size();
      for (VertexIndex v : parts.components[c]) {
        CHECK(parts.membership[v] == c);
        CHECK(labels[v] == parts.components[c].front());
      }
    }
    CHECK(total == n);
    const auto sizes = parts.sizes();
    CHECK(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) == n);

    const auto cond = condensation(parts, reach);
    CHECK(cond.relation.is_reflexive());
    CHECK(cond.relation.is_transitive());
    CHECK(cond.relation.is_antisymmetric());
    for (std::size_t a = 0; a < parts.count(); ++a)
      for (std::size_t b = 0; b < parts.count(); ++b)
        if (cond.relation(a, b))
          for (VertexIndex u : parts.components[a])
            for (VertexIndex w : parts.components[b]) CHECK(ref[u][w]);

    // Components contiguous and forward-only after the consistent ordering.
    const auto order = consistent_ordering(q, parts);
    std::vector<VertexIndex> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<VertexIndex> all(n);
    std::iota(all.begin(), all.end(), 0);
    CHECK(sorted == all);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const std::size_t a = parts.membership[order[k]];
      const std::size_t b = parts.membership[order[k + 1]];
      if (a == b) CHECK(order[k] < order[k + 1]);
    }
    const auto pattern = reach.reordered(order);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < r; ++c)
        if (parts.membership[order[r]] != parts.membership[order[c]])
          CHECK_FALSE(pattern.bits(r, c));

    if (parts.count() <= 12) {
      oracle::Bits leq(parts.count(), std::vector<bool>(parts.count()));
      for (std::size_t a = 0; a < parts.count(); ++a)
        for (std::size_t b = 0; b < parts.count(); ++b) leq[a][b] = cond.relation(a, b);
      CHECK(longest_chain(cond) == oracle::longest_chain_bruteforce(leq));
    }
  }
}
