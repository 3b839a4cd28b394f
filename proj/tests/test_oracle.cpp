#include <doctest.h>

#include "commalg/algebra.hpp"
#include "commalg/errors.hpp"
#include "commalg/graph.hpp"
#include "commalg/oracle.hpp"
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

}  // namespace

TEST_CASE("oracle on the two component example") {
  const Quiver q = ex71();
  const auto f = GeneralCoefficientTable::uniform(q);
  const CommutingAlgebra a = commuting_algebra(q);
  for (VertexIndex v = 0; v < 6; ++v) {
    for (VertexIndex w = 0; w < 6; ++w) {
      const auto r = truncated_hom_dimension(q, f, v, w, 8);
      CHECK(r.dimension == hom_dimension(a, v, w));
      CHECK(r.certified);
      CHECK(r.path_count == oracle::walk_count(q, v, w, 8));
      CHECK(r.path_count - r.relation_rank == static_cast<std::size_t>(r.dimension));
    }
  }
  const auto back = truncated_hom_dimension(q, f, 4, 0, 8);
  CHECK(back.dimension == 0);
  CHECK(back.path_count == 0);
  CHECK(pattern_equivalence(q, 8));
  CHECK(pattern_equivalence(ex73(), 8));
}

TEST_CASE("non-multiplicative table kills a Hom space") {
  // a, b: v -> w and c: w -> x with f(ac) = 1 and f(bc) = 2.
  const Quiver q = testgen::make_quiver(3, {{0, 1}, {0, 1}, {1, 2}});
  GeneralCoefficientTable f = GeneralCoefficientTable::uniform(q);
  f.set(Path::from_arrows(q, 0, {0, 2}), Scalar(1));
  f.set(Path::from_arrows(q, 0, {1, 2}), Scalar(2));
  CHECK_FALSE(f.is_multiplicative());
  CHECK_FALSE(f.is_uniform());
  const auto r = truncated_hom_dimension(q, f, 0, 2, 2);
  CHECK(r.path_count == 2);
  CHECK(r.relation_rank == 2);
  CHECK(r.dimension == 0);
  CHECK(r.certified);

  // The same pair with f == 1 survives.
  CHECK(truncated_hom_dimension(q, GeneralCoefficientTable::uniform(q), 0, 2, 2).dimension == 1);

  // Nonvanishing under a general table is not certified.
  GeneralCoefficientTable g = GeneralCoefficientTable::uniform(q);
  g.set(Path::arrow(q, 0), Scalar(5));
  const auto kept = truncated_hom_dimension(q, g, 0, 1, 2);
  CHECK(kept.dimension == 1);
  CHECK_FALSE(kept.certified);

  CHECK_THROWS_AS(f.set(Path::arrow(q, 0), Scalar(0)), ValidationError);
  CHECK_THROWS_AS(f.set(Path::trivial(4), Scalar(1)), ValidationError);
}

TEST_CASE("vertex nondegeneracy") {
  const Quiver loop = testgen::make_quiver(1, {{0, 0}});
  CHECK(vertex_nondegeneracy(loop, GeneralCoefficientTable::uniform(loop), 3));
  const Quiver tri = testgen::cycle(3);
  CHECK(vertex_nondegeneracy(tri, GeneralCoefficientTable::uniform(tri), 6));
  const Quiver bare = testgen::make_quiver(4, {});
  CHECK(pattern_equivalence(bare, 1));
  CHECK(vertex_nondegeneracy(bare, GeneralCoefficientTable::uniform(bare), 0));
}

TEST_CASE("path cap") {
  // Two loops give 2^(L+1) - 1 closed paths of length <= L.
  const Quiver loops = testgen::make_quiver(1, {{0, 0}, {0, 0}});
  const auto f = GeneralCoefficientTable::uniform(loops);
  CHECK_THROWS_AS(truncated_hom_dimension(loops, f, 0, 0, 14), TruncationOverflow);
  const auto r = truncated_hom_dimension(loops, f, 0, 0, 10, Field::rationals(), 2047);
  CHECK(r.path_count == 2047);
  CHECK(r.dimension == 1);
  CHECK_THROWS_AS(truncated_hom_dimension(loops, f, 0, 0, 11, Field::rationals(), 2047),
                  TruncationOverflow);
}

TEST_CASE("prime field oracle") {
  const Quiver q = ex73();
  CHECK(pattern_equivalence(q, 8, Field::prime(2)));
  const GeneralCoefficientTable weighted(q, std::vector<Scalar>(q.arrow_count(), Scalar(3)));
  CHECK_THROWS_AS(truncated_hom_dimension(q, weighted, 0, 5, 4, Field::prime(3)),
                  ValidationError);
}

TEST_CASE("weighted example keeps its dimension") {
  testgen::Sampler s(71);
  const Quiver q = ex71();
  std::vector<Scalar> w;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) w.push_back(s.weight());
  const GeneralCoefficientTable f(q, w);
  std::size_t total = 0;
  for (const auto& r : truncated_dimension_table(q, f, 8)) {
    total += static_cast<std::size_t>(r.dimension);
    CHECK(r.certified);
  }
  CHECK(total == 28);
}

TEST_CASE("property: oracle agrees with reachability") {
  testgen::Sampler s(555);
  for (int i = 0; i < 80; ++i) {
    const Quiver q = s.quiver(6, 9);
    const std::size_t n = q.vertex_count();
    const auto ref = oracle::closure(q);
    const auto f = GeneralCoefficientTable::uniform(q);
    for (const auto& r : truncated_dimension_table(q, f, n + 2)) {
      CHECK(r.dimension == (ref[r.source][r.target] ? 1 : 0));
      CHECK(r.dimension <= 1);
    }
    CHECK(vertex_nondegeneracy(q, f, n + 2));
  }
}

TEST_CASE("property: dimension is stable in the truncation") {
  testgen::Sampler s(556);
  for (int i = 0; i < 60; ++i) {
    const Quiver q = s.quiver(5, 7);
    const auto f = GeneralCoefficientTable::uniform(q);
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
      for (VertexIndex w = 0; w < q.vertex_count(); ++w) {
        const auto sp = shortest_path(q, v, w);
        if (!sp) continue;
        const std::size_t L = sp->length();
        CHECK(truncated_hom_dimension(q, f, v, w, L).dimension ==
              truncated_hom_dimension(q, f, v, w, L + 2).dimension);
      }
    }
  }
}

TEST_CASE("property: random tables never exceed dimension one") {
  testgen::Sampler s(557);
  for (int i = 0; i < 60; ++i) {
    const Quiver q = s.quiver(4, 6);
    GeneralCoefficientTable f = GeneralCoefficientTable::uniform(q);
    for (VertexIndex v = 0; v < q.vertex_count(); ++v)
      for (VertexIndex w = 0; w < q.vertex_count(); ++w)
        for (const auto& p : enumerate_paths(q, v, w, 3, 5000))
          if (s.coin(0.4)) f.set(p, s.weight());
    for (const auto& r : truncated_dimension_table(q, f, 4)) {
      CHECK(r.dimension <= 1);
      if (r.dimension == 0 && r.path_count > 0) CHECK(r.certified);
    }
  }
}
