#include <doctest.h>

#include "commalg/errors.hpp"
#include "commalg/field.hpp"
#include "commalg/parser.hpp"
#include "commalg/quiver.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace commalg;

namespace {

const char* kEx71 = R"(
quiver ex71 {
  vertices: v1, v2, v3, v4, v5, v6;
  a: v1 -> v2;  b: v1 -> v5;  c: v2 -> v3;  d: v3 -> v4;
  e: v3 -> v5;  f: v4 -> v1;  g: v5 -> v6;  h: v6 -> v5;
}
)";

std::vector<std::string> rendered(const Quiver& q, const std::vector<Path>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(q));
  return out;
}

}  // namespace

TEST_CASE("field descriptors and arithmetic") {
  CHECK(Field::parse("rat").is_rational());
  CHECK(Field::parse("fp:7").characteristic() == 7);
  CHECK(Field::parse("fp:7").descriptor() == "fp:7");
  CHECK_THROWS_AS(Field::parse("fp:8"), ValidationError);
  CHECK_THROWS_AS(Field::parse("fp:"), ValidationError);
  CHECK_THROWS_AS(Field::parse("real"), ValidationError);
  CHECK_THROWS_AS(Field::prime(1), ValidationError);

  const Field f7 = Field::prime(7);
  CHECK(f7.add(Scalar(5), Scalar(4)) == 2);
  CHECK(f7.neg(Scalar(3)) == 4);
  CHECK(f7.mul(f7.inv(Scalar(3)), Scalar(3)) == 1);
  CHECK(f7.normalize(Scalar(1, 2)) == 4);
  CHECK_THROWS_AS(f7.normalize(Scalar(1, 7)), ValidationError);

  const Field q = Field::rationals();
  CHECK(q.div(Scalar(3), Scalar(4)) == Scalar(3, 4));
  CHECK_THROWS_AS(q.inv(Scalar(0)), InvariantViolation);
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("-3/4") == Scalar(-3, 4));
  CHECK(parse_rational("6/4") == Scalar(3, 2));
  CHECK(parse_rational("12") == 12);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ValidationError);
  CHECK_THROWS_AS(parse_rational("x"), ValidationError);
  CHECK(format_scalar(Scalar(-3, 4)) == "-3/4");
  CHECK(is_prime(2));
  CHECK(is_prime(101));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("parse minimal quiver") {
  const Quiver q = parse_quiver("quiver Q { vertices: v, w; a: v -> w; }");
  CHECK(q.name() == "Q");
  CHECK(q.vertex_count() == 2);
  CHECK(q.arrow_count() == 1);
  CHECK(q.arrow(0).source == 0);
  CHECK(q.arrow(0).target == 1);
  CHECK(q.weight(0) == 1);
}

TEST_CASE("parse example with two components") {
  const Quiver q = parse_quiver(kEx71);
  CHECK(q.vertex_count() == 6);
  CHECK(q.arrow_count() == 8);
  CHECK(q.vertex_index("v5") == 4);
  CHECK_THROWS_AS(q.vertex_index("v9"), ValidationError);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_quiver("quiver Q { vertices: v;\n  a: v -> u; }");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 11);
    CHECK(std::string(e.what()).find("undeclared vertex 'u'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_quiver("quiver Q { vertices: v, v; }"), ParseError);
  CHECK_THROWS_AS(parse_quiver("quiver Q { vertices: v; a: v -> v; a: v -> v; }"),
                  ParseError);
  CHECK_THROWS_AS(parse_quiver("quiver Q { vertices: v; a: v -> v [weight = 0]; }"),
                  ParseError);
  CHECK_THROWS_AS(parse_quiver("quiver Q { vertices: v; a: v -> v [weight = 0/3]; }"),
                  ParseError);
  CHECK_THROWS_AS(parse_quiver("quiver Q { vertices: v; } extra"), ParseError);
  CHECK_THROWS_AS(parse_quiver("quiver Q { vertices: ; }"), ParseError);
  CHECK_THROWS_AS(parse_quiver("quiver Q { a: v -> v; }"), ParseError);
  CHECK_THROWS_AS(parse_quiver("quiver Q { vertices: v; a: v => v; }"), ParseError);
  CHECK_THROWS_AS(parse_quiver(""), ParseError);
}

TEST_CASE("comments, weights and loops") {
  const Quiver q = parse_quiver(R"(# leading comment
quiver W {   # trailing
  vertices: x, y;
  l: x -> x [weight = -2/3];
  m: x -> y [ weight = 5 ];
  n: x -> y;
})");
  CHECK(q.weight(0) == Scalar(-2, 3));
  CHECK(q.weight(1) == 5);
  CHECK_FALSE(q.arrow(2).weight.has_value());
  CHECK(q.outgoing(0) == std::vector<ArrowIndex>{0, 1, 2});
  CHECK(q.incoming(1) == std::vector<ArrowIndex>{1, 2});
}

TEST_CASE("canonical DSL round trip") {
  testgen::Sampler s(11);
  for (int i = 0; i < 60; ++i) {
    Quiver q = s.quiver(8, 15);
    if (i % 3 == 0 && q.arrow_count() > 0) {
      std::vector<Arrow> arrows = q.arrows();
      for (auto& a : arrows) {
        if (s.coin()) a.weight = s.weight();
      }
      q = Quiver(q.name(), q.vertices(), arrows);
    }
    CHECK(parse_quiver(to_dsl(q)) == q);
  }
}

TEST_CASE("quiver constructor validation") {
  CHECK_THROWS_AS(Quiver("e", {}, {}), ValidationError);
  CHECK_THROWS_AS(Quiver("d", {"v", "v"}, {}), ValidationError);
  CHECK_THROWS_AS(Quiver("r", {"v"}, {{"a", "a", 0, 1, std::nullopt}}), ValidationError);
  CHECK_THROWS_AS(Quiver("z", {"v"}, {{"a", "a", 0, 0, Scalar(0)}}), ValidationError);
  CHECK_THROWS_AS(Quiver("t", {"v"}, {{"a", "a", 0, 0, std::nullopt},
                                     {"a", "a", 0, 0, std::nullopt}}),
                  ValidationError);
}

TEST_CASE("compose and parallel paths") {
  const Quiver q = parse_quiver(
      "quiver c { vertices: v1, v2, v3, v4, v5, v6;"
      " a: v1 -> v2; b: v2 -> v3; c: v3 -> v4; d: v4 -> v5; e: v5 -> v6; f: v6 -> v1; }");
  const Path v = Path::trivial(0);
  const Path a = Path::arrow(q, 0);
  CHECK(compose(v, a) == a);
  CHECK(compose(a, Path::trivial(1)) == a);

  const Path abc = Path::from_ids(q, {"a", "b", "c"});
  const Path def = Path::from_ids(q, {"d", "e", "f"});
  const Path loop = compose(abc, def);
  CHECK(loop.length() == 6);
  CHECK(loop.start() == 0);
  CHECK(loop.end() == 0);
  CHECK(loop.to_string(q) == "a.b.c.d.e.f");
  CHECK_THROWS_AS(compose(def, def), ValidationError);
  CHECK_THROWS_AS(Path::from_ids(q, {"a", "c"}), ValidationError);

  CHECK(is_parallel(loop, Path::trivial(0)));
  CHECK(is_parallel(abc, abc));
  CHECK_FALSE(is_parallel(abc, def));
  CHECK(loop.subpath(q, 1, 3) == Path::from_ids(q, {"b", "c"}));
  CHECK(loop.subpath(q, 2, 2) == Path::trivial(2));

  const Quiver k = testgen::kronecker(3);
  CHECK(is_parallel(Path::arrow(k, 0), Path::arrow(k, 2)));
  CHECK_FALSE(Path::arrow(k, 0) == Path::arrow(k, 2));
}

TEST_CASE("compose is associative on random walks") {
  testgen::Sampler s(5);
  for (int i = 0; i < 100; ++i) {
    const Quiver q = s.quiver(5, 10);
    if (q.arrow_count() == 0) continue;
    // Three consecutive random walks.
    std::vector<Path> pieces;
    VertexIndex at = s.uniform(0, q.vertex_count() - 1);
    for (int k = 0; k < 3; ++k) {
      std::vector<ArrowIndex> arrows;
      for (std::size_t step = s.uniform(0, 3); step > 0 && !q.outgoing(at).empty(); --step) {
        const auto& out = q.outgoing(at);
        const ArrowIndex a = out[s.uniform(0, out.size() - 1)];
        arrows.push_back(a);
        at = q.arrow(a).target;
      }
      const VertexIndex start = pieces.empty() ? (arrows.empty() ? at : q.arrow(arrows[0]).source)
                                               : pieces.back().end();
      pieces.push_back(Path::from_arrows(q, start, arrows));
    }
    const Path left = compose(compose(pieces[0], pieces[1]), pieces[2]);
    const Path right = compose(pieces[0], compose(pieces[1], pieces[2]));
    CHECK(left == right);
    CHECK(left.length() == pieces[0].length() + pieces[1].length() + pieces[2].length());
  }
}

TEST_CASE("enumerate paths") {
  const Quiver point = testgen::make_quiver(1, {});
  const auto only = enumerate_paths(point, 0, 0, 5);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == Path::trivial(0));

  const Quiver tri = parse_quiver(
      "quiver t { vertices: v1, v2, v3; a: v1 -> v2; b: v2 -> v3; c: v3 -> v1; }");
  CHECK(rendered(tri, enumerate_paths(tri, 0, 0, 3)) ==
        std::vector<std::string>{"v1", "a.b.c"});
  CHECK(enumerate_paths(tri, 0, 0, 2).size() == 1);
  CHECK(enumerate_paths(tri, 0, 2, 1).empty());

  const Quiver k = testgen::kronecker(4);
  CHECK(rendered(k, enumerate_paths(k, 0, 1, 1)) ==
        std::vector<std::string>{"a1", "a2", "a3", "a4"});
  CHECK(enumerate_paths(k, 1, 0, 9).empty());

  const Quiver loops = testgen::make_quiver(1, {{0, 0}, {0, 0}});
  CHECK(enumerate_paths(loops, 0, 0, 3).size() == 1 + 2 + 4 + 8);
  CHECK_THROWS_AS(enumerate_paths(loops, 0, 0, 3, 14), TruncationOverflow);
  CHECK(enumerate_paths(loops, 0, 0, 3, 15).size() == 15);
}

TEST_CASE("enumeration is length-lexicographic and matches walk counts") {
  testgen::Sampler s(2024);
  for (int i = 0; i < 120; ++i) {
    const Quiver q = s.quiver(6, 9);
    const std::size_t L = s.uniform(0, 6);
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
      for (VertexIndex w = 0; w < q.vertex_count(); ++w) {
        const auto paths = enumerate_paths(q, v, w, L);
        CHECK(mpz_class(paths.size()) == oracle::walk_count(q, v, w, L));
        for (std::size_t k = 0; k + 1 < paths.size(); ++k) CHECK(paths[k] < paths[k + 1]);
        for (const auto& p : paths) {
          CHECK(p.start() == v);
          CHECK(p.end() == w);
        }
        const auto sp = shortest_path(q, v, w);
        CHECK(sp.has_value() == oracle::closure(q)[v][w]);
        if (sp && !paths.empty()) CHECK(sp->length() == paths.front().length());
      }
    }
  }
}

TEST_CASE("dot export") {
  const Quiver point = testgen::make_quiver(1, {});
  CHECK(to_dot(point) == "digraph \"q\" {\n  \"v1\";\n}\n");

  const Quiver q = parse_quiver(kEx71);
  const std::string dot = to_dot(q);
  std::size_t edges = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) {
    ++edges;
  }
  CHECK(edges == 8);
  CHECK(dot.find("\"v1\" -> \"v2\" [label=\"a\"];") != std::string::npos);
  CHECK(dot.find("\"v1\";\n  \"v2\";") != std::string::npos);
}
