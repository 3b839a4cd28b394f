#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commalg/field.hpp"

namespace commalg {

using VertexIndex = std::size_t;
using ArrowIndex = std::size_t;

struct Arrow {
  std::string id;
  std::string label;
  VertexIndex source = 0;
  VertexIndex target = 0;
  // Absent means the default weight 1.
  std::optional<Scalar> weight;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A finite quiver: declared vertices and labelled arrows. Loops and parallel
// arrows are allowed. Indices follow declaration order.
class Quiver {
 public:
  // Validates distinct identifiers, endpoints in range and nonzero weights;
  // throws ValidationError otherwise.
  Quiver(std::string name, std::vector<std::string> vertices,
         std::vector<Arrow> arrows);

  const std::string& name() const noexcept { return name_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<ArrowIndex> find_arrow(std::string_view id) const;
  // Throws ValidationError for unknown identifiers.
  VertexIndex vertex_index(std::string_view id) const;

  Scalar weight(ArrowIndex a) const;

  // Arrows leaving v, ascending by arrow index.
  const std::vector<ArrowIndex>& outgoing(VertexIndex v) const {
    return outgoing_.at(v);
  }
  const std::vector<ArrowIndex>& incoming(VertexIndex v) const {
    return incoming_.at(v);
  }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.name_ == b.name_ && a.vertices_ == b.vertices_ &&
           a.arrows_ == b.arrows_;
  }

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowIndex>> outgoing_;
  std::vector<std::vector<ArrowIndex>> incoming_;
};

// A finite path. An empty arrow sequence is the length-0 path (the vertex
// idempotent) at `start`.
class Path {
 public:
  static Path trivial(VertexIndex v) { return Path(v, v, {}); }
  static Path arrow(const Quiver& q, ArrowIndex a);
  // Throws ValidationError unless consecutive arrows compose.
  static Path from_arrows(const Quiver& q, VertexIndex start,
                          std::vector<ArrowIndex> arrows);
  // Resolves arrow ids; the start vertex is the first arrow's source.
  static Path from_ids(const Quiver& q, const std::vector<std::string>& ids);

  VertexIndex start() const noexcept { return start_; }
  VertexIndex end() const noexcept { return end_; }
  std::size_t length() const noexcept { return arrows_.size(); }
  const std::vector<ArrowIndex>& arrows() const noexcept { return arrows_; }

  // Subpath of the arrows in [first, last).
  Path subpath(const Quiver& q, std::size_t first, std::size_t last) const;

  std::string to_string(const Quiver& q) const;

  friend bool operator==(const Path&, const Path&) = default;
  // Length-lexicographic on (length, start, arrows).
  friend bool operator<(const Path& a, const Path& b);
  friend Path compose(const Path& p, const Path& q);

 private:
  Path(VertexIndex start, VertexIndex end, std::vector<ArrowIndex> arrows)
      : start_(start), end_(end), arrows_(std::move(arrows)) {}

  VertexIndex start_;
  VertexIndex end_;
  std::vector<ArrowIndex> arrows_;
};

// Concatenation p then q. Throws ValidationError if end(p) != start(q).
Path compose(const Path& p, const Path& q);

bool is_parallel(const Path& p, const Path& q);

// All paths v -> w of length <= max_length in length-lexicographic order.
// Throws TruncationOverflow once more than `cap` paths would be produced.
std::vector<Path> enumerate_paths(
    const Quiver& q, VertexIndex v, VertexIndex w, std::size_t max_length,
    std::size_t cap = std::numeric_limits<std::size_t>::max());

// A shortest path v -> w found by breadth-first search over arrows in index
// order, or nullopt if w is unreachable.
std::optional<Path> shortest_path(const Quiver& q, VertexIndex v, VertexIndex w);

std::string to_dot(const Quiver& q);

// Canonical DSL text; parse_quiver(to_dsl(q)) == q.
std::string to_dsl(const Quiver& q);

}  // namespace commalg
