#include "commalg/quiver.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "commalg/errors.hpp"

namespace commalg {

Quiver::Quiver(std::string name, std::vector<std::string> vertices,
               std::vector<Arrow> arrows)
    : name_(std::move(name)),
      vertices_(std::move(vertices)),
      arrows_(std::move(arrows)) {
  if (vertices_.empty()) {
    throw ValidationError("quiver '" + name_ + "' has no vertices");
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) {
      throw ValidationError("duplicate vertex identifier '" + v + "'");
    }
  }
  seen.clear();
  for (const auto& a : arrows_) {
    if (!seen.insert(a.id).second) {
      throw ValidationError("duplicate arrow identifier '" + a.id + "'");
    }
    if (a.source >= vertices_.size() || a.target >= vertices_.size()) {
      throw ValidationError("arrow '" + a.id + "' has an undeclared endpoint");
    }
    if (a.weight && Field::is_zero(*a.weight)) {
      throw ValidationError("arrow '" + a.id + "' has zero weight");
    }
  }
  outgoing_.resize(vertices_.size());
  incoming_.resize(vertices_.size());
  for (ArrowIndex i = 0; i < arrows_.size(); ++i) {
    outgoing_[arrows_[i].source].push_back(i);
    incoming_[arrows_[i].target].push_back(i);
  }
}

std::optional<VertexIndex> Quiver::find_vertex(std::string_view id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

std::optional<ArrowIndex> Quiver::find_arrow(std::string_view id) const {
  for (ArrowIndex i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].id == id) return i;
  }
  return std::nullopt;
}

VertexIndex Quiver::vertex_index(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw ValidationError("unknown vertex '" + std::string(id) + "'");
}

Scalar Quiver::weight(ArrowIndex a) const {
  const auto& w = arrows_.at(a).weight;
  return w ? *w : Scalar(1);
}

Path Path::arrow(const Quiver& q, ArrowIndex a) {
  const Arrow& arr = q.arrow(a);
  return Path(arr.source, arr.target, {a});
}

Path Path::from_arrows(const Quiver& q, VertexIndex start,
                       std::vector<ArrowIndex> arrows) {
  if (start >= q.vertex_count()) {
    throw ValidationError("path starts at an unknown vertex");
  }
  VertexIndex at = start;
  for (ArrowIndex a : arrows) {
    if (a >= q.arrow_count()) throw ValidationError("unknown arrow in path");
    const Arrow& arr = q.arrow(a);
    if (arr.source != at) {
      throw ValidationError("arrow '" + arr.id + "' does not start at '" +
                            q.vertex_name(at) + "'");
    }
    at = arr.target;
  }
  return Path(start, at, std::move(arrows));
}

Path Path::from_ids(const Quiver& q, const std::vector<std::string>& ids) {
  if (ids.empty()) throw ValidationError("empty arrow list");
  std::vector<ArrowIndex> arrows;
  arrows.reserve(ids.size());
  for (const auto& id : ids) {
    auto a = q.find_arrow(id);
    if (!a) throw ValidationError("unknown arrow '" + id + "'");
    arrows.push_back(*a);
  }
  const VertexIndex start = q.arrow(arrows.front()).source;
  return from_arrows(q, start, std::move(arrows));
}

Path Path::subpath(const Quiver& q, std::size_t first, std::size_t last) const {
  if (first > last || last > arrows_.size()) {
    throw ValidationError("subpath range out of bounds");
  }
  const VertexIndex s = first == 0 ? start_ : q.arrow(arrows_[first - 1]).target;
  return Path(s, last == first ? s : q.arrow(arrows_[last - 1]).target,
              std::vector<ArrowIndex>(arrows_.begin() + first,
                                      arrows_.begin() + last));
}

std::string Path::to_string(const Quiver& q) const {
  if (arrows_.empty()) return q.vertex_name(start_);
  std::string out;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i) out += '.';
    out += q.arrow(arrows_[i]).id;
  }
  return out;
}

bool operator<(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.start_ != b.start_) return a.start_ < b.start_;
  return a.arrows_ < b.arrows_;
}

Path compose(const Path& p, const Path& q) {
  if (p.end() != q.start()) {
    throw ValidationError("cannot compose paths with mismatched endpoints");
  }
  if (q.length() == 0) return p;
  if (p.length() == 0) return q;
  std::vector<ArrowIndex> arrows = p.arrows();
  arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
  return Path(p.start(), q.end(), std::move(arrows));
}

bool is_parallel(const Path& p, const Path& q) {
  return p.start() == q.start() && p.end() == q.end();
}

std::vector<Path> enumerate_paths(const Quiver& q, VertexIndex v, VertexIndex w,
                                  std::size_t max_length, std::size_t cap) {
  const std::size_t n = q.vertex_count();
  if (v >= n || w >= n) throw ValidationError("vertex index out of range");

  // dist[u] = length of a shortest path u -> w; used to prune prefixes that
  // cannot reach w within the remaining budget.
  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n, kUnreached);
  std::deque<VertexIndex> queue{w};
  dist[w] = 0;
  while (!queue.empty()) {
    const VertexIndex u = queue.front();
    queue.pop_front();
    for (ArrowIndex a : q.incoming(u)) {
      const VertexIndex s = q.arrow(a).source;
      if (dist[s] == kUnreached) {
        dist[s] = dist[u] + 1;
        queue.push_back(s);
      }
    }
  }

  std::vector<Path> out;
  if (dist[v] == kUnreached || dist[v] > max_length) return out;

  // Breadth-first by length; extending a lexicographically sorted level by
  // outgoing arrows in index order keeps the next level sorted.
  std::vector<Path> level{Path::trivial(v)};
  for (std::size_t len = 0;; ++len) {
    for (const Path& p : level) {
      if (p.end() == w) {
        if (out.size() == cap) {
          throw TruncationOverflow("more than " + std::to_string(cap) +
                                   " paths from '" + q.vertex_name(v) +
                                   "' to '" + q.vertex_name(w) + "'");
        }
        out.push_back(p);
      }
    }
    if (len == max_length) break;
    std::vector<Path> next;
    for (const Path& p : level) {
      for (ArrowIndex a : q.outgoing(p.end())) {
        const VertexIndex t = q.arrow(a).target;
        if (dist[t] == kUnreached || len + 1 + dist[t] > max_length) continue;
        // Each surviving prefix completes to a distinct output path.
        if (next.size() == cap) {
          throw TruncationOverflow("more than " + std::to_string(cap) +
                                   " paths from '" + q.vertex_name(v) +
                                   "' to '" + q.vertex_name(w) + "'");
        }
        next.push_back(compose(p, Path::arrow(q, a)));
      }
    }
    if (next.empty()) break;
    level = std::move(next);
  }
  return out;
}

std::optional<Path> shortest_path(const Quiver& q, VertexIndex v,
                                  VertexIndex w) {
  const std::size_t n = q.vertex_count();
  if (v >= n || w >= n) throw ValidationError("vertex index out of range");
  constexpr ArrowIndex kNone = std::numeric_limits<ArrowIndex>::max();
  std::vector<ArrowIndex> via(n, kNone);
  std::vector<char> seen(n, 0);
  std::deque<VertexIndex> queue{v};
  seen[v] = 1;
  while (!queue.empty() && !seen[w]) {
    const VertexIndex u = queue.front();
    queue.pop_front();
    for (ArrowIndex a : q.outgoing(u)) {
      const VertexIndex t = q.arrow(a).target;
      if (!seen[t]) {
        seen[t] = 1;
        via[t] = a;
        queue.push_back(t);
      }
    }
  }
  if (!seen[w]) return std::nullopt;
  std::vector<ArrowIndex> arrows;
  for (VertexIndex at = w; at != v; at = q.arrow(arrows.back()).source) {
    arrows.push_back(via[at]);
  }
  std::reverse(arrows.begin(), arrows.end());
  return Path::from_arrows(q, v, std::move(arrows));
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph " << dot_quote(q.name()) << " {\n";
  for (const auto& v : q.vertices()) os << "  " << dot_quote(v) << ";\n";
  for (const auto& a : q.arrows()) {
    os << "  " << dot_quote(q.vertex_name(a.source)) << " -> "
       << dot_quote(q.vertex_name(a.target)) << " [label=" << dot_quote(a.id)
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dsl(const Quiver& q) {
  std::ostringstream os;
  os << "quiver " << q.name() << " {\n  vertices: ";
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    if (i) os << ", ";
    os << q.vertex_name(i);
  }
  os << ";\n";
  for (const auto& a : q.arrows()) {
    os << "  " << a.id << ": " << q.vertex_name(a.source) << " -> "
       << q.vertex_name(a.target);
    if (a.weight) os << " [weight = " << format_scalar(*a.weight) << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace commalg
