#include "commalg/oracle.hpp"

#include <unordered_map>

#include "commalg/errors.hpp"
#include "commalg/graph.hpp"

namespace commalg {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<std::size_t, std::size_t>& k) const {
    return std::hash<std::size_t>()(k.first) * 1000003u ^
           std::hash<std::size_t>()(k.second);
  }
};

// Prefix tree over arrow sequences; node 0 is the empty sequence.
class Trie {
 public:
  std::size_t child(std::size_t node, ArrowIndex a) {
    auto [it, inserted] = children_.try_emplace({node, a}, next_id_);
    if (inserted) ++next_id_;
    return it->second;
  }

 private:
  std::unordered_map<std::pair<std::size_t, std::size_t>, std::size_t, PairHash>
      children_;
  std::size_t next_id_ = 1;
};

// Rank of a set of two-term relations c_u e_u - c_a e_a = 0. Each connected
// component of the relation graph contributes size - 1, or its full size when
// some cycle of ratios does not multiply to 1 (then every e_u in it vanishes).
class BinaryRelationRank {
 public:
  explicit BinaryRelationRank(const Field& field) : field_(field) {}

  std::size_t add_element() {
    parent_.push_back(parent_.size());
    ratio_.emplace_back(1);
    size_.push_back(1);
    degenerate_.push_back(false);
    return parent_.size() - 1;
  }

  // Records e_u = c e_a.
  void relate(std::size_t u, std::size_t a, const Scalar& c) {
    auto [ru, fu] = find(u);  // e_u = fu e_ru
    auto [ra, fa] = find(a);
    // e_ru = c fa / fu e_ra
    const Scalar link = field_.div(field_.mul(c, fa), fu);
    if (ru == ra) {
      if (link != 1) degenerate_[ru] = true;
      return;
    }
    if (size_[ru] < size_[ra]) {
      parent_[ru] = ra;
      ratio_[ru] = link;
      size_[ra] += size_[ru];
      degenerate_[ra] = degenerate_[ra] || degenerate_[ru];
    } else {
      parent_[ra] = ru;
      ratio_[ra] = field_.inv(link);
      size_[ru] += size_[ra];
      degenerate_[ru] = degenerate_[ru] || degenerate_[ra];
    }
  }

  std::size_t rank() {
    std::size_t r = 0;
    for (std::size_t u = 0; u < parent_.size(); ++u) {
      if (parent_[u] != u) continue;
      r += degenerate_[u] ? size_[u] : size_[u] - 1;
    }
    return r;
  }

 private:
  // Root of u and the factor f with e_u = f e_root.
  std::pair<std::size_t, Scalar> find(std::size_t u) {
    std::vector<std::size_t> trail;
    while (parent_[u] != u) {
      trail.push_back(u);
      u = parent_[u];
    }
    // Compress from the node nearest the root outwards.
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      const std::size_t up = parent_[*it];
      if (up != u) ratio_[*it] = field_.mul(ratio_[*it], ratio_[up]);
      parent_[*it] = u;
    }
    if (trail.empty()) return {u, Scalar(1)};
    return {u, ratio_[trail.front()]};
  }

  const Field& field_;
  std::vector<std::size_t> parent_;
  std::vector<Scalar> ratio_;  // e_u = ratio e_parent
  std::vector<std::size_t> size_;
  std::vector<bool> degenerate_;
};

}  // namespace

GeneralCoefficientTable GeneralCoefficientTable::uniform(const Quiver& q) {
  return GeneralCoefficientTable(q, std::vector<Scalar>(q.arrow_count(), Scalar(1)));
}

GeneralCoefficientTable::GeneralCoefficientTable(const Quiver& q,
                                                 std::vector<Scalar> arrow_weights)
    : vertex_count_(q.vertex_count()),
      arrow_count_(q.arrow_count()),
      weights_(std::move(arrow_weights)) {
  if (weights_.size() != arrow_count_) {
    throw ValidationError("coefficient table needs one weight per arrow");
  }
  for (const auto& w : weights_) {
    if (Field::is_zero(w)) throw ValidationError("coefficient table has a zero weight");
  }
}

void GeneralCoefficientTable::set(const Path& p, Scalar value) {
  if (Field::is_zero(value)) {
    throw ValidationError("coefficient values must be nonzero");
  }
  if (p.start() >= vertex_count_) throw ValidationError("path of another quiver");
  for (ArrowIndex a : p.arrows()) {
    if (a >= arrow_count_) throw ValidationError("path of another quiver");
  }
  entries_[{p.start(), p.arrows()}] = std::move(value);
}

Scalar GeneralCoefficientTable::operator()(const Path& p) const {
  auto it = entries_.find({p.start(), p.arrows()});
  if (it != entries_.end()) return it->second;
  Scalar out(1);
  for (ArrowIndex a : p.arrows()) out *= weights_[a];
  return out;
}

bool GeneralCoefficientTable::is_uniform() const {
  for (const auto& w : weights_) {
    if (w != 1) return false;
  }
  for (const auto& [k, v] : entries_) {
    if (v != 1) return false;
  }
  return true;
}

TruncatedQuotientReport truncated_hom_dimension(const Quiver& q,
                                                const GeneralCoefficientTable& f,
                                                VertexIndex v, VertexIndex w,
                                                std::size_t truncation,
                                                const Field& field,
                                                std::size_t path_cap) {
  TruncatedQuotientReport report;
  report.source = v;
  report.target = w;
  report.truncation = truncation;

  const std::vector<Path> basis = enumerate_paths(q, v, w, truncation, path_cap);
  report.path_count = basis.size();
  if (basis.empty()) {
    report.dimension = 0;
    report.certified = !shortest_path(q, v, w).has_value();
    return report;
  }

  auto coefficient = [&](const Path& p) {
    Scalar c = field.normalize(f(p));
    if (Field::is_zero(c)) {
      throw ValidationError("coefficient of '" + p.to_string(q) +
                            "' vanishes in " + field.descriptor());
    }
    return c;
  };

  // Each generator r (f(p) p - f(q) q) s lives on the two basis paths rps and
  // rqs. For a fixed context (r, s) the differences against one chosen middle
  // p0 span all of them, so contexts are keyed by (prefix node, suffix node)
  // and compared against the first basis path seen with that context.
  Trie prefixes;
  Trie suffixes;
  struct Anchor {
    std::size_t path;
    Scalar coefficient;
  };
  std::unordered_map<std::pair<std::size_t, std::size_t>, Anchor, PairHash>
      anchors;
  BinaryRelationRank relations(field);

  for (std::size_t u = 0; u < basis.size(); ++u) {
    relations.add_element();
    const Path& path = basis[u];
    const auto& arrows = path.arrows();
    const std::size_t len = arrows.size();

    std::vector<std::size_t> prefix_node(len + 1, 0);
    for (std::size_t i = 0; i < len; ++i) {
      prefix_node[i + 1] = prefixes.child(prefix_node[i], arrows[i]);
    }
    std::vector<std::size_t> suffix_node(len + 1, 0);  // by suffix length
    for (std::size_t j = 0; j < len; ++j) {
      suffix_node[j + 1] = suffixes.child(suffix_node[j], arrows[len - 1 - j]);
    }

    for (std::size_t i = 0; i <= len; ++i) {
      for (std::size_t j = 0; i + j <= len; ++j) {
        const std::pair key{prefix_node[i], suffix_node[j]};
        const Path middle = path.subpath(q, i, len - j);
        Scalar c = coefficient(middle);
        auto it = anchors.find(key);
        if (it == anchors.end()) {
          anchors.emplace(key, Anchor{u, std::move(c)});
          continue;
        }
        const Anchor& anchor = it->second;
        // c e_u - c0 e_anchor = 0
        relations.relate(u, anchor.path, field.div(anchor.coefficient, c));
        ++report.relation_count;
      }
    }
  }

  report.relation_rank = relations.rank();
  const std::size_t dim = report.path_count - report.relation_rank;
  if (dim > 1) {
    throw InvariantViolation("truncated quotient has dimension " +
                             std::to_string(dim) + " > 1");
  }
  report.dimension = static_cast<int>(dim);
  report.certified = f.is_multiplicative() || report.dimension == 0;
  return report;
}

std::vector<TruncatedQuotientReport> truncated_dimension_table(
    const Quiver& q, const GeneralCoefficientTable& f, std::size_t truncation,
    const Field& field) {
  std::vector<TruncatedQuotientReport> out;
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    for (VertexIndex w = 0; w < q.vertex_count(); ++w) {
      out.push_back(truncated_hom_dimension(q, f, v, w, truncation, field));
    }
  }
  return out;
}

bool vertex_nondegeneracy(const Quiver& q, const GeneralCoefficientTable& f,
                          std::size_t truncation, const Field& field) {
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    if (truncated_hom_dimension(q, f, v, v, truncation, field).dimension != 1) {
      return false;
    }
  }
  return true;
}

bool pattern_equivalence(const Quiver& q, std::size_t truncation,
                         const Field& field) {
  const auto f = GeneralCoefficientTable::uniform(q);
  const ReachabilityPattern reach = reachability(q);
  for (const auto& r : truncated_dimension_table(q, f, truncation, field)) {
    if (r.dimension != (reach.bits(r.source, r.target) ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace commalg
