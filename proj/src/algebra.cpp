#include "commalg/algebra.hpp"

#include <sstream>

#include "commalg/errors.hpp"

namespace commalg {

namespace detail {

struct AlgebraState {
  Quiver quiver;
  Field field;
  ComponentPartition components;
  std::vector<VertexIndex> order;
  std::vector<std::size_t> position;
  ReachabilityPattern pattern;
  std::vector<std::size_t> block_components;
  BoolMatrix block_pattern;
};

}  // namespace detail

CoefficientFunction::CoefficientFunction(const Quiver& q,
                                         std::vector<Scalar> weights)
    : weights_(std::move(weights)) {
  if (weights_.size() != q.arrow_count()) {
    throw ValidationError("coefficient function needs one weight per arrow");
  }
  for (const auto& w : weights_) {
    if (Field::is_zero(w)) {
      throw ValidationError("coefficient function has a zero weight");
    }
  }
}

CoefficientFunction CoefficientFunction::uniform(const Quiver& q) {
  return CoefficientFunction(q, std::vector<Scalar>(q.arrow_count(), Scalar(1)));
}

CoefficientFunction CoefficientFunction::from_quiver(const Quiver& q) {
  std::vector<Scalar> w;
  w.reserve(q.arrow_count());
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) w.push_back(q.weight(a));
  return CoefficientFunction(q, std::move(w));
}

Scalar CoefficientFunction::operator()(const Path& p) const {
  Scalar out(1);
  for (ArrowIndex a : p.arrows()) out *= weights_.at(a);
  return out;
}

const Quiver& CommutingAlgebra::quiver() const { return state_->quiver; }
const Field& CommutingAlgebra::field() const { return state_->field; }
const ComponentPartition& CommutingAlgebra::components() const {
  return state_->components;
}
const std::vector<VertexIndex>& CommutingAlgebra::order() const {
  return state_->order;
}
std::size_t CommutingAlgebra::position(VertexIndex v) const {
  if (v >= state_->position.size()) {
    throw ValidationError("vertex index " + std::to_string(v) +
                          " out of range");
  }
  return state_->position[v];
}
const ReachabilityPattern& CommutingAlgebra::pattern() const {
  return state_->pattern;
}
const std::vector<std::size_t>& CommutingAlgebra::block_components() const {
  return state_->block_components;
}
std::vector<std::size_t> CommutingAlgebra::block_sizes() const {
  std::vector<std::size_t> out;
  for (std::size_t c : state_->block_components) {
    out.push_back(state_->components.components[c].size());
  }
  return out;
}
const BoolMatrix& CommutingAlgebra::block_pattern() const {
  return state_->block_pattern;
}
std::size_t CommutingAlgebra::size() const { return state_->order.size(); }

CommutingAlgebra commuting_algebra(const Quiver& q, const Field& field) {
  auto components = path_components(q);
  auto order = consistent_ordering(q, components);
  const ReachabilityPattern reach = reachability(q);
  const CondensationOrder cond = condensation(components, reach);

  std::vector<std::size_t> position(q.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  std::vector<std::size_t> blocks;
  for (VertexIndex v : order) {
    const std::size_t c = components.membership[v];
    if (blocks.empty() || blocks.back() != c) blocks.push_back(c);
  }
  BoolMatrix block_pattern(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      block_pattern.set(i, j, cond.relation(blocks[i], blocks[j]));
    }
  }

  auto state = std::make_shared<detail::AlgebraState>(detail::AlgebraState{
      q, field, std::move(components), order, std::move(position),
      reach.reordered(order), std::move(blocks), std::move(block_pattern)});
  return CommutingAlgebra(std::move(state));
}

AlgebraElement::AlgebraElement(const CommutingAlgebra& algebra, Entries entries)
    : owner_(algebra.state_) {
  const auto& bits = owner_->pattern.bits;
  for (auto& [key, value] : entries) {
    const auto [i, j] = key;
    if (i >= bits.size() || j >= bits.size()) {
      throw ValidationError("element entry out of range");
    }
    Scalar v = owner_->field.normalize(value);
    if (Field::is_zero(v)) continue;
    if (!bits(i, j)) {
      throw ValidationError("element entry (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") lies outside the pattern");
    }
    entries_.emplace(key, std::move(v));
  }
}

Scalar AlgebraElement::entry(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Scalar(0) : it->second;
}

int hom_dimension(const CommutingAlgebra& a, VertexIndex v, VertexIndex w) {
  return a.pattern().bits(a.position(v), a.position(w)) ? 1 : 0;
}

int hom_dimension(const CommutingAlgebra& a, std::string_view v,
                  std::string_view w) {
  return hom_dimension(a, a.quiver().vertex_index(v),
                       a.quiver().vertex_index(w));
}

std::size_t total_dimension(const CommutingAlgebra& a) {
  return a.pattern().bits.count();
}

AlgebraElement basis_element(const CommutingAlgebra& a, VertexIndex v,
                             VertexIndex w) {
  if (hom_dimension(a, v, w) == 0) {
    throw ValidationError("no path from '" + a.quiver().vertex_name(v) +
                          "' to '" + a.quiver().vertex_name(w) +
                          "': the Hom space is zero");
  }
  return AlgebraElement(a, {{{a.position(v), a.position(w)}, Scalar(1)}});
}

AlgebraElement zero_element(const CommutingAlgebra& a) {
  return AlgebraElement(a, {});
}

AlgebraElement identity_element(const CommutingAlgebra& a) {
  AlgebraElement::Entries e;
  for (std::size_t i = 0; i < a.size(); ++i) e.emplace(std::pair{i, i}, 1);
  return AlgebraElement(a, std::move(e));
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  const CommutingAlgebra a = x.algebra();
  if (!a.same_algebra(y.algebra())) {
    throw ValidationError("cannot add elements of different algebras");
  }
  AlgebraElement::Entries e = x.entries();
  for (const auto& [k, v] : y.entries()) {
    e[k] = a.field().add(e[k], v);
  }
  return AlgebraElement(a, std::move(e));
}

AlgebraElement scale(const Scalar& c, const AlgebraElement& x) {
  const CommutingAlgebra a = x.algebra();
  AlgebraElement::Entries e;
  for (const auto& [k, v] : x.entries()) e.emplace(k, a.field().mul(c, v));
  return AlgebraElement(a, std::move(e));
}

AlgebraElement multiply(const CommutingAlgebra& a, const AlgebraElement& x,
                        const AlgebraElement& y) {
  if (!a.same_algebra(x.algebra()) || !a.same_algebra(y.algebra())) {
    throw ValidationError("element does not belong to this algebra");
  }
  const Field& field = a.field();
  // Index y by row for the sparse product.
  std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (const auto& [k, v] : y.entries()) rows[k.first].emplace_back(k.second, v);

  AlgebraElement::Entries product;
  for (const auto& [k, xv] : x.entries()) {
    auto it = rows.find(k.second);
    if (it == rows.end()) continue;
    for (const auto& [col, yv] : it->second) {
      auto& slot = product[{k.first, col}];
      slot = field.add(slot, field.mul(xv, yv));
    }
  }
  const auto& bits = a.pattern().bits;
  for (const auto& [k, v] : product) {
    if (!Field::is_zero(v) && !bits(k.first, k.second)) {
      throw InvariantViolation("product leaves the reachability pattern");
    }
  }
  return AlgebraElement(a, std::move(product));
}

Scalar quasi_structure_constant(const CoefficientFunction& f, const Path& p,
                                const Path& q) {
  const Path pq = compose(p, q);
  return f(p) * f(q) / f(pq);
}

AlgebraElement QuasiCommutingAlgebra::class_of(const Path& p) const {
  const Scalar fp = algebra.field().normalize(coefficients(p));
  return scale(algebra.field().inv(fp),
               basis_element(algebra, p.start(), p.end()));
}

QuasiCommutingAlgebra quasi_commuting_algebra(const Quiver& q,
                                              const CoefficientFunction& f,
                                              const Field& field) {
  for (const auto& w : f.weights()) {
    if (Field::is_zero(field.normalize(w))) {
      throw ValidationError("weight " + w.get_str() + " vanishes in " +
                            field.descriptor());
    }
  }
  QuasiCommutingAlgebra out{commuting_algebra(q, field), f, {}};
  const std::size_t n = q.vertex_count();
  for (VertexIndex v = 0; v < n; ++v) {
    for (VertexIndex w = 0; w < n; ++w) {
      if (hom_dimension(out.algebra, v, w) == 0) continue;
      auto path = shortest_path(q, v, w);
      if (!path) throw InvariantViolation("pattern entry without a path");
      out.basis.push_back(
          NormalizedBasisEntry{v, w, *path, field.normalize(f(*path))});
    }
  }
  return out;
}

bool has_block_form(const CommutingAlgebra& a) {
  const auto& bits = a.pattern().bits;
  const auto sizes = a.block_sizes();
  std::vector<std::size_t> offset{0};
  for (std::size_t s : sizes) offset.push_back(offset.back() + s);
  const std::size_t m = sizes.size();
  for (std::size_t bi = 0; bi < m; ++bi) {
    for (std::size_t bj = 0; bj < m; ++bj) {
      const bool expected = bits(offset[bi], offset[bj]);
      if (bi == bj && !expected) return false;
      for (std::size_t i = offset[bi]; i < offset[bi + 1]; ++i) {
        for (std::size_t j = offset[bj]; j < offset[bj + 1]; ++j) {
          if (bits(i, j) != expected) return false;
        }
      }
      if (bi != bj && expected && bits(offset[bj], offset[bi])) return false;
      if (expected != a.block_pattern()(bi, bj)) return false;
    }
  }
  return true;
}

std::string pretty_block_display(const CommutingAlgebra& a) {
  std::ostringstream os;
  const auto& bits = a.pattern().bits;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j) os << ' ';
      os << (bits(i, j) ? 'K' : '0');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace commalg
