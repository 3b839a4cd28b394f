#include "commalg/homology.hpp"

#include <algorithm>
#include <numeric>

#include "commalg/errors.hpp"

namespace commalg {

namespace {

// Elements sorted so that x < y implies x comes first.
std::vector<std::size_t> linear_extension(const Poset& p) {
  const std::size_t m = p.size();
  std::vector<std::size_t> below(m, 0);
  for (std::size_t y = 0; y < m; ++y) {
    for (std::size_t x = 0; x < m; ++x) below[y] += p.leq(x, y);
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return below[a] < below[b];
  });
  return order;
}

}  // namespace

PosetRepresentation::PosetRepresentation(Poset poset, Field field,
                                         std::vector<std::size_t> dims,
                                         std::map<CoverEdge, Matrix> cover_maps)
    : poset_(std::move(poset)),
      field_(field),
      covers_(hasse(poset_).covers),
      dims_(std::move(dims)),
      cover_maps_(std::move(cover_maps)) {
  const std::size_t m = poset_.size();
  if (dims_.size() != m) {
    throw ValidationError("representation needs one dimension per element");
  }
  if (cover_maps_.size() != covers_.size()) {
    throw ValidationError("representation maps must be given on cover edges");
  }
  for (const auto& [x, y] : covers_) {
    auto it = cover_maps_.find({x, y});
    if (it == cover_maps_.end()) {
      throw ValidationError("missing map on a cover edge");
    }
    if (it->second.rows() != dims_[y] || it->second.cols() != dims_[x]) {
      throw ValidationError("cover map has the wrong shape");
    }
  }

  const std::vector<std::size_t> order = linear_extension(poset_);
  for (std::size_t x = 0; x < m; ++x) {
    composites_.emplace(CoverEdge{x, x}, Matrix::identity(dims_[x]));
    for (std::size_t y : order) {
      if (!poset_.less(x, y)) continue;
      bool have = false;
      for (const auto& [z, t] : covers_) {
        if (t != y || !poset_.leq(x, z)) continue;
        Matrix candidate =
            multiply(field_, cover_maps_.at({z, y}), composites_.at({x, z}));
        if (!have) {
          composites_.emplace(CoverEdge{x, y}, std::move(candidate));
          have = true;
        } else if (!(composites_.at({x, y}) == candidate)) {
          throw InvariantViolation("representation is not functorial: chains "
                                   "from " + Poset::element_name(x) + " to " +
                                   Poset::element_name(y) + " disagree");
        }
      }
    }
  }
}

std::size_t PosetRepresentation::total_dimension() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

const Matrix& PosetRepresentation::cover_map(std::size_t x, std::size_t y) const {
  auto it = cover_maps_.find({x, y});
  if (it == cover_maps_.end()) throw ValidationError("not a cover edge");
  return it->second;
}

const Matrix& PosetRepresentation::map(std::size_t x, std::size_t y) const {
  auto it = composites_.find({x, y});
  if (it == composites_.end()) throw ValidationError("elements not comparable");
  return it->second;
}

std::vector<std::size_t> generators_below(const Poset& p,
                                          const std::vector<std::size_t>& labels,
                                          std::size_t z) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < labels.size(); ++g) {
    if (p.leq(labels[g], z)) out.push_back(g);
  }
  return out;
}

PosetRepresentation projective_sum(const Poset& p,
                                   const std::vector<std::size_t>& labels,
                                   const Field& field) {
  const std::size_t m = p.size();
  std::vector<std::vector<std::size_t>> coords(m);
  std::vector<std::size_t> dims(m);
  for (std::size_t z = 0; z < m; ++z) {
    coords[z] = generators_below(p, labels, z);
    dims[z] = coords[z].size();
  }
  std::map<CoverEdge, Matrix> maps;
  for (const auto& [z, t] : hasse(p).covers) {
    Matrix a(dims[t], dims[z]);
    // Generators below z are also below t; both lists ascend.
    std::size_t r = 0;
    for (std::size_t c = 0; c < coords[z].size(); ++c) {
      while (coords[t][r] != coords[z][c]) ++r;
      a(r, c) = 1;
    }
    maps.emplace(CoverEdge{z, t}, std::move(a));
  }
  return PosetRepresentation(p, field, std::move(dims), std::move(maps));
}

PosetRepresentation projective(const Poset& p, std::size_t x,
                               const Field& field) {
  if (x >= p.size()) throw ValidationError("element out of range");
  return projective_sum(p, {x}, field);
}

PosetRepresentation simple(const Poset& p, std::size_t x, const Field& field) {
  if (x >= p.size()) throw ValidationError("element out of range");
  std::vector<std::size_t> dims(p.size(), 0);
  dims[x] = 1;
  std::map<CoverEdge, Matrix> maps;
  for (const auto& [z, t] : hasse(p).covers) {
    maps.emplace(CoverEdge{z, t}, Matrix(dims[t], dims[z]));
  }
  return PosetRepresentation(p, field, std::move(dims), std::move(maps));
}

ProjectiveCover projective_cover(const PosetRepresentation& m) {
  if (m.is_zero()) {
    throw ValidationError("the zero module has no projective cover");
  }
  const Poset& p = m.poset();
  const Field& field = m.field();
  const std::size_t n = p.size();

  // top(M)(y) = M(y) / rad M(y), complemented by standard basis vectors.
  std::vector<std::size_t> generators;
  std::vector<Matrix> images;
  for (std::size_t y = 0; y < n; ++y) {
    Matrix radical(m.dim(y), 0);
    for (const auto& [x, t] : m.covers()) {
      if (t == y) radical = hconcat(radical, m.cover_map(x, y));
    }
    for (std::size_t k : complement_basis(field, radical)) {
      Matrix e(m.dim(y), 1);
      e(k, 0) = 1;
      generators.push_back(y);
      images.push_back(std::move(e));
    }
  }

  PosetRepresentation cover = projective_sum(p, generators, field);
  std::vector<Matrix> surjection(n);
  std::vector<Matrix> inclusion(n);
  std::vector<std::size_t> kernel_dims(n);
  for (std::size_t z = 0; z < n; ++z) {
    const auto coords = generators_below(p, generators, z);
    Matrix phi(m.dim(z), coords.size());
    for (std::size_t c = 0; c < coords.size(); ++c) {
      const std::size_t g = coords[c];
      const Matrix v = multiply(field, m.map(generators[g], z), images[g]);
      for (std::size_t r = 0; r < m.dim(z); ++r) phi(r, c) = v(r, 0);
    }
    if (rank(field, phi) != m.dim(z)) {
      throw InvariantViolation("projective cover map is not surjective");
    }
    inclusion[z] = kernel_basis(field, phi);
    kernel_dims[z] = inclusion[z].cols();
    surjection[z] = std::move(phi);
  }

  std::map<CoverEdge, Matrix> kernel_maps;
  for (const auto& [z, t] : cover.covers()) {
    const Matrix pushed = multiply(field, cover.cover_map(z, t), inclusion[z]);
    kernel_maps.emplace(CoverEdge{z, t}, solve(field, inclusion[t], pushed));
  }
  PosetRepresentation kernel(p, field, std::move(kernel_dims),
                             std::move(kernel_maps));
  return ProjectiveCover{std::move(generators), std::move(images),
                         std::move(cover),      std::move(surjection),
                         std::move(kernel),     std::move(inclusion)};
}

Matrix Resolution::differential_at(std::size_t k, std::size_t z) const {
  const Poset& p = module.poset();
  const Field& field = module.field();
  const auto cols = generators_below(p, labels.at(k), z);
  if (k == 0) {
    Matrix out(module.dim(z), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::size_t g = cols[c];
      const Matrix v = multiply(field, module.map(labels[0][g], z), augmentation[g]);
      for (std::size_t r = 0; r < out.rows(); ++r) out(r, c) = v(r, 0);
    }
    return out;
  }
  const auto rows = generators_below(p, labels.at(k - 1), z);
  Matrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out(r, c) = differentials.at(k)(rows[r], cols[c]);
    }
  }
  return out;
}

Resolution minimal_resolution(const PosetRepresentation& m,
                              std::size_t max_terms) {
  const Poset& p = m.poset();
  const Field& field = m.field();
  ProjectiveCover current = projective_cover(m);
  Resolution r{m, {current.generators}, {Matrix()}, current.generator_images};

  while (!current.kernel.is_zero()) {
    if (r.labels.size() >= max_terms) {
      throw InvariantViolation("resolution exceeds " +
                               std::to_string(max_terms) + " terms");
    }
    ProjectiveCover next = projective_cover(current.kernel);
    const auto& prev = current.generators;
    Matrix d(prev.size(), next.generators.size());
    for (std::size_t b = 0; b < next.generators.size(); ++b) {
      const std::size_t y = next.generators[b];
      // Kernel coordinates at y -> coordinates of the previous projective.
      const Matrix v = multiply(field, current.kernel_inclusion[y],
                                next.generator_images[b]);
      const auto coords = generators_below(p, prev, y);
      for (std::size_t c = 0; c < coords.size(); ++c) d(coords[c], b) = v(c, 0);
    }
    r.labels.push_back(next.generators);
    r.differentials.push_back(std::move(d));
    current = std::move(next);
  }
  return r;
}

bool verify_resolution(const Resolution& r) {
  const Poset& p = r.module.poset();
  const Field& field = r.module.field();
  const std::size_t terms = r.labels.size();

  for (std::size_t k = 1; k < terms; ++k) {
    const Matrix& d = r.differentials[k];
    for (std::size_t a = 0; a < d.rows(); ++a) {
      for (std::size_t b = 0; b < d.cols(); ++b) {
        if (r.labels[k - 1][a] == r.labels[k][b] && !Field::is_zero(d(a, b))) {
          return false;  // not minimal
        }
      }
    }
  }

  for (std::size_t z = 0; z < p.size(); ++z) {
    std::vector<Matrix> ds;
    for (std::size_t k = 0; k < terms; ++k) ds.push_back(r.differential_at(k, z));
    if (rank(field, ds[0]) != r.module.dim(z)) return false;
    for (std::size_t k = 0; k < terms; ++k) {
      const std::size_t dim_here = ds[k].cols();
      const std::size_t incoming = k + 1 < terms ? rank(field, ds[k + 1]) : 0;
      if (rank(field, ds[k]) + incoming != dim_here) return false;
      if (k + 1 < terms && !multiply(field, ds[k], ds[k + 1]).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

std::size_t projective_dimension(const Poset& p, std::size_t x,
                                 const Field& field) {
  const Resolution r = minimal_resolution(simple(p, x, field), longest_chain(p));
  return r.length();
}

std::size_t global_dimension(const Poset& p, const Field& field) {
  std::size_t gd = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    gd = std::max(gd, projective_dimension(p, x, field));
  }
  return gd;
}

}  // namespace commalg
