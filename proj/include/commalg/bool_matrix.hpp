#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace commalg {

// Dense square boolean matrix; used for reachability patterns, component
// relations and poset orders.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n, bool value = false)
      : n_(n), bits_(n * n, value ? 1 : 0) {}

  static BoolMatrix identity(std::size_t n) {
    BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  bool operator()(std::size_t i, std::size_t j) const {
    return bits_[i * n_ + j] != 0;
  }
  void set(std::size_t i, std::size_t j, bool value = true) {
    bits_[i * n_ + j] = value ? 1 : 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (char b : bits_) c += b != 0;
    return c;
  }

  // Entries (perm[i], perm[j]) moved to (i, j).
  BoolMatrix permuted(const std::vector<std::size_t>& perm) const {
    BoolMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) out.set(i, j, (*this)(perm[i], perm[j]));
    }
    return out;
  }

  bool is_reflexive() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!(*this)(i, i)) return false;
    }
    return true;
  }

  bool is_transitive() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (!(*this)(i, k)) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          if ((*this)(k, j) && !(*this)(i, j)) return false;
        }
      }
    }
    return true;
  }

  bool is_antisymmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if ((*this)(i, j) && (*this)(j, i)) return false;
      }
    }
    return true;
  }

  // Rows rendered as strings of '0'/'1'.
  std::vector<std::string> rows() const {
    std::vector<std::string> out;
    out.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::string row(n_, '0');
      for (std::size_t j = 0; j < n_; ++j) {
        if ((*this)(i, j)) row[j] = '1';
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<char> bits_;
};

}  // namespace commalg
