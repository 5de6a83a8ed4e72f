#pragma once

#include <cstdint>
#include <vector>

#include "core/point.hpp"

namespace kgon {

// Precomputed orientation signs for all point triples of one set, plus
// coordinate rank tables. Enumeration-heavy operations run entirely on
// index tuples against this table.
class OrientCache {
 public:
  explicit OrientCache(const PointSet& s);

  const PointSet& set() const { return *set_; }
  std::size_t size() const { return n_; }

  // Orientation sign of (i, j, k) in the given order, any permutation.
  int sign(std::size_t i, std::size_t j, std::size_t k) const {
    int parity = 1;
    if (i > j) { std::swap(i, j); parity = -parity; }
    if (j > k) { std::swap(j, k); parity = -parity; }
    if (i > j) { std::swap(i, j); parity = -parity; }
    return parity * table_[rank3(i, j, k)];
  }

  bool collinear(std::size_t i, std::size_t j, std::size_t k) const {
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    return table_[rank3(i, j, k)] == 0;
  }

  // Rank of point i when sorting by (x, y); ranks are a permutation.
  std::uint32_t lex_rank(std::size_t i) const { return lex_rank_[i]; }
  // Rank orders compatible with the x (resp. y) order; ties broken
  // arbitrarily but consistently, which keeps rank windows sound for
  // bounding-box prefilters.
  std::uint32_t x_rank(std::size_t i) const { return x_rank_[i]; }
  std::uint32_t y_rank(std::size_t i) const { return y_rank_[i]; }

 private:
  std::size_t rank3(std::size_t i, std::size_t j, std::size_t k) const {
    return k * (k - 1) * (k - 2) / 6 + j * (j - 1) / 2 + i;
  }

  const PointSet* set_;
  std::size_t n_;
  std::vector<signed char> table_;
  std::vector<std::uint32_t> lex_rank_;
  std::vector<std::uint32_t> x_rank_;
  std::vector<std::uint32_t> y_rank_;
};

}  // namespace kgon
