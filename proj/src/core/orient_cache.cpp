#include "core/orient_cache.hpp"

#include <algorithm>
#include <numeric>

namespace kgon {

OrientCache::OrientCache(const PointSet& s) : set_(&s), n_(s.size()) {
  table_.resize(n_ * (n_ - 1) * (n_ - 2) / 6 + 1);
  std::size_t idx = 0;
  for (std::size_t k = 2; k < n_; ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        table_[idx++] = static_cast<signed char>(orientation_sign(s[i], s[j], s[k]));

  std::vector<std::uint32_t> order(n_);
  std::iota(order.begin(), order.end(), 0);
  auto rank_by = [&](auto cmp, std::vector<std::uint32_t>& out) {
    std::sort(order.begin(), order.end(), cmp);
    out.resize(n_);
    for (std::size_t r = 0; r < n_; ++r) out[order[r]] = static_cast<std::uint32_t>(r);
  };
  rank_by([&](std::uint32_t a, std::uint32_t b) { return s[a] < s[b]; }, lex_rank_);
  rank_by([&](std::uint32_t a, std::uint32_t b) {
    return s[a].x != s[b].x ? s[a].x < s[b].x : a < b;
  }, x_rank_);
  rank_by([&](std::uint32_t a, std::uint32_t b) {
    return s[a].y != s[b].y ? s[a].y < s[b].y : a < b;
  }, y_rank_);
}

}  // namespace kgon
