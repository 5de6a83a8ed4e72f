#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "core/error.hpp"
#include "core/orient_cache.hpp"

namespace kgon::census::detail {

inline bool edges_cross(const OrientCache& oc, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                        std::uint32_t d) {
  // Proper crossing test; sufficient between non-adjacent edges of distinct
  // vertices in general position.
  return oc.sign(a, b, c) * oc.sign(a, b, d) < 0 && oc.sign(c, d, a) * oc.sign(c, d, b) < 0;
}

inline bool strictly_inside_triangle_impl(const OrientCache& oc, std::size_t a, std::size_t b,
                                          std::size_t c, std::size_t p) {
  int s1 = oc.sign(a, b, p);
  int s2 = oc.sign(b, c, p);
  if (s1 != s2) return false;
  return s2 == oc.sign(c, a, p) && s1 != 0;
}

// Convex hull (CCW, strict corners) of a subset given by global indices.
std::vector<std::uint32_t> subset_hull_ccw_impl(const OrientCache& oc,
                                                std::vector<std::uint32_t> subset);

int signed_area_sign_impl(const PointSet& s, const std::vector<std::uint32_t>& cycle);

std::vector<std::array<std::uint32_t, 3>> triangulate_cycle_impl(
    const OrientCache& oc, std::vector<std::uint32_t> cycle);

// DFS over cyclic vertex orders of `subset`: first vertex pinned to
// subset[0], direction normalized by requiring the second vertex to carry a
// smaller global index than the last. Partial paths are pruned as soon as an
// edge crosses an earlier one, so every emitted cycle is simple. A
// non-negative `fixed_second` restricts the second vertex to that subset
// position, which lets callers shard the enumeration.
template <typename Visitor>
long long for_each_simple_cycle_impl(const OrientCache& oc,
                                     const std::vector<std::uint32_t>& subset, Visitor&& visit,
                                     int fixed_second = -1) {
  const int k = static_cast<int>(subset.size());
  if (k < 3) fail(Errc::invalid_argument, "cycle enumeration needs k >= 3");
  std::vector<std::uint32_t> path(static_cast<std::size_t>(k));
  std::vector<char> used(static_cast<std::size_t>(k), 0);
  path[0] = subset[0];
  used[0] = 1;
  long long accepted = 0;

  auto closing_ok = [&](std::uint32_t last) {
    for (int j = 1; j + 2 < k; ++j)
      if (edges_cross(oc, last, path[0], path[j], path[j + 1])) return false;
    return true;
  };

  // depth = number of placed vertices
  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      if (!closing_ok(path[k - 1])) return;
      if (visit(path)) ++accepted;
      return;
    }
    for (int c = 1; c < k; ++c) {
      if (used[c]) continue;
      if (depth == 1 && fixed_second >= 0 && c != fixed_second) continue;
      std::uint32_t cand = subset[c];
      if (depth == k - 1 && cand < path[1]) continue;  // direction normalization
      bool ok = true;
      for (int j = 0; j + 2 < depth && ok; ++j)
        ok = !edges_cross(oc, path[depth - 1], cand, path[j], path[j + 1]);
      if (!ok) continue;
      path[depth] = cand;
      used[c] = 1;
      self(self, depth + 1);
      used[c] = 0;
    }
  };
  dfs(dfs, 1);
  return accepted;
}

}  // namespace kgon::census::detail
