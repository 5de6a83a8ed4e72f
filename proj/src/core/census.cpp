#include "core/census.hpp"

#include <algorithm>
#include <numeric>

#include "core/census_detail.hpp"
#include "core/error.hpp"
#include "core/parallel.hpp"
#include "core/polygon.hpp"

namespace kgon::census {

using detail::edges_cross;
using detail::strictly_inside_triangle_impl;

GonClass gon_class_from_string(const std::string& s) {
  if (s == "convex") return GonClass::Convex;
  if (s == "nonconvex") return GonClass::NonConvex;
  if (s == "general") return GonClass::General;
  fail(Errc::invalid_argument, "unknown class '" + s + "'");
}

std::string to_string(GonClass c) {
  switch (c) {
    case GonClass::Convex: return "convex";
    case GonClass::NonConvex: return "nonconvex";
    default: return "general";
  }
}

namespace detail {

std::vector<std::uint32_t> subset_hull_ccw_impl(const OrientCache& oc,
                                                std::vector<std::uint32_t> subset) {
  std::sort(subset.begin(), subset.end(),
            [&](std::uint32_t a, std::uint32_t b) { return oc.lex_rank(a) < oc.lex_rank(b); });
  std::size_t n = subset.size();
  if (n < 3) return subset;
  std::vector<std::uint32_t> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && oc.sign(h[k - 2], h[k - 1], subset[i]) <= 0) --k;
    h[k++] = subset[i];
  }
  std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && oc.sign(h[k - 2], h[k - 1], subset[i]) <= 0) --k;
    h[k++] = subset[i];
  }
  h.resize(k - 1);
  return h;
}

int signed_area_sign_impl(const PointSet& s, const std::vector<std::uint32_t>& cycle) {
  if (s.all_small()) {
    __int128 acc = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point& p = s[cycle[i]];
      const Point& q = s[cycle[(i + 1) % cycle.size()]];
      acc += (__int128)p.xs * q.ys - (__int128)q.xs * p.ys;
    }
    return acc > 0 ? 1 : acc < 0 ? -1 : 0;
  }
  BigInt acc = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Point& p = s[cycle[i]];
    const Point& q = s[cycle[(i + 1) % cycle.size()]];
    acc += p.x * q.y - q.x * p.y;
  }
  return acc.sign();
}

std::vector<std::array<std::uint32_t, 3>> triangulate_cycle_impl(
    const OrientCache& oc, std::vector<std::uint32_t> cycle) {
  if (signed_area_sign_impl(oc.set(), cycle) < 0) std::reverse(cycle.begin(), cycle.end());
  std::vector<std::array<std::uint32_t, 3>> tris;
  std::vector<std::uint32_t> idx = cycle;
  while (idx.size() > 3) {
    bool clipped = false;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      std::uint32_t ip = idx[(i + idx.size() - 1) % idx.size()];
      std::uint32_t ic = idx[i];
      std::uint32_t in = idx[(i + 1) % idx.size()];
      if (oc.sign(ip, ic, in) <= 0) continue;
      bool blocked = false;
      for (std::uint32_t other : idx) {
        if (other == ip || other == ic || other == in) continue;
        if (strictly_inside_triangle_impl(oc, ip, ic, in, other)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      tris.push_back({ip, ic, in});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
      break;
    }
    if (!clipped) fail(Errc::internal, "triangulation stalled on a non-simple cycle");
  }
  tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

}  // namespace detail

namespace {

using detail::for_each_simple_cycle_impl;
using detail::signed_area_sign_impl;
using detail::subset_hull_ccw_impl;
using detail::triangulate_cycle_impl;

void require_countable(const PointSet& s, const char* op) {
  if (s.collinear_allowed())
    fail(Errc::degenerate, std::string(op) + " rejects collinear-allowed sets");
}

struct RankBox {
  std::uint32_t xlo, xhi, ylo, yhi;
};

RankBox subset_box(const OrientCache& oc, const std::vector<std::uint32_t>& subset) {
  RankBox b{UINT32_MAX, 0, UINT32_MAX, 0};
  for (std::uint32_t v : subset) {
    b.xlo = std::min(b.xlo, oc.x_rank(v));
    b.xhi = std::max(b.xhi, oc.x_rank(v));
    b.ylo = std::min(b.ylo, oc.y_rank(v));
    b.yhi = std::max(b.yhi, oc.y_rank(v));
  }
  return b;
}

bool in_box(const OrientCache& oc, std::uint32_t p, const RankBox& b) {
  return oc.x_rank(p) > b.xlo && oc.x_rank(p) < b.xhi && oc.y_rank(p) > b.ylo &&
         oc.y_rank(p) < b.yhi;
}

bool strictly_inside_ccw_hull(const OrientCache& oc, const std::vector<std::uint32_t>& hull,
                              std::uint32_t p) {
  for (std::size_t i = 0; i < hull.size(); ++i)
    if (oc.sign(hull[i], hull[(i + 1) % hull.size()], p) <= 0) return false;
  return true;
}

// Points of the set strictly inside the subset's hull.
std::vector<std::uint32_t> hull_interior_points(const OrientCache& oc,
                                                const std::vector<std::uint32_t>& subset,
                                                const std::vector<std::uint32_t>& hull) {
  std::vector<std::uint32_t> inside;
  RankBox box = subset_box(oc, subset);
  std::vector<char> in_subset(oc.size(), 0);
  for (std::uint32_t v : subset) in_subset[v] = 1;
  for (std::uint32_t p = 0; p < oc.size(); ++p) {
    if (in_subset[p] || !in_box(oc, p, box)) continue;
    if (strictly_inside_ccw_hull(oc, hull, p)) inside.push_back(p);
  }
  return inside;
}

bool cycle_empty_of(const OrientCache& oc, const std::vector<std::uint32_t>& cycle,
                    const std::vector<std::uint32_t>& candidates) {
  if (candidates.empty()) return true;
  auto tris = triangulate_cycle_impl(oc, cycle);
  for (std::uint32_t p : candidates) {
    for (const auto& t : tris) {
      if (strictly_inside_triangle_impl(oc, t[0], t[1], t[2], p)) return false;
    }
  }
  return true;
}

template <typename Fn>
void for_each_combination(std::uint32_t limit, int k, Fn&& fn) {
  if (k == 0 || limit < static_cast<std::uint32_t>(k)) {
    if (k == 0) fn(std::vector<std::uint32_t>{});
    return;
  }
  std::vector<std::uint32_t> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  for (;;) {
    fn(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] ==
                         limit - static_cast<std::uint32_t>(k - i)) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < static_cast<std::size_t>(k); ++j)
      c[j] = c[j - 1] + 1;
  }
}

struct Tally {
  BigInt convex_gons, nonconvex_gons, convex_holes, nonconvex_holes;
};

KCensus census_impl(const PointSet& s, int k, bool need_nonconvex, bool with_holes, int jobs) {
  require_countable(s, "gon counting");
  long long n = static_cast<long long>(s.size());
  if (k < 3 || k > n) fail(Errc::invalid_argument, "k out of range [3, n]");
  OrientCache oc(s);

  std::size_t tasks = static_cast<std::size_t>(n - k + 1);
  Tally total = parallel_reduce<Tally>(
      tasks, jobs, Tally{},
      [&](std::size_t t) {
        std::uint32_t largest = static_cast<std::uint32_t>(k - 1 + static_cast<long long>(t));
        Tally local;
        std::vector<std::uint32_t> subset(static_cast<std::size_t>(k));
        for_each_combination(largest, k - 1, [&](const std::vector<std::uint32_t>& rest) {
          std::copy(rest.begin(), rest.end(), subset.begin());
          subset[static_cast<std::size_t>(k - 1)] = largest;
          auto hull = subset_hull_ccw_impl(oc, subset);
          if (static_cast<int>(hull.size()) == k) {
            local.convex_gons += 1;
            if (with_holes && hull_interior_points(oc, subset, hull).empty())
              local.convex_holes += 1;
            return;
          }
          if (!need_nonconvex) return;
          std::vector<std::uint32_t> inside;
          if (with_holes) inside = hull_interior_points(oc, subset, hull);
          long long holes = 0;
          long long gons = for_each_simple_cycle_impl(
              oc, subset, [&](const std::vector<std::uint32_t>& cycle) {
                if (with_holes && cycle_empty_of(oc, cycle, inside)) ++holes;
                return true;
              });
          local.nonconvex_gons += gons;
          local.nonconvex_holes += holes;
        });
        return local;
      },
      [](Tally& acc, Tally&& part) {
        acc.convex_gons += part.convex_gons;
        acc.nonconvex_gons += part.nonconvex_gons;
        acc.convex_holes += part.convex_holes;
        acc.nonconvex_holes += part.nonconvex_holes;
      });

  KCensus out;
  out.k = k;
  out.with_holes = with_holes;
  out.convex_gons = total.convex_gons;
  out.nonconvex_gons = total.nonconvex_gons;
  out.convex_holes = total.convex_holes;
  out.nonconvex_holes = total.nonconvex_holes;
  return out;
}

}  // namespace

KCensus census_k(const PointSet& s, int k, bool with_holes, int jobs) {
  return census_impl(s, k, true, with_holes, jobs);
}

GonCount count_gons(const PointSet& s, int k, GonClass klass, bool empty_only, int jobs) {
  bool need_nonconvex = klass != GonClass::Convex;
  KCensus c = census_impl(s, k, need_nonconvex, empty_only, jobs);
  GonCount out;
  out.k = k;
  out.klass = klass;
  out.empty_only = empty_only;
  switch (klass) {
    case GonClass::Convex: out.count = empty_only ? c.convex_holes : c.convex_gons; break;
    case GonClass::NonConvex: out.count = empty_only ? c.nonconvex_holes : c.nonconvex_gons; break;
    case GonClass::General: out.count = empty_only ? c.general_holes() : c.general_gons(); break;
  }
  return out;
}

BigInt crossing_number(const PointSet& s, int jobs) {
  require_countable(s, "crossing number");
  long long n = static_cast<long long>(s.size());
  if (n < 4) return 0;
  OrientCache oc(s);
  auto quad_convex = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    return !strictly_inside_triangle_impl(oc, a, b, c, d) &&
           !strictly_inside_triangle_impl(oc, a, b, d, c) &&
           !strictly_inside_triangle_impl(oc, a, c, d, b) &&
           !strictly_inside_triangle_impl(oc, b, c, d, a);
  };
  return parallel_reduce<BigInt>(
      static_cast<std::size_t>(n - 3), jobs, BigInt(0),
      [&](std::size_t t) {
        std::uint32_t d = static_cast<std::uint32_t>(t + 3);
        long long cnt = 0;
        for (std::uint32_t a = 0; a + 2 < d; ++a)
          for (std::uint32_t b = a + 1; b + 1 < d; ++b)
            for (std::uint32_t c = b + 1; c < d; ++c)
              if (quad_convex(a, b, c, d)) ++cnt;
        return BigInt(cnt);
      },
      [](BigInt& acc, BigInt&& part) { acc += part; });
}

BigInt polygonization_count(const PointSet& s, int jobs) {
  require_countable(s, "polygonization counting");
  long long n = static_cast<long long>(s.size());
  if (n < 3) fail(Errc::invalid_argument, "need at least 3 points");
  OrientCache oc(s);
  std::vector<std::uint32_t> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  auto hull = subset_hull_ccw_impl(oc, all);
  if (hull.size() == all.size()) return 1;  // convex position: unique spanning cycle
  return parallel_reduce<BigInt>(
      static_cast<std::size_t>(n - 1), jobs, BigInt(0),
      [&](std::size_t t) {
        long long c = detail::for_each_simple_cycle_impl(
            oc, all, [](const std::vector<std::uint32_t>&) { return true; },
            static_cast<int>(t) + 1);
        return BigInt(c);
      },
      [](BigInt& acc, BigInt&& part) { acc += part; });
}

BigInt count_islands(const PointSet& s, int k, int jobs) {
  require_countable(s, "island counting");
  long long n = static_cast<long long>(s.size());
  if (k < 1 || k > n) fail(Errc::invalid_argument, "k out of range [1, n]");
  if (k == 1) return n;
  if (k == 2) return binomial(n, 2);  // general position: no blocked pairs
  OrientCache oc(s);
  return parallel_reduce<BigInt>(
      static_cast<std::size_t>(n - k + 1), jobs, BigInt(0),
      [&](std::size_t t) {
        std::uint32_t largest = static_cast<std::uint32_t>(k - 1 + static_cast<long long>(t));
        long long cnt = 0;
        std::vector<std::uint32_t> subset(static_cast<std::size_t>(k));
        for_each_combination(largest, k - 1, [&](const std::vector<std::uint32_t>& rest) {
          std::copy(rest.begin(), rest.end(), subset.begin());
          subset[static_cast<std::size_t>(k - 1)] = largest;
          auto hull = subset_hull_ccw_impl(oc, subset);
          if (hull_interior_points(oc, subset, hull).empty()) ++cnt;
        });
        return BigInt(cnt);
      },
      [](BigInt& acc, BigInt&& part) { acc += part; });
}

long long empty_triangles_on_segment(const PointSet& s, std::size_t p, std::size_t q) {
  require_countable(s, "segment triangle counting");
  std::size_t n = s.size();
  if (p >= n || q >= n || p == q) fail(Errc::invalid_argument, "segment endpoints out of range");
  OrientCache oc(s);
  long long cnt = 0;
  for (std::uint32_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    bool empty = true;
    for (std::uint32_t t = 0; t < n && empty; ++t) {
      if (t == p || t == q || t == r) continue;
      empty = !strictly_inside_triangle_impl(oc, p, q, r, t);
    }
    if (empty) ++cnt;
  }
  return cnt;
}

BigInt representation_count_nonconvex(const PointSet& s, int k) {
  require_countable(s, "representation counting");
  long long n = static_cast<long long>(s.size());
  if (k < 4 || k > n) fail(Errc::invalid_argument, "k out of range [4, n]");
  OrientCache oc(s);
  std::size_t m = static_cast<std::size_t>(k - 1);  // prefix length
  std::vector<std::uint32_t> path(m);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  BigInt total = 0;

  auto complete = [&]() {
    // Prefix cycle must be simple: closing edge against interior edges.
    for (std::size_t j = 1; j + 2 < m; ++j)
      if (edges_cross(oc, path[m - 1], path[0], path[j], path[j + 1])) return;
    if (signed_area_sign_impl(s, path) <= 0) return;  // CCW prefixes only

    int completions = 0;
    for (std::uint32_t w = 0; w < static_cast<std::uint32_t>(n); ++w) {
      if (used[w]) continue;
      if (oc.sign(path[m - 1], w, path[0]) >= 0) continue;  // must turn reflex at w
      bool ok = true;
      for (std::size_t j = 0; ok && j + 1 < m; ++j) {
        if (j + 2 < m && edges_cross(oc, path[m - 1], w, path[j], path[j + 1])) ok = false;
        if (ok && j >= 1 && edges_cross(oc, w, path[0], path[j], path[j + 1])) ok = false;
      }
      if (!ok) continue;
      std::vector<std::uint32_t> cycle(path);
      cycle.push_back(w);
      if (signed_area_sign_impl(s, cycle) <= 0) continue;
      std::vector<std::uint32_t> outside;
      for (std::uint32_t t = 0; t < static_cast<std::uint32_t>(n); ++t)
        if (!used[t] && t != w) outside.push_back(t);
      if (!cycle_empty_of(oc, cycle, outside)) continue;
      ++completions;
    }
    if (completions > 1)
      fail(Errc::internal, "reflex completion not unique for a prefix");
    total += completions;
  };

  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (depth == m) {
      complete();
      return;
    }
    for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(n); ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; ok && j + 2 < depth; ++j)
        ok = !edges_cross(oc, path[depth - 1], c, path[j], path[j + 1]);
      if (!ok) continue;
      path[depth] = c;
      used[c] = 1;
      self(self, depth + 1);
      used[c] = 0;
    }
  };
  dfs(dfs, 0);
  return total;
}

int min_khole_witnesses(const PointSet& s, int k) {
  require_countable(s, "witness counting");
  long long n = static_cast<long long>(s.size());
  if (k < 3 || k > n) fail(Errc::invalid_argument, "k out of range [3, n]");
  OrientCache oc(s);
  std::vector<std::uint32_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return oc.lex_rank(a) < oc.lex_rank(b); });

  int witnesses = 0;
  for (long long i = 0; i + k - 1 < n; ++i) {
    for (long long j = i + k - 1; j < n; ++j) {
      std::uint32_t pi = order[static_cast<std::size_t>(i)];
      std::uint32_t pj = order[static_cast<std::size_t>(j)];
      // k-2 slab points nearest to the segment's supporting line.
      std::vector<std::pair<BigInt, long long>> dist;
      for (long long t = i + 1; t < j; ++t) {
        std::uint32_t pt = order[static_cast<std::size_t>(t)];
        BigInt cr = (s[pj].x - s[pi].x) * (s[pt].y - s[pi].y) -
                    (s[pj].y - s[pi].y) * (s[pt].x - s[pi].x);
        dist.emplace_back(abs(cr), t);
      }
      std::sort(dist.begin(), dist.end());
      std::vector<std::uint32_t> subset{pi, pj};
      for (int t = 0; t < k - 2; ++t)
        subset.push_back(order[static_cast<std::size_t>(dist[static_cast<std::size_t>(t)].second)]);
      std::sort(subset.begin(), subset.end());

      std::vector<std::uint32_t> others;
      for (std::uint32_t t = 0; t < static_cast<std::uint32_t>(n); ++t)
        if (std::find(subset.begin(), subset.end(), t) == subset.end()) others.push_back(t);

      bool found = false;
      detail::for_each_simple_cycle_impl(oc, subset, [&](const std::vector<std::uint32_t>& cyc) {
        if (found) return false;
        if (cycle_empty_of(oc, cyc, others)) found = true;
        return found;
      });
      if (found) ++witnesses;
    }
  }
  return witnesses;
}

}  // namespace kgon::census
