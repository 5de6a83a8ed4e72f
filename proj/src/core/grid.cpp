#include "core/grid.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"
#include "core/parallel.hpp"
#include "core/polygon.hpp"

namespace kgon::grid {

namespace {

long long to_ll(const BigInt& v) { return static_cast<long long>(v); }

bool in_grid(const GridSpec& g, const BigInt& x, const BigInt& y) {
  return x >= 0 && x < g.m && y >= 0 && y < g.m;
}

Point grid_point(long long m, long long idx) { return Point(idx % m, idx / m); }

}  // namespace

bool is_prime_segment(const Point& p, const Point& q) {
  if (p == q) fail(Errc::invalid_argument, "prime segment needs distinct endpoints");
  BigInt dx = abs(q.x - p.x);
  BigInt dy = abs(q.y - p.y);
  return boost::multiprecision::gcd(dx, dy) == 1;
}

long long collinear_grid_points(const GridSpec& g, const Point& p, const Point& q) {
  if (!in_grid(g, p.x, p.y) || !in_grid(g, q.x, q.y))
    fail(Errc::precondition, "segment endpoints must lie in the grid");
  if (p == q) fail(Errc::invalid_argument, "need distinct endpoints");
  BigInt dx = q.x - p.x;
  BigInt dy = q.y - p.y;
  BigInt gdiv = boost::multiprecision::gcd(abs(dx), abs(dy));
  dx /= gdiv;
  dy /= gdiv;
  long long count = 1;
  for (BigInt x = p.x + dx, y = p.y + dy; in_grid(g, x, y); x += dx, y += dy) ++count;
  for (BigInt x = p.x - dx, y = p.y - dy; in_grid(g, x, y); x -= dx, y -= dy) ++count;
  return count;
}

long long euler_phi(long long d) {
  if (d < 1) fail(Errc::invalid_argument, "phi needs d >= 1");
  long long result = d;
  long long rest = d;
  for (long long f = 2; f * f <= rest; ++f) {
    if (rest % f != 0) continue;
    result -= result / f;
    while (rest % f == 0) rest /= f;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

long long prime_partners_at_distance(const GridSpec& g, const Point& p, long long d) {
  if (!in_grid(g, p.x, p.y)) fail(Errc::precondition, "p must lie in the grid");
  long long lo = g.m / 3;
  long long hi = g.m - g.m / 3 - 1;
  long long px = to_ll(p.x), py = to_ll(p.y);
  if (px < lo || px > hi || py < lo || py > hi)
    fail(Errc::precondition, "p must lie in the central third of the grid");
  if (d < 1 || 3 * d >= g.m) fail(Errc::precondition, "need 1 <= d < m/3");
  long long count = 0;
  for (long long dx = -d; dx <= d; ++dx) {
    for (long long dy = -d; dy <= d; ++dy) {
      if (std::max(std::abs(dx), std::abs(dy)) != d) continue;
      if (std::gcd(std::abs(dx), std::abs(dy)) != 1) continue;
      ++count;
    }
  }
  return count;
}

bool is_cutting_line(const GridSpec& g, const Point& p, const Point& q) {
  if (p == q) fail(Errc::invalid_argument, "need distinct endpoints");
  // Walk the line through the grid's bounding square and look at which of
  // the four sides it leaves through; exact via endpoint substitution.
  BigInt dx = q.x - p.x;
  BigInt dy = q.y - p.y;
  BigInt lo = 0, hi = g.m - 1;
  auto value_y = [&](const BigInt& x) { return std::pair<BigInt, BigInt>(p.y * dx + dy * (x - p.x), dx); };
  if (dx == 0) return true;  // vertical: meets top and bottom sides
  if (dy == 0) return true;  // horizontal: meets left and right sides
  // y(x) = p.y + dy/dx (x - p.x); check both vertical sides.
  auto on_side = [&](const BigInt& x) {
    auto [num, den] = value_y(x);
    if (den < 0) return num >= hi * den && num <= lo * den;
    return num >= lo * den && num <= hi * den;
  };
  if (on_side(lo) && on_side(hi)) return true;
  // Check both horizontal sides: x(y) = p.x + dx/dy (y - p.y).
  auto on_hside = [&](const BigInt& y) {
    BigInt num = p.x * dy + dx * (y - p.y);
    BigInt den = dy;
    if (den < 0) return num >= hi * den && num <= lo * den;
    return num >= lo * den && num <= hi * den;
  };
  return on_hside(lo) && on_hside(hi);
}

BigInt linf_length(const Point& p, const Point& q) {
  return std::max(abs(q.x - p.x), abs(q.y - p.y));
}

bool is_prime_k_hole(const GridSpec& g, const std::vector<Point>& cycle) {
  std::size_t k = cycle.size();
  if (k < 3) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (!is_prime_segment(cycle[i], cycle[(i + 1) % k])) return false;
  Polygon poly(std::vector<Point>(cycle));
  if (!is_simple_polygon(poly)) return false;
  const std::vector<Point>& v = poly.vertices();
  auto tris = ear_clip_triangles(poly);
  BigInt xlo = cycle[0].x, xhi = cycle[0].x, ylo = cycle[0].y, yhi = cycle[0].y;
  for (const Point& p : cycle) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  // Prime edges carry no interior lattice points, so any non-vertex lattice
  // point in the closed polygon is strictly interior.
  for (BigInt y = ylo + 1; y < yhi; ++y) {
    for (BigInt x = xlo + 1; x < xhi; ++x) {
      Point cand(x, y);
      if (std::find(v.begin(), v.end(), cand) != v.end()) continue;
      for (const auto& t : tris) {
        if (orientation_sign(v[t[0]], v[t[1]], cand) >= 0 &&
            orientation_sign(v[t[1]], v[t[2]], cand) >= 0 &&
            orientation_sign(v[t[2]], v[t[0]], cand) >= 0)
          return false;
      }
    }
  }
  return true;
}

namespace {

// DFS over cyclic orders of a lattice subset with prime-edge and
// intersection pruning; full validation happens on the completed cycle.
long long count_cycles_for_subset(const GridSpec& g, const std::vector<Point>& pts) {
  std::size_t k = pts.size();
  std::vector<std::size_t> path{0};
  std::vector<char> used(k, 0);
  used[0] = 1;
  long long found = 0;

  auto edge_ok = [&](std::size_t tail, std::size_t cand) {
    if (!is_prime_segment(pts[tail], pts[cand])) return false;
    for (std::size_t j = 0; j + 2 < path.size(); ++j)
      if (segments_intersect(pts[tail], pts[cand], pts[path[j]], pts[path[j + 1]])) return false;
    return true;
  };

  auto dfs = [&](auto&& self) -> void {
    if (path.size() == k) {
      if (path[1] > path[k - 1]) return;  // direction normalization
      std::vector<Point> cycle;
      cycle.reserve(k);
      for (std::size_t i : path) cycle.push_back(pts[i]);
      if (is_prime_k_hole(g, cycle)) ++found;
      return;
    }
    for (std::size_t c = 1; c < k; ++c) {
      if (used[c]) continue;
      if (!edge_ok(path.back(), c)) continue;
      path.push_back(c);
      used[c] = 1;
      self(self);
      path.pop_back();
      used[c] = 0;
    }
  };
  dfs(dfs);
  return found;
}

}  // namespace

BigInt count_prime_k_holes(const GridSpec& g, int k, int jobs, int k_cap) {
  if (g.m < 2) fail(Errc::invalid_argument, "grid needs m >= 2");
  long long n = g.m * g.m;
  if (k < 3 || k > n) fail(Errc::invalid_argument, "k out of range");
  if (k > k_cap)
    fail(Errc::precondition,
         "k exceeds the enumeration cap (" + std::to_string(k_cap) + "); raise the cap to force");

  return parallel_reduce<BigInt>(
      static_cast<std::size_t>(n - k + 1), jobs, BigInt(0),
      [&](std::size_t t) {
        long long largest = k - 1 + static_cast<long long>(t);
        long long cnt = 0;
        std::vector<std::uint32_t> rest(static_cast<std::size_t>(k - 1));
        std::iota(rest.begin(), rest.end(), 0);
        std::vector<Point> pts(static_cast<std::size_t>(k));
        for (;;) {
          for (int i = 0; i < k - 1; ++i) pts[static_cast<std::size_t>(i)] = grid_point(g.m, rest[static_cast<std::size_t>(i)]);
          pts[static_cast<std::size_t>(k - 1)] = grid_point(g.m, largest);
          cnt += count_cycles_for_subset(g, pts);
          int i = k - 2;
          while (i >= 0 && rest[static_cast<std::size_t>(i)] ==
                               static_cast<std::uint32_t>(largest - (k - 1 - i))) --i;
          if (i < 0) break;
          ++rest[static_cast<std::size_t>(i)];
          for (int j = i + 1; j < k - 1; ++j)
            rest[static_cast<std::size_t>(j)] = rest[static_cast<std::size_t>(j - 1)] + 1;
        }
        return BigInt(cnt);
      },
      [](BigInt& acc, BigInt&& part) { acc += part; });
}

RowStructuredResult count_row_structured_prime_holes(const GridSpec& g, int k) {
  if (g.m < 2) fail(Errc::invalid_argument, "grid needs m >= 2");
  if (k < 3) fail(Errc::invalid_argument, "k must be at least 3");
  long long m = g.m;
  long long rows_above = k / 2;  // rows used = rows_above + 1
  if (rows_above + 1 > m) fail(Errc::invalid_argument, "k too large for this grid");
  bool top_pair = k % 2 == 1;
  long long middle_rows = rows_above - 1;

  RowStructuredResult res;
  BigInt bound = m - rows_above;
  for (long long r = 0; r < rows_above + 1; ++r) bound *= m - 1;
  res.bound = bound;

  std::vector<long long> mid(static_cast<std::size_t>(middle_rows), 0);
  for (long long base = 0; base + rows_above < m; ++base) {
    for (long long xb = 0; xb < m; ++xb) {
      std::fill(mid.begin(), mid.end(), 0);
      for (;;) {
        long long top_limit = top_pair ? m - 1 : m;
        for (long long xt = 0; xt < top_limit; ++xt) {
          std::vector<Point> cycle;
          cycle.emplace_back(xb, base);
          for (long long r = 0; r < middle_rows; ++r)
            cycle.emplace_back(mid[static_cast<std::size_t>(r)], base + r + 1);
          cycle.emplace_back(xt, base + rows_above);
          if (top_pair) cycle.emplace_back(xt + 1, base + rows_above);
          for (long long r = middle_rows - 1; r >= 0; --r)
            cycle.emplace_back(mid[static_cast<std::size_t>(r)] + 1, base + r + 1);
          ++res.candidates;
          if (is_prime_k_hole(g, cycle))
            res.count += 1;
          else
            ++res.violations;
        }
        // advance middle-row positions (odometer over [0, m-1))
        std::size_t i = 0;
        for (; i < mid.size(); ++i) {
          if (++mid[i] < m - 1) break;
          mid[i] = 0;
        }
        if (i == mid.size()) break;
      }
    }
  }
  return res;
}

SegmentTriangles grid_segment_empty_triangles(const GridSpec& g, const Point& p, const Point& q) {
  if (!in_grid(g, p.x, p.y) || !in_grid(g, q.x, q.y))
    fail(Errc::precondition, "segment endpoints must lie in the grid");
  if (p == q) fail(Errc::invalid_argument, "need distinct endpoints");
  SegmentTriangles out;
  long long m = g.m;
  for (long long i = 0; i < m * m; ++i) {
    Point r = grid_point(m, i);
    if (r == p || r == q) continue;
    if (collinear(p, q, r)) {
      ++out.degenerate;  // no interior to test
      continue;
    }
    int orient = orientation_sign(p, q, r);
    bool empty = true;
    BigInt xlo = std::min({p.x, q.x, r.x}), xhi = std::max({p.x, q.x, r.x});
    BigInt ylo = std::min({p.y, q.y, r.y}), yhi = std::max({p.y, q.y, r.y});
    for (BigInt y = ylo; y <= yhi && empty; ++y) {
      for (BigInt x = xlo; x <= xhi && empty; ++x) {
        Point t(x, y);
        if (t == p || t == q || t == r) continue;
        if (orientation_sign(p, q, t) == orient && orientation_sign(q, r, t) == orient &&
            orientation_sign(r, p, t) == orient)
          empty = false;
      }
    }
    if (empty) ++out.nondegenerate;
  }
  return out;
}

}  // namespace kgon::grid
