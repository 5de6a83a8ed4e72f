#include "core/generators.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "core/error.hpp"

namespace kgon::gen {

std::uint64_t uniform_u64(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) fail(Errc::internal, "empty range");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

namespace {

std::int64_t uniform_i64(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform_u64(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

bool general_position_raw(const std::vector<Point>& pts) {
  std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (collinear(pts[i], pts[j], pts[k])) return false;
  return true;
}

}  // namespace

PointSet gen_convex(long long n, std::uint64_t seed) {
  if (n < 3) fail(Errc::invalid_argument, "convex family needs n >= 3");
  std::mt19937_64 rng(seed);
  std::int64_t radius = 4 * n * n;
  std::set<std::int64_t> xs;
  while (static_cast<long long>(xs.size()) < n) xs.insert(uniform_i64(rng, -radius, radius));
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (std::int64_t x : xs) pts.emplace_back(x, x * x);  // strictly convex curve
  return PointSet(std::move(pts));
}

PointSet gen_grid(long long m) {
  if (m < 2) fail(Errc::invalid_argument, "grid needs m >= 2");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(m * m));
  for (long long y = 0; y < m; ++y)
    for (long long x = 0; x < m; ++x) pts.emplace_back(x, y);
  return PointSet(std::move(pts), /*collinear_allowed=*/true);
}

PointSet gen_perturbed_grid(long long m, std::uint64_t seed) {
  if (m < 2) fail(Errc::invalid_argument, "perturbed grid needs m >= 2");
  std::mt19937_64 rng(seed);
  // Offsets stay below step/(8*m^2), small enough that orientations of
  // non-collinear grid triples survive and every prime hole of the grid
  // transfers to the perturbed set.
  std::int64_t step = 8 * m * m * m * m;
  std::int64_t amp = m * m - 1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(m * m));
    for (long long y = 0; y < m; ++y)
      for (long long x = 0; x < m; ++x)
        pts.emplace_back(step * x + uniform_i64(rng, -amp, amp),
                         step * y + uniform_i64(rng, -amp, amp));
    if (general_position_raw(pts)) return PointSet(std::move(pts));
  }
  fail(Errc::internal, "could not reach general position");
}

PointSet gen_double_chain(long long n) {
  if (n < 4) fail(Errc::invalid_argument, "double chain needs n >= 4");
  if (n % 2 != 0) fail(Errc::invalid_argument, "double chain needs even n");
  long long m = n / 2;
  long long gap = 4 * m * m;  // keeps each point below/above all far-chain chords
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (long long i = 1; i <= m; ++i) {
    long long x = 2 * i - m - 1;
    pts.emplace_back(x, x * x);
  }
  for (long long i = 1; i <= m; ++i) {
    long long x = 2 * i - m - 1;
    pts.emplace_back(x, -x * x - gap);
  }
  return PointSet(std::move(pts));
}

namespace {

// Smallest integer vertical shift placing the shifted copy strictly above
// every line through two base points, and the base strictly below every
// line through two shifted points. Lines are evaluated at the other copy's
// x-coordinates; everything in exact rationals.
BigInt required_spread(const std::vector<Point>& base, const std::vector<Point>& shifted_x) {
  BigRat best = 0;
  auto consider = [&](const Point& p, const Point& q, const Point& at, bool above) {
    BigRat line = BigRat(p.y) + BigRat((q.y - p.y) * (at.x - p.x), q.x - p.x);
    BigRat need = above ? line - BigRat(at.y) : BigRat(at.y) - line;
    if (need > best) best = need;
  };
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j)
      for (const Point& b : shifted_x) consider(base[i], base[j], b, true);
  for (std::size_t i = 0; i < shifted_x.size(); ++i)
    for (std::size_t j = i + 1; j < shifted_x.size(); ++j)
      for (const Point& a : base) consider(shifted_x[i], shifted_x[j], a, false);
  BigInt num = boost::multiprecision::numerator(best);
  BigInt den = boost::multiprecision::denominator(best);
  return num / den + 1;
}

}  // namespace

PointSet gen_horton(long long n) {
  if (n < 1 || (n & (n - 1)) != 0) fail(Errc::invalid_argument, "horton needs n = 2^t");
  std::vector<Point> cur{Point(0, 0)};
  while (static_cast<long long>(cur.size()) < n) {
    std::vector<Point> even, odd;
    even.reserve(cur.size());
    odd.reserve(cur.size());
    for (const Point& p : cur) {
      even.emplace_back(2 * p.x, p.y);
      odd.emplace_back(2 * p.x + 1, p.y);
    }
    BigInt d = required_spread(even, odd);
    std::vector<Point> next;
    next.reserve(2 * cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next.push_back(even[i]);
      next.emplace_back(odd[i].x, odd[i].y + d);
    }
    cur = std::move(next);
  }
  return PointSet(std::move(cur));
}

namespace {

struct ClusterLayout {
  std::vector<Point> corner_a, corner_b, corner_c, chain;
};

ClusterLayout cluster_layout(long long q, long long scale_boost) {
  ClusterLayout lay;
  long long t_pow = 1;
  for (long long e = 0; e < (q + 5) / 2; ++e) t_pow *= 2;
  long long T = q * std::max<long long>(128, t_pow) * scale_boost;
  BigInt tb(T);
  for (long long i = 0; i < q; ++i) {
    BigInt ta = -(tb + i);
    lay.corner_a.emplace_back(ta, -ta * ta);
    BigInt tb2 = tb + i;
    lay.corner_b.emplace_back(tb2, -tb2 * tb2);
    BigInt tc = i - q / 2;
    lay.corner_c.emplace_back(tc, -tc * tc);
  }
  // Chain heights fall off geometrically from the head so the head is the
  // unique reflex completion over every corner pair.
  BigInt base = -tb * tb + 3 * q * q;
  BigInt unit = q * q;
  for (long long j = 1; j <= q; ++j) {
    BigInt e = unit;
    for (long long s = 0; s < q + 2 - j; ++s) e *= 2;
    lay.chain.emplace_back(BigInt(4 * (j - 1) - 2 * (q - 1)), base + e);
  }
  return lay;
}

bool cluster_valid(const ClusterLayout& lay) {
  const auto& a = lay.corner_a;
  const auto& b = lay.corner_b;
  const auto& c = lay.corner_c;
  const auto& d = lay.chain;
  std::size_t q = d.size();
  // Chain strictly inside every corner triangle.
  for (const Point& pa : a)
    for (const Point& pb : b)
      for (const Point& pc : c)
        for (const Point& pd : d)
          if (orientation(pa, pb, pd) != Orientation::CCW ||
              orientation(pb, pc, pd) != Orientation::CCW ||
              orientation(pc, pa, pd) != Orientation::CCW)
            return false;
  // Chain tail strictly inside triangle (a, head, b) for every corner pair.
  for (const Point& pa : a)
    for (const Point& pb : b)
      for (std::size_t j = 1; j < q; ++j)
        if (orientation(pa, d[0], d[j]) != Orientation::CW ||
            orientation(pb, d[0], d[j]) != Orientation::CCW)
          return false;
  // Every suffix stays below the chord from any chain point to any b-corner.
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      for (const Point& pb : b)
        if (orientation(d[i], pb, d[j]) != Orientation::CW) return false;
  // Strict convexity of the chain.
  for (std::size_t i = 0; i + 2 < q; ++i)
    if (orientation(d[i], d[i + 1], d[i + 2]) != Orientation::CCW) return false;
  return true;
}

}  // namespace

PointSet gen_cluster(long long n, int k) {
  if (k < 4) fail(Errc::invalid_argument, "cluster family needs k >= 4");
  if (n < 4 * k || n % 4 != 0)
    fail(Errc::invalid_argument, "cluster family needs n divisible by 4 and n >= 4k");
  long long q = n / 4;
  for (long long boost = 1; boost <= 1LL << 20; boost *= 2) {
    ClusterLayout lay = cluster_layout(q, boost);
    if (!cluster_valid(lay)) continue;
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (const Point& p : lay.corner_a) pts.push_back(p);
    for (const Point& p : lay.chain) pts.push_back(p);
    for (const Point& p : lay.corner_b) pts.push_back(p);
    for (const Point& p : lay.corner_c) pts.push_back(p);
    if (!general_position_raw(pts)) continue;
    return PointSet(std::move(pts));
  }
  fail(Errc::internal, "cluster layout did not validate");
}

PointSet gen_random(long long n, std::uint64_t seed, long long box) {
  if (n < 3) fail(Errc::invalid_argument, "random family needs n >= 3");
  if (box <= 0) box = std::max<long long>(4 * n * n, 16);
  if (box < n * n) fail(Errc::precondition, "box side must be at least n^2");
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  long long attempts = 0;
  long long max_attempts = 400 * n + 1000;
  while (static_cast<long long>(pts.size()) < n) {
    if (++attempts > max_attempts)
      fail(Errc::precondition, "box too small to reach general position");
    Point cand(uniform_i64(rng, 0, box - 1), uniform_i64(rng, 0, box - 1));
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      if (pts[i] == cand) ok = false;
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j)
        if (collinear(pts[i], pts[j], cand)) ok = false;
    }
    if (ok) pts.push_back(cand);
  }
  return PointSet(std::move(pts));
}

PointSet generate(const GeneratorSpec& spec) {
  const std::string& f = spec.family;
  if (f == "convex") return gen_convex(spec.n, spec.seed);
  if (f == "grid") return gen_grid(spec.m > 0 ? spec.m : spec.n);
  if (f == "perturbed_grid") return gen_perturbed_grid(spec.m > 0 ? spec.m : spec.n, spec.seed);
  if (f == "double_chain") return gen_double_chain(spec.n);
  if (f == "horton") return gen_horton(spec.n);
  if (f == "cluster") return gen_cluster(spec.n, spec.k);
  if (f == "random") return gen_random(spec.n, spec.seed, spec.box);
  fail(Errc::invalid_argument, "unknown family '" + f + "'");
}

}  // namespace kgon::gen
