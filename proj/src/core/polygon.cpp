#include "core/polygon.hpp"

#include <algorithm>
#include <array>

#include "core/error.hpp"

namespace kgon {

BigInt signed_area_2(const std::vector<Point>& cycle) {
  BigInt a = 0;
  std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = cycle[i];
    const Point& q = cycle[(i + 1) % n];
    a += p.x * q.y - q.x * p.y;
  }
  return a;
}

namespace {

std::vector<Point> min_rotation(const std::vector<Point>& cycle) {
  std::size_t n = cycle.size();
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = cycle[(s + i) % n];
      const Point& b = cycle[(best + i) % n];
      if (a < b) {
        best = s;
        break;
      }
      if (b < a) break;
    }
  }
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(cycle[(best + i) % n]);
  return out;
}

std::vector<Point> canonical_cycle(std::vector<Point> cycle) {
  if (cycle.size() < 3) return cycle;
  BigInt a2 = signed_area_2(cycle);
  if (a2 < 0) {
    std::reverse(cycle.begin(), cycle.end());
    return min_rotation(cycle);
  }
  if (a2 > 0) return min_rotation(cycle);
  // Zero area (self-crossing or fully degenerate): minimum over both
  // directions keeps canonicalization total.
  std::vector<Point> fwd = min_rotation(cycle);
  std::reverse(cycle.begin(), cycle.end());
  std::vector<Point> rev = min_rotation(cycle);
  return std::lexicographical_compare(fwd.begin(), fwd.end(), rev.begin(), rev.end()) ? fwd : rev;
}

}  // namespace

Polygon::Polygon(std::vector<Point> vertices) {
  if (vertices.size() < 3) fail(Errc::degenerate, "polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j]) fail(Errc::degenerate, "repeated polygon vertex");
  verts_ = canonical_cycle(std::move(vertices));
}

Polygon canonicalize_polygon(const Polygon& poly) {
  return poly;  // construction already canonicalizes; idempotent by identity
}

bool is_simple_polygon(const Polygon& poly) {
  const std::vector<Point>& v = poly.vertices();
  std::size_t n = v.size();
  // Adjacent edges may only meet in the shared vertex: a collinear pair
  // pointing the same way from that vertex overlaps along a segment.
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = v[(i + n - 1) % n];
    const Point& cur = v[i];
    const Point& next = v[(i + 1) % n];
    if (collinear(prev, cur, next)) {
      BigInt dot = (prev.x - cur.x) * (next.x - cur.x) + (prev.y - cur.y) * (next.y - cur.y);
      if (dot > 0) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) return false;
    }
  }
  return true;
}

std::vector<std::array<std::size_t, 3>> ear_clip_triangles(const Polygon& poly) {
  const std::vector<Point>& v = poly.vertices();
  // Canonical storage is CCW for simple polygons. Straight-angle vertices
  // carry no area; drop them before clipping.
  std::vector<std::size_t> idx;
  std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = v[(i + n - 1) % n];
    const Point& next = v[(i + 1) % n];
    if (!collinear(prev, v[i], next)) idx.push_back(i);
  }
  std::vector<std::array<std::size_t, 3>> tris;
  while (idx.size() > 3) {
    bool clipped = false;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      std::size_t ip = idx[(k + idx.size() - 1) % idx.size()];
      std::size_t ic = idx[k];
      std::size_t in = idx[(k + 1) % idx.size()];
      if (orientation(v[ip], v[ic], v[in]) != Orientation::CCW) continue;
      bool blocked = false;
      for (std::size_t other : idx) {
        if (other == ip || other == ic || other == in) continue;
        if (orientation_sign(v[ip], v[ic], v[other]) >= 0 &&
            orientation_sign(v[ic], v[in], v[other]) >= 0 &&
            orientation_sign(v[in], v[ip], v[other]) >= 0) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      tris.push_back({ip, ic, in});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
      clipped = true;
      break;
    }
    if (!clipped) fail(Errc::internal, "ear clipping stalled; polygon not simple?");
  }
  if (idx.size() == 3) tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

Containment point_in_polygon(const Point& p, const Polygon& poly) {
  if (!is_simple_polygon(poly)) fail(Errc::degenerate, "point_in_polygon needs a simple polygon");
  const std::vector<Point>& v = poly.vertices();
  std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i)
    if (on_segment(v[i], v[(i + 1) % n], p)) return Containment::BOUNDARY;
  for (const auto& t : ear_clip_triangles(poly)) {
    if (orientation(v[t[0]], v[t[1]], p) == Orientation::CCW &&
        orientation(v[t[1]], v[t[2]], p) == Orientation::CCW &&
        orientation(v[t[2]], v[t[0]], p) == Orientation::CCW)
      return Containment::INSIDE;
    // Interior triangulation diagonals may pass through p.
    if ((collinear(v[t[0]], v[t[1]], p) && on_segment(v[t[0]], v[t[1]], p)) ||
        (collinear(v[t[1]], v[t[2]], p) && on_segment(v[t[1]], v[t[2]], p)) ||
        (collinear(v[t[2]], v[t[0]], p) && on_segment(v[t[2]], v[t[0]], p)))
      return Containment::INSIDE;
  }
  return Containment::OUTSIDE;
}

std::vector<std::size_t> reflex_vertices(const Polygon& poly) {
  if (!is_simple_polygon(poly)) fail(Errc::degenerate, "reflex_vertices needs a simple polygon");
  const std::vector<Point>& v = poly.vertices();
  std::size_t n = v.size();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (orientation(v[(i + n - 1) % n], v[i], v[(i + 1) % n]) == Orientation::CW) out.push_back(i);
  return out;
}

HullResult convex_hull(const PointSet& s) {
  if (s.size() < 3) fail(Errc::degenerate, "convex hull needs at least 3 points");
  std::vector<Point> pts(s.points());
  std::sort(pts.begin(), pts.end());
  std::size_t n = pts.size();
  std::vector<Point> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orientation_sign(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && orientation_sign(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) fail(Errc::degenerate, "all points collinear");

  HullResult res;
  res.hull = Polygon(h);
  const std::vector<Point>& hv = res.hull.vertices();
  for (const Point& p : pts) {
    if (std::find(hv.begin(), hv.end(), p) != hv.end()) continue;
    for (std::size_t i = 0; i < hv.size(); ++i) {
      if (on_segment(hv[i], hv[(i + 1) % hv.size()], p)) {
        res.boundary_extra.push_back(p);
        break;
      }
    }
  }
  return res;
}

bool is_convex_position(const std::vector<Point>& points) {
  if (points.size() < 3) fail(Errc::degenerate, "need at least 3 points");
  std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (collinear(points[i], points[j], points[k]))
          fail(Errc::degenerate, "collinear triple");
  PointSet s(points);
  return convex_hull(s).hull.size() == n;
}

}  // namespace kgon
