#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "core/point.hpp"

namespace kgon {

enum class Containment { INSIDE, BOUNDARY, OUTSIDE };

// Cyclic vertex sequence, stored in canonical form: CCW when the cycle is
// simple, start rotated to the lexicographically smallest vertex. Two
// polygons describe the same undirected cycle iff their stored vertex
// sequences are equal.
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Point> vertices);

  std::size_t size() const { return verts_.size(); }
  const Point& operator[](std::size_t i) const { return verts_[i]; }
  const std::vector<Point>& vertices() const { return verts_; }

  bool operator==(const Polygon& o) const { return verts_ == o.verts_; }
  bool operator!=(const Polygon& o) const { return !(*this == o); }

 private:
  std::vector<Point> verts_;
};

Polygon canonicalize_polygon(const Polygon& poly);

// No two non-adjacent edges share a point; adjacent edges meet exactly in
// their common vertex. Straight-angle vertices are allowed (lattice cycles),
// collinear edge overlaps are not.
bool is_simple_polygon(const Polygon& poly);

// Exact classification via ear-clipping triangulation plus per-edge boundary
// tests. Throws for non-simple input.
Containment point_in_polygon(const Point& p, const Polygon& poly);

// Indices of vertices with interior angle > pi. Requires a simple polygon;
// orientation is normalized internally.
std::vector<std::size_t> reflex_vertices(const Polygon& poly);

// Twice the signed area of the cyclic sequence.
BigInt signed_area_2(const std::vector<Point>& cycle);

struct HullResult {
  Polygon hull;                       // CCW cycle of extreme points
  std::vector<Point> boundary_extra;  // collinear points on the hull boundary
};

// Convex hull of at least three points; collinear boundary points are
// excluded from the cycle and reported separately.
HullResult convex_hull(const PointSet& s);

// True iff every point is a hull vertex. Throws on collinear triples.
bool is_convex_position(const std::vector<Point>& points);

// Triangulation fans (index triples into the polygon's vertex list) from
// ear clipping; straight-angle vertices are dropped before clipping.
std::vector<std::array<std::size_t, 3>> ear_clip_triangles(const Polygon& poly);

}  // namespace kgon
