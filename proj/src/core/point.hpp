#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "core/bigint.hpp"

namespace kgon {

// Exact planar point. Coordinates are arbitrary-precision integers; a cached
// fixed-width copy backs the fast orientation path when the value fits.
struct Point {
  BigInt x;
  BigInt y;
  std::int64_t xs = 0;
  std::int64_t ys = 0;
  bool small = false;  // both coordinates in [-2^30, 2^30]

  Point() = default;
  Point(BigInt px, BigInt py) : x(std::move(px)), y(std::move(py)) { cache_small(); }
  Point(std::int64_t px, std::int64_t py) : Point(BigInt(px), BigInt(py)) {}

  void cache_small();

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  bool operator<(const Point& o) const { return x != o.x ? x < o.x : y < o.y; }
};

enum class Orientation : int { CW = -1, COLLINEAR = 0, CCW = 1 };

// Sign of det(q - p, r - p), exact for any integer magnitude.
Orientation orientation(const Point& p, const Point& q, const Point& r);
inline int orientation_sign(const Point& p, const Point& q, const Point& r) {
  return static_cast<int>(orientation(p, q, r));
}

bool collinear(const Point& p, const Point& q, const Point& r);

// Closed segment [a,b] contains p (p collinear with a,b required by caller
// or checked here; exact).
bool on_segment(const Point& a, const Point& b, const Point& p);

// Whether closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

// Proper crossing: intersection in the relative interior of both segments.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

// Ordered set of distinct points. General position (no three collinear) is
// validated on construction unless the set is explicitly flagged as a
// collinear-allowed configuration (integer grids).
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points, bool collinear_allowed = false);

  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  bool collinear_allowed() const { return collinear_allowed_; }
  bool all_small() const { return all_small_; }

  // Text format: optional '#' comments, a count line, then "x y" lines.
  static PointSet parse(const std::string& text, bool collinear_allowed = false);
  static PointSet read_file(const std::string& path, bool collinear_allowed = false);
  std::string to_text() const;
  void write_file(const std::string& path) const;

 private:
  std::vector<Point> points_;
  bool collinear_allowed_ = false;
  bool all_small_ = false;
};

bool is_general_position(const PointSet& s);

std::ostream& operator<<(std::ostream& os, const Point& p);

}  // namespace kgon
