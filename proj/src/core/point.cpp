#include "core/point.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "core/error.hpp"

namespace kgon {

namespace {
constexpr std::int64_t kSmallLimit = std::int64_t(1) << 30;
}

void Point::cache_small() {
  small = x >= -kSmallLimit && x <= kSmallLimit && y >= -kSmallLimit && y <= kSmallLimit;
  if (small) {
    xs = static_cast<std::int64_t>(x);
    ys = static_cast<std::int64_t>(y);
  }
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  if (p.small && q.small && r.small) {
    // |coords| <= 2^30, so the determinant fits comfortably in 128 bits.
    __int128 d = (__int128)(q.xs - p.xs) * (r.ys - p.ys) -
                 (__int128)(q.ys - p.ys) * (r.xs - p.xs);
    return d > 0 ? Orientation::CCW : d < 0 ? Orientation::CW : Orientation::COLLINEAR;
  }
  BigInt d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  int s = d.sign();
  return s > 0 ? Orientation::CCW : s < 0 ? Orientation::CW : Orientation::COLLINEAR;
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  return orientation(p, q, r) == Orientation::COLLINEAR;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (!collinear(a, b, p)) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orientation_sign(a, b, c);
  int o2 = orientation_sign(a, b, d);
  int o3 = orientation_sign(c, d, a);
  int o4 = orientation_sign(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orientation_sign(a, b, c);
  int o2 = orientation_sign(a, b, d);
  int o3 = orientation_sign(c, d, a);
  int o4 = orientation_sign(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

PointSet::PointSet(std::vector<Point> points, bool collinear_allowed)
    : points_(std::move(points)), collinear_allowed_(collinear_allowed) {
  std::vector<const Point*> sorted;
  sorted.reserve(points_.size());
  for (const Point& p : points_) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(), [](const Point* a, const Point* b) { return *a < *b; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (*sorted[i] == *sorted[i - 1])
      fail(Errc::degenerate, "duplicate point " + sorted[i]->x.str() + " " + sorted[i]->y.str());

  all_small_ = true;
  for (const Point& p : points_) all_small_ = all_small_ && p.small;

  if (!collinear_allowed_) {
    std::size_t n = points_.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (collinear(points_[i], points_[j], points_[k]))
            fail(Errc::degenerate, "collinear triple at indices " + std::to_string(i) + "," +
                                       std::to_string(j) + "," + std::to_string(k));
  }
}

bool is_general_position(const PointSet& s) {
  std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (collinear(s[i], s[j], s[k])) return false;
  return true;
}

namespace {

BigInt parse_bigint(const std::string& tok, std::size_t line_no) {
  if (tok.empty()) fail(Errc::parse, "empty coordinate on line " + std::to_string(line_no));
  std::size_t i = tok[0] == '-' || tok[0] == '+' ? 1 : 0;
  if (i == tok.size()) fail(Errc::parse, "bad integer '" + tok + "' on line " + std::to_string(line_no));
  for (; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9')
      fail(Errc::parse, "bad integer '" + tok + "' on line " + std::to_string(line_no));
  return BigInt(tok);
}

}  // namespace

PointSet PointSet::parse(const std::string& text, bool collinear_allowed) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<Point> pts;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string tok;
      ls >> tok;
      BigInt count = parse_bigint(tok, line_no);
      if (count < 0 || count > 1000000) fail(Errc::parse, "unreasonable point count on line " + std::to_string(line_no));
      n = static_cast<long long>(count);
      std::string extra;
      if (ls >> extra) fail(Errc::parse, "trailing data on count line " + std::to_string(line_no));
      continue;
    }
    std::string sx, sy, extra;
    if (!(ls >> sx >> sy)) fail(Errc::parse, "expected 'x y' on line " + std::to_string(line_no));
    if (ls >> extra) fail(Errc::parse, "trailing data on line " + std::to_string(line_no));
    pts.emplace_back(parse_bigint(sx, line_no), parse_bigint(sy, line_no));
  }
  if (n < 0) fail(Errc::parse, "missing point count line");
  if (static_cast<long long>(pts.size()) != n)
    fail(Errc::parse, "expected " + std::to_string(n) + " points, got " + std::to_string(pts.size()));
  return PointSet(std::move(pts), collinear_allowed);
}

PointSet PointSet::read_file(const std::string& path, bool collinear_allowed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), collinear_allowed);
}

std::string PointSet::to_text() const {
  std::ostringstream out;
  out << points_.size() << "\n";
  for (const Point& p : points_) out << p.x.str() << " " << p.y.str() << "\n";
  return out.str();
}

void PointSet::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io, "cannot open " + path + " for writing");
  out << to_text();
  if (!out) fail(Errc::io, "write failed for " + path);
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << "(" << p.x.str() << "," << p.y.str() << ")";
}

}  // namespace kgon
