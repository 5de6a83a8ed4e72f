#pragma once

#include <cstdint>
#include <vector>

#include "core/bigint.hpp"
#include "core/point.hpp"

namespace kgon::grid {

struct GridSpec {
  long long m = 0;  // m x m lattice, points (0..m-1)^2
};

// No lattice point strictly between the endpoints, i.e. coprime differences.
bool is_prime_segment(const Point& p, const Point& q);

// Lattice points of the grid on the supporting line of pq (pq included).
long long collinear_grid_points(const GridSpec& g, const Point& p, const Point& q);

long long euler_phi(long long d);

// Points q at L-infinity distance exactly d from p with pq prime. Requires p
// in the central third of the grid and 3d < m, where the full ring fits and
// the count equals 8*phi(d).
long long prime_partners_at_distance(const GridSpec& g, const Point& p, long long d);

// Simple k-vertex lattice cycles with all edges prime and no grid point
// strictly inside. Straight-angle vertices are allowed.
BigInt count_prime_k_holes(const GridSpec& g, int k, int jobs = 0, int k_cap = 6);

struct RowStructuredResult {
  BigInt count;        // validated holes among the enumerated candidates
  BigInt bound;        // (m - floor(k/2)) * (m-1)^(floor(k/2)+1)
  long long candidates = 0;
  long long violations = 0;  // candidates that failed validation
};

// Enumerates the consecutive-row configurations (one bottom point, two
// consecutive points per middle row, one or two on top) and validates each
// candidate as a prime k-hole.
RowStructuredResult count_row_structured_prime_holes(const GridSpec& g, int k);

struct SegmentTriangles {
  long long nondegenerate = 0;
  long long degenerate = 0;  // third point on the supporting line
};

// Grid points r spanning with pq a triangle without grid points strictly
// inside; collinear r are tallied separately.
SegmentTriangles grid_segment_empty_triangles(const GridSpec& g, const Point& p, const Point& q);

// Full validation of one lattice cycle: prime edges, simple, interior-empty.
bool is_prime_k_hole(const GridSpec& g, const std::vector<Point>& cycle);

// Whether the supporting line of pq meets opposite sides of the grid's
// bounding square.
bool is_cutting_line(const GridSpec& g, const Point& p, const Point& q);

// L-infinity length of segment pq.
BigInt linf_length(const Point& p, const Point& q);

}  // namespace kgon::grid
