#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/bigint.hpp"
#include "core/orient_cache.hpp"
#include "core/point.hpp"

namespace kgon::census {

enum class GonClass { Convex, NonConvex, General };

GonClass gon_class_from_string(const std::string& s);
std::string to_string(GonClass c);

struct GonCount {
  int k = 0;
  GonClass klass = GonClass::General;
  bool empty_only = false;
  BigInt count;
};

// All convex/non-convex gon and hole counts for one k in a single pass.
struct KCensus {
  int k = 0;
  bool with_holes = false;
  BigInt convex_gons;
  BigInt nonconvex_gons;
  BigInt convex_holes;
  BigInt nonconvex_holes;

  BigInt general_gons() const { return convex_gons + nonconvex_gons; }
  BigInt general_holes() const { return convex_holes + nonconvex_holes; }
};

KCensus census_k(const PointSet& s, int k, bool with_holes, int jobs = 0);

GonCount count_gons(const PointSet& s, int k, GonClass klass, bool empty_only, int jobs = 0);

// Number of 4-subsets in convex position.
BigInt crossing_number(const PointSet& s, int jobs = 0);

// Simple spanning cycles; equals count_gons at k = n.
BigInt polygonization_count(const PointSet& s, int jobs = 0);

// k-subsets whose convex hull contains no outside point of the set.
BigInt count_islands(const PointSet& s, int k, int jobs = 0);

// Number of r in S spanning with segment (p,q) a triangle empty of S.
long long empty_triangles_on_segment(const PointSet& s, std::size_t p, std::size_t q);

// Ordered-sequence representations of non-convex k-holes: a CCW simple
// (k-1)-gon prefix plus the unique reflex, emptiness-preserving completion.
// Throws if some prefix admits more than one completion.
BigInt representation_count_nonconvex(const PointSet& s, int k);

// For every x-sorted index pair (i,j) with j-i >= k-1, search the k-subset
// made of p_i, p_j and the k-2 points nearest to segment p_i p_j for a
// k-hole of S; returns the number of pairs for which one exists.
int min_khole_witnesses(const PointSet& s, int k);

// Total number of index pairs examined by min_khole_witnesses.
inline long long min_khole_pair_count(long long n, int k) {
  return (n - k + 1) * (n - k + 2) / 2;
}

}  // namespace kgon::census
