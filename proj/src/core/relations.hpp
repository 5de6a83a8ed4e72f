#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/bigint.hpp"
#include "core/census.hpp"
#include "core/point.hpp"

namespace kgon::rel {

// Gon counts and crossing number of one k-point configuration.
struct Profile {
  long long g_conv = 0;
  long long g_nonconv = 0;
  long long g_gen = 0;
  long long cr = 0;
  auto operator<=>(const Profile&) const = default;
};

struct ProfileSpace {
  int k = 0;
  std::vector<Profile> profiles;  // sorted, deduplicated
  std::string provenance;
  bool complete = false;
};

Profile profile_of(const PointSet& pts);

// All profiles of general-position k-subsets of the m x m grid; subsets with
// identical triple-orientation signatures share one profile computation.
ProfileSpace profile_space_grid(int k, long long m, int jobs = 0);

// Random k-point sets until `patience` consecutive samples add nothing new.
ProfileSpace profile_space_random(int k, long long patience, std::uint64_t seed, int jobs = 0);

// Profiles of every record of an order-type database file with n = k points.
ProfileSpace profile_space_db(int k, const std::string& file, int jobs = 0);

// Order-type database reader: fixed-size records of n points, coordinates
// one unsigned byte for n <= 8 and two little-endian bytes for n in {9,10}.
// The record count is validated against the published database cardinality.
void for_each_db_record(const std::string& file, int n,
                        const std::function<void(PointSet&&, std::size_t)>& fn);
std::vector<PointSet> read_order_type_db(const std::string& file, int n);
long long order_type_count(int n);

struct LinearRelation {
  int k = 0;
  census::GonClass klass = census::GonClass::General;
  BigRat c1, c2, x;  // c1 <= g + x*cr <= c2 over the source space
};

struct BoundRelation {
  int k = 0;
  census::GonClass klass = census::GonClass::General;
  BigRat c, x;          // one-sided constant and multiplier
  BigRat coefficient;   // c -/+ x * c4 * C(k,4)
};

// Exact interval bounds of the minimum rectilinear crossing constant.
BigRat c4_interval_lower();
BigRat c4_interval_upper();

// Minimize c2 - c1 subject to c1 <= g + x*cr <= c2 over all profiles; the
// objective is piecewise linear in x, so the optimum sits on a pairwise
// line intersection. Ties resolved by smallest |x|, then smallest x.
LinearRelation optimize_tight(const ProfileSpace& space, census::GonClass klass);

// Minimize c2 - x*c4*C(k,4) over x >= 0 with c2 = max(g + x*cr).
BoundRelation optimize_upper(const ProfileSpace& space, census::GonClass klass, const BigRat& c4);

// Maximize c1 - x*c4*C(k,4) over x <= 0 with c1 = min(g + x*cr).
BoundRelation optimize_lower(const ProfileSpace& space, census::GonClass klass, const BigRat& c4);

// Bounds c1*C(n,k) - x*C(n-4,k-4)*cr and the analogous c2 expression.
std::pair<BigRat, BigRat> evaluate_relation(const LinearRelation& rel, long long n,
                                            const BigInt& cr);

// Known exact tight relations for small k, for cross-checks and reports.
std::optional<LinearRelation> reference_tight_relation(int k, census::GonClass klass);

long long profile_gon_count(const Profile& p, census::GonClass klass);

}  // namespace kgon::rel
