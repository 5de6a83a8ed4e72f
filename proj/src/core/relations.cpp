#include "core/relations.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <set>
#include <unordered_map>

#include "core/census_detail.hpp"
#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/orient_cache.hpp"
#include "core/parallel.hpp"

namespace kgon::rel {

using census::GonClass;

long long profile_gon_count(const Profile& p, GonClass klass) {
  switch (klass) {
    case GonClass::Convex: return p.g_conv;
    case GonClass::NonConvex: return p.g_nonconv;
    default: return p.g_gen;
  }
}

BigRat c4_interval_lower() { return BigRat(379972, 1000000); }
BigRat c4_interval_upper() { return BigRat(380473, 1000000); }

Profile profile_of(const PointSet& pts) {
  int k = static_cast<int>(pts.size());
  if (k < 3) fail(Errc::invalid_argument, "profile needs at least 3 points");
  census::KCensus c = census::census_k(pts, k, /*with_holes=*/false, /*jobs=*/1);
  Profile p;
  p.g_conv = static_cast<long long>(c.convex_gons);
  p.g_nonconv = static_cast<long long>(c.nonconvex_gons);
  p.g_gen = p.g_conv + p.g_nonconv;
  p.cr = static_cast<long long>(census::crossing_number(pts, 1));
  return p;
}

namespace {

// 2-bit sign codes of all C(k,3) subset triples; zero signals a collinear
// triple (subset skipped).
struct Signature {
  std::array<std::uint64_t, 4> w{};
  bool operator==(const Signature& o) const { return w == o.w; }
};

struct SignatureHash {
  std::size_t operator()(const Signature& s) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t x : s.w) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

bool subset_signature(const OrientCache& oc, const std::vector<std::uint32_t>& subset,
                      Signature& out) {
  out.w.fill(0);
  std::size_t bit = 0;
  std::size_t k = subset.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (std::size_t c = b + 1; c < k; ++c) {
        int s = oc.sign(subset[a], subset[b], subset[c]);
        if (s == 0) return false;
        out.w[bit / 32] |= static_cast<std::uint64_t>(s > 0 ? 1 : 2) << (2 * (bit % 32));
        ++bit;
      }
  return true;
}

Profile profile_of_subset(const PointSet& s, const std::vector<std::uint32_t>& subset) {
  std::vector<Point> pts;
  pts.reserve(subset.size());
  for (std::uint32_t i : subset) pts.push_back(s[i]);
  return profile_of(PointSet(std::move(pts)));
}

std::vector<Profile> dedup(std::set<Profile>&& acc) {
  return std::vector<Profile>(acc.begin(), acc.end());
}

}  // namespace

ProfileSpace profile_space_grid(int k, long long m, int jobs) {
  if (k < 3 || k > 10) fail(Errc::invalid_argument, "k out of range [3, 10]");
  if (m < 2) fail(Errc::invalid_argument, "grid needs m >= 2");
  PointSet grid = gen::gen_grid(m);
  long long n = m * m;
  if (k > n) fail(Errc::invalid_argument, "k exceeds grid size");
  OrientCache oc(grid);

  using Memo = std::unordered_map<Signature, Profile, SignatureHash>;
  std::set<Profile> all = parallel_reduce<std::set<Profile>>(
      static_cast<std::size_t>(n - k + 1), jobs, std::set<Profile>{},
      [&](std::size_t t) {
        std::uint32_t largest = static_cast<std::uint32_t>(k - 1 + static_cast<long long>(t));
        Memo memo;
        std::set<Profile> local;
        std::vector<std::uint32_t> subset(static_cast<std::size_t>(k));
        std::vector<std::uint32_t> rest(static_cast<std::size_t>(k - 1));
        std::iota(rest.begin(), rest.end(), 0);
        Signature sig;
        for (;;) {
          std::copy(rest.begin(), rest.end(), subset.begin());
          subset[static_cast<std::size_t>(k - 1)] = largest;
          if (subset_signature(oc, subset, sig)) {
            auto it = memo.find(sig);
            if (it == memo.end()) it = memo.emplace(sig, profile_of_subset(grid, subset)).first;
            local.insert(it->second);
          }
          int i = k - 2;
          while (i >= 0 && rest[static_cast<std::size_t>(i)] ==
                               largest - static_cast<std::uint32_t>(k - 1 - i)) --i;
          if (i < 0) break;
          ++rest[static_cast<std::size_t>(i)];
          for (int j = i + 1; j < k - 1; ++j)
            rest[static_cast<std::size_t>(j)] = rest[static_cast<std::size_t>(j - 1)] + 1;
        }
        return local;
      },
      [](std::set<Profile>& acc, std::set<Profile>&& part) {
        acc.insert(part.begin(), part.end());
      });

  ProfileSpace space;
  space.k = k;
  space.profiles = dedup(std::move(all));
  space.provenance = "exhaustive-grid(" + std::to_string(m) + ")";
  space.complete = k <= 6 && m >= 6;  // small order types realize on a 6x6 grid
  return space;
}

ProfileSpace profile_space_random(int k, long long patience, std::uint64_t seed, int jobs) {
  if (k < 3 || k > 10) fail(Errc::invalid_argument, "k out of range [3, 10]");
  if (patience < 1) fail(Errc::invalid_argument, "patience must be positive");
  (void)jobs;
  std::set<Profile> acc;
  long long since_new = 0;
  std::uint64_t sample = 0;
  long long hard_cap = 60 * patience;
  while (since_new < patience && static_cast<long long>(sample) < hard_cap) {
    PointSet pts = gen::gen_random(k, seed ^ (0x517cc1b727220a95ull * ++sample));
    Profile p = profile_of(pts);
    if (acc.insert(p).second)
      since_new = 0;
    else
      ++since_new;
  }
  ProfileSpace space;
  space.k = k;
  space.profiles = dedup(std::move(acc));
  space.provenance = "random(" + std::to_string(sample) + "," + std::to_string(seed) + ")";
  space.complete = false;
  return space;
}

long long order_type_count(int n) {
  switch (n) {
    case 3: return 1;
    case 4: return 2;
    case 5: return 3;
    case 6: return 16;
    case 7: return 135;
    case 8: return 3315;
    case 9: return 158817;
    case 10: return 14309547;
    default: return -1;
  }
}

void for_each_db_record(const std::string& file, int n,
                        const std::function<void(PointSet&&, std::size_t)>& fn) {
  if (n < 3 || n > 10) fail(Errc::invalid_argument, "database reader supports n in [3, 10]");
  std::ifstream in(file, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open " + file);
  std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  int coord_bytes = n <= 8 ? 1 : 2;
  std::size_t record_size = static_cast<std::size_t>(2 * n * coord_bytes);
  if (bytes.size() % record_size != 0)
    fail(Errc::parse, "file size " + std::to_string(bytes.size()) +
                          " not divisible by record size " + std::to_string(record_size) +
                          "; trailing fragment at byte offset " +
                          std::to_string(bytes.size() - bytes.size() % record_size));
  std::size_t records = bytes.size() / record_size;
  long long expect = order_type_count(n);
  if (expect > 0 && records != static_cast<std::size_t>(expect))
    fail(Errc::parse, "expected " + std::to_string(expect) + " records for n=" +
                          std::to_string(n) + ", file holds " + std::to_string(records));
  for (std::size_t r = 0; r < records; ++r) {
    const unsigned char* rec =
        reinterpret_cast<const unsigned char*>(bytes.data()) + r * record_size;
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < 2 * n; i += 2) {
      long long x, y;
      if (coord_bytes == 1) {
        x = rec[i];
        y = rec[i + 1];
      } else {
        x = rec[2 * i] | (rec[2 * i + 1] << 8);  // little-endian
        y = rec[2 * i + 2] | (rec[2 * i + 3] << 8);
      }
      pts.emplace_back(x, y);
    }
    try {
      fn(PointSet(std::move(pts)), r);
    } catch (const Error& e) {
      if (e.code() == Errc::degenerate)
        fail(Errc::parse, "record " + std::to_string(r) + ": " + e.what());
      throw;
    }
  }
}

std::vector<PointSet> read_order_type_db(const std::string& file, int n) {
  std::vector<PointSet> out;
  for_each_db_record(file, n, [&](PointSet&& s, std::size_t) { out.push_back(std::move(s)); });
  return out;
}

ProfileSpace profile_space_db(int k, const std::string& file, int jobs) {
  (void)jobs;
  std::set<Profile> acc;
  for_each_db_record(file, k, [&](PointSet&& s, std::size_t) { acc.insert(profile_of(s)); });
  ProfileSpace space;
  space.k = k;
  space.profiles = dedup(std::move(acc));
  space.provenance = "database(" + file + ")";
  space.complete = true;
  return space;
}

namespace {

struct Objective {
  BigRat value;
  BigRat x;
  bool set = false;
};

void consider(Objective& best, const BigRat& value, const BigRat& x, bool minimize) {
  if (!best.set) {
    best = {value, x, true};
    return;
  }
  if (minimize ? value < best.value : value > best.value) {
    best = {value, x, true};
    return;
  }
  if (value == best.value) {
    BigRat ax = x < 0 ? BigRat(-x) : x;
    BigRat ab = best.x < 0 ? BigRat(-best.x) : best.x;
    if (ax < ab || (ax == ab && x < best.x)) best = {value, x, true};
  }
}

std::pair<BigRat, BigRat> envelope(const std::vector<Profile>& ps, GonClass klass,
                                   const BigRat& x) {
  BigRat lo, hi;
  bool first = true;
  for (const Profile& p : ps) {
    BigRat v = BigRat(profile_gon_count(p, klass)) + x * BigRat(p.cr);
    if (first) {
      lo = hi = v;
      first = false;
    } else {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  return {lo, hi};
}

std::vector<BigRat> candidate_abscissae(const std::vector<Profile>& ps, GonClass klass) {
  std::vector<BigRat> xs{BigRat(0)};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      long long dc = ps[i].cr - ps[j].cr;
      if (dc == 0) continue;
      long long dg = profile_gon_count(ps[j], klass) - profile_gon_count(ps[i], klass);
      if (dc < 0) {
        dc = -dc;
        dg = -dg;
      }
      xs.emplace_back(dg, dc);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

LinearRelation optimize_tight(const ProfileSpace& space, GonClass klass) {
  if (space.profiles.empty()) fail(Errc::invalid_argument, "empty profile space");
  Objective best;
  for (const BigRat& x : candidate_abscissae(space.profiles, klass)) {
    auto [lo, hi] = envelope(space.profiles, klass, x);
    consider(best, hi - lo, x, /*minimize=*/true);
  }
  LinearRelation rel;
  rel.k = space.k;
  rel.klass = klass;
  rel.x = best.x;
  auto [lo, hi] = envelope(space.profiles, klass, best.x);
  rel.c1 = lo;
  rel.c2 = hi;
  return rel;
}

BoundRelation optimize_upper(const ProfileSpace& space, GonClass klass, const BigRat& c4) {
  if (space.profiles.empty()) fail(Errc::invalid_argument, "empty profile space");
  BigRat choose4 = BigRat(binomial(space.k, 4));
  Objective best;
  for (const BigRat& x : candidate_abscissae(space.profiles, klass)) {
    if (x < 0) continue;
    BigRat hi = envelope(space.profiles, klass, x).second;
    consider(best, hi - x * c4 * choose4, x, /*minimize=*/true);
  }
  BoundRelation rel;
  rel.k = space.k;
  rel.klass = klass;
  rel.x = best.x;
  rel.c = envelope(space.profiles, klass, best.x).second;
  rel.coefficient = rel.c - best.x * c4 * choose4;
  return rel;
}

BoundRelation optimize_lower(const ProfileSpace& space, GonClass klass, const BigRat& c4) {
  if (space.profiles.empty()) fail(Errc::invalid_argument, "empty profile space");
  BigRat choose4 = BigRat(binomial(space.k, 4));
  Objective best;
  for (const BigRat& x : candidate_abscissae(space.profiles, klass)) {
    if (x > 0) continue;
    BigRat lo = envelope(space.profiles, klass, x).first;
    consider(best, lo - x * c4 * choose4, x, /*minimize=*/false);
  }
  BoundRelation rel;
  rel.k = space.k;
  rel.klass = klass;
  rel.x = best.x;
  rel.c = envelope(space.profiles, klass, best.x).first;
  rel.coefficient = rel.c - best.x * c4 * choose4;
  return rel;
}

std::pair<BigRat, BigRat> evaluate_relation(const LinearRelation& rel, long long n,
                                            const BigInt& cr) {
  if (n < rel.k) fail(Errc::invalid_argument, "n must be at least k");
  BigRat nk(binomial(n, rel.k));
  BigRat sub(binomial(n - 4, rel.k - 4));
  BigRat lower = rel.c1 * nk - rel.x * sub * BigRat(cr);
  BigRat upper = rel.c2 * nk - rel.x * sub * BigRat(cr);
  return {lower, upper};
}

std::optional<LinearRelation> reference_tight_relation(int k, GonClass klass) {
  auto make = [k, klass](BigRat c1, BigRat c2, BigRat x) {
    LinearRelation r;
    r.k = k;
    r.klass = klass;
    r.c1 = std::move(c1);
    r.c2 = std::move(c2);
    r.x = std::move(x);
    return r;
  };
  switch (k) {
    case 4:
      switch (klass) {
        case GonClass::Convex: return make(BigRat(0), BigRat(0), BigRat(-1));
        case GonClass::NonConvex: return make(BigRat(3), BigRat(3), BigRat(3));
        default: return make(BigRat(3), BigRat(3), BigRat(2));
      }
    case 5:
      switch (klass) {
        case GonClass::Convex: return make(BigRat(-3, 4), BigRat(-1, 4), BigRat(-1, 4));
        case GonClass::NonConvex: return make(BigRat(10), BigRat(10), BigRat(2));
        default: return make(BigRat(37, 4), BigRat(39, 4), BigRat(7, 4));
      }
    case 6:
      switch (klass) {
        case GonClass::Convex: return make(BigRat(-1), BigRat(-1, 4), BigRat(-1, 12));
        case GonClass::NonConvex: return make(BigRat(265, 9), BigRat(330, 9), BigRat(22, 9));
        default: return make(BigRat(85, 3), BigRat(36), BigRat(7, 3));
      }
    case 7:
      switch (klass) {
        case GonClass::Convex: return make(BigRat(-31, 26), BigRat(-9, 26), BigRat(-1, 26));
        case GonClass::NonConvex:
          return make(BigRat(1121, 13), BigRat(1610, 13), BigRat(46, 13));
        default: return make(BigRat(171, 2), BigRat(247, 2), BigRat(7, 2));
      }
    default: return std::nullopt;
  }
}

}  // namespace kgon::rel
