#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "core/point.hpp"

namespace kgon::gen {

// Deterministic point-set families. Every family except `grid` yields a set
// in general position; outputs depend only on the arguments.
PointSet gen_convex(long long n, std::uint64_t seed);
PointSet gen_grid(long long m);
PointSet gen_perturbed_grid(long long m, std::uint64_t seed);
PointSet gen_double_chain(long long n);
PointSet gen_horton(long long n);
// Three convex corner clusters plus a reflex-headed chain cluster; tuned so
// that every corner triple closes with the chain head to a non-convex
// k-hole. Placement properties are re-verified after construction.
PointSet gen_cluster(long long n, int k);
PointSet gen_random(long long n, std::uint64_t seed, long long box = 0);

struct GeneratorSpec {
  std::string family;
  long long n = 0;
  long long m = 0;
  int k = 4;
  std::uint64_t seed = 0;
  long long box = 0;
};

PointSet generate(const GeneratorSpec& spec);

// Portable uniform draw in [0, bound); mt19937_64 output is
// implementation-independent, std::uniform_int_distribution is not.
std::uint64_t uniform_u64(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace kgon::gen
