#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qflag/flag_ring.hpp"

namespace qflag {

enum class VerifyLevel { kSmoke, kFull };

VerifyLevel parse_verify_level(const std::string& name);
std::string to_string(VerifyLevel level);

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Random polynomial in ℤ[x_1..x_n, q_1..q_{n-1}] with `terms` terms of
/// weighted degree at most `max_degree` and coefficients in [-5, 5].
Polynomial random_polynomial(int n, int max_degree, int terms, std::mt19937_64& rng);

/// Uniform sample of `count` elements of S_n (with replacement).
std::vector<Permutation> sample_permutations(int n, std::size_t count, std::mt19937_64& rng);

/// Runs the ring, Schubert and Gromov–Witten property checks on F(n).
/// Smoke samples the expensive checks; full is exhaustive where feasible.
std::vector<PropertyResult> run_properties(int n, VerifyLevel level, std::uint64_t seed = 20240601);

}  // namespace qflag
