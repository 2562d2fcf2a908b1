#pragma once

#include "sb/fraction.hpp"
#include "sb/locate.hpp"
#include "sb/tree.hpp"

#include <optional>
#include <vector>

namespace sb {

// Cross-determinants of adjacent pairs in one row.
struct DetList {
  int depth = 0;
  std::vector<Int> values;
};

struct StabilizationReport {
  bool stabilized = false;
  std::optional<int> first_all_ones_depth;
  int max_depth_checked = 0;
};

struct SweepReport {
  long targets = 0;
  std::vector<Fraction> misses;  // input order

  bool complete() const { return misses.empty(); }
};

std::vector<Int> det_list_of(const Row& row);

// One DetList per row 0..depth.
std::vector<DetList> det_lists(const SeedPair& seed, int depth, int depth_cap = kDefaultDepthCap);

// Smallest depth at which the determinant list is all ones and stays so
// through max_depth.
StabilizationReport stabilization(const SeedPair& seed, int max_depth,
                                  int depth_cap = kDefaultDepthCap);

// Exhaustive mod-3 residue casework: for every tuple (a, b, c, d) mod 3 with
// bc = ad (mod 3) and both fractions reduced mod 3, at least one of the
// fractions (2a+c)/(2b+d), (a+c)/(b+d), (a+2c)/(b+2d) has numerator and
// denominator both divisible by 3.
bool casework_mod3_verify();

// For a seed with power-of-two determinant >= 2: the first mediant reduces by
// an even factor and both child determinants are equal, strictly smaller
// powers of two; checked recursively to the given depth.
bool power_of_two_descent_check(const SeedPair& seed, int depth);

// Farey sequence of the given order: the half-sequence tree restricted to
// denominators <= order, walked in order with subtrees pruned once their
// denominators exceed the bound. The result size is cross-checked against a
// direct enumeration count.
std::vector<Fraction> farey(int order, int order_cap = 5000);

// Locates every reduced fraction with denominator <= max_den strictly inside
// the seed interval; misses are reported in input order. parallelism > 1
// splits targets over threads with a deterministic merge.
SweepReport completeness_sweep(const SeedPair& seed, int max_den,
                               std::optional<long> max_steps = std::nullopt,
                               int parallelism = 1);

}  // namespace sb
