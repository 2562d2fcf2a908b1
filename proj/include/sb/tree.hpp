#pragma once

#include "sb/fraction.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sb {

inline constexpr int kDefaultDepthCap = 24;

// One row of a generalized Stern-Brocot sequence. reductions holds the factor
// each inserted mediant of this row was reduced by (g = 1: no reduction);
// it is empty for a seed row.
struct Row {
  int depth = 0;
  std::vector<Fraction> entries;
  std::vector<Int> reductions;
};

struct RowProjection {
  std::vector<Int> numerators;
  std::vector<Int> denominators;
};

// Seed row (depth 0) for a pair; full sequences start from an explicit
// three-entry row ending in 1/0 and go through expand() the same way.
Row seed_row(const SeedPair& seed);

// The map F: copy all entries and insert between every adjacent pair its
// reduced mediant, recording each insertion's reduction factor.
Row expand(const Row& row);

// Rows 0..depth inclusive.
std::vector<Row> generate(const SeedPair& seed, int depth, int depth_cap = kDefaultDepthCap);

// The map G on integer lists: copy entries, insert pairwise sums.
std::vector<Int> insert_sums(const std::vector<Int>& xs);

RowProjection project(const Row& row);

// Inclusive sub-list xs[a..b].
template <typename T>
std::vector<T> slice(const std::vector<T>& xs, std::size_t a, std::size_t b) {
  if (a > b || b >= xs.size()) {
    throw std::out_of_range("slice: indices out of range");
  }
  return std::vector<T>(xs.begin() + a, xs.begin() + b + 1);
}

}  // namespace sb
