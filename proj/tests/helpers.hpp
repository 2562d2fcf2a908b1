#pragma once

#include "sb/fraction.hpp"
#include "sb/tree.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace sbtest {

inline sb::Fraction F(long n, long d) { return sb::Fraction(sb::Int(n), sb::Int(d)); }

inline sb::SeedPair seed(long a, long b, long c, long d) {
  return sb::SeedPair(F(a, b), F(c, d));
}

inline sb::SeedPair unit_seed() { return seed(0, 1, 1, 1); }

struct CommandResult {
  int exit_code;
  std::string output;
};

// Runs a shell command, capturing stdout.
inline CommandResult run_command(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string output;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

inline CommandResult run_cli(const std::string& args) {
  return run_command(std::string(SBTREE_BIN) + " " + args + " 2>/dev/null");
}

// Random det-1 seed from a bracket descent of the unit interval.
inline sb::SeedPair random_det1_seed(std::mt19937_64& rng, int max_depth = 12) {
  sb::Fraction left = F(0, 1);
  sb::Fraction right = F(1, 1);
  int steps = static_cast<int>(rng() % max_depth) + 1;
  for (int i = 0; i < steps; ++i) {
    sb::Fraction m = sb::mediant(left, right).first;
    if (rng() % 2 == 0) {
      right = m;
    } else {
      left = m;
    }
  }
  return sb::SeedPair(left, right);
}

// First occurrence of a fraction in materialized rows: (depth, index).
inline std::optional<std::pair<int, std::size_t>> first_occurrence(
    const std::vector<sb::Row>& rows, const sb::Fraction& target) {
  for (const sb::Row& row : rows) {
    for (std::size_t i = 0; i < row.entries.size(); ++i) {
      if (row.entries[i] == target) return std::make_pair(row.depth, i);
    }
  }
  return std::nullopt;
}

// Reduced fractions p/q with p <= max_num and q <= max_den, ascending.
inline std::vector<sb::Fraction> enumerate_fractions(int max_num, int max_den) {
  std::vector<sb::Fraction> out;
  for (int q = 1; q <= max_den; ++q) {
    for (int p = 0; p <= max_num; ++p) {
      if (std::gcd(p, q) == 1) out.push_back(F(p, q));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sbtest
