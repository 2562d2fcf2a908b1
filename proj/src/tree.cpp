#include "sb/tree.hpp"

namespace sb {

Row seed_row(const SeedPair& seed) {
  Row row;
  row.depth = 0;
  row.entries = {seed.left(), seed.right()};
  return row;
}

Row expand(const Row& row) {
  if (row.entries.size() < 2) {
    throw std::invalid_argument("expand: row needs at least two entries");
  }
  Row next;
  next.depth = row.depth + 1;
  next.entries.reserve(row.entries.size() * 2 - 1);
  next.reductions.reserve(row.entries.size() - 1);
  for (std::size_t i = 0; i + 1 < row.entries.size(); ++i) {
    auto [m, g] = mediant(row.entries[i], row.entries[i + 1]);
    next.entries.push_back(row.entries[i]);
    next.entries.push_back(m);
    next.reductions.push_back(g);
  }
  next.entries.push_back(row.entries.back());
  return next;
}

std::vector<Row> generate(const SeedPair& seed, int depth, int depth_cap) {
  if (depth < 0) throw std::invalid_argument("generate: depth must be >= 0");
  if (depth > depth_cap) {
    throw ResourceLimitError("generate: depth " + std::to_string(depth) +
                             " exceeds cap " + std::to_string(depth_cap));
  }
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(depth) + 1);
  rows.push_back(seed_row(seed));
  for (int i = 0; i < depth; ++i) {
    rows.push_back(expand(rows.back()));
  }
  return rows;
}

std::vector<Int> insert_sums(const std::vector<Int>& xs) {
  if (xs.empty()) throw std::invalid_argument("insert_sums: empty list");
  std::vector<Int> out;
  out.reserve(xs.size() * 2 - 1);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    out.push_back(xs[i]);
    out.push_back(xs[i] + xs[i + 1]);
  }
  out.push_back(xs.back());
  return out;
}

RowProjection project(const Row& row) {
  RowProjection out;
  out.numerators.reserve(row.entries.size());
  out.denominators.reserve(row.entries.size());
  for (const Fraction& f : row.entries) {
    out.numerators.push_back(f.num());
    out.denominators.push_back(f.den());
  }
  return out;
}

}  // namespace sb
