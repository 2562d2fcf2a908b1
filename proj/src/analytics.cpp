#include "sb/analytics.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <thread>

namespace sb {

namespace {

bool all_ones(const std::vector<Int>& values) {
  for (const Int& v : values) {
    if (v != 1) return false;
  }
  return true;
}

bool is_power_of_two(const Int& n) {
  return n >= 1 && (n & (n - 1)) == 0;
}

bool descent_check(const Fraction& l, const Fraction& r, int depth) {
  Int det = cross_determinant(l, r);
  if (det == 1) return true;
  if (!is_power_of_two(det)) return false;
  auto [m, g] = mediant(l, r);
  if (g % 2 != 0) return false;
  Int left_det = cross_determinant(l, m);
  Int right_det = cross_determinant(m, r);
  if (left_det != right_det || left_det >= det || !is_power_of_two(left_det)) return false;
  if (depth <= 1) return true;
  return descent_check(l, m, depth - 1) && descent_check(m, r, depth - 1);
}

}  // namespace

std::vector<Int> det_list_of(const Row& row) {
  std::vector<Int> values;
  values.reserve(row.entries.size() - 1);
  for (std::size_t i = 0; i + 1 < row.entries.size(); ++i) {
    values.push_back(cross_determinant(row.entries[i], row.entries[i + 1]));
  }
  return values;
}

std::vector<DetList> det_lists(const SeedPair& seed, int depth, int depth_cap) {
  std::vector<Row> rows = generate(seed, depth, depth_cap);
  std::vector<DetList> out;
  out.reserve(rows.size());
  for (const Row& row : rows) {
    out.push_back(DetList{row.depth, det_list_of(row)});
  }
  return out;
}

StabilizationReport stabilization(const SeedPair& seed, int max_depth, int depth_cap) {
  if (max_depth > depth_cap) {
    throw ResourceLimitError("stabilization: max_depth exceeds cap");
  }
  StabilizationReport report;
  report.max_depth_checked = max_depth;
  Row row = seed_row(seed);
  std::optional<int> last_unstable;
  for (int i = 0;; ++i) {
    if (!all_ones(det_list_of(row))) last_unstable = i;
    if (i == max_depth) break;
    row = expand(row);
  }
  int first = last_unstable ? *last_unstable + 1 : 0;
  if (first <= max_depth) {
    report.stabilized = true;
    report.first_all_ones_depth = first;
  }
  return report;
}

bool casework_mod3_verify() {
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        for (int d = 0; d < 3; ++d) {
          if ((b * c - a * d) % 3 != 0) continue;   // needs 3 | D
          if (a == 0 && b == 0) continue;           // a/b not reduced mod 3
          if (c == 0 && d == 0) continue;           // c/d not reduced mod 3
          bool outer_left = (2 * a + c) % 3 == 0 && (2 * b + d) % 3 == 0;
          bool middle = (a + c) % 3 == 0 && (b + d) % 3 == 0;
          bool outer_right = (a + 2 * c) % 3 == 0 && (b + 2 * d) % 3 == 0;
          if (!outer_left && !middle && !outer_right) return false;
        }
      }
    }
  }
  return true;
}

bool power_of_two_descent_check(const SeedPair& seed, int depth) {
  if (seed.det() < 2 || !is_power_of_two(seed.det())) {
    throw std::invalid_argument("power_of_two_descent_check: determinant " + seed.det().str() +
                                " is not a power of two >= 2");
  }
  return descent_check(seed.left(), seed.right(), depth);
}

namespace {

// In-order walk of the mediant subtree between two det-1 neighbors, pruned
// once denominators exceed the order. Mediants in det-1 brackets never
// reduce, so the child denominator is exactly the sum.
void collect_farey(const Fraction& left, const Fraction& right, int order,
                   std::vector<Fraction>& out) {
  if (left.den() + right.den() > order) return;
  Fraction m = mediant(left, right).first;
  collect_farey(left, m, order, out);
  out.push_back(m);
  collect_farey(m, right, order, out);
}

}  // namespace

std::vector<Fraction> farey(int order, int order_cap) {
  if (order < 1) throw std::invalid_argument("farey: order must be >= 1");
  if (order > order_cap) {
    throw ResourceLimitError("farey: order " + std::to_string(order) + " exceeds cap " +
                             std::to_string(order_cap));
  }
  std::vector<Fraction> out;
  out.push_back(Fraction(0, 1));
  collect_farey(Fraction(0, 1), Fraction(1, 1), order, out);
  out.push_back(Fraction(1, 1));

  // Completeness tripwire: count reduced fractions with denominator <= order
  // by direct enumeration.
  long expected = 1;  // 0/1
  for (long q = 1; q <= order; ++q) {
    for (long p = 1; p <= q; ++p) {
      if (std::gcd(p, q) == 1) ++expected;
    }
  }
  if (static_cast<long>(out.size()) != expected) {
    throw std::logic_error("farey: extracted " + std::to_string(out.size()) +
                           " fractions, expected " + std::to_string(expected));
  }
  return out;
}

SweepReport completeness_sweep(const SeedPair& seed, int max_den,
                               std::optional<long> max_steps, int parallelism) {
  if (seed.right().is_infinite()) {
    throw std::invalid_argument("completeness_sweep: interval must be bounded");
  }
  if (parallelism < 1) throw std::invalid_argument("completeness_sweep: parallelism must be >= 1");

  std::vector<Fraction> targets;
  for (int q = 1; q <= max_den; ++q) {
    // p/q strictly inside (left, right): left*q < p < right*q.
    Int lo = seed.left().num() * q / seed.left().den();
    Int hi = seed.right().num() * q / seed.right().den() + 1;
    for (Int p = lo; p <= hi; ++p) {
      if (p < 0) continue;
      if (boost::multiprecision::gcd(p, Int(q)) != 1) continue;
      Fraction f(p, q);
      if (seed.left() < f && f < seed.right()) targets.push_back(f);
    }
  }

  SweepReport report;
  report.targets = static_cast<long>(targets.size());
  std::vector<char> found(targets.size(), 0);
  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      found[i] = locate(seed, targets[i], max_steps).found ? 1 : 0;
    }
  };
  if (parallelism == 1 || targets.size() < 2) {
    worker(0, targets.size());
  } else {
    std::size_t n_threads = std::min<std::size_t>(parallelism, targets.size());
    std::vector<std::thread> threads;
    std::size_t chunk = (targets.size() + n_threads - 1) / n_threads;
    for (std::size_t t = 0; t < n_threads; ++t) {
      std::size_t begin = t * chunk;
      std::size_t end = std::min(begin + chunk, targets.size());
      if (begin < end) threads.emplace_back(worker, begin, end);
    }
    for (auto& th : threads) th.join();
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!found[i]) report.misses.push_back(targets[i]);
  }
  return report;
}

}  // namespace sb
