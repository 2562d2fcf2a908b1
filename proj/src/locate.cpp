#include "sb/locate.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>

namespace sb {

namespace {

void require_in_interval(const SeedPair& seed, const Fraction& target) {
  if (target < seed.left() || seed.right() < target) {
    throw std::invalid_argument("target " + target.str() + " outside seed interval [" +
                                seed.left().str() + ", " + seed.right().str() + "]");
  }
}

}  // namespace

Weights weights_det1(const SeedPair& seed, const Fraction& target) {
  if (seed.det() != 1) {
    throw std::invalid_argument("weights_det1: seed determinant must be 1");
  }
  require_in_interval(seed, target);
  const Fraction& l = seed.left();
  const Fraction& r = seed.right();
  Int left_weight = r.num() * target.den() - r.den() * target.num();
  Int right_weight = l.den() * target.num() - l.num() * target.den();
  return Weights{left_weight, right_weight, 1};
}

Weights decompose(const SeedPair& seed, const Fraction& target) {
  require_in_interval(seed, target);
  const Fraction& l = seed.left();
  const Fraction& r = seed.right();
  // Cross-ratio solution of target = (a*x + c*y)/(b*x + d*y), up to scale.
  Int x0 = r.num() * target.den() - r.den() * target.num();
  Int y0 = l.den() * target.num() - l.num() * target.den();
  Int h = boost::multiprecision::gcd(x0, y0);
  Weights w{x0 / h, y0 / h, 0};
  Int num = l.num() * w.x + r.num() * w.y;
  Int den = l.den() * w.x + r.den() * w.y;
  w.g = den == 0 ? num : boost::multiprecision::gcd(num, den);
  return w;
}

long default_max_steps(const SeedPair& seed, const Fraction& target) {
  Int steps = 64 + (target.num() + target.den()) * seed.det();
  if (steps > std::numeric_limits<long>::max()) {
    return std::numeric_limits<long>::max();
  }
  return static_cast<long>(steps);
}

LocateResult locate(const SeedPair& seed, const Fraction& target,
                    std::optional<long> max_steps) {
  require_in_interval(seed, target);
  long budget = max_steps.value_or(default_max_steps(seed, target));
  if (budget < 1) throw std::invalid_argument("locate: max_steps must be >= 1");

  LocateResult result;
  result.final_bracket = Bracket{seed.left(), seed.right(), 0, 0, ""};

  if (target == seed.left() || target == seed.right()) {
    result.found = true;
    result.depth = 0;
    result.index_in_row = target == seed.left() ? 0 : 1;
    result.weights = decompose(seed, target);
    return result;
  }

  Bracket& br = result.final_bracket;
  for (long step = 1; step <= budget; ++step) {
    Fraction m = mediant(br.left, br.right).first;
    if (m == target) {
      result.found = true;
      result.depth = static_cast<int>(step);
      result.index_in_row = 2 * br.left_index + 1;
      result.path = br.path;
      result.weights = decompose(seed, target);
      result.steps_used = step;
      return result;
    }
    if (target < m) {
      br.right = m;
      br.left_index *= 2;
      br.path += 'L';
    } else {
      br.left = m;
      br.left_index = 2 * br.left_index + 1;
      br.path += 'R';
    }
    br.depth = static_cast<int>(step);
  }
  result.steps_used = budget;
  return result;
}

std::vector<Fraction> approximation_ladder(const SeedPair& seed, const Fraction& target,
                                           std::optional<long> max_steps) {
  require_in_interval(seed, target);
  if (target == seed.left() || target == seed.right()) return {};
  long budget = max_steps.value_or(default_max_steps(seed, target));
  std::vector<Fraction> ladder;
  Fraction left = seed.left();
  Fraction right = seed.right();
  for (long step = 1; step <= budget; ++step) {
    Fraction m = mediant(left, right).first;
    ladder.push_back(m);
    if (m == target) return ladder;
    if (target < m) {
      right = m;
    } else {
      left = m;
    }
  }
  throw std::runtime_error("approximation_ladder: step budget exhausted before reaching " +
                           target.str());
}

}  // namespace sb
