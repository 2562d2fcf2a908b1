#pragma once

#include "sb/fraction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sb {

// The unique coprime pair (x, y) with target = (a*x + c*y)/(b*x + d*y) for the
// seed (a/b, c/d), together with the reduction factor g of that combination.
struct Weights {
  Int x;
  Int y;
  Int g;

  friend bool operator==(const Weights& a, const Weights& b) {
    return a.x == b.x && a.y == b.y && a.g == b.g;
  }
};

// Nearest-neighbor bracket around a target during descent. left_index tracks
// the position of the left endpoint in its row: descending left maps p to 2p,
// descending right to 2p + 1.
struct Bracket {
  Fraction left;
  Fraction right;
  Int left_index = 0;
  int depth = 0;
  std::string path;  // "LR..." symbols taken so far
};

struct LocateResult {
  bool found = false;
  int depth = 0;
  Int index_in_row = 0;
  std::string path;
  std::optional<Weights> weights;
  long steps_used = 0;
  Bracket final_bracket;  // state at termination, reported when not found
};

// Closed-form weights for a det-1 seed (left weight c*y - d*x, right weight
// b*x - a*y for target x/y); g is always 1.
Weights weights_det1(const SeedPair& seed, const Fraction& target);

// Weight decomposition for any seed; throws when the target is outside the
// closed seed interval.
Weights decompose(const SeedPair& seed, const Fraction& target);

// Safety-net step budget: 64 + (num + den) * det.
long default_max_steps(const SeedPair& seed, const Fraction& target);

// Bracket descent. O(1) memory in row size; seed endpoints report depth 0.
// Exhausting max_steps yields found = false with the final bracket attached.
LocateResult locate(const SeedPair& seed, const Fraction& target,
                    std::optional<long> max_steps = std::nullopt);

// The mediants encountered while descending to the target, i.e. its tree
// ancestors, ending with the target itself. Empty for a seed endpoint.
std::vector<Fraction> approximation_ladder(const SeedPair& seed, const Fraction& target,
                                           std::optional<long> max_steps = std::nullopt);

}  // namespace sb
