#pragma once

#include "sb/fraction.hpp"
#include "sb/numtheory.hpp"
#include "sb/tree.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sb {

enum class ResidueCase { Case1, Case2 };

// The canonical equivalent tree T(0/1, D/V) of a seed, with the per-prime
// residue system used to build V.
struct CanonicalSeed {
  Int D;
  Int V;
  struct Residue {
    PrimePower prime_power;
    Int residue;
    ResidueCase tag;
  };
  std::vector<Residue> residues;
  // Set when the constructed V failed the gcd identity on the standard grid
  // and V was recovered by exhaustive search instead. Always a finding.
  bool fallback_used = false;

  SeedPair seed() const { return SeedPair(Fraction(0, 1), Fraction(D, V)); }
};

struct EquivalenceReport {
  int depth_checked = 0;
  bool equivalent = false;
  struct Mismatch {
    int depth;
    std::size_t insertion_index;
    Int left_factor;
    Int right_factor;
  };
  std::optional<Mismatch> first_mismatch;
};

// Computes V with T(seed) equivalent to T(0/1, D/V): per prime power of D,
// residue a^{-1}c when the prime divides none of a, b, c, d, residue b^{-1}d
// when it divides {a, c}, and the mirrored a^{-1}c when it divides {b, d};
// residues are combined by CRT.
CanonicalSeed canonical_seed(const SeedPair& seed);

// Bounded-depth verifier: generates both trees and compares reduction factors
// positionally. Evidence, not proof.
EquivalenceReport check_equivalent(const SeedPair& seed1, const SeedPair& seed2, int depth,
                                   int depth_cap = kDefaultDepthCap);

// True iff gcd(a*x + c*y, b*x + d*y) = gcd(D*y, x + V*y) for every sampled pair.
bool gcd_identity_check(const SeedPair& seed, const CanonicalSeed& canonical,
                        const std::vector<std::pair<Int, Int>>& sample);

// The full grid 1 <= x, y <= extent as a sample set.
std::vector<std::pair<Int, Int>> identity_grid(int extent);

}  // namespace sb
