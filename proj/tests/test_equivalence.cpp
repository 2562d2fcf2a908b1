#include "sb/equivalence.hpp"

#include "sb/locate.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>
#include <set>

using sb::CanonicalSeed;
using sb::Fraction;
using sb::Int;
using sbtest::F;

TEST_CASE("canonical seed computation") {
  auto trivial = sb::canonical_seed(sbtest::unit_seed());
  CHECK(trivial.D == 1);
  CHECK(trivial.V == 1);
  CHECK(trivial.residues.empty());
  CHECK_FALSE(trivial.fallback_used);

  auto example = sb::canonical_seed(sbtest::seed(2, 5, 5, 11));
  CHECK(example.D == 3);
  CHECK(example.V == 1);
  REQUIRE(example.residues.size() == 1);
  CHECK(example.residues[0].tag == sb::ResidueCase::Case1);
  CHECK(example.residues[0].residue == 1);
  CHECK_FALSE(example.fallback_used);
  CHECK(example.seed() == sbtest::seed(0, 1, 3, 1));

  auto t23 = sb::canonical_seed(sbtest::seed(2, 1, 3, 1));
  CHECK(t23.D == 1);
  CHECK(t23.V == 1);

  auto det2 = sb::canonical_seed(sbtest::seed(3, 4, 5, 6));
  CHECK(det2.D == 2);
  CHECK(det2.V == 1);
}

TEST_CASE("canonical seed handles the mirrored divisibility sub-case") {
  // 3 divides both denominators: D = 6*2 - 1*3 = 9.
  auto mirrored = sb::canonical_seed(sbtest::seed(1, 6, 2, 3));
  CHECK(mirrored.D == 9);
  CHECK(mirrored.V == 2);
  REQUIRE(mirrored.residues.size() == 1);
  CHECK(mirrored.residues[0].tag == sb::ResidueCase::Case2);
  CHECK_FALSE(mirrored.fallback_used);
  CHECK(sb::gcd_identity_check(sbtest::seed(1, 6, 2, 3), mirrored, sb::identity_grid(50)));
  CHECK(sb::check_equivalent(sbtest::seed(1, 6, 2, 3), mirrored.seed(), 8).equivalent);
}

TEST_CASE("canonical seed handles divisible numerators") {
  // 3 divides both numerators: seed 3/1, 6/1, D = 3.
  auto numerators = sb::canonical_seed(sbtest::seed(3, 1, 6, 1));
  CHECK(numerators.D == 3);
  REQUIRE(numerators.residues.size() == 1);
  CHECK(numerators.residues[0].tag == sb::ResidueCase::Case2);
  CHECK_FALSE(numerators.fallback_used);
  CHECK(sb::gcd_identity_check(sbtest::seed(3, 1, 6, 1), numerators, sb::identity_grid(50)));
  CHECK(sb::check_equivalent(sbtest::seed(3, 1, 6, 1), numerators.seed(), 8).equivalent);
}

TEST_CASE("equivalence verification by positional reduction factors") {
  CHECK(sb::check_equivalent(sbtest::seed(2, 5, 5, 11), sbtest::seed(0, 1, 3, 1), 6).equivalent);
  CHECK(sb::check_equivalent(sbtest::unit_seed(), sbtest::unit_seed(), 6).equivalent);

  auto report = sb::check_equivalent(sbtest::unit_seed(), sbtest::seed(0, 1, 2, 1), 4);
  CHECK_FALSE(report.equivalent);
  REQUIRE(report.first_mismatch.has_value());
  CHECK(report.first_mismatch->depth == 1);
  CHECK(report.first_mismatch->insertion_index == 0);
  CHECK(report.first_mismatch->left_factor == 1);
  CHECK(report.first_mismatch->right_factor == 2);
}

TEST_CASE("gcd identity spot checks") {
  auto example = sb::canonical_seed(sbtest::seed(2, 5, 5, 11));
  CHECK(sb::gcd_identity_check(sbtest::seed(2, 5, 5, 11), example, {{2, 1}}));
  CHECK(sb::gcd_identity_check(sbtest::seed(2, 5, 5, 11), example, {{1, 1}}));
  auto trivial = sb::canonical_seed(sbtest::unit_seed());
  CHECK(sb::gcd_identity_check(sbtest::unit_seed(), trivial, sb::identity_grid(10)));
}

TEST_CASE("residue system is consistent with the combined V") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    Fraction a(Int(rng() % 10), Int(rng() % 10 + 1));
    Fraction b(Int(rng() % 10), Int(rng() % 10 + 1));
    if (!(a < b)) continue;
    sb::SeedPair seed(a, b);
    if (seed.det() > 60) continue;
    auto canonical = sb::canonical_seed(seed);
    CHECK(boost::multiprecision::gcd(canonical.V, canonical.D) == 1);
    CHECK(canonical.V >= 1);
    CHECK(canonical.V <= std::max(canonical.D, Int(1)));
    for (const auto& r : canonical.residues) {
      CHECK(canonical.V % r.prime_power.value() == r.residue);
    }
    CHECK_FALSE(canonical.fallback_used);
    CHECK(sb::gcd_identity_check(seed, canonical, sb::identity_grid(20)));
    CHECK(sb::check_equivalent(seed, canonical.seed(), 8).equivalent);
  }
}

TEST_CASE("equivalent trees realize identical weights positionally and setwise") {
  for (const auto& pair : {std::make_pair(sbtest::seed(2, 5, 5, 11), sbtest::seed(0, 1, 3, 1)),
                           std::make_pair(sbtest::seed(1, 6, 2, 3), sbtest::seed(0, 1, 9, 2))}) {
    auto rows1 = sb::generate(pair.first, 6);
    auto rows2 = sb::generate(pair.second, 6);
    for (int depth = 0; depth <= 6; ++depth) {
      std::set<std::pair<Int, Int>> set1, set2;
      for (std::size_t i = 0; i < rows1[depth].entries.size(); ++i) {
        auto w1 = sb::decompose(pair.first, rows1[depth].entries[i]);
        auto w2 = sb::decompose(pair.second, rows2[depth].entries[i]);
        CHECK(w1 == w2);
        set1.insert({w1.x, w1.y});
        set2.insert({w2.x, w2.y});
      }
      CHECK(set1 == set2);
    }
  }
}
