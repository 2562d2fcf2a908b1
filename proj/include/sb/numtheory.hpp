#pragma once

#include "sb/fraction.hpp"

#include <utility>
#include <vector>

namespace sb {

// p-adic valuation; v_p(0) is the distinguished infinite value so min()
// comparisons stay total.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation finite(unsigned long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  unsigned long value() const {
    if (infinite_) throw std::logic_error("valuation: infinite has no finite value");
    return value_;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }

 private:
  Valuation(bool inf, unsigned long v) : infinite_(inf), value_(v) {}
  bool infinite_;
  unsigned long value_;
};

struct PrimePower {
  Int prime;
  unsigned exponent;

  Int value() const;

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

// Primes strictly increasing; product of prime^exponent equals the input.
struct Factorization {
  std::vector<PrimePower> factors;

  Int product() const;
};

bool is_prime(const Int& n);

// Largest k with p^k | n; INFINITE for n = 0. Rejects composite p.
Valuation p_adic_valuation(const Int& p, const Int& n);

// The unique b in [1, m-1] with a*b = 1 (mod m); throws when gcd(a, m) > 1.
Int mod_inverse(const Int& a, const Int& m);

// Trial division; empty factor list for n = 1.
Factorization factorize(Int n);

// Chinese remainder combination of pairwise-coprime congruences
// value = residue (mod modulus); returns the least positive representative
// modulo the product (0 maps to the product itself).
Int crt(const std::vector<std::pair<Int, Int>>& congruences);

}  // namespace sb
