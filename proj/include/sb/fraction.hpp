#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace sb {

using Int = boost::multiprecision::cpp_int;

/// Thrown when a row/depth request exceeds the configured memory budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A reduced nonnegative rational. den == 0 encodes the projective point 1/0,
// which compares greater than every finite fraction.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}

  // Reduces eagerly; canonicalizes n/0 to 1/0. Rejects 0/0 and negatives.
  Fraction(Int num, Int den);

  static Fraction infinity() { return Fraction(raw_tag{}, 1, 0); }

  // Parses exactly "num/den" (ASCII digits, single slash, no whitespace).
  static Fraction parse(std::string_view text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }

  std::string str() const;

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
  friend bool operator<(const Fraction& a, const Fraction& b);
  friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
  friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

 private:
  struct raw_tag {};
  Fraction(raw_tag, Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {}

  Int num_;
  Int den_;
};

// bc - ad for the pair a/b, c/d; signed, positive when the pair is ordered.
Int cross_determinant(const Fraction& a, const Fraction& b);

// Reduced mediant of a and b together with the factor g it was reduced by.
std::pair<Fraction, Int> mediant(const Fraction& a, const Fraction& b);

// Ordered pair of seed fractions with its cross-determinant D >= 1.
class SeedPair {
 public:
  SeedPair(Fraction left, Fraction right);

  // Parses "a/b,c/d"; "inf" is accepted as an alias for 1/0.
  static SeedPair parse(std::string_view text);

  const Fraction& left() const { return left_; }
  const Fraction& right() const { return right_; }
  const Int& det() const { return det_; }

  std::string str() const { return left_.str() + "," + right_.str(); }

  friend bool operator==(const SeedPair& a, const SeedPair& b) {
    return a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  Fraction left_;
  Fraction right_;
  Int det_;
};

}  // namespace sb
