#include "sb/fraction.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>

namespace sb {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Fraction::Fraction(Int num, Int den) {
  if (num < 0 || den < 0) {
    throw std::invalid_argument("fraction: negative component");
  }
  if (num == 0 && den == 0) {
    throw std::invalid_argument("fraction: 0/0 is undefined");
  }
  if (den == 0) {
    num_ = 1;
    den_ = 0;
    return;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  Int g = boost::multiprecision::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Fraction Fraction::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos || text.find('/', slash + 1) != std::string_view::npos) {
    throw std::invalid_argument("fraction: expected \"num/den\", got \"" + std::string(text) + "\"");
  }
  std::string_view num_part = text.substr(0, slash);
  std::string_view den_part = text.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw std::invalid_argument("fraction: expected \"num/den\", got \"" + std::string(text) + "\"");
  }
  return Fraction(Int(std::string(num_part)), Int(std::string(den_part)));
}

std::string Fraction::str() const {
  return num_.str() + "/" + den_.str();
}

bool operator<(const Fraction& a, const Fraction& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.num_ * b.den_ < b.num_ * a.den_;
}

Int cross_determinant(const Fraction& a, const Fraction& b) {
  return a.den() * b.num() - a.num() * b.den();
}

std::pair<Fraction, Int> mediant(const Fraction& a, const Fraction& b) {
  Int num = a.num() + b.num();
  Int den = a.den() + b.den();
  Int g = den == 0 ? num : boost::multiprecision::gcd(num, den);
  return {Fraction(num, den), g};
}

SeedPair::SeedPair(Fraction left, Fraction right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_ < right_)) {
    throw std::invalid_argument("seed: left fraction must be strictly less than right");
  }
  det_ = cross_determinant(left_, right_);
}

SeedPair SeedPair::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("seed: expected \"a/b,c/d\", got \"" + std::string(text) + "\"");
  }
  auto parse_side = [](std::string_view part) {
    if (part == "inf") return Fraction::infinity();
    return Fraction::parse(part);
  };
  return SeedPair(parse_side(text.substr(0, comma)), parse_side(text.substr(comma + 1)));
}

}  // namespace sb
