#include "sb/numtheory.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace sb {

Int PrimePower::value() const {
  Int v = 1;
  for (unsigned i = 0; i < exponent; ++i) v *= prime;
  return v;
}

Int Factorization::product() const {
  Int v = 1;
  for (const auto& pp : factors) v *= pp.value();
  return v;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Valuation p_adic_valuation(const Int& p, const Int& n) {
  if (!is_prime(p)) {
    throw std::invalid_argument("p_adic_valuation: p = " + p.str() + " is not prime");
  }
  if (n < 0) {
    throw std::invalid_argument("p_adic_valuation: n must be nonnegative");
  }
  if (n == 0) return Valuation::infinite();
  unsigned long k = 0;
  Int m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return Valuation::finite(k);
}

Int mod_inverse(const Int& a, const Int& m) {
  if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
  // Extended Euclid on (a mod m, m).
  Int r0 = ((a % m) + m) % m;
  Int r1 = m;
  Int s0 = 1;
  Int s1 = 0;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) {
    throw std::domain_error("mod_inverse: " + a.str() + " is not invertible mod " + m.str());
  }
  return ((s0 % m) + m) % m;
}

Factorization factorize(Int n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.factors.push_back({p, e});
  };
  strip(2);
  for (Int d = 3; d * d <= n; d += 2) strip(d);
  if (n > 1) out.factors.push_back({n, 1});
  return out;
}

Int crt(const std::vector<std::pair<Int, Int>>& congruences) {
  Int value = 0;
  Int modulus = 1;
  for (const auto& [residue, m] : congruences) {
    if (m == 1) continue;
    // value + modulus*t = residue (mod m)
    Int rhs = (((residue - value) % m) + m) % m;
    Int t = (mod_inverse(modulus % m, m) * rhs) % m;
    value += modulus * t;
    modulus *= m;
    value = ((value % modulus) + modulus) % modulus;
  }
  return value == 0 ? modulus : value;
}

}  // namespace sb
