#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace quivermut {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerMatrix = std::vector<std::vector<Integer>>;

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign(const Integer& z) { return sgn(z); }

inline std::size_t hash_value(const Integer& z) {
  std::size_t h = static_cast<std::size_t>(mpz_size(z.get_mpz_t())) * 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < mpz_size(z.get_mpz_t()); ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i))) +
         0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return sgn(z) < 0 ? ~h : h;
}

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer lcm(const Integer& a, const Integer& b);

// fits in a signed 64-bit integer
bool fits_int64(const Integer& z);
long long to_int64(const Integer& z);

}  // namespace quivermut
