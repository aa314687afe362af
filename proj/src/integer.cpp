#include "quivermut/integer.hpp"

#include <climits>

namespace quivermut {

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool fits_int64(const Integer& z) {
  static const Integer lo(std::to_string(LLONG_MIN));
  static const Integer hi(std::to_string(LLONG_MAX));
  return z >= lo && z <= hi;
}

long long to_int64(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return std::stoll(z.get_str());
}

}  // namespace quivermut
