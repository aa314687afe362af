#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quivermut/integer.hpp"

namespace quivermut {

using Exponent = std::uint32_t;

/// Degree-reverse-lexicographic comparison with x0 > x1 > ... ; returns -1, 0, 1.
int compare_monomials(const Exponent* a, const Exponent* b, std::size_t nvars);

/// Sparse multivariate polynomial over Z. Terms are kept sorted, strictly decreasing.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Integer& c);
  static Polynomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);
  static Polynomial monomial(std::size_t nvars, std::span<const Exponent> exps, const Integer& c);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return coeffs_.size() == 1; }

  std::span<const Exponent> exponents(std::size_t t) const {
    return {exps_.data() + t * nvars_, nvars_};
  }
  const Integer& coefficient(std::size_t t) const { return coeffs_[t]; }
  const Integer& leading_coefficient() const { return coeffs_.front(); }

  Exponent degree(std::size_t var) const;
  Exponent total_degree() const;
  Exponent min_degree(std::size_t var) const;
  bool involves(std::size_t var) const { return degree(var) > 0; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Integer& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Multiply by x^exps.
  Polynomial shifted(std::span<const Exponent> exps) const;
  /// Divide every coefficient by c (must divide exactly).
  Polynomial divided_by(const Integer& c) const;
  /// Divide by the monomial x^exps (must divide).
  Polynomial unshifted(std::span<const Exponent> exps) const;

  Polynomial pow(unsigned e) const;
  /// Change the number of variables; trailing variables may be dropped only if unused.
  Polynomial extended(std::size_t new_nvars) const;

  Integer content() const;
  std::vector<Exponent> min_exponents() const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Coefficients with respect to var: result[d] multiplies var^d (var removed from terms).
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && coeffs_ == o.coeffs_ && exps_ == o.exps_;
  }
  std::size_t hash() const;

  // raw construction
  void push_term(std::span<const Exponent> exps, const Integer& c);
  void normalize();  // sort and combine after push_term

 private:
  std::size_t nvars_;
  std::vector<Exponent> exps_;
  std::vector<Integer> coeffs_;
};

/// Exact quotient a / b, or nullopt if b does not divide a.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor over Z (content included), leading coefficient positive.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace quivermut
