#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "quivermut/polynomial.hpp"

namespace quivermut {

/// Variable names x0..x{n-1}, y0..y{m-1}; the ambient ring of a seed.
class Ring {
 public:
  Ring(std::size_t nx, std::size_t ny);
  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  std::size_t size() const { return nx_ + ny_; }
  const std::vector<std::string>& names() const { return names_; }
  std::string description() const;  // "Fraction Field of Multivariate Polynomial Ring in ..."
  bool operator==(const Ring& o) const { return nx_ == o.nx_ && ny_ == o.ny_; }

 private:
  std::size_t nx_, ny_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;
RingPtr make_ring(std::size_t nx, std::size_t ny);

/// num/den with gcd(num, den) = 1 and den having positive leading coefficient.
class RationalFunction {
 public:
  explicit RationalFunction(std::size_t nvars = 0);
  RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);  // reduces; throws ZeroDivision

  static RationalFunction constant(std::size_t nvars, const Rational& q);
  static RationalFunction variable(std::size_t nvars, std::size_t i);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_laurent() const { return den_.is_monomial(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction inverse() const;
  RationalFunction pow(long e) const;
  RationalFunction extended(std::size_t new_nvars) const;

  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::size_t hash() const { return num_.hash() * 1315423911u ^ den_.hash(); }

 private:
  struct Reduced {};
  RationalFunction(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  Polynomial num_, den_;
};

/// Recursive-descent parser: + - * / ^, parentheses, integers and ring variable names.
RationalFunction parse_rational_function(std::string_view text, const Ring& ring);

}  // namespace quivermut
