#include "quivermut/rational_function.hpp"

#include <cctype>

#include "quivermut/errors.hpp"

namespace quivermut {

Ring::Ring(std::size_t nx, std::size_t ny) : nx_(nx), ny_(ny) {
  for (std::size_t i = 0; i < nx; ++i) names_.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < ny; ++i) names_.push_back("y" + std::to_string(i));
}

std::string Ring::description() const {
  std::string s = "Fraction Field of Multivariate Polynomial Ring in ";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) s += ", ";
    s += names_[i];
  }
  return s + " over Rational Field";
}

RingPtr make_ring(std::size_t nx, std::size_t ny) { return std::make_shared<const Ring>(nx, ny); }

RationalFunction::RationalFunction(std::size_t nvars)
    : num_(nvars), den_(Polynomial::constant(nvars, 1)) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.nvars(), 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw ZeroDivision("rational function with zero denominator");
  if (num.nvars() != den.nvars()) throw InvalidInput("numerator and denominator in different rings");
  if (num.is_zero()) {
    num_ = Polynomial(num.nvars());
    den_ = Polynomial::constant(num.nvars(), 1);
    return;
  }
  Polynomial g = gcd(num, den);
  if (!g.is_one()) {
    num = *divide_exact(num, g);
    den = *divide_exact(den, g);
  }
  if (sgn(den.leading_coefficient()) < 0) {
    num = -num;
    den = -den;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction RationalFunction::constant(std::size_t nvars, const Rational& q) {
  return RationalFunction(Polynomial::constant(nvars, q.get_num()), Polynomial::constant(nvars, q.get_den()),
                          Reduced{});
}

RationalFunction RationalFunction::variable(std::size_t nvars, std::size_t i) {
  return RationalFunction(Polynomial::variable(nvars, i));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  Polynomial g = gcd(den_, o.den_);
  Polynomial a = g.is_one() ? o.den_ : *divide_exact(o.den_, g);  // o.den / g
  Polynomial b = g.is_one() ? den_ : *divide_exact(den_, g);      // den / g
  Polynomial num = num_ * a + o.num_ * b;
  if (num.is_zero()) return RationalFunction(nvars());
  Polynomial den = den_ * a;
  if (g.is_one()) {
    // any common factor of num and den divides g; nothing to cancel
    if (sgn(den.leading_coefficient()) < 0) return RationalFunction(-num, -den, Reduced{});
    return RationalFunction(std::move(num), std::move(den), Reduced{});
  }
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction(nvars());
  Polynomial g1 = gcd(num_, o.den_);
  Polynomial g2 = gcd(o.num_, den_);
  Polynomial n1 = g1.is_one() ? num_ : *divide_exact(num_, g1);
  Polynomial d2 = g1.is_one() ? o.den_ : *divide_exact(o.den_, g1);
  Polynomial n2 = g2.is_one() ? o.num_ : *divide_exact(o.num_, g2);
  Polynomial d1 = g2.is_one() ? den_ : *divide_exact(den_, g2);
  Polynomial num = n1 * n2, den = d1 * d2;
  if (sgn(den.leading_coefficient()) < 0) return RationalFunction(-num, -den, Reduced{});
  return RationalFunction(std::move(num), std::move(den), Reduced{});
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ZeroDivision("division by zero");
  if (sgn(num_.leading_coefficient()) < 0) return RationalFunction(-den_, -num_, Reduced{});
  return RationalFunction(den_, num_, Reduced{});
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Reduced{});
}

RationalFunction RationalFunction::extended(std::size_t new_nvars) const {
  return RationalFunction(num_.extended(new_nvars), den_.extended(new_nvars), Reduced{});
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw ZeroDivision("denominator vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

namespace {
bool needs_parens(const Polynomial& p) {
  if (p.size() > 1) return true;
  if (p.is_constant()) return false;
  // a single monomial: parenthesize when it has more than one factor
  std::size_t factors = p.coefficient(0) == 1 ? 0 : 1;
  for (auto e : p.exponents(0))
    if (e) ++factors;
  return factors > 1;
}
}  // namespace

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
  std::string n = num_.to_string(names);
  if (den_.is_one()) return n;
  std::string d = den_.to_string(names);
  if (num_.size() > 1) n = "(" + n + ")";
  if (needs_parens(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(std::string_view s, const Ring& ring) : s_(s), ring_(ring), nv_(ring.size()) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  RationalFunction expr() {
    RationalFunction r = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        r = r + term();
      } else if (peek('-')) {
        ++pos_;
        r = r - term();
      } else {
        return r;
      }
    }
  }

  RationalFunction term() {
    RationalFunction r = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        r = r * unary();
      } else if (peek('/')) {
        ++pos_;
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else if (starts_primary()) {
        r = r * unary();  // juxtaposition
      } else {
        return r;
      }
    }
  }

  RationalFunction unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    RationalFunction base = primary();
    if (peek('^') || (peek('*') && pos_ + 1 < s_.size() && s_[pos_ + 1] == '*')) {
      pos_ += s_[pos_] == '^' ? 1 : 2;
      skip();
      bool neg = false;
      if (peek('-')) {
        neg = true;
        ++pos_;
      } else if (peek('+')) {
        ++pos_;
      }
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      long e = std::stol(std::string(s_.substr(start, pos_ - start)));
      if (neg) {
        if (base.is_zero()) fail("zero to a negative power");
        e = -e;
      }
      return base.pow(e);
    }
    return base;
  }

  RationalFunction primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction(Polynomial::constant(nv_, Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      const auto& names = ring_.names();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return RationalFunction::variable(nv_, i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character");
  }

  std::string_view s_;
  const Ring& ring_;
  std::size_t nv_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text, const Ring& ring) {
  return Parser(text, ring).parse();
}

}  // namespace quivermut
