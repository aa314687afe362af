#include "quivermut/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "quivermut/errors.hpp"

namespace quivermut {

int compare_monomials(const Exponent* a, const Exponent* b, std::size_t n) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

Polynomial Polynomial::constant(std::size_t nvars, const Integer& c) {
  Polynomial p(nvars);
  if (c != 0) {
    p.exps_.assign(nvars, 0);
    p.coeffs_.push_back(c);
  }
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw IndexOutOfRange("variable index out of range");
  Polynomial p(nvars);
  p.exps_.assign(nvars, 0);
  p.exps_[index] = power;
  p.coeffs_.push_back(1);
  return p;
}

Polynomial Polynomial::monomial(std::size_t nvars, std::span<const Exponent> exps, const Integer& c) {
  Polynomial p(nvars);
  if (c != 0) p.push_term(exps, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (coeffs_.empty()) return true;
  if (coeffs_.size() > 1) return false;
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Polynomial::is_one() const { return is_constant() && !is_zero() && coeffs_[0] == 1; }

Exponent Polynomial::degree(std::size_t var) const {
  Exponent d = 0;
  for (std::size_t t = 0; t < size(); ++t) d = std::max(d, exps_[t * nvars_ + var]);
  return d;
}

Exponent Polynomial::min_degree(std::size_t var) const {
  if (is_zero()) return 0;
  Exponent d = exps_[var];
  for (std::size_t t = 1; t < size(); ++t) d = std::min(d, exps_[t * nvars_ + var]);
  return d;
}

Exponent Polynomial::total_degree() const {
  Exponent best = 0;
  for (std::size_t t = 0; t < size(); ++t) {
    Exponent s = 0;
    for (std::size_t i = 0; i < nvars_; ++i) s += exps_[t * nvars_ + i];
    best = std::max(best, s);
  }
  return best;
}

void Polynomial::push_term(std::span<const Exponent> exps, const Integer& c) {
  exps_.insert(exps_.end(), exps.begin(), exps.end());
  coeffs_.push_back(c);
}

void Polynomial::normalize() {
  const std::size_t T = size();
  std::vector<std::size_t> idx(T);
  std::iota(idx.begin(), idx.end(), 0);
  const Exponent* base = exps_.data();
  const std::size_t n = nvars_;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return compare_monomials(base + a * n, base + b * n, n) > 0;
  });
  std::vector<Exponent> ne;
  std::vector<Integer> nc;
  ne.reserve(exps_.size());
  nc.reserve(T);
  for (std::size_t k = 0; k < T;) {
    std::size_t t = idx[k];
    Integer c = coeffs_[t];
    std::size_t l = k + 1;
    while (l < T && compare_monomials(base + idx[l] * n, base + t * n, n) == 0) {
      c += coeffs_[idx[l]];
      ++l;
    }
    if (c != 0) {
      ne.insert(ne.end(), base + t * n, base + (t + 1) * n);
      nc.push_back(std::move(c));
    }
    k = l;
  }
  exps_ = std::move(ne);
  coeffs_ = std::move(nc);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  const std::size_t n = a.nvars();
  Polynomial r(n);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare_monomials(a.exponents(i).data(), b.exponents(j).data(), n);
    if (c > 0) {
      r.push_term(a.exponents(i), a.coefficient(i));
      ++i;
    } else if (c < 0) {
      r.push_term(b.exponents(j), subtract ? Integer(-b.coefficient(j)) : b.coefficient(j));
      ++j;
    } else {
      Integer s = subtract ? Integer(a.coefficient(i) - b.coefficient(j))
                           : Integer(a.coefficient(i) + b.coefficient(j));
      if (s != 0) r.push_term(a.exponents(i), s);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_term(a.exponents(i), a.coefficient(i));
  for (; j < b.size(); ++j)
    r.push_term(b.exponents(j), subtract ? Integer(-b.coefficient(j)) : b.coefficient(j));
  return r;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw InvalidInput("polynomials live in different rings");
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  return merge(*this, o, false);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same_ring(*this, o);
  return merge(*this, o, true);
}

Polynomial Polynomial::operator*(const Integer& c) const {
  if (c == 0) return Polynomial(nvars_);
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Polynomial Polynomial::shifted(std::span<const Exponent> e) const {
  Polynomial r = *this;
  for (std::size_t t = 0; t < size(); ++t)
    for (std::size_t i = 0; i < nvars_; ++i) r.exps_[t * nvars_ + i] += e[i];
  return r;
}

Polynomial Polynomial::unshifted(std::span<const Exponent> e) const {
  Polynomial r = *this;
  for (std::size_t t = 0; t < size(); ++t)
    for (std::size_t i = 0; i < nvars_; ++i) r.exps_[t * nvars_ + i] -= e[i];
  return r;
}

Polynomial Polynomial::divided_by(const Integer& c) const {
  Polynomial r = *this;
  if (c == 1) return r;
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  if (is_zero() || o.is_zero()) return Polynomial(nvars_);
  if (o.is_monomial()) return shifted(o.exponents(0)) * o.coefficient(0);
  if (is_monomial()) return o.shifted(exponents(0)) * coefficient(0);
  Polynomial r(nvars_);
  r.exps_.reserve(size() * o.size() * nvars_);
  r.coeffs_.reserve(size() * o.size());
  std::vector<Exponent> e(nvars_);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < o.size(); ++j) {
      for (std::size_t v = 0; v < nvars_; ++v) e[v] = exps_[i * nvars_ + v] + o.exps_[j * nvars_ + v];
      r.push_term(e, coeffs_[i] * o.coeffs_[j]);
    }
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::extended(std::size_t new_nvars) const {
  for (std::size_t v = new_nvars; v < nvars_; ++v)
    if (involves(v)) throw InvalidInput("cannot drop a variable the polynomial uses");
  Polynomial r(new_nvars);
  std::vector<Exponent> e(new_nvars, 0);
  const std::size_t keep = std::min(nvars_, new_nvars);
  for (std::size_t t = 0; t < size(); ++t) {
    std::copy_n(exps_.begin() + static_cast<std::ptrdiff_t>(t * nvars_), keep, e.begin());
    r.push_term(e, coeffs_[t]);
  }
  return r;
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::vector<Exponent> Polynomial::min_exponents() const {
  std::vector<Exponent> m(nvars_, 0);
  if (is_zero()) return m;
  std::copy_n(exps_.begin(), nvars_, m.begin());
  for (std::size_t t = 1; t < size(); ++t)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], exps_[t * nvars_ + i]);
  return m;
}

namespace {
Rational rational_pow(const Rational& q, Exponent e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}
}  // namespace

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() < nvars_) throw InvalidInput("evaluation point has too few coordinates");
  Rational s = 0;
  for (std::size_t t = 0; t < size(); ++t) {
    Rational term = coeffs_[t];
    for (std::size_t i = 0; i < nvars_; ++i) {
      Exponent e = exps_[t * nvars_ + i];
      if (e) term *= rational_pow(point[i], e);
    }
    s += term;
  }
  return s;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> out(degree(var) + 1, Polynomial(nvars_));
  std::vector<Exponent> e(nvars_);
  for (std::size_t t = 0; t < size(); ++t) {
    std::copy_n(exps_.begin() + static_cast<std::ptrdiff_t>(t * nvars_), nvars_, e.begin());
    Exponent d = e[var];
    e[var] = 0;
    out[d].push_term(e, coeffs_[t]);
  }
  // removing one variable keeps the relative order within a slice except for ties in degree
  for (auto& p : out) p.normalize();
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t t = 0; t < size(); ++t) {
    const Integer& c = coeffs_[t];
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      Exponent e = exps_[t * nvars_ + i];
      if (!e) continue;
      if (!mono.empty()) mono += '*';
      mono += i < names.size() ? names[i] : "v" + std::to_string(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    Integer a = abs(c);
    std::string body;
    if (mono.empty())
      body = a.get_str();
    else if (a == 1)
      body = mono;
    else
      body = a.get_str() + "*" + mono;
    if (t == 0)
      s += (sgn(c) < 0 ? "-" : "") + body;
    else
      s += (sgn(c) < 0 ? " - " : " + ") + body;
  }
  return s;
}

std::size_t Polynomial::hash() const {
  std::size_t h = nvars_ * 1000003u;
  for (std::size_t t = 0; t < size(); ++t) {
    h = h * 31 + hash_value(coeffs_[t]);
    for (std::size_t i = 0; i < nvars_; ++i) h = h * 131 + exps_[t * nvars_ + i];
  }
  return h;
}

// ---------------------------------------------------------------- division

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  if (b.is_zero()) throw ZeroDivision("polynomial division by zero");
  const std::size_t n = a.nvars();
  if (a.is_zero()) return Polynomial(n);
  if (b.is_monomial()) {
    auto mins = a.min_exponents();
    auto be = b.exponents(0);
    for (std::size_t i = 0; i < n; ++i)
      if (mins[i] < be[i]) return std::nullopt;
    const Integer& bc = b.coefficient(0);
    for (std::size_t t = 0; t < a.size(); ++t)
      if (!mpz_divisible_p(a.coefficient(t).get_mpz_t(), bc.get_mpz_t())) return std::nullopt;
    return a.unshifted(be).divided_by(bc);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (a.degree(v) < b.degree(v)) return std::nullopt;
  if (a.size() < b.size() && a.size() == 1) return std::nullopt;

  Polynomial q(n);
  Polynomial r = a;
  auto lb = b.exponents(0);
  const Integer& lcb = b.coefficient(0);
  std::vector<Exponent> te(n);
  Integer tc;
  while (!r.is_zero()) {
    auto lr = r.exponents(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      te[i] = lr[i] - lb[i];
    }
    if (!mpz_divisible_p(r.coefficient(0).get_mpz_t(), lcb.get_mpz_t())) return std::nullopt;
    mpz_divexact(tc.get_mpz_t(), r.coefficient(0).get_mpz_t(), lcb.get_mpz_t());
    q.push_term(te, tc);
    r = r - b.shifted(te) * tc;
  }
  return q;
}

// ---------------------------------------------------------------- gcd

namespace {

Polynomial positive(Polynomial p) {
  if (!p.is_zero() && sgn(p.leading_coefficient()) < 0) return -p;
  return p;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  auto cs = p.coefficients_in(var);
  Polynomial g(p.nvars());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial primitive_in(const Polynomial& p, std::size_t var) {
  Polynomial c = content_in(p, var);
  if (c.is_one()) return p;
  return *divide_exact(p, c);
}

Polynomial var_power(std::size_t n, std::size_t var, Exponent e) {
  return Polynomial::variable(n, var, e);
}

// pseudo-remainder of a by b in var
Polynomial prem(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const std::size_t n = a.nvars();
  const Exponent db = b.degree(var);
  auto cb = b.coefficients_in(var);
  const Polynomial& lcb = cb[db];
  Polynomial bred = b - lcb * var_power(n, var, db);
  Polynomial r = a;
  while (!r.is_zero()) {
    Exponent d = r.degree(var);
    if (d < db) break;
    auto cr = r.coefficients_in(var);
    const Polynomial& lcr = cr[d];
    Polynomial rred = r - lcr * var_power(n, var, d);
    r = lcb * rred - lcr * var_power(n, var, d - db) * bred;
  }
  return r;
}

// a, b nonzero, primitive, no monomial factor
Polynomial gcd_reduced(Polynomial a, Polynomial b) {
  const std::size_t n = a.nvars();
  const Polynomial one = Polynomial::constant(n, 1);
  for (bool changed = true; changed;) {
    changed = false;
    if (a.is_constant() || b.is_constant()) return one;
    for (std::size_t v = 0; v < n; ++v) {
      bool ia = a.involves(v), ib = b.involves(v);
      if (ia && !ib) {
        a = content_in(a, v);
        changed = true;
      } else if (ib && !ia) {
        b = content_in(b, v);
        changed = true;
      }
      if (a.is_constant() || b.is_constant()) return one;
    }
  }
  a = positive(a);
  b = positive(b);
  if (a == b) return a;
  if (a.size() >= b.size()) {
    if (divide_exact(a, b)) return b;
  } else {
    if (divide_exact(b, a)) return a;
  }

  std::size_t var = n;
  Exponent best = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!a.involves(v)) continue;
    Exponent d = std::max(a.degree(v), b.degree(v));
    if (var == n || d < best) {
      var = v;
      best = d;
    }
  }
  Polynomial ca = content_in(a, var), cb = content_in(b, var);
  Polynomial cg = gcd(ca, cb);
  Polynomial pa = ca.is_one() ? a : *divide_exact(a, ca);
  Polynomial pb = cb.is_one() ? b : *divide_exact(b, cb);
  if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
  while (true) {
    Polynomial r = prem(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree(var) == 0) {
      pb = one;
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r, var);
  }
  if (!pb.is_constant()) pb = primitive_in(pb, var);
  return positive(cg * positive(pb));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  const std::size_t n = a.nvars();
  Integer ca = a.content(), cb = b.content();
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  auto ma = a.min_exponents(), mb = b.min_exponents();
  std::vector<Exponent> mg(n);
  for (std::size_t i = 0; i < n; ++i) mg[i] = std::min(ma[i], mb[i]);
  Polynomial g = Polynomial::constant(n, 1);
  if (!a.is_monomial() && !b.is_monomial())
    g = gcd_reduced(a.unshifted(ma).divided_by(ca), b.unshifted(mb).divided_by(cb));
  return positive(g.shifted(mg) * c);
}

}  // namespace quivermut
