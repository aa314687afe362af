#include "quivermut/cluster_variable.hpp"

#include "quivermut/errors.hpp"

namespace quivermut {

ClusterVariable::ClusterVariable(RationalFunction value, RingPtr ring)
    : value_(std::move(value)), ring_(std::move(ring)) {
  if (!ring_ || value_.nvars() != ring_->size()) throw InvalidInput("cluster variable outside its ring");
}

RationalFunction exchange(const std::vector<RationalFunction>& cluster, const std::vector<RationalFunction>& frozen,
                          const ExchangeMatrix& b, std::size_t k) {
  if (k >= b.n()) throw IndexOutOfRange("exchange index out of range");
  if (cluster.size() != b.n() || frozen.size() != b.m()) throw InvalidInput("cluster does not match the matrix");
  if (cluster[k].is_zero()) throw ZeroDivision("cannot exchange a zero cluster variable");
  const std::size_t nv = cluster[k].nvars();
  RationalFunction plus(Polynomial::constant(nv, 1)), minus(Polynomial::constant(nv, 1));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const Integer& e = b(i, k);
    if (e == 0) continue;
    const RationalFunction& v = i < b.n() ? cluster[i] : frozen[i - b.n()];
    if (e > 0)
      plus = plus * v.pow(e.get_si());
    else
      minus = minus * v.pow(-e.get_si());
  }
  return (plus + minus) / cluster[k];
}

std::vector<long> denominator_vector(const RationalFunction& v, std::size_t nx) {
  std::vector<long> d(nx, 0);
  const Polynomial& num = v.numerator();
  if (v.is_polynomial() && num.is_monomial() && num.coefficient(0) == 1) {
    auto e = num.exponents(0);
    std::size_t total = 0, which = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      total += e[i];
      if (e[i]) which = i;
    }
    if (total == 1 && which < nx) {
      d[which] = -1;
      return d;
    }
  }
  if (!v.is_laurent()) throw NotLaurent("denominator is not a monomial: " + v.to_string({}));
  auto e = v.denominator().exponents(0);
  for (std::size_t i = 0; i < nx && i < e.size(); ++i) d[i] = static_cast<long>(e[i]);
  return d;
}


std::vector<long> ClusterVariable::denominator_vector() const {
  return quivermut::denominator_vector(value_, ring_->nx());
}

long ClusterVariable::degree() const {
  long s = 0;
  for (long x : denominator_vector()) s += x;
  return s;
}

bool variable_less(const RationalFunction& a, const RationalFunction& b, const Ring& ring) {
  if (a == b) return false;
  std::optional<std::vector<long>> da, db;
  try {
    da = denominator_vector(a, ring.nx());
  } catch (const NotLaurent&) {
  }
  try {
    db = denominator_vector(b, ring.nx());
  } catch (const NotLaurent&) {
  }
  if (da && db) {
    long sa = 0, sb = 0;
    for (long x : *da) sa += x;
    for (long x : *db) sb += x;
    if (sa != sb) return sa < sb;
    if (sa == -1) {
      // initial variables in index order
      if (*da != *db) return *da < *db;
    } else if (*da != *db) {
      return *da > *db;
    }
  } else if (da || db) {
    return da.has_value();
  }
  return a.to_string(ring.names()) < b.to_string(ring.names());
}

bool operator<(const ClusterVariable& a, const ClusterVariable& b) {
  if (!(*a.ring() == *b.ring())) throw InvalidInput("cannot compare cluster variables from different rings");
  return variable_less(a.value(), b.value(), *a.ring());
}

}  // namespace quivermut
