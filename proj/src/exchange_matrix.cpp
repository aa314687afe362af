#include "quivermut/exchange_matrix.hpp"

#include <sstream>

#include "quivermut/errors.hpp"

namespace quivermut {

std::string SkewSymmetrizer::describe() const {
  std::ostringstream os;
  switch (rejection) {
    case Rejection::none: return "skew-symmetrizable";
    case Rejection::not_square: return "matrix is not square";
    case Rejection::nonzero_diagonal:
      os << "nonzero diagonal entry at " << row;
      break;
    case Rejection::nonpositive:
      os << "no positive symmetrizer: sign pattern broken at (" << row << ", " << col << ")";
      break;
    case Rejection::inconsistent:
      os << "symmetrizer inconsistent at (" << row << ", " << col << ")";
      break;
  }
  return os.str();
}

SkewSymmetrizer skew_symmetrizer(const IntegerMatrix& b) {
  SkewSymmetrizer out;
  const std::size_t n = b.size();
  for (const auto& row : b) {
    if (row.size() != n) {
      out.rejection = SkewSymmetrizer::Rejection::not_square;
      return out;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i][i] != 0) {
      out.rejection = SkewSymmetrizer::Rejection::nonzero_diagonal;
      out.row = out.col = i;
      return out;
    }
  }
  std::vector<Rational> d(n);
  std::vector<bool> known(n, false);
  auto reject = [&](SkewSymmetrizer::Rejection r, std::size_t i, std::size_t j) {
    out.rejection = r;
    out.row = i;
    out.col = j;
    return out;
  };

  for (std::size_t start = 0; start < n; ++start) {
    if (known[start]) continue;
    known[start] = true;
    d[start] = 1;
    std::vector<std::size_t> component{start};
    std::vector<std::size_t> frontier{start};
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t k : frontier) {
        for (std::size_t i = 0; i < n; ++i) {
          if (known[i] || (b[i][k] == 0 && b[k][i] == 0)) continue;
          // d_k b_ki = -d_i b_ik with b_ik = 0 forces d_k = 0
          if (b[i][k] == 0) return reject(SkewSymmetrizer::Rejection::nonpositive, k, i);
          d[i] = -d[k] * Rational(b[k][i]) / Rational(b[i][k]);
          if (sgn(d[i]) <= 0) return reject(SkewSymmetrizer::Rejection::nonpositive, i, k);
          known[i] = true;
          for (std::size_t j = 0; j < n; ++j) {
            if (!known[j] || j == i) continue;
            if (d[i] * b[i][j] != -d[j] * b[j][i])
              return reject(SkewSymmetrizer::Rejection::inconsistent, i, j);
          }
          next.push_back(i);
          component.push_back(i);
        }
      }
      frontier = std::move(next);
    }
    // a lone vertex still needs its row checked against earlier components
    for (std::size_t i : component) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!known[j]) continue;
        if (d[i] * b[i][j] != -d[j] * b[j][i])
          return reject(SkewSymmetrizer::Rejection::inconsistent, i, j);
      }
    }
    Integer l = 1;
    for (std::size_t i : component) l = lcm(l, d[i].get_den());
    Integer g = 0;
    for (std::size_t i : component) {
      d[i] *= l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d[i].get_num_mpz_t());
    }
    for (std::size_t i : component) d[i] /= g;
  }
  std::vector<Integer> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = d[i].get_num();
  out.diagonal = std::move(diag);
  return out;
}

ExchangeMatrix::ExchangeMatrix(std::size_t n, std::size_t m) : n_(n), m_(m), a_((n + m) * n) {}

ExchangeMatrix ExchangeMatrix::unchecked(std::size_t n, std::size_t m, std::vector<Integer> e) {
  ExchangeMatrix r;
  r.n_ = n;
  r.m_ = m;
  r.a_ = std::move(e);
  return r;
}

ExchangeMatrix ExchangeMatrix::from_rows(const IntegerMatrix& rows) {
  return from_rows(rows, rows.size());
}

ExchangeMatrix ExchangeMatrix::from_rows(const IntegerMatrix& rows, std::size_t n) {
  if (n == 0) throw InvalidInput("exchange matrix needs at least one exchangeable index");
  if (rows.size() < n) throw InvalidInput("exchange matrix needs at least n rows");
  for (const auto& r : rows)
    if (r.size() != n) throw InvalidInput("every row of an exchange matrix must have n entries");
  ExchangeMatrix out(n, rows.size() - n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) out.a_[i * n + j] = rows[i][j];
  IntegerMatrix top(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(n));
  auto s = skew_symmetrizer(top);
  if (!s.ok()) throw NotSkewSymmetrizable("matrix is not skew-symmetrizable: " + s.describe());
  return out;
}

ExchangeMatrix ExchangeMatrix::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("matrix text must start with 'n m'");
  IntegerMatrix rows(static_cast<std::size_t>(n + m), std::vector<Integer>(static_cast<std::size_t>(n)));
  for (auto& row : rows) {
    for (auto& e : row) {
      std::string tok;
      if (!(in >> tok)) throw ParseError("matrix text is truncated");
      try {
        e = Integer(tok);
      } catch (const std::invalid_argument&) {
        throw ParseError("not an integer: " + tok);
      }
    }
  }
  std::string extra;
  if (in >> extra) throw ParseError("trailing data after matrix");
  return from_rows(rows, static_cast<std::size_t>(n));
}

const Integer& ExchangeMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows() || j >= n_) throw IndexOutOfRange("matrix index out of range");
  return (*this)(i, j);
}

void ExchangeMatrix::mutate_in_place(std::size_t k) {
  if (k >= n_ + m_) throw IndexOutOfRange("mutation index " + std::to_string(k) + " out of range");
  if (k >= n_) throw FrozenIndex("cannot mutate at frozen vertex " + std::to_string(k));
  const std::size_t R = rows();
  Integer t;
  for (std::size_t i = 0; i < R; ++i) {
    if (i == k) continue;
    const Integer& bik = a_[i * n_ + k];
    const int si = sgn(bik);
    if (si == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == k) continue;
      const Integer& bkj = a_[k * n_ + j];
      if (sgn(bkj) != si) continue;
      // same sign: b_ij += sign * b_ik * b_kj
      t = bik * bkj;
      if (si > 0)
        a_[i * n_ + j] += t;
      else
        a_[i * n_ + j] -= t;
    }
  }
  for (std::size_t j = 0; j < n_; ++j) a_[k * n_ + j] = -a_[k * n_ + j];
  for (std::size_t i = 0; i < R; ++i)
    if (i != k) a_[i * n_ + k] = -a_[i * n_ + k];
}

ExchangeMatrix ExchangeMatrix::mutate(std::size_t k) const {
  ExchangeMatrix r = *this;
  r.mutate_in_place(k);
  return r;
}

ExchangeMatrix ExchangeMatrix::principal_extension() const {
  if (m_ != 0) throw InvalidInput("principal extension requires a matrix without frozen rows");
  ExchangeMatrix r(n_, n_);
  for (std::size_t i = 0; i < n_ * n_; ++i) r.a_[i] = a_[i];
  for (std::size_t i = 0; i < n_; ++i) r.a_[(n_ + i) * n_ + i] = 1;
  return r;
}

ExchangeMatrix ExchangeMatrix::principal_restriction() const {
  return unchecked(n_, 0, std::vector<Integer>(a_.begin(), a_.begin() + static_cast<std::ptrdiff_t>(n_ * n_)));
}

IntegerMatrix ExchangeMatrix::cartan_counterpart() const {
  if (m_ != 0) throw InvalidInput("Cartan counterpart needs a matrix without frozen rows");
  IntegerMatrix c(n_, std::vector<Integer>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) c[i][j] = i == j ? Integer(2) : Integer(-abs((*this)(i, j)));
  return c;
}

std::vector<Integer> ExchangeMatrix::symmetrizer() const {
  IntegerMatrix top(n_, std::vector<Integer>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) top[i][j] = (*this)(i, j);
  return *skew_symmetrizer(top).diagonal;
}

IntegerMatrix ExchangeMatrix::to_rows() const {
  IntegerMatrix r(rows(), std::vector<Integer>(n_));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
  return r;
}

std::string ExchangeMatrix::to_text() const {
  std::ostringstream os;
  os << n_ << ' ' << m_ << '\n';
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j);
    }
    os << '\n';
  }
  return os.str();
}

ExchangeMatrix ExchangeMatrix::permuted(const std::vector<std::size_t>& p) const {
  ExchangeMatrix r(n_, m_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < n_; ++j) r.a_[p[i] * n_ + p[j]] = (*this)(i, j);
  return r;
}

}  // namespace quivermut
