#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quivermut/integer.hpp"

namespace quivermut {

struct SkewSymmetrizer {
  enum class Rejection { none, not_square, nonzero_diagonal, nonpositive, inconsistent };

  std::optional<std::vector<Integer>> diagonal;
  Rejection rejection = Rejection::none;
  std::size_t row = 0;  // where the check failed
  std::size_t col = 0;

  bool ok() const { return diagonal.has_value(); }
  std::string describe() const;
};

/// Find positive D with D*B skew-symmetric; minimal positive integers per component.
SkewSymmetrizer skew_symmetrizer(const IntegerMatrix& square);

/// (n+m) x n integer matrix whose top n x n block is skew-symmetrizable.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  ExchangeMatrix(std::size_t n, std::size_t m);  // zero matrix

  /// rows.size() == n + m; every row has n entries. Throws InvalidInput / NotSkewSymmetrizable.
  static ExchangeMatrix from_rows(const IntegerMatrix& rows, std::size_t n);
  static ExchangeMatrix from_rows(const IntegerMatrix& rows);  // square, m = 0
  /// "n m" header, then n+m lines of n space-separated integers.
  static ExchangeMatrix from_text(std::string_view text);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t rows() const { return n_ + m_; }

  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const;

  ExchangeMatrix mutate(std::size_t k) const;
  void mutate_in_place(std::size_t k);

  ExchangeMatrix principal_extension() const;
  ExchangeMatrix principal_restriction() const;
  ExchangeMatrix top_block() const { return principal_restriction(); }

  /// a_ii = 2, a_ij = -|b_ij| for the top block.
  IntegerMatrix cartan_counterpart() const;
  std::vector<Integer> symmetrizer() const;

  IntegerMatrix to_rows() const;
  std::string to_text() const;

  /// Same entries after a simultaneous permutation: result(p[i], p[j]) = (*this)(i, j).
  ExchangeMatrix permuted(const std::vector<std::size_t>& p) const;

  bool operator==(const ExchangeMatrix& o) const {
    return n_ == o.n_ && m_ == o.m_ && a_ == o.a_;
  }

  /// Unchecked construction; caller guarantees validity.
  static ExchangeMatrix unchecked(std::size_t n, std::size_t m, std::vector<Integer> entries);
  const std::vector<Integer>& entries() const { return a_; }

 private:
  std::size_t n_ = 0, m_ = 0;
  std::vector<Integer> a_;
};

}  // namespace quivermut
