#pragma once

#include <random>
#include <string>
#include <vector>

#include "quivermut/exchange_matrix.hpp"
#include "quivermut/rational_function.hpp"

namespace qmt {

using namespace quivermut;

inline IntegerMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  IntegerMatrix out;
  for (auto& r : rows) {
    out.emplace_back();
    for (long v : r) out.back().emplace_back(v);
  }
  return out;
}

inline ExchangeMatrix EM(std::initializer_list<std::initializer_list<long>> rows, std::size_t n = 0) {
  auto m = M(rows);
  return ExchangeMatrix::from_rows(m, n ? n : m.size());
}

/// Random skew-symmetrizable B = S * D with S skew-symmetric.
inline ExchangeMatrix random_exchange_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m, int spread = 2) {
  std::uniform_int_distribution<int> entry(-spread, spread), dd(1, 3);
  std::vector<long> d(n);
  for (auto& x : d) x = dd(rng);
  IntegerMatrix b(n + m, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      long s = entry(rng);
      b[i][j] = s * d[j];
      b[j][i] = -s * d[i];
    }
  for (std::size_t i = n; i < n + m; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = entry(rng);
  return ExchangeMatrix::from_rows(b, n);
}

inline std::string render(const RationalFunction& f, const Ring& r) { return f.to_string(r.names()); }

}  // namespace qmt
