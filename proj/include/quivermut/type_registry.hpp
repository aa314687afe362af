#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quivermut/exchange_matrix.hpp"
#include "quivermut/quiver.hpp"
#include "quivermut/seed.hpp"

namespace quivermut {

enum class Twist { none, affine, affine_dual, elliptic, other, other_dual, infinite };
// none: finite; affine = 1; affine_dual = -1; elliptic = [1,1]; other = 2; other_dual = -2; infinite = 3

std::string twist_repr(Twist t);

class MutationType;
using TypePtr = const MutationType*;

/// Interned classification label; compare by pointer.
class MutationType {
 public:
  const std::string& letter() const { return letter_; }
  std::size_t rank() const { return rank_; }
  /// Tuple parameter: bi-rank [a, b] for affine A and AE, leg lengths for T, [a, b] for GR and R2.
  const std::vector<int>& params() const { return params_; }
  /// Integer rank argument for families that take one (A5 -> 5, BC6 -> 6); 0 otherwise.
  int index() const { return index_; }
  Twist twist() const { return twist_; }

  bool is_irreducible() const { return components_.empty(); }
  /// Irreducible: just this type.
  std::vector<TypePtr> irreducible_components() const;

  bool is_finite() const;
  bool is_affine() const;
  bool is_elliptic() const;
  bool is_mutation_finite() const;
  bool is_simply_laced() const;
  bool is_skew_symmetric() const;

  /// ['A', 5], ['A', [2, 3], 1], [ ['A', 3], ['B', 4] ]
  const std::string& repr() const { return repr_; }
  /// A,5 / A,2:3,1 / E,6,1:1 / A,3xB,4
  std::string designation() const;
  std::string json() const;
  /// The printed property block.
  std::string properties() const;

  TypePtr dual() const;
  ExchangeMatrix b_matrix() const;
  Quiver standard_quiver() const;
  IntegerMatrix cartan_matrix() const;
  /// Finite irreducible types only.
  int coxeter_number() const;

 private:
  friend struct TypeFactory;
  MutationType() = default;
  std::string letter_;
  std::size_t rank_ = 0;
  int index_ = 0;
  std::vector<int> params_;
  Twist twist_ = Twist::none;
  std::vector<TypePtr> components_;
  std::string repr_;
};

/// Raw constructor arguments before coercion.
struct TypeArgs {
  std::string letter;
  std::vector<int> rank;  // a single integer or a tuple
  bool rank_is_tuple = false;
  std::optional<Twist> twist;
};

TypePtr make_type(const TypeArgs& args);
TypePtr make_type(std::string letter, int rank, std::optional<Twist> twist = std::nullopt);
TypePtr make_type(std::string letter, std::vector<int> tuple, std::optional<Twist> twist);
TypePtr make_reducible(const std::vector<TypePtr>& parts);

/// Designation grammar ("A,3", "A,2:3,1", "E,6,1:1", "A,3xB,4") or a printed repr ("['A', [2, 3], 1]").
TypePtr parse_type(std::string_view text);

struct ClassSize {
  enum class Kind { exact, conjectural, infinite, unknown };
  Kind kind = Kind::unknown;
  Integer value;  // meaningful for exact and conjectural
  std::string to_string() const;
};

ClassSize class_size(TypePtr t);

/// The A_n formula exactly as printed: ((2n choose n)/(n+1) + ...)/(n+3); may be non-integral.
Rational printed_a_class_formula(unsigned n);

/// The affine D_n conjecture exactly as printed (9 for n = 4).
Integer printed_affine_d_formula(unsigned n);

/// The uncoerced shapes behind GR, TR and T: grid, triangle, three-legged tree.
Quiver grassmannian_quiver(int a, int b);
Quiver triangle_quiver(int n);
Quiver t_quiver(int p, int q, int r);

/// "Quiver on N vertices[ with M frozen vertices][ of type T]".
std::string describe_quiver(const Quiver& q, TypePtr t = nullptr);

Seed seed_of_type(TypePtr t);

}  // namespace quivermut
