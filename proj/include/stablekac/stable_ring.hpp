#pragma once

#include <cstddef>
#include <limits>
#include <map>

#include "stablekac/numeric.hpp"
#include "stablekac/partitions.hpp"

namespace stablekac {

/// A class in the stable Grothendieck ring of rep(GL_t): a finite
/// integer-linear combination of bipartitions.  Zero multiplicities are never
/// stored, so the empty map is the zero element.  Terms iterate in Bipartition
/// order (size, then left, then right).
class KElement {
 public:
  using Terms = std::map<Bipartition, Integer>;

  KElement() = default;

  /// The class of the tensor unit [(),()].
  static KElement unit();
  static KElement of(const Bipartition& b, const Integer& mult = 1);

  void add(const Bipartition& b, const Integer& mult);

  const Terms& terms() const { return terms_; }
  Integer multiplicity(const Bipartition& b) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_nonnegative() const;

  KElement& operator+=(const KElement& other);
  KElement& operator-=(const KElement& other);
  KElement& operator*=(const Integer& scalar);

  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator-(KElement a, const KElement& b) { return a -= b; }
  friend KElement operator*(KElement a, const Integer& s) { return a *= s; }
  friend KElement operator*(const Integer& s, KElement a) { return a *= s; }
  KElement operator-() const { return KElement{} - *this; }

  bool operator==(const KElement&) const = default;

 private:
  Terms terms_;
};

/// Schur expansion of a product: partition -> coefficient.
using SchurExpansion = std::map<Partition, Integer>;

inline constexpr std::size_t kUnboundedRows = std::numeric_limits<std::size_t>::max();

/// s_alpha * s_beta expanded in Schur functions, keeping only shapes with at
/// most max_rows rows.  Computed by enumerating LR tableaux; memoized.
SchurExpansion lr_product(const Partition& alpha, const Partition& beta, std::size_t max_rows = kUnboundedRows);

/// Uncached enumeration of LR tableaux of shape γ/alpha with content beta, in
/// the order given (no argument swapping).
SchurExpansion lr_product_fill(const Partition& alpha, const Partition& beta, std::size_t max_rows);

/// The Littlewood-Richardson coefficient c^nu_{lambda,mu}.
Integer lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Smallest rank at which the tensor product of a and b is evaluated:
/// size(a) + size(b) + 1.
std::size_t default_tensor_rank(const Bipartition& a, const Bipartition& b);

/// L_a ⊗ L_b in rep(GL_t) for formal t, decomposed into indecomposables.
/// Evaluated at rank default_tensor_rank(a, b).
KElement stable_tensor(const Bipartition& a, const Bipartition& b);

/// Same computation at an explicit rank n.  Agrees with stable_tensor for
/// every n ≥ l(a) + l(b); throws RankTooSmall below that.
KElement stable_tensor_at_rank(const Bipartition& a, const Bipartition& b, std::size_t n);

/// Bilinear extension of stable_tensor.
KElement tensor(const KElement& a, const KElement& b);

/// Sym^m(g_t) for g_t = V ⊗ V*.
KElement sym_g(Index m);

/// Sym^m(g'_t), where g_t = g'_t ⊕ 1.
KElement sym_gprime(Index m);

/// Degree-j component of U(u^-) with u^- = ⊕_{i≥1} g'_t z^{-i}.
KElement pbw_graded(Index j);

}  // namespace stablekac
