#pragma once

#include <cstddef>
#include <vector>

#include "stablekac/partitions.hpp"
#include "stablekac/stable_ring.hpp"

namespace stablekac {

/// A q-series with coefficients in the stable Grothendieck ring, truncated at
/// q^order inclusive.  q is the character of z^{-1}: the power of q counts the
/// drop in δ-coefficient below the highest weight.  Level and base δ-offset
/// are carried as metadata and do not affect arithmetic.
class CharacterSeries {
 public:
  explicit CharacterSeries(std::size_t order, Index level = 0, Index delta_offset = 0);

  /// 1 + O(q^{order+1}).
  static CharacterSeries one(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  Index level() const { return level_; }
  Index delta_offset() const { return delta_offset_; }

  /// Throws std::out_of_range beyond the order.
  const KElement& coefficient(std::size_t power) const { return coeffs_.at(power); }
  const std::vector<KElement>& coefficients() const { return coeffs_; }

  /// Adds x at q^power; contributions beyond the order are discarded.
  void add(std::size_t power, const KElement& x);

  CharacterSeries& operator+=(const CharacterSeries& other);
  CharacterSeries& operator-=(const CharacterSeries& other);

  bool is_nonnegative() const;

  /// Compares orders and coefficients only.
  bool operator==(const CharacterSeries& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<KElement> coeffs_;
  Index level_;
  Index delta_offset_;
};

/// δ(λ,μ,ν) = |λ| + Σ_{i≤b} (k - μ_{q_i+1} - ν_{p_i+1}) for λ = (p|q).
/// Throws NonDominantWeight unless μ₁ + ν₁ ≤ k.
Index delta_exponent(const Partition& lambda, const Partition& mu, const Partition& nu, Index k);

/// The highest weight of the Verma term for λ, i.e. w_λ · [μ,ν] with its
/// δ-part removed.  Throws NonDominantWeight.
Bipartition lambda_dot(const Partition& lambda, const Partition& mu, const Partition& nu, Index k);

/// Graded character of the parabolic Verma module with top b placed at
/// q^shift: the coefficient of q^{shift+j} is pbw_graded(j) ⊗ b.
CharacterSeries chr_verma(const Bipartition& b, std::size_t shift, std::size_t order);

/// chr L([μ,ν], k) as the alternating sum over partitions λ of Verma
/// characters, using the closed forms delta_exponent and lambda_dot.
CharacterSeries chr_L_explicit(const Partition& mu, const Partition& nu, Index k, std::size_t order);

/// The same character computed through the affine Weyl group: each slice w_λ
/// acts on the highest weight by the dot action, and the result is read back
/// as a bipartition plus a δ-drop.
CharacterSeries chr_L_generic(const Partition& mu, const Partition& nu, Index k, std::size_t order);

/// Σ_{|λ| ≤ order} (-1)^{|λ|} q^{|λ|} [λ, λᵗ]: the inverse of chr M(0).
CharacterSeries denominator_inverse(std::size_t order);

/// Truncated Cauchy product at min(order(a), order(b)).  Levels add.
CharacterSeries series_mul(const CharacterSeries& a, const CharacterSeries& b);

/// Σ_{λ ⊢ i} [λ, λᵗ]: the stable i-th cohomology of the negative loop algebra.
KElement garland(Index i);

}  // namespace stablekac
