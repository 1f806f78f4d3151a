#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "stablekac/numeric.hpp"
#include "stablekac/partitions.hpp"
#include "stablekac/stable_ring.hpp"

namespace stablekac {

/// A dominant weight of GL_n: n weakly decreasing integers.
class RationalWeight {
 public:
  RationalWeight() = default;
  /// Throws InvalidInput if entries increase anywhere.
  explicit RationalWeight(std::vector<Index> entries);

  const std::vector<Index>& entries() const { return entries_; }
  std::size_t rank() const { return entries_.size(); }

  auto operator<=>(const RationalWeight&) const = default;
  bool operator==(const RationalWeight&) const = default;

 private:
  std::vector<Index> entries_;
};

/// A multiset of GL_n weights (arbitrary integer vectors of length n).
using WeightMultiset = std::map<std::vector<Index>, Integer>;
/// Irreducible GL_n modules with multiplicities.
using GLDecomposition = std::map<RationalWeight, Integer>;

/// Π_{i<j} (w_i - w_j + j - i)/(j - i).
Integer weyl_dim_gl(std::size_t n, const RationalWeight& w);

/// (μ₁, ..., 0, ..., -ν₂, -ν₁) of length n; throws RankTooSmall if
/// l(μ) + l(ν) > n.
RationalWeight bipartition_to_rational_weight(const Bipartition& b, std::size_t n);

/// Positive entries become μ, negated negative entries (read from the end) ν.
Bipartition rational_weight_to_bipartition(const RationalWeight& w);

/// Number of semistandard tableaux of the given shape and content.
Integer kostka(const Partition& shape, std::vector<Index> content);

/// Full weight multiset of the irreducible GL_n module with highest weight w,
/// from Kostka numbers of the det-twisted polynomial shape.
WeightMultiset irreducible_weights(const RationalWeight& w);

/// Weights of V ⊗ V* for the defining module V of GL_n.
WeightMultiset gl_adjoint_weights(std::size_t n);

/// Weight multiset of a tensor product.
WeightMultiset tensor_weights(const WeightMultiset& a, const WeightMultiset& b);

/// Weight multiset of Sym^m of a module with the given weights, by
/// enumerating multisets of basis vectors.
WeightMultiset symmetric_power_weights(const WeightMultiset& base, Index m);

/// Greedy highest-weight stripping: repeatedly remove the character of the
/// irreducible whose highest weight is the lexicographically largest
/// remaining dominant weight.  Throws NotARepresentation if a multiplicity
/// would become negative, InvalidInput on length mismatch.
GLDecomposition decompose_by_weights(std::size_t n, const WeightMultiset& weights);

/// The GL_n tensor product V_a ⊗ V_b, via weight multisets and stripping.
GLDecomposition finite_tensor(std::size_t n, const RationalWeight& a, const RationalWeight& b);

/// Image of a stable class at rank n: every [μ,ν] with l(μ)+l(ν) ≤ n is sent
/// to its GL_n weight, longer bipartitions vanish.  Products of stable classes
/// specialize correctly only once n covers every term's length.
GLDecomposition restrict_to_rank(const KElement& x, std::size_t n);

}  // namespace stablekac
