#pragma once

#include <compare>
#include <map>
#include <string>

#include "stablekac/numeric.hpp"
#include "stablekac/partitions.hpp"

namespace stablekac {

/// Which limit diagram: A∞ (GL, ε-indices in Z), D∞ (O) or C∞ (Sp), the
/// latter two indexed by positive integers.
enum class CaseTag { GL, O, Sp };

std::string case_name(CaseTag kind);

/// An element of the infinite-rank affine weight lattice
/// Z{ε_i} ⊕ ZΛ₀ ⊕ Zδ.  The ε-part is sparse with zeros never stored, so
/// equality is structural.
class Weight {
 public:
  Weight() = default;
  explicit Weight(CaseTag kind) : kind_(kind) {}

  static Weight lambda0_weight(CaseTag kind = CaseTag::GL);
  static Weight delta_weight(CaseTag kind = CaseTag::GL);
  static Weight epsilon(CaseTag kind, Index i, Index coeff = 1);

  CaseTag kind() const { return kind_; }
  const std::map<Index, Index>& eps() const { return eps_; }
  Index eps(Index i) const;
  Index level() const { return lambda0_; }
  Index delta() const { return delta_; }

  /// Adds to the ε_i coefficient; throws InvalidInput for i outside the
  /// case's index set.
  Weight& add_eps(Index i, Index v);
  Weight& add_lambda0(Index v) { lambda0_ += v; return *this; }
  Weight& add_delta(Index v) { delta_ += v; return *this; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(Index s);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Index s, Weight a) { return a *= s; }
  Weight operator-() const { return Weight(kind_) - *this; }

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

 private:
  CaseTag kind_ = CaseTag::GL;
  std::map<Index, Index> eps_;
  Index lambda0_ = 0;
  Index delta_ = 0;
};

/// Readable form, e.g. "2ε1 - 2ε0 + Λ0 - 2δ"; "0" for the zero weight.
std::string weight_text(const Weight& w);

/// Throws InvalidInput unless x indexes a vertex of the case's diagram
/// (any integer for GL, x ≥ 0 otherwise).
void check_root_index(CaseTag kind, Index x);

/// α_x.  GL: α_0 = ε_0 - ε_1 + δ, α_i = ε_i - ε_{i+1};
/// O: α_0 = δ - ε_1 - ε_2; Sp: α_0 = δ - 2ε_1; O/Sp α_i = ε_i - ε_{i+1}.
Weight simple_root(CaseTag kind, Index x);

/// ⟨φ, α_x^∨⟩ with c(Λ₀) = 1 for GL and O, 2 for Sp, and c(δ) = 0.
Index pair_coroot(CaseTag kind, const Weight& phi, Index x);

/// Σ μ_i ε_i - Σ ν_j ε_{1-j} + kΛ₀ + aδ (GL).
Weight bipartition_to_weight(const Bipartition& b, Index k, Index a = 0);

struct WeightLabel {
  Bipartition bipartition;
  Index level = 0;
  Index delta = 0;

  bool operator==(const WeightLabel&) const = default;
};

/// Inverse of bipartition_to_weight.  Throws NonDominantWeight when the
/// ε-profile on either side of 0|1 is not a partition.
WeightLabel weight_to_bipartition(const Weight& w);

/// GL dominance at level k: μ₁ + ν₁ ≤ k.
bool is_dominant(const Bipartition& b, Index k);

}  // namespace stablekac
