#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "stablekac/characters.hpp"
#include "stablekac/numeric.hpp"
#include "stablekac/partitions.hpp"

namespace stablekac {

/// dim L_{[λ,μ]} as Π_k (t-k)^{m_k} / (Π hooks(λ) · Π hooks(μ)).
struct DimensionExpr {
  std::map<Index, Index> numerator_exponents;  // k -> m_k > 0
  Integer hook_denominator = 1;

  bool operator==(const DimensionExpr&) const = default;
};

/// Polynomial in x with rational coefficients, stored densely by degree with
/// no trailing zeros (the zero polynomial has no coefficients).
class XPolynomial {
 public:
  XPolynomial() = default;
  explicit XPolynomial(std::vector<Rational> coeffs);
  static XPolynomial constant(const Rational& c);
  static XPolynomial x();

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t degree) const;
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational evaluate(const Rational& at) const;

  XPolynomial& operator+=(const XPolynomial& o);
  XPolynomial& operator-=(const XPolynomial& o);
  XPolynomial& operator*=(const XPolynomial& o);
  XPolynomial& operator*=(const Rational& s);
  friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
  friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }
  friend XPolynomial operator*(XPolynomial a, const XPolynomial& b) { return a *= b; }
  friend XPolynomial operator*(XPolynomial a, const Rational& s) { return a *= s; }

  bool operator==(const XPolynomial&) const = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// E.g. "1 - 5/4x + 1/4x^2"; "0" for the zero polynomial.
std::string xpoly_text(const XPolynomial& p);

/// Regularized exponent #{(i,j) : (i-λ_i)+(j-μ_j) = k+1} - #{(i,j) : i+j = k+1},
/// both counted over i,j ≥ 1.  Agrees with the unregularized "- k" form for k ≥ 1.
Index m_exponent(const Partition& lambda, const Partition& mu, Index k);

/// Throws InternalInconsistency if an exponent comes out negative.
DimensionExpr dim_expr(const Partition& lambda, const Partition& mu);

Rational evaluate_dim(const DimensionExpr& e, const Rational& t);

/// "(t+1)*(t-1)", "t^2/2"; "1" for the trivial object.
std::string dim_expr_text(const DimensionExpr& e);

/// Per power of q, Σ mult · dim evaluated at t.
std::vector<Rational> series_dimension(const CharacterSeries& s, const Rational& t);

/// Σ mult · dim evaluated at t for a single class.
Rational kelement_dimension(const KElement& x, const Rational& t);

/// Coefficients of q^0..q^order in Π_{i≥1} (1-q^i)^{x-1}.
std::vector<XPolynomial> nekrasov_okounkov_lhs(std::size_t order);

/// Coefficients of q^0..q^order in Σ_λ q^{|λ|} Π_{h} (1 - x/h²).
std::vector<XPolynomial> nekrasov_okounkov_rhs(std::size_t order);

}  // namespace stablekac
