#include "stablekac/dimensions.hpp"

#include <algorithm>
#include <sstream>

#include "stablekac/errors.hpp"

namespace stablekac {

XPolynomial::XPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

XPolynomial XPolynomial::constant(const Rational& c) { return XPolynomial({c}); }
XPolynomial XPolynomial::x() { return XPolynomial({Rational(0), Rational(1)}); }

void XPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational XPolynomial::coefficient(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : Rational(0);
}

Rational XPolynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

XPolynomial& XPolynomial::operator*=(const XPolynomial& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

XPolynomial& XPolynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

std::string xpoly_text(const XPolynomial& p) {
  if (p.coefficients().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < p.coefficients().size(); ++d) {
    const Rational& c = p.coefficients()[d];
    if (c == 0) continue;
    const Rational a = c < 0 ? Rational(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (d == 0 || a != 1) os << to_decimal(a);
    if (d >= 1) os << 'x';
    if (d >= 2) os << '^' << d;
    first = false;
  }
  return os.str();
}

namespace {

// #{(i,j) ≥ 1 : (i - λ_i) + (j - μ_j) = target}.  For i > l(λ) the sequence
// i - λ_i is just i, so pairs beyond the diagram cancel against the empty
// baseline except for a bounded window; counting inside [1..N]² with N past
// every row and |target| is exact for the difference.
Index content_pair_count(const Partition& lambda, const Partition& mu, Index target, Index bound) {
  Index count = 0;
  for (Index i = 1; i <= bound; ++i) {
    const Index j_shift = target - (i - lambda.part(static_cast<std::size_t>(i)));
    for (Index j = 1; j <= bound; ++j)
      if (j - mu.part(static_cast<std::size_t>(j)) == j_shift) ++count;
  }
  return count;
}

}  // namespace

Index m_exponent(const Partition& lambda, const Partition& mu, Index k) {
  const Index absk = k < 0 ? -k : k;
  const Index bound = static_cast<Index>(lambda.length() + mu.length()) + absk + lambda.part(1) + mu.part(1) + 2;
  return content_pair_count(lambda, mu, k + 1, bound) - content_pair_count({}, {}, k + 1, bound);
}

DimensionExpr dim_expr(const Partition& lambda, const Partition& mu) {
  DimensionExpr e;
  // Outside this window the exponent vanishes.
  const Index lo = -(lambda.part(1) + mu.part(1)) - 1;
  const Index hi = static_cast<Index>(lambda.length() + mu.length()) + 1;
  for (Index k = lo; k <= hi; ++k) {
    const Index m = m_exponent(lambda, mu, k);
    if (m < 0) throw InternalInconsistency("negative exponent of (t-" + std::to_string(k) + ")");
    if (m > 0) e.numerator_exponents[k] = m;
  }
  e.hook_denominator = hook_product(lambda) * hook_product(mu);
  return e;
}

Rational evaluate_dim(const DimensionExpr& e, const Rational& t) {
  Rational num = 1;
  for (const auto& [k, m] : e.numerator_exponents)
    for (Index r = 0; r < m; ++r) num *= t - k;
  return num / Rational(e.hook_denominator);
}

std::string dim_expr_text(const DimensionExpr& e) {
  std::ostringstream os;
  bool first = true;
  // Ascending k gives the conventional (t+1)*t*(t-1) reading order.
  for (auto it = e.numerator_exponents.begin(); it != e.numerator_exponents.end(); ++it) {
    const auto [k, m] = *it;
    if (!first) os << '*';
    if (k == 0)
      os << 't';
    else
      os << "(t" << (k > 0 ? "-" : "+") << (k > 0 ? k : -k) << ')';
    if (m > 1) os << '^' << m;
    first = false;
  }
  if (first) os << '1';
  if (e.hook_denominator != 1) os << '/' << to_decimal(e.hook_denominator);
  return os.str();
}

Rational kelement_dimension(const KElement& x, const Rational& t) {
  Rational total = 0;
  for (const auto& [b, mult] : x.terms()) total += Rational(mult) * evaluate_dim(dim_expr(b.left, b.right), t);
  return total;
}

std::vector<Rational> series_dimension(const CharacterSeries& s, const Rational& t) {
  std::vector<Rational> out;
  for (const auto& c : s.coefficients()) out.push_back(kelement_dimension(c, t));
  return out;
}

std::vector<XPolynomial> nekrasov_okounkov_lhs(std::size_t order) {
  // log Π(1-q^i) = -Σ_n σ(n)/n q^n, so the product is exp(g) with
  // g_n = (1-x) σ(n)/n, and f = exp(g) satisfies n f_n = Σ_k k g_k f_{n-k}.
  const XPolynomial one_minus_x({Rational(1), Rational(-1)});
  std::vector<XPolynomial> f{XPolynomial::constant(1)};
  for (std::size_t n = 1; n <= order; ++n) {
    XPolynomial acc;
    for (std::size_t k = 1; k <= n; ++k) {
      Integer sigma = 0;
      for (std::size_t d = 1; d <= k; ++d)
        if (k % d == 0) sigma += d;
      acc += f[n - k] * Rational(sigma);
    }
    f.push_back(acc * one_minus_x * Rational(1, static_cast<long long>(n)));
  }
  return f;
}

std::vector<XPolynomial> nekrasov_okounkov_rhs(std::size_t order) {
  std::vector<XPolynomial> out;
  for (std::size_t n = 0; n <= order; ++n) {
    XPolynomial total;
    for (const auto& lambda : enumerate_partitions(static_cast<Index>(n))) {
      XPolynomial term = XPolynomial::constant(1);
      for (auto h : hook_lengths(lambda))
        term *= XPolynomial({Rational(1), Rational(-1, static_cast<long long>(h * h))});
      total += term;
    }
    out.push_back(std::move(total));
  }
  return out;
}

}  // namespace stablekac
