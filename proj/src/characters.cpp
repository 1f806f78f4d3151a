#include "stablekac/characters.hpp"

#include <algorithm>
#include <string>

#include "stablekac/affine_roots.hpp"
#include "stablekac/errors.hpp"
#include "stablekac/weyl_slices.hpp"

namespace stablekac {

CharacterSeries::CharacterSeries(std::size_t order, Index level, Index delta_offset)
    : coeffs_(order + 1), level_(level), delta_offset_(delta_offset) {}

CharacterSeries CharacterSeries::one(std::size_t order) {
  CharacterSeries s(order);
  s.add(0, KElement::unit());
  return s;
}

void CharacterSeries::add(std::size_t power, const KElement& x) {
  if (power <= order()) coeffs_[power] += x;
}

CharacterSeries& CharacterSeries::operator+=(const CharacterSeries& other) {
  for (std::size_t j = 0; j <= std::min(order(), other.order()); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

CharacterSeries& CharacterSeries::operator-=(const CharacterSeries& other) {
  for (std::size_t j = 0; j <= std::min(order(), other.order()); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

bool CharacterSeries::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const KElement& c) { return c.is_nonnegative(); });
}

namespace {

void require_dominant(const Partition& mu, const Partition& nu, Index k) {
  if (!is_dominant({mu, nu}, k))
    throw NonDominantWeight("non-dominant: " + std::to_string(mu.part(1)) + "+" + std::to_string(nu.part(1)) +
                            " > " + std::to_string(k));
}

// Entries of xs (1-based, as a partition) with the listed 1-based indices removed.
std::vector<Index> drop_indices(const Partition& xs, const std::vector<Index>& indices) {
  std::vector<Index> out;
  for (std::size_t i = 1; i <= xs.length(); ++i)
    if (std::find(indices.begin(), indices.end(), static_cast<Index>(i)) == indices.end()) out.push_back(xs.part(i));
  return out;
}

std::vector<Index> add_rows(std::vector<Index> xs, const Partition& lambda) {
  if (xs.size() < lambda.length()) xs.resize(lambda.length(), 0);
  for (std::size_t i = 1; i <= lambda.length(); ++i) xs[i - 1] += lambda.part(i);
  return xs;
}

}  // namespace

Index delta_exponent(const Partition& lambda, const Partition& mu, const Partition& nu, Index k) {
  require_dominant(mu, nu, k);
  const auto [p, q] = frobenius(lambda);
  Index d = lambda.size();
  for (std::size_t i = 0; i < p.size(); ++i)
    d += k - mu.part(static_cast<std::size_t>(q[i] + 1)) - nu.part(static_cast<std::size_t>(p[i] + 1));
  return d;
}

Bipartition lambda_dot(const Partition& lambda, const Partition& mu, const Partition& nu, Index k) {
  require_dominant(mu, nu, k);
  const auto [p, q] = frobenius(lambda);
  // Row q_i+1 of μ and row p_i+1 of ν are exchanged across the diagonal:
  // ν_{p_i+1} reappears on the left as k - ν_{p_i+1}, μ_{q_i+1} on the right
  // as k - μ_{q_i+1}.
  std::vector<Index> left, right, mu_rows, nu_rows;
  for (std::size_t i = 0; i < p.size(); ++i) {
    left.push_back(k - nu.part(static_cast<std::size_t>(p[i] + 1)));
    right.push_back(k - mu.part(static_cast<std::size_t>(q[i] + 1)));
    mu_rows.push_back(q[i] + 1);
    nu_rows.push_back(p[i] + 1);
  }
  for (auto x : drop_indices(mu, mu_rows)) left.push_back(x);
  for (auto x : drop_indices(nu, nu_rows)) right.push_back(x);
  try {
    return {Partition(add_rows(std::move(left), lambda)), Partition(add_rows(std::move(right), conjugate(lambda)))};
  } catch (const InvalidInput& e) {
    throw InternalInconsistency(std::string("lambda_dot produced a non-partition: ") + e.what());
  }
}

CharacterSeries chr_verma(const Bipartition& b, std::size_t shift, std::size_t order) {
  CharacterSeries s(order);
  for (std::size_t power = shift; power <= order; ++power)
    s.add(power, tensor(pbw_graded(static_cast<Index>(power - shift)), KElement::of(b)));
  return s;
}

namespace {

struct VermaTerm {
  Bipartition top;
  std::size_t shift;
  bool negative;
};

CharacterSeries alternating_sum(const std::vector<VermaTerm>& terms, Index k, std::size_t order) {
  CharacterSeries s(order, k);
  for (const auto& t : terms) {
    const auto m = chr_verma(t.top, t.shift, order);
    if (t.negative)
      s -= m;
    else
      s += m;
  }
  return s;
}

}  // namespace

CharacterSeries chr_L_explicit(const Partition& mu, const Partition& nu, Index k, std::size_t order) {
  require_dominant(mu, nu, k);
  // δ(λ,μ,ν) ≥ |λ| under dominance, so |λ| ≤ order captures every term.
  std::vector<VermaTerm> terms;
  for (const auto& lambda : enumerate_partitions_up_to(static_cast<Index>(order))) {
    const Index d = delta_exponent(lambda, mu, nu, k);
    if (d > static_cast<Index>(order)) continue;
    terms.push_back({lambda_dot(lambda, mu, nu, k), static_cast<std::size_t>(d), lambda.size() % 2 == 1});
  }
  return alternating_sum(terms, k, order);
}

CharacterSeries chr_L_generic(const Partition& mu, const Partition& nu, Index k, std::size_t order) {
  require_dominant(mu, nu, k);
  const Weight phi = bipartition_to_weight({mu, nu}, k, 0);
  std::vector<VermaTerm> terms;
  for (const auto& lambda : enumerate_partitions_up_to(static_cast<Index>(order))) {
    const Weight image = dot_action(SliceGL{lambda}, phi);
    WeightLabel label;
    try {
      label = weight_to_bipartition(image);
    } catch (const NonDominantWeight& e) {
      throw InternalInconsistency(std::string("dot action left the X-dominant chamber: ") + e.what());
    }
    if (label.level != k || label.delta > 0)
      throw InternalInconsistency("dot action changed the level or raised δ: " + weight_text(image));
    const Index drop = -label.delta;
    if (drop > static_cast<Index>(order)) continue;
    terms.push_back({label.bipartition, static_cast<std::size_t>(drop), lambda.size() % 2 == 1});
  }
  return alternating_sum(terms, k, order);
}

CharacterSeries denominator_inverse(std::size_t order) {
  CharacterSeries s(order);
  for (const auto& lambda : enumerate_partitions_up_to(static_cast<Index>(order))) {
    const Integer sign = lambda.size() % 2 ? -1 : 1;
    s.add(static_cast<std::size_t>(lambda.size()), KElement::of({lambda, conjugate(lambda)}, sign));
  }
  return s;
}

CharacterSeries series_mul(const CharacterSeries& a, const CharacterSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  CharacterSeries s(order, a.level() + b.level(), a.delta_offset() + b.delta_offset());
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coefficient(i).is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) s.add(i + j, tensor(a.coefficient(i), b.coefficient(j)));
  }
  return s;
}

KElement garland(Index i) {
  KElement out;
  for (const auto& lambda : enumerate_partitions(i)) out.add({lambda, conjugate(lambda)}, 1);
  return out;
}

}  // namespace stablekac
