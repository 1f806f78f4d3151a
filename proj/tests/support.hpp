#pragma once

#include <vector>

#include "stablekac/affine_roots.hpp"
#include "stablekac/partitions.hpp"
#include "stablekac/stable_ring.hpp"

namespace stablekac::testing {

inline std::vector<Bipartition> bipartitions_of_size(Index n) {
  std::vector<Bipartition> out;
  for (Index a = 0; a <= n; ++a)
    for (const auto& l : enumerate_partitions(a))
      for (const auto& r : enumerate_partitions(n - a)) out.push_back({l, r});
  return out;
}

inline std::vector<Bipartition> bipartitions_up_to(Index n) {
  std::vector<Bipartition> out;
  for (Index m = 0; m <= n; ++m) {
    auto level = bipartitions_of_size(m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline KElement term(Partition l, Partition r, Integer m = 1) {
  return KElement::of({std::move(l), std::move(r)}, m);
}

inline Integer binomial(Integer n, Index k) {
  Integer r = 1;
  for (Index i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// p(n) by Euler's pentagonal recurrence.
inline std::vector<Integer> partition_counts(Index up_to) {
  std::vector<Integer> p(static_cast<std::size_t>(up_to) + 1, 0);
  p[0] = 1;
  for (Index n = 1; n <= up_to; ++n)
    for (Index k = 1;; ++k) {
      const Index g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = k % 2 ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  return p;
}

/// GL weights used to compare dot actions: dominant bipartition weights of
/// size ≤ 4 at levels 0..4 plus a few non-dominant ones.
inline std::vector<Weight> weight_battery() {
  const Weight lambda0 = Weight::lambda0_weight();
  const Weight delta = Weight::delta_weight();
  std::vector<Weight> out{Weight{}, lambda0, 3 * delta - lambda0,
                          Weight::epsilon(CaseTag::GL, 5) - Weight::epsilon(CaseTag::GL, -3) + 2 * lambda0};
  for (const auto& b : bipartitions_up_to(4))
    for (Index k = 0; k <= 4; ++k) out.push_back(bipartition_to_weight(b, k, 0));
  return out;
}

}  // namespace stablekac::testing
