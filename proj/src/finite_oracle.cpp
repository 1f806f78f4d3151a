#include "stablekac/finite_oracle.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "stablekac/errors.hpp"

namespace stablekac {

RationalWeight::RationalWeight(std::vector<Index> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i] > entries_[i - 1]) throw InvalidInput("GL_n weight must be weakly decreasing");
}

Integer weyl_dim_gl(std::size_t n, const RationalWeight& w) {
  if (w.rank() != n) throw InvalidInput("weight length differs from the rank");
  Integer num = 1, den = 1;
  const auto& e = w.entries();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= e[i] - e[j] + static_cast<Index>(j - i);
      den *= static_cast<Index>(j - i);
    }
  return num / den;
}

RationalWeight bipartition_to_rational_weight(const Bipartition& b, std::size_t n) {
  if (b.length() > n)
    throw RankTooSmall("bipartition needs rank at least " + std::to_string(b.length()) + ", got " + std::to_string(n));
  std::vector<Index> w(n, 0);
  for (std::size_t i = 1; i <= b.left.length(); ++i) w[i - 1] = b.left.part(i);
  for (std::size_t j = 1; j <= b.right.length(); ++j) w[n - j] = -b.right.part(j);
  return RationalWeight(std::move(w));
}

Bipartition rational_weight_to_bipartition(const RationalWeight& w) {
  std::vector<Index> pos, neg;
  for (auto x : w.entries())
    if (x > 0) pos.push_back(x);
  for (auto it = w.entries().rbegin(); it != w.entries().rend(); ++it)
    if (*it < 0) neg.push_back(-*it);
  return {Partition(std::move(pos)), Partition(std::move(neg))};
}

namespace {

// Shapes ν ⊂ λ with λ/ν a horizontal strip of the given size.
void strips(const std::vector<Index>& shape, std::size_t row, Index remaining, std::vector<Index>& inner,
            const std::function<void(const std::vector<Index>&)>& emit) {
  if (row == shape.size()) {
    if (remaining == 0) emit(inner);
    return;
  }
  const Index floor = row + 1 < shape.size() ? shape[row + 1] : 0;
  for (Index take = 0; take <= std::min(remaining, shape[row] - floor); ++take) {
    inner[row] = shape[row] - take;
    strips(shape, row + 1, remaining - take, inner, emit);
  }
  inner[row] = shape[row];
}

}  // namespace

Integer kostka(const Partition& shape, std::vector<Index> content) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, std::vector<Index>>, Integer> memo;

  content.erase(std::remove(content.begin(), content.end(), 0), content.end());
  if (std::any_of(content.begin(), content.end(), [](Index c) { return c < 0; })) return 0;
  if (std::accumulate(content.begin(), content.end(), Index{0}) != shape.size()) return 0;
  if (content.empty()) return 1;
  // Kostka numbers are symmetric in the content.
  std::sort(content.begin(), content.end(), std::greater<>());
  std::pair key{shape, content};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const Index last = content.back();
  auto rest = content;
  rest.pop_back();
  Integer total = 0;
  std::vector<Index> inner = shape.vec();
  strips(shape.vec(), 0, last, inner, [&](const std::vector<Index>& nu) { total += kostka(Partition(nu), rest); });
  std::lock_guard lock(mutex);
  memo.emplace(std::move(key), total);
  return total;
}

WeightMultiset irreducible_weights(const RationalWeight& w) {
  const std::size_t n = w.rank();
  if (n == 0) return {{{}, 1}};
  const Index shift = -w.entries().back();
  std::vector<Index> shifted = w.entries();
  for (auto& x : shifted) x += shift;
  const Partition shape(shifted);

  WeightMultiset out;
  for (const auto& mu : enumerate_partitions(shape.size())) {
    if (mu.length() > n) continue;
    std::vector<Index> content(n, 0);
    std::copy(mu.vec().begin(), mu.vec().end(), content.begin());
    const Integer k = kostka(shape, content);
    if (k == 0) continue;
    std::sort(content.begin(), content.end());
    do {
      std::vector<Index> weight = content;
      for (auto& x : weight) x -= shift;
      out[weight] += k;
    } while (std::next_permutation(content.begin(), content.end()));
  }
  return out;
}

WeightMultiset gl_adjoint_weights(std::size_t n) {
  WeightMultiset out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Index> w(n, 0);
      w[i] += 1;
      w[j] -= 1;
      out[w] += 1;
    }
  return out;
}

WeightMultiset tensor_weights(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      if (wa.size() != wb.size()) throw InvalidInput("tensor factors have different ranks");
      std::vector<Index> w(wa.size());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
      out[w] += ma * mb;
    }
  return out;
}

WeightMultiset symmetric_power_weights(const WeightMultiset& base, Index m) {
  if (m < 0) throw InvalidInput("symmetric power degree must be nonnegative");
  std::vector<const std::vector<Index>*> basis;
  std::size_t n = 0;
  for (const auto& [w, mult] : base) {
    n = w.size();
    for (Integer c = 0; c < mult; ++c) basis.push_back(&w);
  }
  WeightMultiset out;
  std::vector<Index> acc(n, 0);
  std::function<void(std::size_t, Index)> choose = [&](std::size_t from, Index left) {
    if (left == 0) {
      out[acc] += 1;
      return;
    }
    for (std::size_t v = from; v < basis.size(); ++v) {
      for (std::size_t i = 0; i < n; ++i) acc[i] += (*basis[v])[i];
      choose(v, left - 1);
      for (std::size_t i = 0; i < n; ++i) acc[i] -= (*basis[v])[i];
    }
  };
  choose(0, m);
  return out;
}

GLDecomposition decompose_by_weights(std::size_t n, const WeightMultiset& weights) {
  // Ordered so that begin() is the lexicographically largest weight.
  std::map<std::vector<Index>, Integer, std::greater<>> remaining;
  for (const auto& [w, m] : weights) {
    if (w.size() != n) throw InvalidInput("weight length differs from the rank");
    if (m < 0) throw NotARepresentation("negative weight multiplicity");
    if (m != 0) remaining[w] += m;
  }
  GLDecomposition out;
  while (!remaining.empty()) {
    // The largest remaining weight is highest for its module, so it is dominant.
    const auto top = remaining.begin();
    if (!std::is_sorted(top->first.begin(), top->first.end(), std::greater<>()))
      throw NotARepresentation("weights are not Weyl-group invariant");
    const RationalWeight highest(top->first);
    const Integer mult = top->second;
    out[highest] = mult;
    for (const auto& [w, k] : irreducible_weights(highest)) {
      auto it = remaining.find(w);
      if (it == remaining.end() || it->second < mult * k)
        throw NotARepresentation("stripping left a negative multiplicity");
      it->second -= mult * k;
      if (it->second == 0) remaining.erase(it);
    }
  }
  return out;
}

GLDecomposition finite_tensor(std::size_t n, const RationalWeight& a, const RationalWeight& b) {
  if (a.rank() != n || b.rank() != n) throw InvalidInput("weight length differs from the rank");
  return decompose_by_weights(n, tensor_weights(irreducible_weights(a), irreducible_weights(b)));
}

GLDecomposition restrict_to_rank(const KElement& x, std::size_t n) {
  GLDecomposition out;
  for (const auto& [b, m] : x.terms()) {
    if (b.length() > n) continue;
    auto& slot = out[bipartition_to_rational_weight(b, n)];
    slot += m;
    if (slot == 0) out.erase(bipartition_to_rational_weight(b, n));
  }
  return out;
}

}  // namespace stablekac
