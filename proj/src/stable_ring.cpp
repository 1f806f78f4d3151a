#include "stablekac/stable_ring.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <tuple>

#include "stablekac/errors.hpp"

namespace stablekac {

KElement KElement::unit() { return of(Bipartition{}); }

KElement KElement::of(const Bipartition& b, const Integer& mult) {
  KElement e;
  e.add(b, mult);
  return e;
}

void KElement::add(const Bipartition& b, const Integer& mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer KElement::multiplicity(const Bipartition& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Integer{0} : it->second;
}

bool KElement::is_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

KElement& KElement::operator+=(const KElement& other) {
  for (const auto& [b, m] : other.terms_) add(b, m);
  return *this;
}

KElement& KElement::operator-=(const KElement& other) {
  for (const auto& [b, m] : other.terms_) add(b, -m);
  return *this;
}

KElement& KElement::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, m] : terms_) m *= scalar;
  return *this;
}

namespace {

using Part = Partition::Part;

// Enumerates LR tableaux of shape gamma/alpha and content beta by adding the
// letters of beta one at a time as horizontal strips.  The reading word
// (rows top to bottom, each right to left) is a lattice word iff for every
// letter i > 1 and row r, #{i in rows <= r} <= #{i-1 in rows < r}.
class LRFiller {
 public:
  LRFiller(const Partition& alpha, const Partition& beta, std::size_t rows)
      : content_(beta.vec()), rows_(rows), shape_(rows, 0) {
    for (std::size_t r = 0; r < alpha.length(); ++r) shape_[r] = alpha.vec()[r];
  }

  SchurExpansion run() {
    std::vector<Part> none(rows_, 0);
    place_letter(0, none);
    return std::move(out_);
  }

 private:
  void place_letter(std::size_t letter, const std::vector<Part>& prev) {
    if (letter == content_.size()) {
      out_[Partition(shape_)] += 1;
      return;
    }
    const std::vector<Part> old = shape_;
    std::vector<Part> counts(rows_, 0);
    place_rows(letter, 0, content_[letter], 0, 0, old, prev, counts);
  }

  void place_rows(std::size_t letter, std::size_t r, Part remaining, Part prev_above, Part cur_through,
                  const std::vector<Part>& old, const std::vector<Part>& prev, std::vector<Part>& counts) {
    if (remaining == 0) {
      place_letter(letter + 1, counts);
      return;
    }
    if (r == rows_) return;
    Part cap = remaining;
    if (r > 0) {
      if (old[r - 1] == 0) return;  // no row above to support new boxes
      cap = std::min(cap, old[r - 1] - old[r]);
    }
    if (letter > 0) cap = std::min(cap, prev_above - cur_through);
    for (Part a = cap; a >= 0; --a) {
      shape_[r] += a;
      counts[r] = a;
      place_rows(letter, r + 1, remaining - a, prev_above + prev[r], cur_through + a, old, prev, counts);
      shape_[r] -= a;
      counts[r] = 0;
    }
  }

  const std::vector<Part>& content_;
  std::size_t rows_;
  std::vector<Part> shape_;
  SchurExpansion out_;
};

template <class Key, class Value>
class MemoCache {
 public:
  template <class Compute>
  std::shared_ptr<const Value> get(const Key& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    auto value = std::make_shared<const Value>(compute());
    std::lock_guard lock(mutex_);
    return entries_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, std::shared_ptr<const Value>> entries_;
};

std::vector<Part> to_gl_weight(const Bipartition& b, std::size_t n) {
  std::vector<Part> w(n, 0);
  for (std::size_t i = 0; i < b.left.length(); ++i) w[i] += b.left.vec()[i];
  for (std::size_t j = 0; j < b.right.length(); ++j) w[n - 1 - j] -= b.right.vec()[j];
  return w;
}

Bipartition from_gl_weight(const std::vector<Part>& w) {
  std::vector<Part> pos, neg;
  for (auto x : w)
    if (x > 0) pos.push_back(x);
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    if (*it < 0) neg.push_back(-*it);
  return {Partition(std::move(pos)), Partition(std::move(neg))};
}

}  // namespace

SchurExpansion lr_product(const Partition& alpha, const Partition& beta, std::size_t max_rows) {
  static MemoCache<std::tuple<Partition, Partition, std::size_t>, SchurExpansion> cache;
  // c^nu_{ab} = c^nu_{ba}: fill with the smaller shape.
  const bool swap = beta.size() > alpha.size() || (beta.size() == alpha.size() && beta.length() > alpha.length());
  const Partition& big = swap ? beta : alpha;
  const Partition& small = swap ? alpha : beta;
  const std::size_t rows = std::min(max_rows, big.length() + small.length());
  if (big.length() > rows) return {};
  auto table = cache.get({big, small, rows}, [&] { return LRFiller(big, small, rows).run(); });
  return *table;
}

SchurExpansion lr_product_fill(const Partition& alpha, const Partition& beta, std::size_t max_rows) {
  const std::size_t rows = std::min(max_rows, alpha.length() + beta.length());
  if (alpha.length() > rows) return {};
  return LRFiller(alpha, beta, rows).run();
}

Integer lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  const auto table = lr_product(lambda, mu, nu.length());
  auto it = table.find(nu);
  return it == table.end() ? Integer{0} : it->second;
}

std::size_t default_tensor_rank(const Bipartition& a, const Bipartition& b) {
  return static_cast<std::size_t>(a.size() + b.size()) + 1;
}

KElement stable_tensor_at_rank(const Bipartition& a, const Bipartition& b, std::size_t n) {
  if (n < a.length() + b.length() || n == 0)
    throw RankTooSmall("rank " + std::to_string(n) + " is below the stable range l(a)+l(b) = " +
                       std::to_string(a.length() + b.length()));
  // Twist each GL_n weight by a power of det so it becomes a partition.
  const Part shift_a = a.right.part(1);
  const Part shift_b = b.right.part(1);
  auto wa = to_gl_weight(a, n);
  auto wb = to_gl_weight(b, n);
  for (auto& x : wa) x += shift_a;
  for (auto& x : wb) x += shift_b;

  KElement out;
  for (const auto& [gamma, mult] : lr_product(Partition(wa), Partition(wb), n)) {
    std::vector<Part> w(n, 0);
    for (std::size_t i = 0; i < gamma.length(); ++i) w[i] = gamma.vec()[i];
    for (auto& x : w) x -= shift_a + shift_b;
    out.add(from_gl_weight(w), mult);
  }
  return out;
}

KElement stable_tensor(const Bipartition& a, const Bipartition& b) {
  static MemoCache<std::pair<Bipartition, Bipartition>, KElement> cache;
  auto key = a < b ? std::pair{a, b} : std::pair{b, a};
  return *cache.get(key, [&] { return stable_tensor_at_rank(key.first, key.second, default_tensor_rank(a, b)); });
}

KElement tensor(const KElement& a, const KElement& b) {
  KElement out;
  for (const auto& [ba, ma] : a.terms())
    for (const auto& [bb, mb] : b.terms()) out += stable_tensor(ba, bb) * (ma * mb);
  return out;
}

KElement sym_g(Index m) {
  if (m < 0) throw InvalidInput("symmetric power degree must be nonnegative");
  static MemoCache<Index, KElement> cache;
  return *cache.get(m, [m] {
    // Cauchy: Sym^m(V ⊗ V*) = ⊕_{λ ⊢ m} S_λ V ⊗ S_λ V*.
    KElement out;
    for (const auto& lambda : enumerate_partitions(m)) out += stable_tensor({lambda, {}}, {{}, lambda});
    return out;
  });
}

KElement sym_gprime(Index m) {
  if (m < 0) throw InvalidInput("symmetric power degree must be nonnegative");
  if (m == 0) return KElement::unit();
  KElement out = sym_g(m) - sym_g(m - 1);
  if (!out.is_nonnegative()) throw InternalInconsistency("Sym^m(g') acquired a negative multiplicity");
  return out;
}

KElement pbw_graded(Index j) {
  if (j < 0) throw InvalidInput("PBW degree must be nonnegative");
  static MemoCache<Index, KElement> cache;
  return *cache.get(j, [j] {
    KElement out;
    for (const auto& pi : enumerate_partitions(j)) {
      // Multiplicity of each part size i gives the symmetric power of g' z^{-i}.
      std::map<Part, Index> mult;
      for (auto p : pi.parts()) ++mult[p];
      KElement term = KElement::unit();
      for (const auto& [part, m] : mult) term = tensor(term, sym_gprime(m));
      out += term;
    }
    return out;
  });
}

}  // namespace stablekac
