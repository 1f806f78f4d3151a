#include "stablekac/weyl_slices.hpp"

#include <algorithm>
#include <cstdlib>

#include "stablekac/errors.hpp"

namespace stablekac {

namespace {

Weight gl_affine_root(Index a, Index b) {
  return Weight(CaseTag::GL).add_delta(1).add_eps(a, 1).add_eps(b, -1);
}

// Increasing enumeration of Z≥0 minus the given values: first `count` terms.
std::vector<Index> complement(const std::vector<Index>& taken, Index count) {
  std::vector<Index> out;
  for (Index v = 0; static_cast<Index>(out.size()) < count; ++v)
    if (std::find(taken.begin(), taken.end(), v) == taken.end()) out.push_back(v);
  return out;
}

}  // namespace

RootSet inversion_set(const SliceGL& s) {
  RootSet out;
  for (std::size_t i = 1; i <= s.shape.length(); ++i)
    for (Index j = 1; j <= s.shape.part(i); ++j) out.insert(gl_affine_root(1 - j, static_cast<Index>(i)));
  return out;
}

bool is_slice(const RootSet& r) {
  for (const auto& alpha : r) {
    const auto& eps = alpha.eps();
    const bool shape_ok = alpha.kind() == CaseTag::GL && alpha.delta() == 1 && alpha.level() == 0 &&
                          eps.size() == 2 && eps.begin()->second == 1 && eps.rbegin()->second == -1 &&
                          eps.begin()->first <= 0 && eps.rbegin()->first >= 1;
    if (!shape_ok) throw InvalidInput("not a positive root with δ-coefficient 1: " + weight_text(alpha));
    const Index a = eps.begin()->first;
    const Index b = eps.rbegin()->first;
    // α - (ε_a - ε_d) for a < d ≤ 0, and α - (ε_c - ε_b) for 1 ≤ c < b.
    for (Index d = a + 1; d <= 0; ++d)
      if (!r.contains(gl_affine_root(d, b))) return false;
    for (Index c = 1; c < b; ++c)
      if (!r.contains(gl_affine_root(a, c))) return false;
  }
  return true;
}

Weight dot_zero(const SliceGL& s) {
  const Partition t = conjugate(s.shape);
  Weight w(CaseTag::GL);
  for (std::size_t i = 1; i <= t.length(); ++i) w.add_eps(1 - static_cast<Index>(i), -t.part(i));
  for (std::size_t i = 1; i <= s.shape.length(); ++i) w.add_eps(static_cast<Index>(i), s.shape.part(i));
  return w.add_delta(-s.shape.size());
}

Weight dot_action(const SliceGL& s, const Weight& phi) {
  if (phi.kind() != CaseTag::GL) throw InvalidInput("closed-form dot action is available in case GL only");
  const auto [p, q] = frobenius(s.shape);
  const Index b = static_cast<Index>(p.size());
  const Index k = phi.level();
  auto beta = [&](Index i) { return phi.eps(i); };

  Index reach = 0;
  for (const auto& [i, v] : phi.eps()) reach = std::max(reach, std::abs(i));
  const Index tail = reach + (b ? std::max(p.front(), q.front()) : 0) + 2;
  const auto pbar = complement(p, tail);
  const auto qbar = complement(q, tail);

  Weight out(CaseTag::GL);
  for (Index c = 1; c <= tail; ++c) {
    const Index pc = pbar[static_cast<std::size_t>(c - 1)];
    const Index qc = qbar[static_cast<std::size_t>(c - 1)];
    out.add_eps(-c - b + 1, beta(-pc) + pc - c - b + 1);
    out.add_eps(b + c, beta(qc + 1) - qc + b + c - 1);
  }
  Index delta = phi.delta() - (k + 1) * b;
  for (Index i = 1; i <= b; ++i) {
    const Index pi = p[static_cast<std::size_t>(i - 1)];
    const Index qi = q[static_cast<std::size_t>(i - 1)];
    out.add_eps(1 - i, beta(qi + 1) - k - i - qi);
    out.add_eps(i, k + beta(-pi) + i + pi);
    delta += -beta(-pi) + beta(qi + 1) - pi - qi;
  }
  return out.add_lambda0(k).add_delta(delta);
}

std::vector<Index> reduced_word(const SliceGL& s) {
  const auto [p, q] = frobenius(s.shape);
  std::vector<Index> word;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (Index x = 0; x >= -p[i]; --x) word.push_back(x);
    for (Index x = 1; x <= q[i]; ++x) word.push_back(x);
  }
  return word;
}

Weight simple_dot(CaseTag kind, Index x, const Weight& phi) {
  return phi - (pair_coroot(kind, phi, x) + 1) * simple_root(kind, x);
}

Weight dot_action_by_word(const std::vector<Index>& word, const Weight& phi) {
  Weight w = phi;
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = simple_dot(phi.kind(), *it, w);
  return w;
}

Weight poset_root(CaseTag kind, const PosetCell& cell) {
  const auto [i, j] = cell;
  if (kind == CaseTag::GL || i < 1 || j < i || (kind == CaseTag::O && j == i))
    throw InvalidInput("(" + std::to_string(i) + "," + std::to_string(j) + ") is not a cell of the " +
                       case_name(kind) + " poset");
  return Weight(kind).add_delta(1).add_eps(i, -1).add_eps(j, -1);
}

std::set<PosetCell> slice_cells(const SliceOSp& s) {
  if (s.kind == CaseTag::GL) throw InvalidInput("GL slices are labelled by partitions");
  for (std::size_t i = 0; i < s.rows.size(); ++i)
    if (s.rows[i] <= 0 || (i > 0 && s.rows[i] >= s.rows[i - 1]))
      throw InvalidInput("slice rows must be strictly decreasing and positive");
  std::set<PosetCell> cells;
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    const Index i = static_cast<Index>(r) + 1;
    const Index first = s.kind == CaseTag::O ? i + 1 : i;
    for (Index j = first; j < first + s.rows[r]; ++j) cells.emplace(i, j);
  }
  return cells;
}

bool is_downward_closed(CaseTag kind, const std::set<PosetCell>& cells) {
  const Index gap = kind == CaseTag::O ? 1 : 0;
  for (const auto& [i, j] : cells) {
    if (i < 1 || j < i + gap) return false;
    // Covering relations: decrease i or decrease j by one, staying in the poset.
    if (i > 1 && !cells.contains({i - 1, j})) return false;
    if (j - 1 >= i + gap && !cells.contains({i, j - 1})) return false;
  }
  return true;
}

namespace {

void distinct_parts(Index remaining, Index below, std::vector<Index>& prefix, std::vector<std::vector<Index>>& out) {
  out.push_back(prefix);
  for (Index p = std::min(remaining, below - 1); p >= 1; --p) {
    prefix.push_back(p);
    distinct_parts(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<EnumeratedSlice> enumerate_slices_O(CaseTag kind, Index max_weight) {
  if (kind == CaseTag::GL) throw InvalidInput("GL slices are enumerated by enumerate_partitions");
  if (max_weight < 0) throw InvalidInput("max_weight must be nonnegative");
  std::vector<std::vector<Index>> sequences;
  std::vector<Index> prefix;
  distinct_parts(max_weight, max_weight + 1, prefix, sequences);
  std::vector<EnumeratedSlice> out;
  for (auto& rows : sequences) {
    SliceOSp s{kind, std::move(rows)};
    auto cells = slice_cells(s);
    out.push_back({std::move(s), std::move(cells)});
  }
  std::stable_sort(out.begin(), out.end(), [](const EnumeratedSlice& a, const EnumeratedSlice& b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
    return a.slice.rows > b.slice.rows;
  });
  return out;
}

}  // namespace stablekac
