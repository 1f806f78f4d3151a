#pragma once

#include <set>
#include <utility>
#include <vector>

#include "stablekac/affine_roots.hpp"
#include "stablekac/partitions.hpp"

namespace stablekac {

/// An X-reduced element w_λ of the GL affine Weyl group, labelled by the
/// partition λ whose diagram is its inversion set.  Every partition is valid.
struct SliceGL {
  Partition shape;
};

/// X-reduced element in case O or Sp, labelled by strictly decreasing
/// positive row lengths.
struct SliceOSp {
  CaseTag kind = CaseTag::O;
  std::vector<Index> rows;
};

/// A finite set of positive affine roots with δ-coefficient 1.
using RootSet = std::set<Weight>;

/// {δ + ε_{1-j} - ε_i : λ_i ≥ j}; one root per cell of λ.
RootSet inversion_set(const SliceGL& s);

/// Downward closure test in the δ-coefficient-1 poset: for every α in r and
/// every positive real root β with δ-coefficient 0 such that α - β is a root,
/// α - β must lie in r.  Throws InvalidInput if a member is not a GL root of
/// the form δ + ε_a - ε_b with a ≤ 0 < b.
bool is_slice(const RootSet& r);

/// w_λ · 0 = -Σ λᵗ_i ε_{1-i} + Σ λ_i ε_i - |λ|δ.
Weight dot_zero(const SliceGL& s);

/// w_λ · φ via the closed form in Frobenius coordinates (GL only).
Weight dot_action(const SliceGL& s, const Weight& phi);

/// The reduced word s_0 s_{-1} ... s_{-p_i} s_1 ... s_{q_i}, concatenated over
/// the Frobenius blocks i = 1..b.  Its length is |λ|.
std::vector<Index> reduced_word(const SliceGL& s);

/// s_x · φ = φ - (⟨φ, α_x^∨⟩ + 1) α_x.
Weight simple_dot(CaseTag kind, Index x, const Weight& phi);

/// Dot action of the product s_{x_1} s_{x_2} ... s_{x_m}; the rightmost
/// reflection acts first.  Uses the case of phi.
Weight dot_action_by_word(const std::vector<Index>& word, const Weight& phi);

/// Poset element (i, j) of the δ-coefficient-1 roots: i < j for O,
/// i ≤ j for Sp.
using PosetCell = std::pair<Index, Index>;

/// δ - ε_i - ε_j for the cell (i, j) (O or Sp).
Weight poset_root(CaseTag kind, const PosetCell& cell);

/// Cells of the downward-closed set induced by s.  O: i < j ≤ p_i + i;
/// Sp: i ≤ j ≤ q_i + i - 1.  Throws InvalidInput if rows are not strictly
/// decreasing and positive.
std::set<PosetCell> slice_cells(const SliceOSp& s);

/// Whether a set of cells is a valid, downward-closed subset of the O or Sp
/// poset ((i, j) ≤ (i', j') iff i ≤ i' and j ≤ j').
bool is_downward_closed(CaseTag kind, const std::set<PosetCell>& cells);

struct EnumeratedSlice {
  SliceOSp slice;
  std::set<PosetCell> cells;
  std::size_t cardinality() const { return cells.size(); }
};

/// All O or Sp slices whose induced set has at most max_weight cells, sorted
/// by cardinality and then reverse-lexicographically.
std::vector<EnumeratedSlice> enumerate_slices_O(CaseTag kind, Index max_weight);

}  // namespace stablekac
