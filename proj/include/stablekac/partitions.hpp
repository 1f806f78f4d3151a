#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stablekac/numeric.hpp"

namespace stablekac {

/// An integer partition, stored canonically: weakly decreasing positive parts,
/// no trailing zeros.  Structural equality is therefore semantic equality, and
/// the defaulted ordering is lexicographic on the parts.
class Partition {
 public:
  using Part = Index;

  Partition() = default;
  /// Trailing zeros are dropped; throws InvalidInput on negative parts or an
  /// increasing pair.
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

  std::span<const Part> parts() const { return parts_; }
  const std::vector<Part>& vec() const { return parts_; }

  /// λ_i with 1-based i; zero beyond the length.
  Part part(std::size_t i) const { return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0; }

  std::size_t length() const { return parts_.size(); }
  Part size() const;
  bool empty() const { return parts_.empty(); }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<Part> parts_;
};

/// A pair [μ,ν] labelling an indecomposable of rep(GL_t).
struct Bipartition {
  Partition left;
  Partition right;

  Partition::Part size() const { return left.size() + right.size(); }
  std::size_t length() const { return left.length() + right.length(); }

  /// Orders by total size, then lexicographically on left, then right.
  std::strong_ordering operator<=>(const Bipartition& other) const;
  bool operator==(const Bipartition&) const = default;
};

/// Frobenius coordinates (arms | legs).  Both lists strictly decreasing and
/// of equal length b (the Durfee size).
struct FrobeniusCoords {
  std::vector<Partition::Part> arms;
  std::vector<Partition::Part> legs;

  bool operator==(const FrobeniusCoords&) const = default;
};

Partition conjugate(const Partition& lambda);

FrobeniusCoords frobenius(const Partition& lambda);

/// Throws InvalidInput unless both lists are strictly decreasing, nonnegative
/// and of equal length.
Partition from_frobenius(const FrobeniusCoords& coords);

/// Hook lengths of every cell, listed row by row.
std::vector<Partition::Part> hook_lengths(const Partition& lambda);

/// Product of all hook lengths.
Integer hook_product(const Partition& lambda);

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(Partition::Part n);

/// All partitions with |λ| ≤ n, grouped by size ascending, each group in
/// reverse-lexicographic order.
std::vector<Partition> enumerate_partitions_up_to(Partition::Part n);

/// Comma-separated parts; "" is the empty partition.  Whitespace around parts
/// is tolerated.  Throws InvalidInput.
Partition parse_partition(std::string_view text);

/// Inverse of parse_partition: "2,1", "" for the empty partition.
std::string partition_text(const Partition& lambda);

}  // namespace stablekac
