#pragma once

#include <stdexcept>
#include <string>

namespace stablekac {

/// Malformed user-supplied data (partition text, rationals, indices).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A weight or bipartition violates the dominance condition an operation needs.
class NonDominantWeight : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An invariant guaranteed by theory failed; indicates a bug, never bad input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A bipartition does not fit into GL_n for the requested rank.
class RankTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Highest-weight stripping produced a negative multiplicity.
class NotARepresentation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace stablekac
