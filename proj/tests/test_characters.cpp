#include <doctest.h>

#include "stablekac/affine_roots.hpp"
#include "stablekac/characters.hpp"
#include "stablekac/errors.hpp"
#include "support.hpp"

using namespace stablekac;
using namespace stablekac::testing;

namespace {

const Partition e{};

CharacterSeries series_of(std::size_t order, const std::vector<std::pair<std::size_t, KElement>>& terms) {
  CharacterSeries s(order);
  for (const auto& [p, x] : terms) s.add(p, x);
  return s;
}

// Expansion of chr L(Λ₀) through q⁵.
std::vector<KElement> basic_module_table() {
  return {
      term(e, e),
      term({1}, {1}),
      term(e, e) + term({1}, {1}, 2) + term({1, 1}, {1, 1}),
      term(e, e, 2) + term({1}, {1}, 4) + term({1, 1}, {1, 1}, 2) + term({1, 1}, {2}) + term({1, 1, 1}, {1, 1, 1}) +
          term({2}, {1, 1}),
      term(e, e, 4) + term({1}, {1}, 8) + term({1, 1}, {1, 1}, 6) + term({1, 1}, {2}, 2) + term({2}, {1, 1}, 2) +
          term({2}, {2}) + term({1, 1, 1}, {1, 1, 1}, 2) + term({1, 1, 1}, {2, 1}) + term({2, 1}, {1, 1, 1}) +
          term({1, 1, 1, 1}, {1, 1, 1, 1}),
      term(e, e, 6) + term({1}, {1}, 16) + term({1, 1}, {1, 1}, 12) + term({1, 1}, {2}, 6) + term({2}, {1, 1}, 6) +
          term({2}, {2}, 2) + term({1, 1, 1}, {1, 1, 1}, 6) + term({1, 1, 1}, {2, 1}, 3) + term({2, 1}, {1, 1, 1}, 3) +
          term({2, 1}, {2, 1}) + term({1, 1, 1, 1}, {1, 1, 1, 1}, 2) + term({1, 1, 1, 1}, {2, 1, 1}) +
          term({2, 1, 1}, {1, 1, 1, 1}) + term({1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}),
  };
}

struct Highest {
  Partition mu, nu;
  Index k;
};

std::vector<Highest> dominant_inputs(Index max_size, Index max_level) {
  std::vector<Highest> out;
  for (const auto& b : bipartitions_up_to(max_size))
    for (Index k = 0; k <= max_level; ++k)
      if (is_dominant(b, k)) out.push_back({b.left, b.right, k});
  return out;
}

}  // namespace

TEST_CASE("delta exponent") {
  CHECK(delta_exponent({1}, e, e, 1) == 2);
  CHECK(delta_exponent(e, {2}, {1}, 3) == 0);
  CHECK(delta_exponent({1}, {1}, {1}, 2) == 1);
  CHECK(delta_exponent({2, 2}, e, e, 1) == 6);
  CHECK_THROWS_AS(delta_exponent({1}, {2}, {1}, 2), NonDominantWeight);
}

TEST_CASE("lambda dot") {
  CHECK(lambda_dot({1}, e, e, 1) == Bipartition{{2}, {2}});
  CHECK(lambda_dot(e, {2, 1}, {1}, 3) == Bipartition{{2, 1}, {1}});
  CHECK(lambda_dot({1}, {1}, {1}, 2) == Bipartition{{2}, {2}});
  CHECK(lambda_dot({2}, e, e, 1) == Bipartition{{3}, {2, 1}});
  CHECK_THROWS_AS(lambda_dot({1}, {2}, {1}, 2), NonDominantWeight);
  try {
    lambda_dot(e, {2}, {1}, 2);
    FAIL("expected NonDominantWeight");
  } catch (const NonDominantWeight& err) {
    CHECK(std::string(err.what()) == "non-dominant: 2+1 > 2");
  }
}

TEST_CASE("parabolic Verma characters") {
  CHECK(chr_verma({}, 0, 1) == series_of(1, {{0, term(e, e)}, {1, term({1}, {1})}}));
  CHECK(chr_verma({{2}, {1}}, 0, 0) == series_of(0, {{0, term({2}, {1})}}));
  CHECK(chr_verma({{2}, {2}}, 2, 2) == series_of(2, {{2, term({2}, {2})}}));
  CHECK(chr_verma({{1}, {}}, 1, 2) == series_of(2, {{1, term({1}, e)}, {2, term({2}, {1}) + term({1, 1}, {1}) + term({1}, e)}}));
  CHECK(chr_verma({}, 3, 2) == CharacterSeries(2));
}

TEST_CASE("the basic module through q^5") {
  const auto table = basic_module_table();
  const auto s = chr_L_explicit(e, e, 1, 5);
  REQUIRE(s.order() == 5);
  for (std::size_t p = 0; p <= 5; ++p) {
    CAPTURE(p);
    CHECK(s.coefficient(p) == table[p]);
  }
  CHECK(chr_L_explicit(e, e, 1, 0) == series_of(0, {{0, term(e, e)}}));
  CHECK(chr_L_generic(e, e, 1, 5) == s);
}

TEST_CASE("order 0 returns the top") {
  for (const auto& h : dominant_inputs(3, 3)) {
    const auto top = series_of(0, {{0, term(h.mu, h.nu)}});
    REQUIRE(chr_L_explicit(h.mu, h.nu, h.k, 0) == top);
    REQUIRE(chr_L_generic(h.mu, h.nu, h.k, 0) == top);
  }
}

TEST_CASE("non-dominant input is rejected") {
  CHECK_THROWS_AS(chr_L_explicit({2}, {1}, 2, 3), NonDominantWeight);
  CHECK_THROWS_AS(chr_L_generic({2}, {1}, 2, 3), NonDominantWeight);
  CHECK_THROWS_AS(chr_L_explicit(e, e, -1, 3), NonDominantWeight);
}

TEST_CASE("explicit and Weyl group paths agree") {
  CHECK(chr_L_explicit({1}, {1}, 2, 3) == chr_L_generic({1}, {1}, 2, 3));
  for (const auto& h : dominant_inputs(3, 4)) {
    CAPTURE(partition_text(h.mu));
    CAPTURE(partition_text(h.nu));
    CAPTURE(h.k);
    REQUIRE(chr_L_explicit(h.mu, h.nu, h.k, 4) == chr_L_generic(h.mu, h.nu, h.k, 4));
  }
}

TEST_CASE("simple characters are classes of objects") {
  for (const auto& h : dominant_inputs(2, 3)) REQUIRE(chr_L_explicit(h.mu, h.nu, h.k, 5).is_nonnegative());
}

TEST_CASE("level zero gives the trivial module") {
  // At k = 0 only [∅,∅] is dominant and L is one-dimensional.
  CHECK(chr_L_explicit(e, e, 0, 5) == series_of(5, {{0, term(e, e)}}));
}

TEST_CASE("denominator inverse") {
  CHECK(denominator_inverse(0) == CharacterSeries::one(0));
  CHECK(denominator_inverse(1) == series_of(1, {{0, term(e, e)}, {1, term({1}, {1}, -1)}}));
  CHECK(denominator_inverse(2).coefficient(2) == term({2}, {1, 1}) + term({1, 1}, {2}));
  for (std::size_t n = 0; n <= 4; ++n)
    REQUIRE(series_mul(chr_verma({}, 0, n), denominator_inverse(n)) == CharacterSeries::one(n));
}

TEST_CASE("Garland cohomology") {
  CHECK(garland(0) == term(e, e));
  CHECK(garland(1) == term({1}, {1}));
  CHECK(garland(2) == term({2}, {1, 1}) + term({1, 1}, {2}));
  CHECK(garland(3) == term({3}, {1, 1, 1}) + term({2, 1}, {2, 1}) + term({1, 1, 1}, {3}));
  // Euler characteristic of the cohomology is the denominator.
  const std::size_t order = 6;
  CharacterSeries euler(order);
  for (std::size_t i = 0; i <= order; ++i) euler.add(i, (i % 2 ? -1 : 1) * garland(static_cast<Index>(i)));
  CHECK(euler == denominator_inverse(order));
}

TEST_CASE("series multiplication") {
  const auto a = chr_L_explicit({1}, e, 1, 3);
  CHECK(series_mul(a, CharacterSeries::one(3)) == a);
  CHECK(series_mul(a, CharacterSeries::one(1)).order() == 1);
  const auto adj = series_of(2, {{1, term({1}, {1})}});
  CHECK(series_mul(adj, adj) ==
        series_of(2, {{2, term({2}, {2}) + term({2}, {1, 1}) + term({1, 1}, {2}) + term({1, 1}, {1, 1}) +
                              term({1}, {1}, 2) + term(e, e)}}));
  CHECK(series_mul(CharacterSeries(2, 1), CharacterSeries(2, 2)).level() == 3);
}

TEST_CASE("series bookkeeping") {
  CharacterSeries s(2);
  s.add(3, term({1}, {1}));
  CHECK(s == CharacterSeries(2));
  CHECK_THROWS_AS(s.coefficient(3), std::out_of_range);
  s.add(1, term({1}, {1}));
  s -= series_of(2, {{1, term({1}, {1}, 2)}});
  CHECK_FALSE(s.is_nonnegative());
}
