#include <doctest.h>

#include <random>

#include "stablekac/dimensions.hpp"
#include "stablekac/errors.hpp"
#include "stablekac/finite_oracle.hpp"
#include "stablekac/stable_ring.hpp"
#include "support.hpp"

using namespace stablekac;

using namespace stablekac::testing;

TEST_CASE("KElement arithmetic drops zeros") {
  KElement x = term({1}, {1}, 2);
  x.add({{1}, {1}}, -2);
  CHECK(x.is_zero());
  const KElement y = term({}, {}, 3) - term({1}, {}, 1);
  CHECK_FALSE(y.is_nonnegative());
  CHECK((y - y).is_zero());
  CHECK(y * Integer(0) == KElement{});
  CHECK(-(-y) == y);
}

TEST_CASE("lr_coeff examples") {
  CHECK(lr_coeff({1}, {1}, {2}) == 1);
  CHECK(lr_coeff({1}, {1, 1}, {2, 1}) == 1);
  CHECK(lr_coeff({1}, {1}, {1, 1, 1}) == 0);
  CHECK(lr_coeff({2, 1}, {2, 1}, {3, 2, 1}) == 2);
}

TEST_CASE("lr_coeff agrees with the weight-multiset oracle") {
  for (Index total = 0; total <= 6; ++total)
    for (Index a = 0; a <= total; ++a)
      for (const auto& lambda : enumerate_partitions(a))
        for (const auto& mu : enumerate_partitions(total - a)) {
          const std::size_t n = std::max<std::size_t>(1, lambda.length() + mu.length());
          const auto oracle = finite_tensor(n, bipartition_to_rational_weight({lambda, {}}, n),
                                            bipartition_to_rational_weight({mu, {}}, n));
          Integer oracle_total = 0;
          for (const auto& [w, m] : oracle) {
            const auto nu = rational_weight_to_bipartition(w).left;
            REQUIRE(lr_coeff(lambda, mu, nu) == m);
            oracle_total += m;
          }
          Integer lr_total = 0;
          for (const auto& [nu, c] : lr_product(lambda, mu)) lr_total += c;
          REQUIRE(lr_total == oracle_total);
        }
}

TEST_CASE("LR tableau enumeration is symmetric in its two shapes") {
  for (Index total = 0; total <= 7; ++total)
    for (Index a = 0; a <= total; ++a)
      for (const auto& lambda : enumerate_partitions(a))
        for (const auto& mu : enumerate_partitions(total - a))
          for (std::size_t rows : {std::size_t{2}, std::size_t{3}, kUnboundedRows})
            REQUIRE(lr_product_fill(lambda, mu, rows) == lr_product_fill(mu, lambda, rows));
}

TEST_CASE("stable_tensor examples") {
  CHECK(stable_tensor({{1}, {}}, {{}, {1}}) == term({1}, {1}) + term({}, {}));
  CHECK(stable_tensor({{1}, {}}, {{1}, {}}) == term({2}, {}) + term({1, 1}, {}));
  for (const auto& x : bipartitions_up_to(3)) CHECK(stable_tensor({}, x) == KElement::of(x));
  CHECK(tensor(term({1}, {1}), term({1}, {1})) ==
        term({2}, {2}) + term({2}, {1, 1}) + term({1, 1}, {2}) + term({1, 1}, {1, 1}) + term({1}, {1}, 2) +
            term({}, {}));
  CHECK_THROWS_AS(stable_tensor_at_rank({{1, 1}, {}}, {{}, {1}}, 2), RankTooSmall);
}

TEST_CASE("stable_tensor is commutative with bounded output size") {
  const auto all = bipartitions_up_to(5);
  for (const auto& a : all)
    for (const auto& b : all) {
      if (b < a) continue;
      const std::size_t n = default_tensor_rank(a, b);
      const auto ab = stable_tensor_at_rank(a, b, n);
      REQUIRE(ab == stable_tensor_at_rank(b, a, n));
      REQUIRE(ab.is_nonnegative());
      for (const auto& [c, m] : ab.terms()) REQUIRE(c.size() <= a.size() + b.size());
    }
}

TEST_CASE("stable_tensor does not depend on the evaluation rank") {
  const auto all = bipartitions_up_to(5);
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.size() + b.size() > 5 || b < a) continue;
      const auto base = stable_tensor(a, b);
      const std::size_t n0 = default_tensor_rank(a, b);
      for (std::size_t n : {n0 + 1, n0 + 2, n0 + 4}) REQUIRE(stable_tensor_at_rank(a, b, n) == base);
      // The stable range already starts at l(a) + l(b).
      REQUIRE(stable_tensor_at_rank(a, b, std::max<std::size_t>(1, a.length() + b.length())) == base);
    }
}

TEST_CASE("stable_tensor is associative on a random sample") {
  const auto all = bipartitions_up_to(3);
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = KElement::of(all[pick(rng)]);
    const auto b = KElement::of(all[pick(rng)]);
    const auto c = KElement::of(all[pick(rng)]) + KElement::of(all[pick(rng)]);
    REQUIRE(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
  }
}

TEST_CASE("symmetric powers of the adjoint") {
  CHECK(sym_g(0) == KElement::unit());
  CHECK(sym_g(1) == term({1}, {1}) + term({}, {}));
  CHECK(sym_g(2) == term({2}, {2}) + term({1, 1}, {1, 1}) + term({1}, {1}, 2) + term({}, {}, 2));
  CHECK(sym_gprime(0) == KElement::unit());
  CHECK(sym_gprime(1) == term({1}, {1}));
  CHECK(sym_gprime(2) == term({2}, {2}) + term({1, 1}, {1, 1}) + term({1}, {1}) + term({}, {}));
  for (Index m = 0; m <= 6; ++m) REQUIRE(sym_gprime(m).is_nonnegative());
  CHECK_THROWS_AS(sym_g(-1), InvalidInput);
}

TEST_CASE("PBW graded components") {
  CHECK(pbw_graded(0) == KElement::unit());
  CHECK(pbw_graded(1) == term({1}, {1}));
  CHECK(pbw_graded(2) == term({2}, {2}) + term({1, 1}, {1, 1}) + term({1}, {1}, 2) + term({}, {}));
  for (Index j = 0; j <= 5; ++j) REQUIRE(pbw_graded(j).is_nonnegative());
}

TEST_CASE("dimensions of stable classes match GL_n dimension counts") {
  // dim Sym^m(W) = C(dim W + m - 1, m); U(u^-) has Hilbert series Π (1-q^i)^{-(n²-1)}.
  for (Index m = 0; m <= 4; ++m) {
    const Index n = 2 * (2 * m) + 2;
    const Integer adj = n * n;
    REQUIRE(kelement_dimension(sym_g(m), Rational(n)) == Rational(binomial(adj + m - 1, m)));
    REQUIRE(kelement_dimension(sym_gprime(m), Rational(n)) == Rational(binomial(adj - 1 + m - 1, m)));
  }
  for (Index j = 0; j <= 4; ++j) {
    const Index n = 2 * (2 * j) + 2;
    const Integer d = n * n - 1;
    // Coefficients of Π_{i≥1} (1-q^i)^{-d} up to q^j.
    std::vector<Integer> series(static_cast<std::size_t>(j) + 1, 0);
    series[0] = 1;
    for (Index i = 1; i <= j; ++i) {
      std::vector<Integer> next(series.size(), 0);
      for (std::size_t p = 0; p < series.size(); ++p)
        for (Index r = 0; static_cast<Index>(p) + r * i <= j; ++r)
          next[p + static_cast<std::size_t>(r * i)] += series[p] * binomial(d + r - 1, r);
      series = next;
    }
    REQUIRE(kelement_dimension(pbw_graded(j), Rational(n)) == Rational(series.back()));
  }
  for (const auto& a : bipartitions_up_to(2))
    for (const auto& b : bipartitions_up_to(2)) {
      const Index n = 2 * (a.size() + b.size()) + 2;
      const Rational t(n);
      REQUIRE(kelement_dimension(stable_tensor(a, b), t) ==
              kelement_dimension(KElement::of(a), t) * kelement_dimension(KElement::of(b), t));
    }
}
