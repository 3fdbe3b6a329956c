#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qpa/fidelity.hpp"
#include "qpa/oracle.hpp"
#include "qpa/partition.hpp"
#include "qpa/tableaux.hpp"

using namespace qpa;

namespace {

Partition shape_of(std::vector<int64_t> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("falling_factorial") {
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(2, 3) == 0);
  CHECK(falling_factorial(7, 0) == 1);
  CHECK(falling_factorial(0, 0) == 1);
  CHECK(falling_factorial(-2, 2) == 6);
  CHECK(falling_factorial(20, 20) == 2432902008176640000LL);  // 20!
  CHECK_THROWS_AS(falling_factorial(100, 100), std::overflow_error);
  CHECK_THROWS_AS(falling_factorial(5, -1), std::invalid_argument);
}

TEST_CASE("delta_vector") {
  DeltaVector delta = delta_vector(shape_of({4, 3, 1}), 3);
  CHECK(delta.values == std::vector<int64_t>({1, 4}));
  // every Delta_i >= lambda_1 - lambda_2
  for (int64_t n = 0; n <= 6; ++n) {
    for (const Partition& shape : partitions_of(n, 3)) {
      for (int64_t v : delta_vector(shape, 3).values) {
        CHECK(v >= shape.part(1) - shape.part(2));
      }
    }
  }
}

TEST_CASE("fidelity on fixed tableaux") {
  // single all-d row: every overhang is zero
  auto all_d = SemistandardTableau::from_rows(2, {{2, 2, 2, 2}});
  for (int64_t k = 1; k <= 4; ++k) {
    auto f = fidelity(shape_of({4}), all_d, k);
    CHECK(f.value == Rational(1));
    CHECK_FALSE(f.fallback_used);
  }

  auto half = fidelity(shape_of({3, 1}), SemistandardTableau::from_rows(2, {{1, 1, 2}, {2}}), 1);
  CHECK(half.value == Rational(1, 2));
  CHECK_FALSE(half.fallback_used);

  // no letter d in row 1 kills the first factor
  auto zero = fidelity(shape_of({2, 1}), SemistandardTableau::from_rows(2, {{1, 1}, {2}}), 1);
  CHECK(zero.value == Rational(0));
  CHECK_FALSE(zero.fallback_used);

  auto fig1 = fidelity(shape_of({4, 3, 1}),
                       SemistandardTableau::from_rows(3, {{1, 1, 2, 3}, {2, 2, 3}, {3}}), 1);
  CHECK(fig1.value == Rational(3, 4));

  // lambda_1 - lambda_2 < k: maximally mixed output on d^k dimensions
  auto fallback = fidelity(shape_of({2, 2}), SemistandardTableau::from_rows(2, {{1, 1}, {2, 2}}), 1);
  CHECK(fallback.value == Rational(1, 2));
  CHECK(fallback.fallback_used);

  CHECK_THROWS_AS(fidelity(shape_of({3}), all_d, 1), std::invalid_argument);  // shape mismatch
  CHECK_THROWS_AS(fidelity(shape_of({4}), all_d, 0), std::invalid_argument);
}

TEST_CASE("fidelity float mode matches the exact mode") {
  for (int d = 2; d <= 3; ++d) {
    for (int64_t n = 0; n <= 8; ++n) {
      for (const Partition& shape : partitions_of(n, static_cast<std::size_t>(d))) {
        for (const auto& t : enumerate_ssyt(shape, d)) {
          Partition mu = t.restrict_below(d).shape();
          Overhangs b = overhangs(shape, mu, d);
          for (int64_t k = 1; k <= 3; ++k) {
            auto exact = fidelity(shape, t, k);
            auto approx = fidelity_float(shape, b, d, k);
            CHECK(exact.fallback_used == approx.fallback_used);
            double reference = exact.value.to_double();
            CHECK(std::abs(approx.value - reference) <=
                  1e-10 * std::max(1.0, std::abs(reference)));
          }
        }
      }
    }
  }
}

TEST_CASE("fidelity_lower_bound") {
  CHECK(fidelity_lower_bound(shape_of({5}), Overhangs{{0}}, 2) == Rational(1));
  CHECK(fidelity_lower_bound(shape_of({3, 1}), Overhangs{{1}}, 1) == Rational(1, 2));
  // vacuous when the overhangs swamp the row gap
  CHECK(fidelity_lower_bound(shape_of({3, 1}), Overhangs{{5}}, 1) == Rational(-3, 2));
  CHECK_THROWS_AS(fidelity_lower_bound(shape_of({2, 2}), Overhangs{{0}}, 1),
                  std::domain_error);
}

TEST_CASE("fidelity respects the lower bound, range, and k-monotonicity") {
  for (int d = 2; d <= 3; ++d) {
    for (int64_t n = 0; n <= 8; ++n) {
      for (const Partition& shape : partitions_of(n, static_cast<std::size_t>(d))) {
        for (const auto& t : enumerate_ssyt(shape, d)) {
          Partition mu = t.restrict_below(d).shape();
          Overhangs b = overhangs(shape, mu, d);
          Rational previous(1);
          for (int64_t k = 1; k <= shape.part(1) - shape.part(2); ++k) {
            Rational value = fidelity(shape, t, k).value;
            REQUIRE(value >= Rational(0));
            REQUIRE(value <= Rational(1));
            REQUIRE(value >= fidelity_lower_bound(shape, b, k));
            REQUIRE(value <= previous);  // nonincreasing in k
            // full fidelity exactly when nothing overhangs
            REQUIRE((value == Rational(1)) == (b.sum() == 0));
            previous = value;
          }
        }
      }
    }
  }
}

TEST_CASE("weyl_dim") {
  CHECK(weyl_dim(shape_of({1}), 2) == 2);
  CHECK(weyl_dim(shape_of({2, 1}), 3) == 8);
  for (int64_t n = 1; n <= 6; ++n) {
    CHECK(weyl_dim(shape_of({n}), 2) == n + 1);
  }
  CHECK(weyl_dim(shape_of({}), 3) == 1);
  CHECK(weyl_dim(shape_of({1, 1, 1}), 2) == 0);  // more rows than letters
}

TEST_CASE("weyl_dim counts semistandard tableaux") {
  for (int d = 1; d <= 4; ++d) {
    for (int64_t n = 0; n <= 5; ++n) {
      for (const Partition& shape : partitions_of(n, static_cast<std::size_t>(n))) {
        CHECK(weyl_dim(shape, d) ==
              static_cast<int64_t>(enumerate_ssyt(shape, d).size()));
      }
    }
  }
}

TEST_CASE("cg_coeff_sq") {
  CHECK(cg_coeff_sq(shape_of({3, 1}), shape_of({2, 1}), 2) == Rational(1, 3));
  CHECK(cg_coeff_sq(shape_of({3, 1}), shape_of({2}), 2) == Rational(1, 3));  // only mu_1 enters at d=2
  for (int64_t n = 1; n <= 5; ++n) {
    CHECK(cg_coeff_sq(shape_of({n}), shape_of({}), 2) == Rational(n, n + 1));
  }
  CHECK(cg_coeff_sq(shape_of({3, 1}), shape_of({3}), 2) == Rational(0));  // mu_1 = lambda_1
  CHECK_THROWS_AS(cg_coeff_sq(shape_of({2, 2}), shape_of({2}), 2), std::domain_error);
  CHECK_THROWS_AS(cg_coeff_sq(shape_of({2, 1}), shape_of({3}), 2), std::invalid_argument);
}

TEST_CASE("fidelity_via_cg on fixed tableaux") {
  auto t = SemistandardTableau::from_rows(2, {{1, 1, 2}, {2}});
  CHECK(fidelity_via_cg(shape_of({3, 1}), t, 1) == Rational(1, 2));

  auto all_d = SemistandardTableau::from_rows(2, {{2, 2, 2}});
  CHECK(fidelity_via_cg(shape_of({3}), all_d, 2) == Rational(1));

  // fewer than k trailing d's in row 1
  auto short_run = SemistandardTableau::from_rows(2, {{1, 1, 2}});
  CHECK(fidelity_via_cg(shape_of({3}), short_run, 2) == Rational(0));

  auto fallback_zone = SemistandardTableau::from_rows(2, {{1, 1}, {2, 2}});
  CHECK_THROWS_AS(fidelity_via_cg(shape_of({2, 2}), fallback_zone, 1), std::domain_error);
}

TEST_CASE("telescoping identity: product formula equals the CG route") {
  for (int d = 2; d <= 3; ++d) {
    for (int64_t n = 0; n <= 6; ++n) {
      for (const Partition& shape : partitions_of(n, static_cast<std::size_t>(d))) {
        for (const auto& t : enumerate_ssyt(shape, d)) {
          for (int64_t k = 1; k <= shape.part(1) - shape.part(2); ++k) {
            REQUIRE(fidelity(shape, t, k).value == fidelity_via_cg(shape, t, k));
          }
        }
      }
    }
  }
}
