#include <vector>

#include "doctest.h"
#include "qpa/errors.hpp"
#include "qpa/fidelity.hpp"
#include "qpa/oracle.hpp"
#include "qpa/spectrum.hpp"

using namespace qpa;

namespace {

RationalSpectrum coin() { return RationalSpectrum({Rational(1, 2), Rational(1, 2)}); }
RationalSpectrum pure() { return RationalSpectrum({Rational(0), Rational(1)}); }
RationalSpectrum biased() { return RationalSpectrum({Rational(3, 10), Rational(7, 10)}); }

}  // namespace

TEST_CASE("exact_rsk_distribution on degenerate spectra") {
  RskDistribution dist = exact_rsk_distribution(pure(), 3);
  int nonzero = 0;
  for (const auto& entry : dist.entries) {
    if (!entry.mass.is_zero()) {
      ++nonzero;
      CHECK(entry.shape == Partition(std::vector<int64_t>{3}));
      CHECK(entry.tableau.rows() == std::vector<std::vector<int>>({{2, 2, 2}}));
      CHECK(entry.mass == Rational(1));
    }
  }
  CHECK(nonzero == 1);
  CHECK(dist.total_mass() == Rational(1));
}

TEST_CASE("exact_rsk_distribution for the fair coin at n = 2") {
  RskDistribution dist = exact_rsk_distribution(coin(), 2);
  REQUIRE(dist.entries.size() == 4);  // three SSYT of shape (2), one of (1,1)
  Rational column_mass(0), row_mass(0);
  for (const auto& entry : dist.entries) {
    CHECK(entry.mass == Rational(1, 4));
    if (entry.shape == Partition(std::vector<int64_t>{1, 1})) {
      column_mass += entry.mass;
    } else {
      CHECK(entry.shape == Partition(std::vector<int64_t>{2}));
      row_mass += entry.mass;
    }
  }
  CHECK(column_mass == Rational(1, 4));
  CHECK(row_mass == Rational(3, 4));
  CHECK(dist.total_mass() == Rational(1));
}

TEST_CASE("distribution mass is exactly 1 across a grid") {
  for (int64_t n = 0; n <= 6; ++n) {
    CHECK(exact_rsk_distribution(coin(), n).total_mass() == Rational(1));
    CHECK(exact_rsk_distribution(biased(), n).total_mass() == Rational(1));
    CHECK(exact_rsk_distribution(depolarizing_exact(3, Rational(3, 10)), n)
              .total_mass() == Rational(1));
  }
}

TEST_CASE("expected fidelity on fixed cases") {
  CHECK(exact_expected_fidelity(pure(), 4, 1) == Rational(1));
  CHECK(exact_expected_fidelity(pure(), 4, 3) == Rational(1));
  // four words of [2]^2: F((1,1)) falls back to 1/2, F((2),[1,1]) = 0,
  // F((2),[1,2]) = 1/2, F((2),[2,2]) = 1
  CHECK(exact_expected_fidelity(coin(), 2, 1) == Rational(1, 2));
}

TEST_CASE("word-sum and pair-sum routes agree on a grid") {
  std::vector<RationalSpectrum> spectra = {coin(), biased(),
                                           depolarizing_exact(3, Rational(1, 10))};
  for (const auto& p : spectra) {
    for (int64_t n = 1; n <= 6; ++n) {
      for (int64_t k = 1; k <= 3; ++k) {
        ExpectedFidelityRoutes routes = exact_expected_fidelity_routes(p, n, k);
        CHECK(routes.agree());
      }
    }
  }
}

TEST_CASE("expected fidelity increases strictly with p_d") {
  Rational previous(-1);
  for (int num = 6; num <= 9; ++num) {
    RationalSpectrum p({Rational(10 - num, 10), Rational(num, 10)});
    Rational value = exact_expected_fidelity(p, 4, 1);
    CHECK(value > previous);
    previous = value;
  }
}

TEST_CASE("exact_row_moments") {
  RowMoments pure_moments = exact_row_moments(pure(), 5);
  CHECK(pure_moments.mean_first_row == Rational(5));
  CHECK(pure_moments.second_row_square_deviation == Rational(0));

  // first-row bound p_d n + p_1/(p_d - p_1) = 7.75 and second-row bound
  // 84 p_1 n + 42 (1 - p_2) n = 378 at p = (3/10, 7/10), n = 10
  RowMoments m = exact_row_moments(biased(), 10);
  CHECK(m.mean_first_row <= Rational(31, 4));
  CHECK(m.mean_first_row >= Rational(7));  // at least p_d n
  CHECK(m.second_row_square_deviation <= Rational(378));
}

TEST_CASE("overhang expectation identity and bounds") {
  std::vector<RationalSpectrum> spectra = {biased(),
                                           depolarizing_exact(3, Rational(3, 10))};
  for (const auto& p : spectra) {
    int d = p.dim();
    for (int64_t n = 1; n <= 5; ++n) {
      // E[sum b_i] via word enumeration
      Rational expected_overhang(0);
      for_each_word(d, n, [&](const Word& w) {
        auto result = rsk(w);
        Partition mu = result.insertion.restrict_below(d).shape();
        expected_overhang +=
            word_probability(p, w) * Rational(overhangs(result.shape, mu, d).sum());
      });
      RowMoments m = exact_row_moments(p, n);
      Rational drift = m.mean_first_row - p.principal() * Rational(n);
      CHECK(expected_overhang == drift);
      Rational excess(0);
      for (int i = 1; i < d; ++i) excess += p.prob(i) / (p.principal() - p.prob(i));
      CHECK(drift <= excess);
      CHECK(excess <= (Rational(1) - p.principal()) / p.require_gap());
    }
  }
}

TEST_CASE("exact_event_probability") {
  CHECK(exact_event_probability(pure(), 6) == Rational(1));

  // threshold (p_2 - p_1) n / 2 = 2 at p = (1/4, 3/4), n = 8
  RationalSpectrum p({Rational(1, 4), Rational(3, 4)});
  Rational via_words(0);
  for_each_word(2, 8, [&](const Word& w) {
    auto result = rsk(w);
    if (result.shape.part(1) - result.shape.part(2) >= 2) {
      via_words += word_probability(p, w);
    }
  });
  Rational event = exact_event_probability(p, 8);
  CHECK(event == via_words);
  CHECK(event > Rational(1, 2));
  // concentration bound min(1, (2032/n)(1-p_d)/gap^2) is vacuous here
  Rational complement = Rational(1) - event;
  CHECK(complement <= Rational(2032, 8) * Rational(1, 4) / (Rational(1, 4)));

  CHECK_THROWS_AS(exact_event_probability(coin(), 4), SpectrumError);
}

TEST_CASE("oracle caps") {
  CHECK_THROWS_AS(exact_expected_fidelity(coin(), 30, 1), ResourceLimitError);
  CHECK_THROWS_AS(exact_rsk_distribution(coin(), 11), ResourceLimitError);
  OracleCaps wide{12, 4};
  CHECK(exact_rsk_distribution(coin(), 11, wide).total_mass() == Rational(1));
  std::vector<Rational> five(5, Rational(1, 5));
  CHECK_THROWS_AS(exact_rsk_distribution(RationalSpectrum(five), 3), ResourceLimitError);
  CHECK_THROWS_AS(exact_row_moments(coin(), 11), ResourceLimitError);
  CHECK_THROWS_AS(exact_event_probability(pure(), 11), ResourceLimitError);
}

TEST_CASE("for_each_word visits every word once") {
  int64_t count = 0;
  for_each_word(3, 4, [&](const Word& w) {
    (void)w;
    ++count;
  });
  CHECK(count == 81);
  count = 0;
  for_each_word(2, 0, [&](const Word&) { ++count; });
  CHECK(count == 1);
}

TEST_CASE("word_probability") {
  CHECK(word_probability(biased(), Word(2, {1, 2, 2})) == Rational(147, 1000));
  CHECK(word_probability(coin(), Word(2, {1, 1, 1, 1})) == Rational(1, 16));
  CHECK_THROWS(word_probability(coin(), Word(3, {1})));
}
