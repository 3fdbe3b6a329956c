#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qpa/partition.hpp"
#include "qpa/rational.hpp"
#include "qpa/spectrum.hpp"
#include "qpa/tableaux.hpp"

namespace qpa {

// Everything in this module is exact rational arithmetic; no float ever
// enters it. Enumeration cost is d^n (word route) or the tableau count
// (pair route), so requests above the caps are rejected.
struct OracleCaps {
  int64_t max_boxes = 10;
  int max_alphabet = 4;
};

struct RskMass {
  Partition shape;
  SemistandardTableau tableau;
  Rational mass;  // num_syt(shape) * p^T
};

struct RskDistribution {
  std::vector<RskMass> entries;
  Rational total_mass() const;
};

// Law of (shape, insertion tableau) for a word of n i.i.d. letters ~ p.
RskDistribution exact_rsk_distribution(const RationalSpectrum& p, int64_t n,
                                       const OracleCaps& caps = {});

// E[F(lambda, T)] computed two ways: summing over all d^n words through the
// insertion algorithm, and summing over (lambda, T) pairs weighted by
// num_syt(lambda) * p^T. The routes must agree exactly.
struct ExpectedFidelityRoutes {
  Rational word_sum;
  Rational pair_sum;
  bool agree() const { return word_sum == pair_sum; }
};
ExpectedFidelityRoutes exact_expected_fidelity_routes(const RationalSpectrum& p,
                                                      int64_t n, int64_t k,
                                                      const OracleCaps& caps = {});
Rational exact_expected_fidelity(const RationalSpectrum& p, int64_t n, int64_t k,
                                 const OracleCaps& caps = {});

struct RowMoments {
  Rational mean_first_row;               // E[lambda_1]
  Rational second_row_square_deviation;  // E[(lambda_2 - p_{d-1} n)^2]
};
RowMoments exact_row_moments(const RationalSpectrum& p, int64_t n,
                             const OracleCaps& caps = {});

// Pr[lambda_1 - lambda_2 >= (p_d - p_{d-1}) n / 2]; needs a positive gap.
Rational exact_event_probability(const RationalSpectrum& p, int64_t n,
                                 const OracleCaps& caps = {});

// p^h for the word's histogram.
Rational word_probability(const RationalSpectrum& p, const Word& word);

// Visits every word in [alphabet]^length once, reusing one Word buffer.
void for_each_word(int alphabet, int64_t length,
                   const std::function<void(const Word&)>& visit);

}  // namespace qpa
