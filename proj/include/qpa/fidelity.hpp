#pragma once

#include <cstdint>
#include <vector>

#include "qpa/partition.hpp"
#include "qpa/rational.hpp"
#include "qpa/tableaux.hpp"

namespace qpa {

// n(n-1)...(n-k+1); k = 0 gives the empty product 1. Exact, throws
// std::overflow_error past the 64-bit range.
int64_t falling_factorial(int64_t n, int64_t k);

// Delta_i = lambda_1 - lambda_i + i - 2 for i = 2..d. Every entry is at
// least lambda_1 - lambda_2.
struct DeltaVector {
  std::vector<int64_t> values;  // values[i-2] = Delta_i
};
DeltaVector delta_vector(const Partition& lambda, int alphabet);

// Output fidelity of the purity-amplification channel on the Schur block
// (lambda, T):  prod_{i=2..d} (Delta_i - b_{i-1})^{falling k} / (Delta_i)^{falling k}
// when lambda_1 - lambda_2 >= k; otherwise the channel emits the maximally
// mixed state and the fidelity collapses to d^-k (fallback_used is set).
struct FidelityValue {
  Rational value;
  bool fallback_used = false;
};
FidelityValue fidelity(const Partition& lambda, const SemistandardTableau& tableau,
                       int64_t k);

// Float-mode evaluation from (lambda, overhangs) for the Monte-Carlo path,
// where falling factorials of row lengths would overflow 64-bit integers.
struct FidelityValueF {
  double value = 0.0;
  bool fallback_used = false;
};
FidelityValueF fidelity_float(const Partition& lambda, const Overhangs& b, int alphabet,
                              int64_t k);

// 1 - (k/(lambda_1 - lambda_2 - k + 1)) * sum(b); requires
// lambda_1 - lambda_2 >= k. May be negative (vacuous); never clamped.
Rational fidelity_lower_bound(const Partition& lambda, const Overhangs& b, int64_t k);

// Dimension of the GL(d) Weyl module: prod_{i<j} (nu_i - nu_j + j - i)/(j - i),
// with nu padded to d parts. Shapes with more than d rows have dimension 0.
int64_t weyl_dim(const Partition& nu, int alphabet);

// Squared dual Clebsch-Gordan coefficient for removing the final first-row
// box (which must hold the letter d):
//   prod_{i=1..d-1}(lambda_1 - mu_i + i - 1) / prod_{i=2..d}(lambda_1 - lambda_i + i - 1)
// where mu is the shape of T^{<d}; zero when the first row does not end in d.
Rational cg_coeff_sq(const Partition& lambda, const Partition& mu, int alphabet);

// Independent route to the same fidelity: the Weyl dimension ratio
// dim(lambda)/dim(lambda - k e_1) times the telescoping product of squared
// CG coefficients along the k first-row removals.
Rational fidelity_via_cg(const Partition& lambda, const SemistandardTableau& tableau,
                         int64_t k);

}  // namespace qpa
