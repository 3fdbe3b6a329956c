#include "qpa/fidelity.hpp"

#include <cmath>
#include <stdexcept>

namespace qpa {

int64_t falling_factorial(int64_t n, int64_t k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: negative length");
  if (k == 0) return 1;
  if (n >= 0 && n < k) return 0;  // the descent passes through zero
  __int128 acc = 1;
  for (int64_t j = 0; j < k; ++j) {
    acc *= n - j;
    if (acc > INT64_MAX || acc < INT64_MIN) {
      throw std::overflow_error("falling_factorial: 64-bit overflow");
    }
  }
  return static_cast<int64_t>(acc);
}

DeltaVector delta_vector(const Partition& lambda, int alphabet) {
  if (alphabet < 2) throw std::domain_error("delta_vector: alphabet must be >= 2");
  if (lambda.length() > static_cast<std::size_t>(alphabet)) {
    throw std::domain_error("delta_vector: shape has more rows than letters");
  }
  DeltaVector delta;
  delta.values.reserve(static_cast<std::size_t>(alphabet) - 1);
  for (int i = 2; i <= alphabet; ++i) {
    delta.values.push_back(lambda.part(1) - lambda.part(static_cast<std::size_t>(i)) + i - 2);
  }
  return delta;
}

namespace {

Rational mixed_state_fidelity(int alphabet, int64_t k) {
  Rational f(1);
  for (int64_t i = 0; i < k; ++i) f /= Rational(alphabet);
  return f;
}

}  // namespace

FidelityValue fidelity(const Partition& lambda, const SemistandardTableau& tableau,
                       int64_t k) {
  if (k < 1) throw std::invalid_argument("fidelity: k must be >= 1");
  if (tableau.alphabet() < 2) throw std::domain_error("fidelity: alphabet must be >= 2");
  if (tableau.shape() != lambda) {
    throw std::invalid_argument("fidelity: tableau shape does not match lambda");
  }
  int d = tableau.alphabet();
  if (lambda.part(1) - lambda.part(2) < k) {
    return FidelityValue{mixed_state_fidelity(d, k), true};
  }
  Partition mu = tableau.restrict_below(d).shape();
  Overhangs b = overhangs(lambda, mu, d);
  DeltaVector delta = delta_vector(lambda, d);
  Rational f(1);
  for (std::size_t i = 0; i < delta.values.size(); ++i) {
    f *= Rational(falling_factorial(delta.values[i] - b.values[i], k),
                  falling_factorial(delta.values[i], k));
  }
  return FidelityValue{f, false};
}

FidelityValueF fidelity_float(const Partition& lambda, const Overhangs& b, int alphabet,
                              int64_t k) {
  if (k < 1) throw std::invalid_argument("fidelity: k must be >= 1");
  if (alphabet < 2) throw std::domain_error("fidelity: alphabet must be >= 2");
  if (b.values.size() != static_cast<std::size_t>(alphabet) - 1) {
    throw std::invalid_argument("fidelity: overhang count must be alphabet - 1");
  }
  if (lambda.part(1) - lambda.part(2) < k) {
    return FidelityValueF{std::pow(static_cast<double>(alphabet), -static_cast<double>(k)),
                          true};
  }
  double f = 1.0;
  for (int i = 2; i <= alphabet; ++i) {
    int64_t delta = lambda.part(1) - lambda.part(static_cast<std::size_t>(i)) + i - 2;
    int64_t top = delta - b.values[static_cast<std::size_t>(i) - 2];
    for (int64_t j = 0; j < k; ++j) {
      if (top - j == 0) return FidelityValueF{0.0, false};
      f *= static_cast<double>(top - j) / static_cast<double>(delta - j);
    }
  }
  return FidelityValueF{f, false};
}

Rational fidelity_lower_bound(const Partition& lambda, const Overhangs& b, int64_t k) {
  if (k < 1) throw std::invalid_argument("fidelity_lower_bound: k must be >= 1");
  int64_t row_gap = lambda.part(1) - lambda.part(2);
  if (row_gap < k) {
    throw std::domain_error("fidelity_lower_bound: needs lambda_1 - lambda_2 >= k");
  }
  return Rational(1) - Rational(k, row_gap - k + 1) * Rational(b.sum());
}

int64_t weyl_dim(const Partition& nu, int alphabet) {
  if (alphabet < 1) throw std::domain_error("weyl_dim: alphabet must be >= 1");
  if (nu.length() > static_cast<std::size_t>(alphabet)) return 0;
  std::vector<int64_t> padded = nu.padded(static_cast<std::size_t>(alphabet));
  Rational dim(1);
  for (int i = 1; i <= alphabet; ++i) {
    for (int j = i + 1; j <= alphabet; ++j) {
      dim *= Rational(padded[static_cast<std::size_t>(i) - 1] -
                          padded[static_cast<std::size_t>(j) - 1] + j - i,
                      j - i);
    }
  }
  if (!dim.is_integer()) {
    throw std::logic_error("weyl_dim: product did not reduce to an integer");
  }
  return dim.numerator();
}

Rational cg_coeff_sq(const Partition& lambda, const Partition& mu, int alphabet) {
  if (alphabet < 2) throw std::domain_error("cg_coeff_sq: alphabet must be >= 2");
  if (lambda.part(1) - lambda.part(2) < 1) {
    throw std::domain_error("cg_coeff_sq: needs lambda_1 - lambda_2 >= 1");
  }
  if (mu.part(1) > lambda.part(1)) {
    throw std::invalid_argument("cg_coeff_sq: mu_1 exceeds lambda_1");
  }
  if (mu.part(1) == lambda.part(1)) return Rational(0);  // first row does not end in d
  Rational c(1);
  for (int i = 1; i <= alphabet - 1; ++i) {
    c *= Rational(lambda.part(1) - mu.part(static_cast<std::size_t>(i)) + i - 1);
  }
  for (int i = 2; i <= alphabet; ++i) {
    c /= Rational(lambda.part(1) - lambda.part(static_cast<std::size_t>(i)) + i - 1);
  }
  return c;
}

Rational fidelity_via_cg(const Partition& lambda, const SemistandardTableau& tableau,
                         int64_t k) {
  if (k < 1) throw std::invalid_argument("fidelity_via_cg: k must be >= 1");
  if (tableau.alphabet() < 2) {
    throw std::domain_error("fidelity_via_cg: alphabet must be >= 2");
  }
  if (tableau.shape() != lambda) {
    throw std::invalid_argument("fidelity_via_cg: tableau shape does not match lambda");
  }
  int d = tableau.alphabet();
  if (lambda.part(1) - lambda.part(2) < k) {
    throw std::domain_error("fidelity_via_cg: needs lambda_1 - lambda_2 >= k");
  }
  Partition mu = tableau.restrict_below(d).shape();

  std::vector<int64_t> lowered = lambda.padded(static_cast<std::size_t>(d));
  lowered[0] -= k;
  Rational ratio(weyl_dim(lambda, d), weyl_dim(Partition(lowered), d));

  // Removing a trailing first-row d leaves mu unchanged, so the same mu
  // feeds every step of the telescoping product.
  Rational cg(1);
  for (int64_t step = 0; step < k && !cg.is_zero(); ++step) {
    std::vector<int64_t> parts = lambda.padded(static_cast<std::size_t>(d));
    parts[0] -= step;
    cg *= cg_coeff_sq(Partition(parts), mu, d);
  }
  return ratio * cg;
}

}  // namespace qpa
