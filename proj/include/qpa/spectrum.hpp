#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpa/random.hpp"
#include "qpa/rational.hpp"
#include "qpa/tableaux.hpp"

namespace qpa {

// Eigenvalue spectrum in ascending order, float mode. Entries are sorted on
// construction; the sum must be 1 within 1e-12.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> probs);

  int dim() const { return static_cast<int>(p_.size()); }
  double prob(int index) const { return p_.at(static_cast<std::size_t>(index) - 1); }
  double principal() const { return p_.back(); }
  double gap() const { return p_.back() - p_[p_.size() - 2]; }
  double require_gap() const;  // throws SpectrumError when gap <= 0
  const std::vector<double>& probs() const { return p_; }

 private:
  std::vector<double> p_;
};

// Exact-mode spectrum for oracle paths; the sum must be exactly 1.
class RationalSpectrum {
 public:
  explicit RationalSpectrum(std::vector<Rational> probs);

  int dim() const { return static_cast<int>(p_.size()); }
  const Rational& prob(int index) const {
    return p_.at(static_cast<std::size_t>(index) - 1);
  }
  const Rational& principal() const { return p_.back(); }
  Rational gap() const { return p_.back() - p_[p_.size() - 2]; }
  Rational require_gap() const;
  Spectrum to_float() const;
  const std::vector<Rational>& probs() const { return p_; }

 private:
  std::vector<Rational> p_;
};

struct RunParameters {
  int64_t copies = 0;              // n
  int64_t output_copies = 1;       // k
  double target_infidelity = 1.0;  // delta

  void validate() const;  // n >= 1, k >= 1, 0 < delta <= 1
};

// Spectrum of (1-eta)|v_d><v_d| + eta I/d.
Spectrum depolarizing(int dim, double eta);
RationalSpectrum depolarizing_exact(int dim, const Rational& eta);

// Inverse-CDF letter sampling over the ascending spectrum.
class LetterSampler {
 public:
  explicit LetterSampler(const Spectrum& spectrum);
  int dim() const { return static_cast<int>(cumulative_.size()); }
  int sample(RandomStream& stream) const {
    double u = stream.next_unit();
    for (std::size_t i = 0; i + 1 < cumulative_.size(); ++i) {
      if (u < cumulative_[i]) return static_cast<int>(i) + 1;
    }
    return static_cast<int>(cumulative_.size());
  }

 private:
  std::vector<double> cumulative_;
};

Word sample_word(const Spectrum& spectrum, int64_t length, RandomStream& stream);

// Copies sufficient for fidelity >= 1 - delta with k output copies:
// ceil(12k + ((2032 + 4k)/delta) * (1 - p_d)/gap^2).
int64_t required_samples(const Spectrum& spectrum, int64_t k, double delta);
int64_t required_samples(const RationalSpectrum& spectrum, int64_t k, const Rational& delta);

// Fine-grained rate sum_{i<d} p_i/(p_d - p_i)^2; always <= (1 - p_d)/gap^2.
double fine_grained_rate(const Spectrum& spectrum);
Rational fine_grained_rate(const RationalSpectrum& spectrum);

// Reference asymptotic infidelity p_1/((p_2 - p_1)^2 n) for qubit spectra.
double qubit_asymptotic_infidelity(const Spectrum& spectrum, int64_t n);
Rational qubit_asymptotic_infidelity(const RationalSpectrum& spectrum, int64_t n);

// CLI literal: "0.1,0.9", "1/10,9/10", or "depolarizing:d=3,eta=0.3".
RationalSpectrum parse_spectrum(const std::string& text);

// "3/10", "0.3", ".5", or "2"; decimals become exact rationals.
Rational parse_rational_literal(const std::string& text);

}  // namespace qpa
