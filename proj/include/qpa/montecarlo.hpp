#pragma once

#include <cstdint>

#include "qpa/spectrum.hpp"

namespace qpa {

struct TrialRecord {
  int64_t first_row = 0;     // lambda_1
  int64_t second_row = 0;    // lambda_2
  int64_t overhang_sum = 0;  // sum b_i = |mu| - n + lambda_1
  double fidelity = 0.0;
  bool event_held = false;  // lambda_1 - lambda_2 >= gap * n / 2
  bool fallback_used = false;
};

// One streamed sample: n letters drawn from the spectrum and inserted into
// two count-matrix tableaux (all letters for lambda, letters < d for mu);
// the word itself is never materialized.
TrialRecord run_trial(const LetterSampler& sampler, int64_t copies, int64_t output_copies,
                      double event_threshold, RandomStream& stream);
TrialRecord run_trial(const Spectrum& spectrum, int64_t copies, int64_t output_copies,
                      RandomStream& stream);

struct EstimationResult {
  int64_t trials = 0;

  double mean_fidelity = 0.0;
  double fidelity_stderr = 0.0;
  double ci_halfwidth = 0.0;  // 1.96 * stderr (normal approximation)
  bool ci_defined = false;    // false when trials < 2

  double event_failure_rate = 0.0;
  double event_failure_stderr = 0.0;
  double event_failure_wilson_low = 0.0;
  double event_failure_wilson_high = 0.0;

  double mean_first_row = 0.0;
  double first_row_stderr = 0.0;
  double second_row_moment = 0.0;  // mean (lambda_2 - p_{d-1} n)^2
  double second_row_stderr = 0.0;

  double mean_overhang_sum = 0.0;
  int64_t fallback_trials = 0;
};

// Sample-mean estimate of E[F] over independent trials. Per-trial streams
// are keyed on (seed, trial index) and partial sums are reduced over
// fixed-size chunks in index order, so the result is bit-identical for any
// worker count. workers = 0 means all hardware threads.
EstimationResult estimate(const Spectrum& spectrum, const RunParameters& params,
                          int64_t trials, uint64_t seed, int workers = 0);

struct TheoremReport {
  int64_t samples = 0;  // n chosen by the sample-complexity formula
  double target = 0.0;  // 1 - delta
  EstimationResult estimation;
  double slack = 0.0;  // mean + ci - target
  bool passed = false;
};

// Sets n = required_samples(p, k, delta), estimates the output fidelity,
// and checks mean + ci >= 1 - delta. A failed check is reported, not thrown.
TheoremReport verify_theorem(const RationalSpectrum& spectrum, int64_t output_copies,
                             const Rational& delta, int64_t trials, uint64_t seed,
                             int workers = 0);
TheoremReport verify_theorem(const Spectrum& spectrum, int64_t output_copies,
                             double delta, int64_t trials, uint64_t seed,
                             int workers = 0);

struct LemmaChecks {
  EstimationResult estimation;

  double first_row_bound = 0.0;  // p_d n + sum_{i<d} p_i/(p_d - p_i)
  bool first_row_ok = false;

  double second_row_bound = 0.0;  // 84 p_{d-1} n + 42 (1 - p_d) n
  bool second_row_ok = false;

  double event_failure_bound = 0.0;  // min(1, (2032/n) (1 - p_d)/gap^2)
  bool event_ok = false;

  bool all_ok() const { return first_row_ok && second_row_ok && event_ok; }
};

// Empirical checks of the first-row, second-row, and concentration bounds,
// each with 4-sigma statistical slack.
LemmaChecks check_lemmas(const Spectrum& spectrum, int64_t copies, int64_t trials,
                         uint64_t seed, int workers = 0);

}  // namespace qpa
