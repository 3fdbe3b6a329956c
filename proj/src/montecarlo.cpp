#include "qpa/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qpa/fidelity.hpp"

namespace qpa {

TrialRecord run_trial(const LetterSampler& sampler, int64_t copies, int64_t output_copies,
                      double event_threshold, RandomStream& stream) {
  if (copies < 1) throw std::invalid_argument("run_trial: n must be >= 1");
  if (output_copies < 1) throw std::invalid_argument("run_trial: k must be >= 1");
  int d = sampler.dim();
  SemistandardTableau full(d);
  SemistandardTableau below(d);  // letters < d only; its shape is mu
  for (int64_t i = 0; i < copies; ++i) {
    int letter = sampler.sample(stream);
    full.insert(letter);
    if (letter < d) below.insert(letter);
  }
  Partition lambda = full.shape();
  Partition mu = below.shape();
  Overhangs b = overhangs(lambda, mu, d);
  FidelityValueF f = fidelity_float(lambda, b, d, output_copies);

  TrialRecord record;
  record.first_row = lambda.part(1);
  record.second_row = lambda.part(2);
  record.overhang_sum = b.sum();
  record.fidelity = f.value;
  record.fallback_used = f.fallback_used;
  record.event_held =
      static_cast<double>(record.first_row - record.second_row) >= event_threshold;
  return record;
}

TrialRecord run_trial(const Spectrum& spectrum, int64_t copies, int64_t output_copies,
                      RandomStream& stream) {
  LetterSampler sampler(spectrum);
  double threshold = 0.5 * spectrum.gap() * static_cast<double>(copies);
  return run_trial(sampler, copies, output_copies, threshold, stream);
}

namespace {

// Per-chunk accumulators. Fidelity is accumulated as the complement
// g = 1 - F, which sits near zero where the interesting variation lives;
// that avoids cancellation when computing its variance.
struct ChunkSums {
  double infid = 0.0, infid_sq = 0.0;
  double l1 = 0.0, l1_sq = 0.0;
  double m2 = 0.0, m2_sq = 0.0;
  double overhang = 0.0;
  int64_t event_failures = 0;
  int64_t fallbacks = 0;
};

constexpr int64_t kChunkSize = 1024;  // fixed: reduction order never depends on workers

double sample_stderr(double sum, double sum_sq, int64_t count) {
  if (count < 2) return 0.0;
  double mean = sum / static_cast<double>(count);
  double variance =
      (sum_sq - static_cast<double>(count) * mean * mean) / static_cast<double>(count - 1);
  if (variance < 0.0) variance = 0.0;
  return std::sqrt(variance / static_cast<double>(count));
}

}  // namespace

EstimationResult estimate(const Spectrum& spectrum, const RunParameters& params,
                          int64_t trials, uint64_t seed, int workers) {
  params.validate();
  if (trials < 1) throw std::invalid_argument("estimate: trials must be >= 1");

  LetterSampler sampler(spectrum);
  const double threshold = 0.5 * spectrum.gap() * static_cast<double>(params.copies);
  const double second_row_center =
      spectrum.prob(spectrum.dim() - 1) * static_cast<double>(params.copies);

  const int64_t chunk_count = (trials + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkSums> chunks(static_cast<std::size_t>(chunk_count));

  auto run_chunk = [&](int64_t chunk) {
    ChunkSums sums;
    int64_t lo = chunk * kChunkSize;
    int64_t hi = std::min(trials, lo + kChunkSize);
    for (int64_t t = lo; t < hi; ++t) {
      RandomStream stream = RandomStream::for_trial(seed, static_cast<uint64_t>(t));
      TrialRecord r =
          run_trial(sampler, params.copies, params.output_copies, threshold, stream);
      double infid = 1.0 - r.fidelity;
      sums.infid += infid;
      sums.infid_sq += infid * infid;
      sums.l1 += static_cast<double>(r.first_row);
      sums.l1_sq += static_cast<double>(r.first_row) * static_cast<double>(r.first_row);
      double dev = static_cast<double>(r.second_row) - second_row_center;
      double dev_sq = dev * dev;
      sums.m2 += dev_sq;
      sums.m2_sq += dev_sq * dev_sq;
      sums.overhang += static_cast<double>(r.overhang_sum);
      if (!r.event_held) ++sums.event_failures;
      if (r.fallback_used) ++sums.fallbacks;
    }
    chunks[static_cast<std::size_t>(chunk)] = sums;
  };

  int worker_count = workers > 0
                         ? workers
                         : std::max(1u, std::thread::hardware_concurrency());
  worker_count = static_cast<int>(
      std::min<int64_t>(worker_count, chunk_count));
  if (worker_count <= 1) {
    for (int64_t c = 0; c < chunk_count; ++c) run_chunk(c);
  } else {
    std::atomic<int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w) {
      pool.emplace_back([&] {
        while (true) {
          int64_t c = next.fetch_add(1);
          if (c >= chunk_count) return;
          run_chunk(c);
        }
      });
    }
    for (auto& thread : pool) thread.join();
  }

  ChunkSums total;
  for (const ChunkSums& s : chunks) {  // fixed order: deterministic reduction
    total.infid += s.infid;
    total.infid_sq += s.infid_sq;
    total.l1 += s.l1;
    total.l1_sq += s.l1_sq;
    total.m2 += s.m2;
    total.m2_sq += s.m2_sq;
    total.overhang += s.overhang;
    total.event_failures += s.event_failures;
    total.fallbacks += s.fallbacks;
  }

  EstimationResult result;
  result.trials = trials;
  double count = static_cast<double>(trials);
  result.mean_fidelity = 1.0 - total.infid / count;
  result.fidelity_stderr = sample_stderr(total.infid, total.infid_sq, trials);
  result.ci_defined = trials >= 2;
  result.ci_halfwidth = result.ci_defined ? 1.96 * result.fidelity_stderr : 0.0;

  double failure_rate = static_cast<double>(total.event_failures) / count;
  result.event_failure_rate = failure_rate;
  result.event_failure_stderr = std::sqrt(failure_rate * (1.0 - failure_rate) / count);
  {
    // Wilson 95% interval; better behaved than the normal interval when the
    // failure count is 0 or tiny.
    const double z = 1.96;
    double z2 = z * z;
    double denom = 1.0 + z2 / count;
    double center = (failure_rate + z2 / (2.0 * count)) / denom;
    double half = z *
                  std::sqrt(failure_rate * (1.0 - failure_rate) / count +
                            z2 / (4.0 * count * count)) /
                  denom;
    result.event_failure_wilson_low = std::max(0.0, center - half);
    result.event_failure_wilson_high = std::min(1.0, center + half);
  }

  result.mean_first_row = total.l1 / count;
  result.first_row_stderr = sample_stderr(total.l1, total.l1_sq, trials);
  result.second_row_moment = total.m2 / count;
  result.second_row_stderr = sample_stderr(total.m2, total.m2_sq, trials);
  result.mean_overhang_sum = total.overhang / count;
  result.fallback_trials = total.fallbacks;
  return result;
}

TheoremReport verify_theorem(const RationalSpectrum& spectrum, int64_t output_copies,
                             const Rational& delta, int64_t trials, uint64_t seed,
                             int workers) {
  int64_t samples = required_samples(spectrum, output_copies, delta);
  RunParameters params{samples, output_copies, delta.to_double()};
  TheoremReport report;
  report.samples = samples;
  report.target = 1.0 - delta.to_double();
  report.estimation = estimate(spectrum.to_float(), params, trials, seed, workers);
  report.slack =
      report.estimation.mean_fidelity + report.estimation.ci_halfwidth - report.target;
  report.passed = report.slack >= 0.0;
  return report;
}

TheoremReport verify_theorem(const Spectrum& spectrum, int64_t output_copies,
                             double delta, int64_t trials, uint64_t seed, int workers) {
  int64_t samples = required_samples(spectrum, output_copies, delta);
  RunParameters params{samples, output_copies, delta};
  TheoremReport report;
  report.samples = samples;
  report.target = 1.0 - delta;
  report.estimation = estimate(spectrum, params, trials, seed, workers);
  report.slack =
      report.estimation.mean_fidelity + report.estimation.ci_halfwidth - report.target;
  report.passed = report.slack >= 0.0;
  return report;
}

LemmaChecks check_lemmas(const Spectrum& spectrum, int64_t copies, int64_t trials,
                         uint64_t seed, int workers) {
  double gap = spectrum.require_gap();
  RunParameters params{copies, 1, 1.0};
  LemmaChecks checks;
  checks.estimation = estimate(spectrum, params, trials, seed, workers);
  const EstimationResult& est = checks.estimation;

  double n = static_cast<double>(copies);
  double pd = spectrum.principal();
  double p_second = spectrum.prob(spectrum.dim() - 1);
  double tail = 0.0;  // 1 - p_d as a sum, immune to rounding of p_d itself
  double excess = 0.0;
  for (int i = 1; i < spectrum.dim(); ++i) {
    tail += spectrum.prob(i);
    excess += spectrum.prob(i) / (pd - spectrum.prob(i));
  }

  checks.first_row_bound = pd * n + excess;
  checks.first_row_ok =
      est.mean_first_row <= checks.first_row_bound + 4.0 * est.first_row_stderr;

  checks.second_row_bound = 84.0 * p_second * n + 42.0 * tail * n;
  checks.second_row_ok =
      est.second_row_moment <= checks.second_row_bound + 4.0 * est.second_row_stderr;

  checks.event_failure_bound = std::min(1.0, 2032.0 / n * tail / (gap * gap));
  checks.event_ok = est.event_failure_rate <=
                    checks.event_failure_bound + 4.0 * est.event_failure_stderr;
  return checks;
}

}  // namespace qpa
