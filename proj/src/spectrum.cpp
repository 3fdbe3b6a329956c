#include "qpa/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qpa/errors.hpp"

namespace qpa {

Spectrum::Spectrum(std::vector<double> probs) : p_(std::move(probs)) {
  if (p_.size() < 2) throw SpectrumError("spectrum: need dimension >= 2");
  std::sort(p_.begin(), p_.end());
  double sum = 0;
  for (double v : p_) {
    if (!(v >= 0.0)) throw SpectrumError("spectrum: probabilities must be >= 0");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw SpectrumError("spectrum: probabilities sum to " + std::to_string(sum) +
                        ", expected 1");
  }
}

double Spectrum::require_gap() const {
  double g = gap();
  if (!(g > 0.0)) {
    throw SpectrumError("spectrum: p_d - p_{d-1} must be > 0 for this operation");
  }
  return g;
}

RationalSpectrum::RationalSpectrum(std::vector<Rational> probs) : p_(std::move(probs)) {
  if (p_.size() < 2) throw SpectrumError("spectrum: need dimension >= 2");
  std::sort(p_.begin(), p_.end());
  Rational sum(0);
  for (const Rational& v : p_) {
    if (v < Rational(0)) throw SpectrumError("spectrum: probabilities must be >= 0");
    sum += v;
  }
  if (sum != Rational(1)) {
    throw SpectrumError("spectrum: probabilities sum to " + sum.str() + ", expected 1");
  }
}

Rational RationalSpectrum::require_gap() const {
  Rational g = gap();
  if (!(g > Rational(0))) {
    throw SpectrumError("spectrum: p_d - p_{d-1} must be > 0 for this operation");
  }
  return g;
}

Spectrum RationalSpectrum::to_float() const {
  std::vector<double> probs;
  probs.reserve(p_.size());
  for (const Rational& v : p_) probs.push_back(v.to_double());
  return Spectrum(std::move(probs));
}

void RunParameters::validate() const {
  if (copies < 1) throw std::invalid_argument("run parameters: n must be >= 1");
  if (output_copies < 1) throw std::invalid_argument("run parameters: k must be >= 1");
  if (!(target_infidelity > 0.0) || target_infidelity > 1.0) {
    throw std::invalid_argument("run parameters: delta must be in (0, 1]");
  }
}

Spectrum depolarizing(int dim, double eta) {
  if (dim < 2) throw SpectrumError("depolarizing: need dimension >= 2");
  if (!(eta >= 0.0) || eta > 1.0) {
    throw SpectrumError("depolarizing: noise rate must be in [0, 1]");
  }
  std::vector<double> probs(static_cast<std::size_t>(dim), eta / dim);
  probs.back() = 1.0 - eta + eta / dim;
  return Spectrum(std::move(probs));
}

RationalSpectrum depolarizing_exact(int dim, const Rational& eta) {
  if (dim < 2) throw SpectrumError("depolarizing: need dimension >= 2");
  if (eta < Rational(0) || eta > Rational(1)) {
    throw SpectrumError("depolarizing: noise rate must be in [0, 1]");
  }
  Rational share = eta / Rational(dim);
  std::vector<Rational> probs(static_cast<std::size_t>(dim), share);
  probs.back() = Rational(1) - eta + share;
  return RationalSpectrum(std::move(probs));
}

LetterSampler::LetterSampler(const Spectrum& spectrum) {
  double running = 0;
  for (double v : spectrum.probs()) {
    running += v;
    cumulative_.push_back(running);
  }
  cumulative_.back() = 1.0;
}

Word sample_word(const Spectrum& spectrum, int64_t length, RandomStream& stream) {
  if (length < 0) throw std::invalid_argument("sample_word: negative length");
  LetterSampler sampler(spectrum);
  std::vector<int> letters(static_cast<std::size_t>(length));
  for (auto& x : letters) x = sampler.sample(stream);
  return Word(spectrum.dim(), std::move(letters));
}

namespace {

void check_bound_arguments(int64_t k, double delta) {
  if (k < 1) throw std::invalid_argument("required_samples: k must be >= 1");
  if (!(delta > 0.0) || delta > 1.0) {
    throw std::invalid_argument("required_samples: delta must be in (0, 1]");
  }
}

}  // namespace

int64_t required_samples(const Spectrum& spectrum, int64_t k, double delta) {
  check_bound_arguments(k, delta);
  double g = spectrum.require_gap();
  double value = 12.0 * static_cast<double>(k) +
                 (2032.0 + 4.0 * static_cast<double>(k)) / delta *
                     (1.0 - spectrum.principal()) / (g * g);
  if (!(value < 9.0e18)) {
    throw std::overflow_error("required_samples: copy count exceeds 64-bit range");
  }
  return static_cast<int64_t>(std::ceil(value));
}

int64_t required_samples(const RationalSpectrum& spectrum, int64_t k,
                         const Rational& delta) {
  if (k < 1) throw std::invalid_argument("required_samples: k must be >= 1");
  if (delta <= Rational(0) || delta > Rational(1)) {
    throw std::invalid_argument("required_samples: delta must be in (0, 1]");
  }
  Rational g = spectrum.require_gap();
  Rational value = Rational(12) * Rational(k) +
                   (Rational(2032) + Rational(4) * Rational(k)) / delta *
                       (Rational(1) - spectrum.principal()) / (g * g);
  return value.ceil();
}

double fine_grained_rate(const Spectrum& spectrum) {
  spectrum.require_gap();
  double rate = 0;
  double pd = spectrum.principal();
  for (int i = 1; i < spectrum.dim(); ++i) {
    double diff = pd - spectrum.prob(i);
    rate += spectrum.prob(i) / (diff * diff);
  }
  return rate;
}

Rational fine_grained_rate(const RationalSpectrum& spectrum) {
  spectrum.require_gap();
  Rational rate(0);
  const Rational& pd = spectrum.principal();
  for (int i = 1; i < spectrum.dim(); ++i) {
    Rational diff = pd - spectrum.prob(i);
    rate += spectrum.prob(i) / (diff * diff);
  }
  return rate;
}

double qubit_asymptotic_infidelity(const Spectrum& spectrum, int64_t n) {
  if (spectrum.dim() != 2) {
    throw std::domain_error("qubit_asymptotic_infidelity: spectrum must have d = 2");
  }
  if (n < 1) throw std::invalid_argument("qubit_asymptotic_infidelity: n must be >= 1");
  double g = spectrum.require_gap();
  return spectrum.prob(1) / (g * g * static_cast<double>(n));
}

Rational qubit_asymptotic_infidelity(const RationalSpectrum& spectrum, int64_t n) {
  if (spectrum.dim() != 2) {
    throw std::domain_error("qubit_asymptotic_infidelity: spectrum must have d = 2");
  }
  if (n < 1) throw std::invalid_argument("qubit_asymptotic_infidelity: n must be >= 1");
  Rational g = spectrum.require_gap();
  return spectrum.prob(1) / (g * g * Rational(n));
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string trimmed(const std::string& text) {
  std::size_t b = text.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = text.find_last_not_of(" \t");
  return text.substr(b, e - b + 1);
}

int64_t parse_int(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t used = 0;
  int64_t value = std::stoll(text, &used);
  if (used != text.size()) throw std::invalid_argument("trailing characters in integer");
  return value;
}

}  // namespace

Rational parse_rational_literal(const std::string& raw) {
  std::string text = trimmed(raw);
  if (text.empty()) throw std::invalid_argument("empty number");
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    text.erase(0, 1);
  }
  Rational magnitude(0);
  if (auto slash = text.find('/'); slash != std::string::npos) {
    magnitude = Rational(parse_int(text.substr(0, slash)),
                         parse_int(text.substr(slash + 1)));
  } else if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("bare decimal point");
    if (frac.size() > 18) throw std::invalid_argument("too many decimal digits for exact parsing");
    int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    int64_t whole_part = whole.empty() ? 0 : parse_int(whole);
    int64_t frac_part = frac.empty() ? 0 : parse_int(frac);
    if (whole_part < 0 || frac_part < 0) throw std::invalid_argument("malformed decimal");
    magnitude = Rational(whole_part) + Rational(frac_part, scale);
  } else {
    magnitude = Rational(parse_int(text));
  }
  return negative ? -magnitude : magnitude;
}

RationalSpectrum parse_spectrum(const std::string& raw) {
  std::string text = trimmed(raw);
  try {
    const std::string prefix = "depolarizing:";
    if (text.rfind(prefix, 0) == 0) {
      int dim = -1;
      Rational eta(0);
      bool have_eta = false;
      for (const std::string& item : split(text.substr(prefix.size()), ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
          throw std::invalid_argument("expected key=value in depolarizing literal");
        }
        std::string key = trimmed(item.substr(0, eq));
        std::string value = trimmed(item.substr(eq + 1));
        if (key == "d") {
          dim = static_cast<int>(parse_int(value));
        } else if (key == "eta") {
          eta = parse_rational_literal(value);
          have_eta = true;
        } else {
          throw std::invalid_argument("unknown depolarizing key '" + key + "'");
        }
      }
      if (dim < 0 || !have_eta) {
        throw std::invalid_argument("depolarizing literal needs d=... and eta=...");
      }
      return depolarizing_exact(dim, eta);
    }
    std::vector<Rational> probs;
    for (const std::string& item : split(text, ',')) {
      probs.push_back(parse_rational_literal(item));
    }
    return RationalSpectrum(std::move(probs));
  } catch (const SpectrumError&) {
    throw;
  } catch (const std::exception& e) {
    throw SpectrumError("spectrum: cannot parse '" + raw + "': " + e.what());
  }
}

}  // namespace qpa
