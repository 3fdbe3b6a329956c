#include "qpa/oracle.hpp"

#include <stdexcept>

#include "qpa/errors.hpp"
#include "qpa/fidelity.hpp"

namespace qpa {

namespace {

void check_caps(const RationalSpectrum& p, int64_t n, const OracleCaps& caps,
                const char* where) {
  if (n < 0) throw std::invalid_argument(std::string(where) + ": negative n");
  if (n > caps.max_boxes || p.dim() > caps.max_alphabet) {
    throw ResourceLimitError(std::string(where) + ": n = " + std::to_string(n) +
                             ", d = " + std::to_string(p.dim()) + " exceeds caps (n <= " +
                             std::to_string(caps.max_boxes) + ", d <= " +
                             std::to_string(caps.max_alphabet) + ")");
  }
}

int64_t enumeration_cap(const OracleCaps& caps) {
  return std::max<int64_t>(caps.max_boxes, caps.max_alphabet);
}

}  // namespace

Rational RskDistribution::total_mass() const {
  Rational total(0);
  for (const RskMass& e : entries) total += e.mass;
  return total;
}

RskDistribution exact_rsk_distribution(const RationalSpectrum& p, int64_t n,
                                       const OracleCaps& caps) {
  check_caps(p, n, caps, "exact_rsk_distribution");
  int d = p.dim();
  RskDistribution dist;
  for (const Partition& shape : partitions_of(n, static_cast<std::size_t>(d))) {
    Rational dimension(num_syt(shape));
    for (SemistandardTableau& t : enumerate_ssyt(shape, d, enumeration_cap(caps))) {
      std::vector<int64_t> type = t.type();
      Rational mass = dimension;
      for (int a = 1; a <= d; ++a) {
        mass *= pow(p.prob(a), type[static_cast<std::size_t>(a) - 1]);
      }
      dist.entries.push_back(RskMass{shape, std::move(t), std::move(mass)});
    }
  }
  return dist;
}

Rational word_probability(const RationalSpectrum& p, const Word& word) {
  if (word.alphabet != p.dim()) {
    throw std::invalid_argument("word_probability: alphabet mismatch");
  }
  std::vector<int64_t> h = word.histogram();
  Rational mass(1);
  for (int a = 1; a <= p.dim(); ++a) {
    mass *= pow(p.prob(a), h[static_cast<std::size_t>(a) - 1]);
  }
  return mass;
}

void for_each_word(int alphabet, int64_t length,
                   const std::function<void(const Word&)>& visit) {
  if (alphabet < 1) throw std::invalid_argument("for_each_word: alphabet must be >= 1");
  if (length < 0) throw std::invalid_argument("for_each_word: negative length");
  Word word(alphabet, std::vector<int>(static_cast<std::size_t>(length), 1));
  while (true) {
    visit(word);
    std::size_t pos = word.letters.size();
    while (pos > 0 && word.letters[pos - 1] == alphabet) {
      word.letters[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) return;
    ++word.letters[pos - 1];
  }
}

ExpectedFidelityRoutes exact_expected_fidelity_routes(const RationalSpectrum& p,
                                                      int64_t n, int64_t k,
                                                      const OracleCaps& caps) {
  check_caps(p, n, caps, "exact_expected_fidelity");
  if (k < 1) throw std::invalid_argument("exact_expected_fidelity: k must be >= 1");
  int d = p.dim();

  Rational pair_sum(0);
  for (const RskMass& entry : exact_rsk_distribution(p, n, caps).entries) {
    pair_sum += entry.mass * fidelity(entry.shape, entry.tableau, k).value;
  }

  // Word route: walk the d^n tree carrying the running probability, insert
  // letters as they are chosen.
  Rational word_sum(0);
  Word word(d, std::vector<int>(static_cast<std::size_t>(n), 1));
  std::function<void(std::size_t, Rational)> descend = [&](std::size_t pos,
                                                           Rational weight) {
    if (pos == static_cast<std::size_t>(n)) {
      RskResult result = rsk(word);
      word_sum += weight * fidelity(result.shape, result.insertion, k).value;
      return;
    }
    for (int a = 1; a <= d; ++a) {
      word.letters[pos] = a;
      descend(pos + 1, weight * p.prob(a));
    }
  };
  descend(0, Rational(1));

  return ExpectedFidelityRoutes{word_sum, pair_sum};
}

Rational exact_expected_fidelity(const RationalSpectrum& p, int64_t n, int64_t k,
                                 const OracleCaps& caps) {
  ExpectedFidelityRoutes routes = exact_expected_fidelity_routes(p, n, k, caps);
  if (!routes.agree()) {
    throw std::logic_error("exact_expected_fidelity: word route " +
                           routes.word_sum.str() + " != pair route " +
                           routes.pair_sum.str());
  }
  return routes.word_sum;
}

RowMoments exact_row_moments(const RationalSpectrum& p, int64_t n,
                             const OracleCaps& caps) {
  check_caps(p, n, caps, "exact_row_moments");
  Rational center = p.prob(p.dim() - 1) * Rational(n);  // p_{d-1} n
  RowMoments moments{Rational(0), Rational(0)};
  for (const RskMass& entry : exact_rsk_distribution(p, n, caps).entries) {
    moments.mean_first_row += entry.mass * Rational(entry.shape.part(1));
    Rational deviation = Rational(entry.shape.part(2)) - center;
    moments.second_row_square_deviation += entry.mass * deviation * deviation;
  }
  return moments;
}

Rational exact_event_probability(const RationalSpectrum& p, int64_t n,
                                 const OracleCaps& caps) {
  check_caps(p, n, caps, "exact_event_probability");
  Rational threshold_doubled = p.require_gap() * Rational(n);
  Rational probability(0);
  for (const RskMass& entry : exact_rsk_distribution(p, n, caps).entries) {
    int64_t row_gap = entry.shape.part(1) - entry.shape.part(2);
    if (Rational(2 * row_gap) >= threshold_doubled) probability += entry.mass;
  }
  return probability;
}

}  // namespace qpa
