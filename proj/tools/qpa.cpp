// qpa: command-line front end for the purity-amplification simulator.
//
// Subcommands: rsk, fidelity, simulate, sweep, oracle, bounds, lemmas.
// Exit codes: 0 success, 2 usage error, 3 invalid spectrum or zero gap,
// 4 resource cap exceeded, 5 verification failed.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpa/errors.hpp"
#include "qpa/fidelity.hpp"
#include "qpa/montecarlo.hpp"
#include "qpa/oracle.hpp"
#include "qpa/spectrum.hpp"

using ojson = nlohmann::ordered_json;
using namespace qpa;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSpectrum = 3;
constexpr int kExitResource = 4;
constexpr int kExitVerification = 5;

std::string format_double(double v) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + out_path + "'");
  file << text;
}

std::vector<int> parse_word_letters(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::vector<int> letters;
  std::istringstream words(normalized);
  std::string token;
  while (words >> token) {
    int value = 0;
    auto result = std::from_chars(token.data(), token.data() + token.size(), value);
    if (result.ec != std::errc() || result.ptr != token.data() + token.size()) {
      throw std::invalid_argument("cannot parse word letter '" + token + "'");
    }
    letters.push_back(value);
  }
  return letters;
}

std::vector<std::string> split_csv_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

ojson tableau_json(const std::vector<std::vector<int>>& rows) {
  ojson out = ojson::array();
  for (const auto& row : rows) out.push_back(row);
  return out;
}

std::string render_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return "(empty)\n";
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_rows64(const std::vector<std::vector<int64_t>>& rows) {
  std::vector<std::vector<int>> narrow;
  for (const auto& row : rows) narrow.emplace_back(row.begin(), row.end());
  return render_rows(narrow);
}

struct SpectrumOption {
  std::string literal;
  RationalSpectrum parsed{std::vector<Rational>{Rational(0), Rational(1)}};

  void load() { parsed = parse_spectrum(literal); }
};

struct McOptions {
  int64_t trials = 10000;
  uint64_t seed = 1;
  int workers = 0;
};

void add_mc_options(CLI::App* cmd, McOptions& mc) {
  cmd->add_option("--trials", mc.trials, "Monte-Carlo trials (default 10000)");
  cmd->add_option("--seed", mc.seed, "random seed (default 1)");
  cmd->add_option("--workers", mc.workers, "worker threads; 0 = all cores (default 0)");
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string csv_join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += csv_escape(cells[i]);
  }
  line += '\n';
  return line;
}

// ---------------------------------------------------------------------------
// rsk

struct RskArgs {
  std::string word;
  int alphabet = 0;
  std::string format = "text";
  std::string out;
};

int cmd_rsk(const RskArgs& args) {
  std::string text = args.word;
  if (text.empty()) {
    std::ostringstream collected;
    collected << std::cin.rdbuf();
    text = collected.str();
  }
  std::vector<int> letters = parse_word_letters(text);
  int alphabet = args.alphabet;
  if (alphabet == 0) {
    for (int x : letters) alphabet = std::max(alphabet, x);
    if (alphabet == 0) alphabet = 1;
  }
  Word word(alphabet, std::move(letters));
  RskResult result = rsk(word);
  int64_t lis = lis_weak(word);

  ojson j;
  j["schema_version"] = "1";
  j["command"] = "rsk";
  j["d"] = alphabet;
  j["word"] = word.letters;
  j["lambda"] = result.shape.parts();
  j["recording"] = result.recording.rows;
  j["insertion"] = tableau_json(result.insertion.rows());
  j["type"] = result.insertion.type();
  j["lis_weak"] = lis;
  j["lis_matches_first_row"] = (lis == result.shape.part(1));

  std::string output;
  if (args.format == "json") {
    output = j.dump(2) + "\n";
  } else {
    output += "lambda = " + result.shape.str() + "\n";
    output += "T (insertion):\n" + render_rows(result.insertion.rows());
    output += "S (recording):\n" + render_rows64(result.recording.rows);
    output += "lis_weak = " + std::to_string(lis) +
              (lis == result.shape.part(1) ? " (matches lambda_1)\n"
                                           : " (MISMATCH with lambda_1)\n");
    output += j.dump(2) + "\n";
  }
  write_output(output, args.out);
  return lis == result.shape.part(1) ? 0 : kExitVerification;
}

// ---------------------------------------------------------------------------
// fidelity

struct FidelityArgs {
  std::string word;
  int alphabet = 0;
  int64_t k = 1;
  std::string out;
};

int cmd_fidelity(const FidelityArgs& args) {
  std::vector<int> letters = parse_word_letters(args.word);
  int alphabet = args.alphabet;
  if (alphabet == 0) {
    for (int x : letters) alphabet = std::max(alphabet, x);
  }
  if (alphabet < 2) alphabet = 2;
  Word word(alphabet, std::move(letters));
  RskResult result = rsk(word);
  FidelityValue value = fidelity(result.shape, result.insertion, args.k);
  Partition mu = result.insertion.restrict_below(alphabet).shape();
  Overhangs b = overhangs(result.shape, mu, alphabet);

  ojson j;
  j["schema_version"] = "1";
  j["command"] = "fidelity";
  j["d"] = alphabet;
  j["k"] = args.k;
  j["lambda"] = result.shape.parts();
  j["mu"] = mu.parts();
  j["overhangs"] = b.values;
  j["fidelity"] = value.value.str();
  j["fidelity_float"] = value.value.to_double();
  j["fallback_used"] = value.fallback_used;
  bool identity_ok = true;
  if (!value.fallback_used) {
    Rational via_cg = fidelity_via_cg(result.shape, result.insertion, args.k);
    identity_ok = via_cg == value.value;
    j["fidelity_via_cg"] = via_cg.str();
    j["cg_route_matches"] = identity_ok;
    j["lower_bound"] = fidelity_lower_bound(result.shape, b, args.k).str();
  }
  write_output(j.dump(2) + "\n", args.out);
  return identity_ok ? 0 : kExitVerification;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  SpectrumOption spectrum;
  int64_t n = 0;
  int64_t k = 1;
  McOptions mc;
  std::string format = "csv";
  std::string out;
};

const std::vector<std::string> kSimulateColumns = {
    "spectrum", "d", "n", "k", "trials", "seed", "mean_fidelity", "ci_halfwidth",
    "event_failure_rate", "mean_lambda1", "second_row_moment", "mean_overhang_sum",
    "fallback_trials"};

ojson estimation_json(const EstimationResult& est) {
  ojson j;
  j["trials"] = est.trials;
  j["mean_fidelity"] = est.mean_fidelity;
  if (est.ci_defined) {
    j["ci_halfwidth"] = est.ci_halfwidth;
  } else {
    j["ci_halfwidth"] = nullptr;
  }
  j["fidelity_stderr"] = est.fidelity_stderr;
  j["event_failure_rate"] = est.event_failure_rate;
  j["event_failure_wilson"] =
      ojson::array({est.event_failure_wilson_low, est.event_failure_wilson_high});
  j["mean_lambda1"] = est.mean_first_row;
  j["second_row_moment"] = est.second_row_moment;
  j["mean_overhang_sum"] = est.mean_overhang_sum;
  j["fallback_trials"] = est.fallback_trials;
  return j;
}

int cmd_simulate(const SimulateArgs& args) {
  Spectrum spectrum = args.spectrum.parsed.to_float();
  if (args.mc.trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");
  RunParameters params{args.n, args.k, 1.0};
  EstimationResult est =
      estimate(spectrum, params, args.mc.trials, args.mc.seed, args.mc.workers);
  std::string output;
  if (args.format == "json") {
    ojson j;
    j["schema_version"] = "1";
    j["command"] = "simulate";
    j["spectrum"] = args.spectrum.literal;
    j["d"] = spectrum.dim();
    j["n"] = args.n;
    j["k"] = args.k;
    j["seed"] = args.mc.seed;
    j["estimate"] = estimation_json(est);
    output = j.dump(2) + "\n";
  } else {
    output = csv_join(kSimulateColumns);
    output += csv_join({args.spectrum.literal,
                        std::to_string(spectrum.dim()),
                        std::to_string(args.n),
                        std::to_string(args.k),
                        std::to_string(args.mc.trials),
                        std::to_string(args.mc.seed),
                        format_double(est.mean_fidelity),
                        est.ci_defined ? format_double(est.ci_halfwidth) : "",
                        format_double(est.event_failure_rate),
                        format_double(est.mean_first_row),
                        format_double(est.second_row_moment),
                        format_double(est.mean_overhang_sum),
                        std::to_string(est.fallback_trials)});
  }
  write_output(output, args.out);
  return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  SpectrumOption spectrum;
  std::string n_grid;
  std::string delta_grid;
  std::string delta;  // optional fixed delta recorded alongside an n grid
  int64_t k = 1;
  McOptions mc;
  std::string format = "csv";
  std::string out;
};

const std::vector<std::string> kSweepColumns = {
    "spectrum", "d", "k", "delta", "n", "trials", "seed", "mean_fidelity",
    "ci_halfwidth", "event_failure_rate", "mean_lambda1", "second_row_moment",
    "mean_overhang_sum", "fallback_trials", "n_times_infidelity", "coarse_rate",
    "fine_grained_rate", "cem99_rate"};

int cmd_sweep(const SweepArgs& args) {
  const RationalSpectrum& exact = args.spectrum.parsed;
  Spectrum spectrum = exact.to_float();
  spectrum.require_gap();  // the rate diagnostics below need it
  if (args.mc.trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
  if (args.n_grid.empty() == args.delta_grid.empty()) {
    throw std::invalid_argument("sweep: need exactly one of --n-grid or --delta-grid");
  }

  struct Point {
    std::string delta_text;
    int64_t n = 0;
  };
  std::vector<Point> points;
  if (!args.n_grid.empty()) {
    for (const std::string& item : split_csv_list(args.n_grid)) {
      std::size_t used = 0;
      int64_t n = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument("bad n value '" + item + "'");
      points.push_back(Point{args.delta, n});
    }
  } else {
    for (const std::string& item : split_csv_list(args.delta_grid)) {
      points.push_back(
          Point{item, required_samples(exact, args.k, parse_rational_literal(item))});
    }
  }
  if (points.empty()) throw std::invalid_argument("sweep: empty grid");

  double gap = spectrum.gap();
  double tail = 0.0;
  for (int i = 1; i < spectrum.dim(); ++i) tail += spectrum.prob(i);
  double coarse = tail / (gap * gap);
  double fine = fine_grained_rate(spectrum);
  std::string cem99;
  if (spectrum.dim() == 2) cem99 = format_double(spectrum.prob(1) / (gap * gap));

  std::string csv = csv_join(kSweepColumns);
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& point = points[i];
    uint64_t seed = args.mc.seed + i;
    RunParameters params{point.n, args.k, 1.0};
    EstimationResult est =
        estimate(spectrum, params, args.mc.trials, seed, args.mc.workers);
    double n_times_infidelity = static_cast<double>(point.n) * (1.0 - est.mean_fidelity);

    csv += csv_join({args.spectrum.literal,
                     std::to_string(spectrum.dim()),
                     std::to_string(args.k),
                     point.delta_text,
                     std::to_string(point.n),
                     std::to_string(args.mc.trials),
                     std::to_string(seed),
                     format_double(est.mean_fidelity),
                     est.ci_defined ? format_double(est.ci_halfwidth) : "",
                     format_double(est.event_failure_rate),
                     format_double(est.mean_first_row),
                     format_double(est.second_row_moment),
                     format_double(est.mean_overhang_sum),
                     std::to_string(est.fallback_trials),
                     format_double(n_times_infidelity),
                     format_double(coarse),
                     format_double(fine),
                     cem99});

    ojson row;
    row["delta"] = point.delta_text;
    row["n"] = point.n;
    row["seed"] = seed;
    row["estimate"] = estimation_json(est);
    row["n_times_infidelity"] = n_times_infidelity;
    rows.push_back(row);
  }

  std::string output;
  if (args.format == "json") {
    ojson j;
    j["schema_version"] = "1";
    j["command"] = "sweep";
    j["spectrum"] = args.spectrum.literal;
    j["d"] = spectrum.dim();
    j["k"] = args.k;
    j["coarse_rate"] = coarse;
    j["fine_grained_rate"] = fine;
    if (spectrum.dim() == 2) j["cem99_rate"] = spectrum.prob(1) / (gap * gap);
    j["rows"] = rows;
    output = j.dump(2) + "\n";
  } else {
    output = csv;
  }
  write_output(output, args.out);
  return 0;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsArgs {
  SpectrumOption spectrum;
  int64_t k = 1;
  std::string delta = "0.1";
  std::string format = "text";
  std::string out;
};

int cmd_bounds(const BoundsArgs& args) {
  const RationalSpectrum& exact = args.spectrum.parsed;
  Rational delta = parse_rational_literal(args.delta);
  int64_t n = required_samples(exact, args.k, delta);
  Rational gap = exact.require_gap();
  Rational coarse = (Rational(1) - exact.principal()) / (gap * gap);
  Rational fine = fine_grained_rate(exact);

  std::string output;
  if (args.format == "json") {
    ojson j;
    j["schema_version"] = "1";
    j["command"] = "bounds";
    j["spectrum"] = args.spectrum.literal;
    j["d"] = exact.dim();
    j["k"] = args.k;
    j["delta"] = delta.str();
    j["n_required"] = n;
    j["gap"] = gap.str();
    j["gap_float"] = gap.to_double();
    j["coarse_rate"] = coarse.str();
    j["coarse_rate_float"] = coarse.to_double();
    j["fine_grained_rate"] = fine.str();
    j["fine_grained_rate_float"] = fine.to_double();
    if (exact.dim() == 2) {
      Rational cem99 = exact.prob(1) / (gap * gap);
      j["cem99_rate"] = cem99.str();
      j["cem99_rate_float"] = cem99.to_double();
    }
    output = j.dump(2) + "\n";
  } else {
    output += "n_required " + std::to_string(n) + "\n";
    output += "gap " + format_double(gap.to_double()) + "\n";
    output += "coarse_rate " + format_double(coarse.to_double()) + "\n";
    output += "fine_grained_rate " + format_double(fine.to_double()) + "\n";
    if (exact.dim() == 2) {
      Rational cem99 = exact.prob(1) / (gap * gap);
      output += "cem99_rate " + format_double(cem99.to_double()) + "\n";
    }
  }
  write_output(output, args.out);
  return 0;
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  SpectrumOption spectrum;
  int64_t n = 6;
  int64_t k = 1;
  int64_t cap = 0;  // 0 = defaults
  std::string format = "text";
  std::string out;
};

int cmd_oracle(const OracleArgs& args) {
  const RationalSpectrum& p = args.spectrum.parsed;
  OracleCaps caps;
  if (args.cap > 0) {
    caps.max_boxes = args.cap;
    caps.max_alphabet = static_cast<int>(args.cap);
  }
  bool gapped = p.gap() > Rational(0);

  struct Check {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
  };
  std::vector<Check> checks;

  RskDistribution dist = exact_rsk_distribution(p, args.n, caps);
  Rational mass = dist.total_mass();
  checks.push_back({"total_mass", mass == Rational(1), false, "mass=" + mass.str()});

  ExpectedFidelityRoutes routes = exact_expected_fidelity_routes(p, args.n, args.k, caps);
  checks.push_back({"expected_fidelity_routes", routes.agree(), false,
                    "word_sum=" + routes.word_sum.str() +
                        " pair_sum=" + routes.pair_sum.str()});

  RowMoments moments = exact_row_moments(p, args.n, caps);
  if (gapped) {
    Rational excess(0);
    for (int i = 1; i < p.dim(); ++i) excess += p.prob(i) / (p.principal() - p.prob(i));
    Rational first_bound = p.principal() * Rational(args.n) + excess;
    checks.push_back({"first_row_bound", moments.mean_first_row <= first_bound, false,
                      "mean=" + moments.mean_first_row.str() +
                          " bound=" + first_bound.str()});
  } else {
    checks.push_back({"first_row_bound", false, true, "needs gap > 0"});
  }

  Rational second_bound = Rational(84) * p.prob(p.dim() - 1) * Rational(args.n) +
                          Rational(42) * (Rational(1) - p.principal()) * Rational(args.n);
  checks.push_back({"second_row_bound",
                    moments.second_row_square_deviation <= second_bound, false,
                    "moment=" + moments.second_row_square_deviation.str() +
                        " bound=" + second_bound.str()});

  if (gapped) {
    Rational gap = p.gap();
    Rational event = exact_event_probability(p, args.n, caps);
    Rational complement = Rational(1) - event;
    Rational concentration =
        Rational(2032) / Rational(args.n) * (Rational(1) - p.principal()) / (gap * gap);
    if (concentration > Rational(1)) concentration = Rational(1);
    checks.push_back({"event_concentration", complement <= concentration, false,
                      "Pr[event]=" + event.str() +
                          " complement_bound=" + concentration.str()});

    Rational drift = moments.mean_first_row - p.principal() * Rational(args.n);
    Rational overhang_bound = (Rational(1) - p.principal()) / gap;
    checks.push_back({"overhang_expectation", drift <= overhang_bound, false,
                      "E[sum b]=" + drift.str() + " bound=" + overhang_bound.str()});
  } else {
    checks.push_back({"event_concentration", false, true, "needs gap > 0"});
    checks.push_back({"overhang_expectation", false, true, "needs gap > 0"});
  }

  bool all_ok = true;
  for (const Check& c : checks) {
    if (!c.skipped && !c.passed) all_ok = false;
  }

  std::string output;
  if (args.format == "json") {
    ojson j;
    j["schema_version"] = "1";
    j["command"] = "oracle";
    j["spectrum"] = args.spectrum.literal;
    j["n"] = args.n;
    j["k"] = args.k;
    ojson list = ojson::array();
    for (const Check& c : checks) {
      ojson item;
      item["name"] = c.name;
      item["status"] = c.skipped ? "skip" : (c.passed ? "pass" : "fail");
      item["detail"] = c.detail;
      list.push_back(item);
    }
    j["checks"] = list;
    j["result"] = all_ok ? "pass" : "fail";
    output = j.dump(2) + "\n";
  } else {
    for (const Check& c : checks) {
      output += (c.skipped ? "SKIP " : (c.passed ? "PASS " : "FAIL ")) + c.name + " " +
                c.detail + "\n";
    }
    output += std::string("RESULT ") + (all_ok ? "PASS" : "FAIL") + "\n";
  }
  write_output(output, args.out);
  return all_ok ? 0 : kExitVerification;
}

// ---------------------------------------------------------------------------
// lemmas

struct LemmasArgs {
  SpectrumOption spectrum;
  int64_t n = 100;
  McOptions mc;
  std::string format = "text";
  std::string out;
};

int cmd_lemmas(const LemmasArgs& args) {
  Spectrum spectrum = args.spectrum.parsed.to_float();
  if (args.mc.trials < 1) throw std::invalid_argument("lemmas: trials must be >= 1");
  LemmaChecks checks =
      check_lemmas(spectrum, args.n, args.mc.trials, args.mc.seed, args.mc.workers);
  const EstimationResult& est = checks.estimation;

  std::string output;
  if (args.format == "json") {
    ojson j;
    j["schema_version"] = "1";
    j["command"] = "lemmas";
    j["spectrum"] = args.spectrum.literal;
    j["n"] = args.n;
    j["trials"] = args.mc.trials;
    j["seed"] = args.mc.seed;
    j["first_row"] = {{"mean", est.mean_first_row},
                      {"stderr", est.first_row_stderr},
                      {"bound", checks.first_row_bound},
                      {"ok", checks.first_row_ok}};
    j["second_row"] = {{"moment", est.second_row_moment},
                       {"stderr", est.second_row_stderr},
                       {"bound", checks.second_row_bound},
                       {"ok", checks.second_row_ok}};
    j["event_failure"] = {{"rate", est.event_failure_rate},
                          {"stderr", est.event_failure_stderr},
                          {"bound", checks.event_failure_bound},
                          {"ok", checks.event_ok}};
    j["result"] = checks.all_ok() ? "pass" : "fail";
    output = j.dump(2) + "\n";
  } else {
    output += std::string(checks.first_row_ok ? "PASS" : "FAIL") +
              " first_row mean=" + format_double(est.mean_first_row) +
              " bound=" + format_double(checks.first_row_bound) +
              " stderr=" + format_double(est.first_row_stderr) + "\n";
    output += std::string(checks.second_row_ok ? "PASS" : "FAIL") +
              " second_row moment=" + format_double(est.second_row_moment) +
              " bound=" + format_double(checks.second_row_bound) +
              " stderr=" + format_double(est.second_row_stderr) + "\n";
    output += std::string(checks.event_ok ? "PASS" : "FAIL") +
              " event_failure rate=" + format_double(est.event_failure_rate) +
              " bound=" + format_double(checks.event_failure_bound) +
              " stderr=" + format_double(est.event_failure_stderr) + "\n";
    output += std::string("RESULT ") + (checks.all_ok() ? "PASS" : "FAIL") + "\n";
  }
  write_output(output, args.out);
  return checks.all_ok() ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qpa: classical simulator for k-copy quantum purity amplification.\n"
      "Samples Young diagrams via RSK insertion, evaluates the channel's\n"
      "combinatorial output fidelity, and verifies sample-complexity bounds.\n"
      "\n"
      "Spectrum literals: \"0.1,0.9\", \"1/10,9/10\", \"depolarizing:d=3,eta=0.3\".\n"
      "Exit codes: 0 ok, 2 usage, 3 bad spectrum/gap, 4 resource cap,\n"
      "5 verification failed."};
  app.require_subcommand(1);

  RskArgs rsk_args;
  auto* rsk_cmd = app.add_subcommand(
      "rsk", "Run RSK on a word; prints shape, tableaux, and the LIS cross-check");
  rsk_cmd->add_option("word", rsk_args.word,
                      "word letters, e.g. \"2 1 2\" (reads stdin when omitted)");
  rsk_cmd->add_option("--d", rsk_args.alphabet, "alphabet size (default: max letter)");
  rsk_cmd->add_option("--format", rsk_args.format, "text|json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  rsk_cmd->add_option("--out", rsk_args.out, "write output to this file");

  FidelityArgs fidelity_args;
  auto* fidelity_cmd = app.add_subcommand(
      "fidelity",
      "Output fidelity for the Schur block reached by a word, with the "
      "Clebsch-Gordan cross-check");
  fidelity_cmd->add_option("word", fidelity_args.word, "word letters")->required();
  fidelity_cmd->add_option("--d", fidelity_args.alphabet,
                           "alphabet size (default: max letter, at least 2)");
  fidelity_cmd->add_option("--k", fidelity_args.k, "output copies (default 1)");
  fidelity_cmd->add_option("--out", fidelity_args.out, "write output to this file");

  SimulateArgs simulate_args;
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Monte-Carlo estimate of the mean output fidelity at fixed n, k");
  simulate_cmd->add_option("--spectrum", simulate_args.spectrum.literal, "input spectrum")
      ->required();
  simulate_cmd->add_option("--n", simulate_args.n, "input copies")->required();
  simulate_cmd->add_option("--k", simulate_args.k, "output copies (default 1)");
  add_mc_options(simulate_cmd, simulate_args.mc);
  simulate_cmd->add_option("--format", simulate_args.format, "csv|json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  simulate_cmd->add_option("--out", simulate_args.out, "write output to this file");
  simulate_cmd->footer(
      "CSV columns: spectrum,d,n,k,trials,seed,mean_fidelity,ci_halfwidth,\n"
      "event_failure_rate,mean_lambda1,second_row_moment,mean_overhang_sum,\n"
      "fallback_trials (ci_halfwidth empty when trials < 2)");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand(
      "sweep",
      "Simulate over an n grid or a delta grid (delta points choose n via the "
      "sample-complexity formula); one CSV row per point");
  sweep_cmd->add_option("--spectrum", sweep_args.spectrum.literal, "input spectrum")
      ->required();
  sweep_cmd->add_option("--n-grid", sweep_args.n_grid, "comma-separated n values");
  sweep_cmd->add_option("--delta-grid", sweep_args.delta_grid,
                        "comma-separated delta values");
  sweep_cmd->add_option("--delta", sweep_args.delta,
                        "fixed delta recorded alongside an n grid");
  sweep_cmd->add_option("--k", sweep_args.k, "output copies (default 1)");
  add_mc_options(sweep_cmd, sweep_args.mc);
  sweep_cmd->add_option("--format", sweep_args.format, "csv|json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--out", sweep_args.out, "write output to this file");
  sweep_cmd->footer(
      "CSV columns: spectrum,d,k,delta,n,trials,seed,mean_fidelity,ci_halfwidth,\n"
      "event_failure_rate,mean_lambda1,second_row_moment,mean_overhang_sum,\n"
      "fallback_trials,n_times_infidelity,coarse_rate,fine_grained_rate,cem99_rate\n"
      "(delta empty for plain n grids; cem99_rate empty unless d = 2; the row\n"
      "seed is --seed plus the grid index)");

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand(
      "bounds", "Copies required for fidelity 1 - delta, plus rate diagnostics");
  bounds_cmd->add_option("--spectrum", bounds_args.spectrum.literal, "input spectrum")
      ->required();
  bounds_cmd->add_option("--k", bounds_args.k, "output copies (default 1)");
  bounds_cmd->add_option("--delta", bounds_args.delta, "target infidelity (default 0.1)");
  bounds_cmd->add_option("--format", bounds_args.format, "text|json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  bounds_cmd->add_option("--out", bounds_args.out, "write output to this file");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand(
      "oracle",
      "Exact enumeration checks at small n: distribution mass, the two "
      "expected-fidelity routes, row-moment and concentration bounds");
  oracle_cmd->add_option("--spectrum", oracle_args.spectrum.literal,
                         "input spectrum (rational)")
      ->required();
  oracle_cmd->add_option("--n", oracle_args.n, "input copies (default 6)");
  oracle_cmd->add_option("--k", oracle_args.k, "output copies (default 1)");
  oracle_cmd->add_option("--cap", oracle_args.cap,
                         "raise the enumeration caps (defaults: n <= 10, d <= 4)");
  oracle_cmd->add_option("--format", oracle_args.format, "text|json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  oracle_cmd->add_option("--out", oracle_args.out, "write output to this file");

  LemmasArgs lemmas_args;
  auto* lemmas_cmd = app.add_subcommand(
      "lemmas",
      "Monte-Carlo checks of the first-row, second-row, and concentration "
      "bounds at 4-sigma slack");
  lemmas_cmd->add_option("--spectrum", lemmas_args.spectrum.literal, "input spectrum")
      ->required();
  lemmas_cmd->add_option("--n", lemmas_args.n, "input copies (default 100)");
  add_mc_options(lemmas_cmd, lemmas_args.mc);
  lemmas_cmd->add_option("--format", lemmas_args.format, "text|json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  lemmas_cmd->add_option("--out", lemmas_args.out, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*rsk_cmd) return cmd_rsk(rsk_args);
    if (*fidelity_cmd) return cmd_fidelity(fidelity_args);
    if (*simulate_cmd) {
      simulate_args.spectrum.load();
      return cmd_simulate(simulate_args);
    }
    if (*sweep_cmd) {
      sweep_args.spectrum.load();
      return cmd_sweep(sweep_args);
    }
    if (*bounds_cmd) {
      bounds_args.spectrum.load();
      return cmd_bounds(bounds_args);
    }
    if (*oracle_cmd) {
      oracle_args.spectrum.load();
      return cmd_oracle(oracle_args);
    }
    if (*lemmas_cmd) {
      lemmas_args.spectrum.load();
      return cmd_lemmas(lemmas_args);
    }
  } catch (const SpectrumError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpectrum;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
