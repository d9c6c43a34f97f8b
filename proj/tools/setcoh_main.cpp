// Copyright 2026 The setcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// setcoh: decide set coherence of density-matrix families from low-order
// Bargmann trace invariants, evaluate invariant scenarios, run the
// dimension-specific second/third-order tests, and regenerate the library's
// separating example families.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "setcoh/certify.hpp"
#include "setcoh/counterexamples.hpp"
#include "setcoh/invariants.hpp"
#include "setcoh/io.hpp"
#include "setcoh/loworder.hpp"
#include "setcoh/states.hpp"

namespace {

using nlohmann::json;
using namespace setcoh;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvalidState = 2;
constexpr int kExitCoherentUnderFlag = 3;

enum class OutputMode { Text, Json, Csv };

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s.push_back(' ');
    s += argv[i];
  }
  return s;
}

// ---------------------------------------------------------------------------
// certify

struct CertifyOpts {
  std::string input;
  double threshold = kDefaultGapThreshold;
  std::string method = "gap";
  bool as_json = false;
  bool as_csv = false;
  bool fail_on_coherent = false;
};

int run_certify(const CertifyOpts& opt, const std::string& command) {
  Timer timer;
  const std::string bytes = read_file(opt.input);
  const StateFamily fam = parse_family_json(bytes);

  const bool want_gap = opt.method != "oracle";
  const bool want_oracle = opt.method != "gap";

  std::optional<CoherenceVerdict> verdict;
  if (want_gap) verdict = decide_set_coherence(fam, opt.threshold);
  std::optional<bool> oracle;
  if (want_oracle) oracle = commutator_oracle(fam, kDefaultCommutatorTol);

  const bool incoherent = want_gap ? verdict->incoherent : *oracle;
  const bool disagree = want_gap && want_oracle && (verdict->incoherent != *oracle);

  const OutputMode mode =
      opt.as_json ? OutputMode::Json : (opt.as_csv ? OutputMode::Csv : OutputMode::Text);

  if (mode == OutputMode::Json) {
    json out;
    out["command"] = command;
    out["input"] = opt.input;
    out["digest"] = fnv1a_digest(bytes);
    out["dimension"] = fam.dim();
    out["states"] = fam.size();
    out["method"] = opt.method;
    if (verdict) {
      out["threshold"] = verdict->threshold;
      json gaps = json::array();
      for (const PairGap& g : verdict->pair_gaps) {
        gaps.push_back(json{{"i", g.i}, {"j", g.j}, {"gamma", g.gap}});
      }
      out["pair_gaps"] = std::move(gaps);
      out["total_gap"] = verdict->total_gap;
      if (verdict->witness_pair) {
        out["witness_pair"] = json::array({verdict->witness_pair->first,
                                           verdict->witness_pair->second});
      }
    }
    if (oracle) {
      out["oracle_tol"] = kDefaultCommutatorTol;
      out["oracle_incoherent"] = *oracle;
    }
    out["incoherent"] = incoherent;
    if (disagree) out["warning"] = "gap and oracle verdicts disagree";
    out["elapsed_ms"] = timer.ms();
    std::cout << out.dump(2) << "\n";
  } else if (mode == OutputMode::Csv) {
    std::cout << "i,j,gamma\n";
    if (verdict) {
      for (const PairGap& g : verdict->pair_gaps) {
        std::cout << g.i << "," << g.j << "," << format_real(g.gap) << "\n";
      }
    }
  } else {
    std::cout << "command: " << command << "\n";
    std::cout << "input: " << opt.input << "\n";
    std::cout << "digest: " << fnv1a_digest(bytes) << "\n";
    std::cout << "dimension: " << fam.dim() << "\n";
    std::cout << "states: " << fam.size() << "\n";
    std::cout << "method: " << opt.method << "\n";
    if (verdict) {
      std::cout << "threshold: " << format_real(verdict->threshold) << "\n";
      for (const PairGap& g : verdict->pair_gaps) {
        std::cout << "pair (" << g.i << "," << g.j << "): gamma = " << format_real(g.gap) << "\n";
      }
      std::cout << "total_gap: " << format_real(verdict->total_gap) << "\n";
      if (verdict->witness_pair) {
        std::cout << "witness_pair: (" << verdict->witness_pair->first << ","
                  << verdict->witness_pair->second << ")\n";
      }
      std::cout << "gap_verdict: " << (verdict->incoherent ? "incoherent" : "coherent") << "\n";
    }
    if (oracle) {
      std::cout << "oracle_tol: " << format_real(kDefaultCommutatorTol) << "\n";
      std::cout << "oracle_verdict: " << (*oracle ? "incoherent" : "coherent") << "\n";
    }
    if (disagree) {
      std::cout << "warning: gap and oracle verdicts disagree\n";
    }
    std::cout << "verdict: " << (incoherent ? "incoherent" : "coherent") << "\n";
    std::cout << "elapsed_ms: " << timer.ms() << "\n";
  }

  if (!incoherent && opt.fail_on_coherent) return kExitCoherentUnderFlag;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// invariants

struct InvariantsOpts {
  std::string input;
  std::string scenario;
  std::vector<std::string> words;
  bool as_json = false;
  bool as_csv = false;
};

Scenario scenario_by_name(const std::string& name, int n) {
  if (name == "w2") return scenario_w2();
  if (name == "w3") return scenario_w3();
  if (name == "w4") return scenario_w4();
  if (name == "w2n") return scenario_w2n(n);
  if (name == "wle3n") return scenario_wle3n(n);
  if (name == "w4n") return scenario_w4n(n);
  throw std::invalid_argument("unknown scenario \"" + name + "\"");
}

int run_invariants(const InvariantsOpts& opt, const std::string& command) {
  Timer timer;
  const std::string bytes = read_file(opt.input);
  const StateFamily fam = parse_family_json(bytes);

  Scenario sc = opt.words.empty()
                    ? scenario_by_name(opt.scenario, static_cast<int>(fam.size()))
                    : [&] {
                        std::vector<Word> parsed;
                        parsed.reserve(opt.words.size());
                        for (const std::string& w : opt.words) parsed.push_back(Word::parse(w));
                        return Scenario::from_words(parsed);
                      }();

  const InvariantTuple values = evaluate(sc, fam);

  if (opt.as_json) {
    json out;
    out["command"] = command;
    out["input"] = opt.input;
    out["digest"] = fnv1a_digest(bytes);
    out["dimension"] = fam.dim();
    out["states"] = fam.size();
    json rows = json::array();
    for (const auto& [word, value] : values.entries()) {
      rows.push_back(json{{"word", word.str()}, {"re", value.real()}, {"im", value.imag()}});
    }
    out["invariants"] = std::move(rows);
    out["elapsed_ms"] = timer.ms();
    std::cout << out.dump(2) << "\n";
  } else if (opt.as_csv) {
    std::cout << "word,re,im\n";
    for (const auto& [word, value] : values.entries()) {
      std::cout << word.str() << "," << format_real(value.real()) << ","
                << format_real(value.imag()) << "\n";
    }
  } else {
    std::cout << "command: " << command << "\n";
    std::cout << "input: " << opt.input << "\n";
    std::cout << "digest: " << fnv1a_digest(bytes) << "\n";
    for (const auto& [word, value] : values.entries()) {
      std::cout << word.str() << ": " << format_real(value.real());
      if (value.imag() != 0.0) std::cout << " + " << format_real(value.imag()) << "i";
      std::cout << "\n";
    }
    std::cout << "elapsed_ms: " << timer.ms() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// qutrit-test / qubit-test

struct QutritTestOpts {
  std::string input;
  std::vector<double> tuple;
  double tol = 1e-8;
};

int run_qutrit_test(const QutritTestOpts& opt, const std::string& command) {
  QutritW3Tuple t;
  if (!opt.tuple.empty()) {
    if (opt.tuple.size() != 7) {
      throw std::invalid_argument("--tuple needs exactly 7 values x,y,z,a,b,c,d");
    }
    t = QutritW3Tuple{opt.tuple[0], opt.tuple[1], opt.tuple[2], opt.tuple[3],
                      opt.tuple[4], opt.tuple[5], opt.tuple[6]};
  } else {
    const StateFamily fam = parse_family_json(read_file(opt.input));
    if (fam.dim() != 3 || fam.size() != 2) {
      throw std::invalid_argument("qutrit-test input must hold exactly two qutrit states");
    }
    t = w3_tuple(fam);
  }

  std::cout << "command: " << command << "\n";
  std::cout << "tol: " << format_real(opt.tol) << "\n";
  std::cout << "tuple: " << format_real(t.purity_rho) << " " << format_real(t.purity_sigma) << " "
            << format_real(t.overlap) << " " << format_real(t.cubic_rho) << " "
            << format_real(t.cubic_sigma) << " " << format_real(t.rho2_sigma) << " "
            << format_real(t.rho_sigma2) << "\n";

  const auto p = qutrit_eigs_from_moments(t.purity_rho, t.cubic_rho);
  const auto q = qutrit_eigs_from_moments(t.purity_sigma, t.cubic_sigma);
  std::cout << "rho_spectrum: " << format_real(p[0]) << " " << format_real(p[1]) << " "
            << format_real(p[2]) << "\n";
  std::cout << "sigma_spectrum: " << format_real(q[0]) << " " << format_real(q[1]) << " "
            << format_real(q[2]) << "\n";

  const auto witness = qutrit_w3_incoherent_compatible(t, opt.tol);
  if (witness) {
    std::cout << "compatible: yes\n";
    std::cout << "assignment: (" << witness->permutation[0] + 1 << ","
              << witness->permutation[1] + 1 << "," << witness->permutation[2] + 1 << ")\n";
    std::cout << "sigma_assigned: " << format_real(witness->sigma_spectrum[0]) << " "
              << format_real(witness->sigma_spectrum[1]) << " "
              << format_real(witness->sigma_spectrum[2]) << "\n";
  } else {
    std::cout << "compatible: no\n";
  }
  return kExitOk;
}

struct QubitTestOpts {
  std::vector<double> tuple;
  double tol = 1e-8;
};

int run_qubit_test(const QubitTestOpts& opt, const std::string& command) {
  if (opt.tuple.size() != 3) {
    throw std::invalid_argument("--tuple needs exactly 3 values x,y,z");
  }
  const QubitW2Tuple t{opt.tuple[0], opt.tuple[1], opt.tuple[2]};
  const RegionClass region = qubit_w2_classify(t, opt.tol);
  const double lhs = (2 * t.overlap - 1) * (2 * t.overlap - 1);
  const double rhs = (2 * t.purity_rho - 1) * (2 * t.purity_sigma - 1);
  std::cout << "command: " << command << "\n";
  std::cout << "tol: " << format_real(opt.tol) << "\n";
  std::cout << "lhs (2z-1)^2: " << format_real(lhs) << "\n";
  std::cout << "rhs (2x-1)(2y-1): " << format_real(rhs) << "\n";
  const char* name = region == RegionClass::OutsideB    ? "outside-B"
                     : region == RegionClass::BoundaryC ? "boundary-C"
                                                        : "interior-I";
  std::cout << "region: " << name << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// counterexample

struct CounterexampleOpts {
  std::string which;
  int n = 2;
  double epsilon = 0.0;  // 0 = default epsilon_max/2
  std::string r_vectors;
  int pad_to = 0;
  std::string out_dir = ".";
};

std::vector<RVector> parse_r_vectors(const std::string& text) {
  std::vector<RVector> rs;
  std::stringstream ss(text);
  std::string pair;
  while (std::getline(ss, pair, ';')) {
    const auto comma = pair.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("--r-vectors expects \"a1,b1;a2,b2;...\"");
    }
    rs.push_back(RVector{std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1))});
  }
  if (rs.empty()) {
    throw std::invalid_argument("--r-vectors expects \"a1,b1;a2,b2;...\"");
  }
  return rs;
}

StateFamily pad_family(const StateFamily& fam, int target_dim) {
  std::vector<DensityMatrix> padded;
  padded.reserve(fam.size());
  for (const DensityMatrix& rho : fam) {
    padded.push_back(pad_embed(rho, target_dim));
  }
  return StateFamily(std::move(padded));
}

int run_counterexample(const CounterexampleOpts& opt, const std::string& command) {
  Timer timer;
  const bool is_appendix = opt.which == "appendix-qutrit" || opt.which == "appendix-d4";
  if (!is_appendix && (opt.n != 2 || opt.epsilon > 0.0 || !opt.r_vectors.empty())) {
    std::cerr << "warning: --n/--epsilon/--r-vectors only shape the appendix constructions\n";
  }

  FamilyPair fams = [&] {
    if (opt.which == "prop-qutrit-w2") return prop_qutrit_w2();
    if (opt.which == "prop-d4-w3") return prop_d4_w3();
    const FamilyKind kind =
        opt.which == "appendix-qutrit" ? FamilyKind::QutritW2 : FamilyKind::D4Order3;
    GeneratorSpec spec;
    spec.kind = kind;
    spec.r_vectors = opt.r_vectors.empty() ? default_r_vectors(opt.n)
                                           : parse_r_vectors(opt.r_vectors);
    spec.epsilon = opt.epsilon > 0.0 ? opt.epsilon : epsilon_max(spec) / 2.0;
    if (spec.epsilon > epsilon_max(spec)) {
      throw std::invalid_argument("epsilon " + format_real(spec.epsilon) +
                                  " exceeds epsilon_max = " + format_real(epsilon_max(spec)));
    }
    if (r_vectors_collinear(spec.r_vectors)) {
      std::cerr << "warning: r-vectors are collinear; the \"coherent\" family will commute too\n";
    }
    return kind == FamilyKind::QutritW2 ? appendix_qutrit_family(spec)
                                        : appendix_d4_family(spec);
  }();

  if (opt.pad_to > 0) {
    fams.incoherent = pad_family(fams.incoherent, opt.pad_to);
    fams.coherent = pad_family(fams.coherent, opt.pad_to);
  }

  const std::filesystem::path dir(opt.out_dir);
  std::filesystem::create_directories(dir);
  const std::filesystem::path inco_path = dir / (opt.which + "-incoherent.json");
  const std::filesystem::path co_path = dir / (opt.which + "-coherent.json");
  save_family(fams.incoherent, inco_path);
  save_family(fams.coherent, co_path);

  // Verification report: the designated scenario cannot separate the files,
  // while the fourth-order certificate does.
  const int n = static_cast<int>(fams.incoherent.size());
  const Scenario sc = opt.which == "prop-qutrit-w2"  ? scenario_w2()
                      : opt.which == "prop-d4-w3"    ? scenario_w3()
                      : opt.which == "appendix-qutrit" ? scenario_w2n(n)
                                                       : scenario_wle3n(n);
  const InvariantTuple a = evaluate(sc, fams.incoherent);
  const InvariantTuple b = evaluate(sc, fams.coherent);
  double max_diff = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    max_diff = std::max(max_diff, std::abs(a.entries()[k].second - b.entries()[k].second));
  }
  const CoherenceVerdict v1 = decide_set_coherence(fams.incoherent);
  const CoherenceVerdict v2 = decide_set_coherence(fams.coherent);

  std::cout << "command: " << command << "\n";
  std::cout << "wrote: " << inco_path.string() << "\n";
  std::cout << "wrote: " << co_path.string() << "\n";
  std::cout << "scenario: " << (opt.which == "prop-qutrit-w2"  ? "w2"
                                : opt.which == "prop-d4-w3"    ? "w3"
                                : opt.which == "appendix-qutrit" ? "w2n"
                                                                 : "wle3n")
            << " (" << sc.size() << " words)\n";
  std::cout << "max_scenario_difference: " << format_real(max_diff) << "\n";
  std::cout << "threshold: " << format_real(v1.threshold) << "\n";
  std::cout << "first_family_verdict: " << (v1.incoherent ? "incoherent" : "coherent") << "\n";
  std::cout << "second_family_verdict: " << (v2.incoherent ? "incoherent" : "coherent") << "\n";
  std::cout << "second_family_total_gap: " << format_real(v2.total_gap) << "\n";
  std::cout << "elapsed_ms: " << timer.ms() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sample

struct SampleOpts {
  int dim = 2;
  int n = 2;
  int count = 100;
  std::uint64_t seed = 1;
  bool commuting = false;
  std::string csv_path;
};

int run_sample(const SampleOpts& opt) {
  if (opt.dim < 2) throw std::invalid_argument("--dim must be >= 2");
  if (opt.n < 2) throw std::invalid_argument("--n must be >= 2");
  if (opt.count < 1) throw std::invalid_argument("--count must be >= 1");

  std::ostringstream csv;
  csv << "sample,i,j,purity_i,purity_j,overlap,gamma,commuting\n";

  std::mt19937_64 master(opt.seed);
  for (int s = 0; s < opt.count; ++s) {
    StateFamily fam = [&] {
      if (opt.commuting) {
        return random_commuting_family(opt.dim, opt.n, master());
      }
      std::vector<DensityMatrix> states;
      states.reserve(static_cast<std::size_t>(opt.n));
      for (int k = 0; k < opt.n; ++k) {
        states.push_back(random_density(opt.dim, master()));
      }
      return StateFamily(std::move(states));
    }();

    for (std::size_t i = 0; i < fam.size(); ++i) {
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        const double purity_i = fam[i].purity();
        const double purity_j = fam[j].purity();
        const double overlap = (fam[i].matrix() * fam[j].matrix()).trace().real();
        const double gap = gamma(fam[i], fam[j]);
        const bool commuting =
            hs_norm(commutator(fam[i].matrix(), fam[j].matrix())) <= kDefaultCommutatorTol;
        csv << s << "," << i + 1 << "," << j + 1 << "," << format_real(purity_i) << ","
            << format_real(purity_j) << "," << format_real(overlap) << "," << format_real(gap)
            << "," << (commuting ? 1 : 0) << "\n";
      }
    }
  }

  if (opt.csv_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(opt.csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + opt.csv_path);
    out << csv.str();
    std::cout << "wrote: " << opt.csv_path << "\n";
    std::cout << "commuting_column_tol: " << format_real(kDefaultCommutatorTol) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"set-coherence certification from low-order Bargmann trace invariants"};
  app.require_subcommand(1);
  const std::string command = join_args(argc, argv);

  CertifyOpts certify_opts;
  auto* certify = app.add_subcommand(
      "certify", "Decide set coherence of a JSON family via the pairwise fourth-order gap");
  certify->add_option("input", certify_opts.input, "family JSON file")->required();
  certify->add_option("--threshold", certify_opts.threshold,
                      "gap cutoff below which a pair counts as commuting");
  certify->add_option("--method", certify_opts.method, "gap, oracle, or both")
      ->check(CLI::IsMember({"gap", "oracle", "both"}));
  certify->add_flag("--json", certify_opts.as_json, "machine-readable JSON report");
  certify->add_flag("--csv", certify_opts.as_csv, "pairwise gap table as CSV");
  certify->add_flag("--fail-on-coherent", certify_opts.fail_on_coherent,
                    "exit 3 when the family is set coherent");

  InvariantsOpts inv_opts;
  auto* invariants = app.add_subcommand("invariants", "Evaluate a Bargmann scenario on a family");
  invariants->add_option("input", inv_opts.input, "family JSON file")->required();
  auto* sc_opt = invariants->add_option("--scenario", inv_opts.scenario,
                                        "w2, w3, w4, w2n, wle3n, or w4n")
                     ->check(CLI::IsMember({"w2", "w3", "w4", "w2n", "wle3n", "w4n"}));
  auto* words_opt = invariants->add_option(
      "--words", inv_opts.words, "explicit words, e.g. 1122 1212 or 1,2,1,2");
  invariants->add_flag("--json", inv_opts.as_json, "machine-readable JSON report");
  invariants->add_flag("--csv", inv_opts.as_csv, "word table as CSV");
  sc_opt->excludes(words_opt);

  QutritTestOpts qutrit_opts;
  auto* qutrit = app.add_subcommand(
      "qutrit-test", "Third-order compatibility test for qutrit pairs (spectra + matching)");
  auto* qutrit_in = qutrit->add_option("input", qutrit_opts.input, "two-qutrit family JSON file");
  auto* qutrit_tuple =
      qutrit->add_option("--tuple", qutrit_opts.tuple, "seven values x,y,z,a,b,c,d")
          ->delimiter(',');
  qutrit->add_option("--tol", qutrit_opts.tol, "mixed-moment match tolerance");
  qutrit_in->excludes(qutrit_tuple);

  QubitTestOpts qubit_opts;
  auto* qubit = app.add_subcommand("qubit-test",
                                   "Second-order region classification for qubit pairs");
  qubit->add_option("--tuple", qubit_opts.tuple, "three values x,y,z")
      ->required()
      ->delimiter(',');
  qubit->add_option("--tol", qubit_opts.tol, "region tolerance");

  CounterexampleOpts cx_opts;
  auto* cx = app.add_subcommand(
      "counterexample", "Emit a scenario-indistinguishable incoherent/coherent family pair");
  cx->add_option("--which", cx_opts.which, "which construction")
      ->required()
      ->check(CLI::IsMember({"prop-qutrit-w2", "prop-d4-w3", "appendix-qutrit", "appendix-d4"}));
  cx->add_option("--n", cx_opts.n, "family size (appendix constructions)")->check(CLI::Range(2, 64));
  cx->add_option("--epsilon", cx_opts.epsilon, "perturbation scale (default epsilon_max/2)");
  cx->add_option("--r-vectors", cx_opts.r_vectors, "direction vectors \"a1,b1;a2,b2;...\"");
  cx->add_option("--pad-to", cx_opts.pad_to, "zero-block embed into this dimension");
  cx->add_option("-o,--out-dir", cx_opts.out_dir, "output directory");

  SampleOpts sample_opts;
  auto* sample = app.add_subcommand("sample",
                                    "Sample random families, emit per-pair tuples and gaps as CSV");
  sample->add_option("--dim", sample_opts.dim, "state dimension (>= 2)");
  sample->add_option("--n", sample_opts.n, "states per family");
  sample->add_option("--count", sample_opts.count, "number of families");
  sample->add_option("--seed", sample_opts.seed, "master seed");
  sample->add_flag("--commuting", sample_opts.commuting, "sample set-incoherent families");
  sample->add_option("--csv", sample_opts.csv_path, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*certify) return run_certify(certify_opts, command);
    if (*invariants) return run_invariants(inv_opts, command);
    if (*qutrit) {
      if (qutrit_opts.input.empty() && qutrit_opts.tuple.empty()) {
        throw std::invalid_argument("qutrit-test needs an input file or --tuple");
      }
      return run_qutrit_test(qutrit_opts, command);
    }
    if (*qubit) return run_qubit_test(qubit_opts, command);
    if (*cx) return run_counterexample(cx_opts, command);
    if (*sample) return run_sample(sample_opts);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const StateError& e) {
    std::cerr << "error: invalid state: " << e.what() << "\n";
    return kExitInvalidState;
  } catch (const InvalidMomentsError& e) {
    std::cerr << "error: invalid moments: " << e.what() << "\n";
    return kExitInvalidState;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
