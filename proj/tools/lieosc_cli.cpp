// lieosc command-line front end. Links only the C interface.
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lieosc/lieosc.h"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError {
  std::string message;
};

struct RunConfig {
  std::string command;
  std::string family;
  int rank = 0;
  std::optional<int> cutoff;
  std::optional<std::string> u, v, eta;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string output;
  std::string tensor;
  int sites = 2;
};

// Library errors that describe a bad request map to the usage code; anything
// else means the run itself went wrong.
int exit_code_for(lieosc_status s) {
  switch (s) {
    case LIEOSC_OK: return kPass;
    case LIEOSC_CONSISTENCY:
    case LIEOSC_INTERNAL: return kFail;
    default: return kUsage;
  }
}

struct LibraryError {
  lieosc_status status;
  std::string message;
};

void check(lieosc_status s) {
  if (s != LIEOSC_OK) throw LibraryError{s, lieosc_last_error()};
}

std::string take(char* text) {
  std::string out(text);
  lieosc_string_free(text);
  return out;
}

lieosc_format format_of(const RunConfig& cfg) { return cfg.format == "csv" ? LIEOSC_CSV : LIEOSC_JSON; }

std::string default_name(const RunConfig& cfg) {
  std::string name = cfg.command + "-" + cfg.family + std::to_string(cfg.rank);
  if (!cfg.tensor.empty()) name += "-" + cfg.tensor;
  return name + (cfg.format == "csv" ? ".csv" : ".json");
}

void emit(const RunConfig& cfg, const std::string& text) {
  std::string path = cfg.output;
  if (path.empty()) {
    if (const char* dir = std::getenv("LIEOSC_OUTPUT_DIR"); dir && *dir)
      path = (std::filesystem::path(dir) / default_name(cfg)).string();
  }
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LibraryError{LIEOSC_IO, "cannot open '" + path + "' for writing"};
  out << text;
  if (!out) throw LibraryError{LIEOSC_IO, "write to '" + path + "' failed"};
}

struct Algebra {
  lieosc_algebra* h = nullptr;
  explicit Algebra(const RunConfig& cfg) { check(lieosc_algebra_create(cfg.family[0], cfg.rank, &h)); }
  ~Algebra() { lieosc_algebra_free(h); }
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;
};

struct Oscillator {
  lieosc_oscillator* h = nullptr;
  Oscillator(const Algebra& alg, const RunConfig& cfg) {
    check(lieosc_oscillator_create(alg.h, cfg.cutoff.value_or(0), &h));
  }
  ~Oscillator() { lieosc_oscillator_free(h); }
  Oscillator(const Oscillator&) = delete;
  Oscillator& operator=(const Oscillator&) = delete;
};

bool bosonic(const std::string& family) { return family == "c" || family == "a"; }

bool uses_oscillator(const std::string& command) {
  return command == "osc-rep" || command == "check-quadratic" || command == "check-casimir" ||
         command == "check-rtt" || command == "monodromy" || command == "verify-all" || command == "spectrum";
}

void validate(RunConfig& cfg) {
  for (auto& ch : cfg.family) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (cfg.family.size() != 1 || cfg.family.find_first_of("abcd") != 0)
    throw UsageError{"--family must be one of a, b, c, d"};
  const bool needs = uses_oscillator(cfg.command) && bosonic(cfg.family);
  if (needs && !cfg.cutoff) throw UsageError{"--cutoff is required for the bosonic representation of family " + cfg.family};
  if (!needs && cfg.cutoff) throw UsageError{"--cutoff only applies to a bosonic representation (families a, c)"};
  if (cfg.samples && *cfg.samples < 0) throw UsageError{"--samples must be nonnegative"};
  const bool sampled = cfg.samples && *cfg.samples > 0;
  if (sampled && !cfg.seed) throw UsageError{"--seed is required when --samples is positive"};
  if (!sampled && cfg.seed) throw UsageError{"--seed only applies with a positive --samples"};
  if (cfg.format != "json" && cfg.format != "csv") throw UsageError{"--format must be json or csv"};

  const bool point = cfg.u || cfg.v || cfg.eta;
  if (point && !(cfg.u && cfg.v && cfg.eta)) throw UsageError{"--u, --v and --eta go together"};
  if (cfg.command == "check-rtt" || cfg.command == "monodromy") {
    if (!point) throw UsageError{"--u, --v and --eta are required"};
    if (cfg.samples) throw UsageError{"--samples does not apply to " + cfg.command};
  } else if (cfg.command == "check-ybe") {
    if (point == sampled) throw UsageError{"check-ybe takes either --u/--v/--eta or --samples with --seed"};
  } else if (point) {
    throw UsageError{"--u, --v and --eta do not apply to " + cfg.command};
  } else if (cfg.samples && cfg.command != "verify-all") {
    throw UsageError{"--samples does not apply to " + cfg.command};
  }
  if (cfg.command == "gen-tensors" && cfg.tensor.empty()) throw UsageError{"--tensor is required"};
  if (cfg.command != "gen-tensors" && !cfg.tensor.empty()) throw UsageError{"--tensor only applies to gen-tensors"};
  if (cfg.command == "monodromy" && (cfg.sites < 1 || cfg.sites > 3)) throw UsageError{"--sites must be 1, 2 or 3"};
}

int finish(const RunConfig& cfg, lieosc_report* report) {
  const bool passed = lieosc_report_passed(report) != 0;
  char* text = nullptr;
  lieosc_status s = lieosc_report_export(report, format_of(cfg), &text);
  const size_t count = lieosc_report_count(report);
  lieosc_report_free(report);
  check(s);
  emit(cfg, take(text));
  std::cerr << cfg.command << ": " << count << " checks, " << (passed ? "pass" : "FAIL") << "\n";
  return passed ? kPass : kFail;
}

int run(const RunConfig& cfg) {
  Algebra alg(cfg);
  const lieosc_format fmt = format_of(cfg);
  char* text = nullptr;
  lieosc_report* report = nullptr;

  if (cfg.command == "gen-rep") {
    check(lieosc_algebra_export(alg.h, fmt, &text));
    emit(cfg, take(text));
    return kPass;
  }
  if (cfg.command == "gen-tensors") {
    check(lieosc_tensor_export(alg.h, cfg.tensor.c_str(), fmt, &text));
    emit(cfg, take(text));
    return kPass;
  }
  if (cfg.command == "check-ybe") {
    if (cfg.u)
      check(lieosc_check_ybe_at(alg.h, cfg.u->c_str(), cfg.v->c_str(), cfg.eta->c_str(), &report));
    else
      check(lieosc_check_ybe(alg.h, *cfg.samples, *cfg.seed, &report));
    return finish(cfg, report);
  }
  if (cfg.command == "verify-all") {
    // Without --samples the suite runs its default seeded sample set.
    const int samples = cfg.samples.value_or(5);
    const std::uint64_t seed = cfg.seed.value_or(42);
    check(lieosc_verify_all(cfg.family[0], cfg.rank, cfg.cutoff.value_or(0), samples, seed, &report));
    return finish(cfg, report);
  }

  Oscillator osc(alg, cfg);
  if (cfg.command == "osc-rep") {
    check(lieosc_oscillator_export(osc.h, fmt, &text));
    emit(cfg, take(text));
    return kPass;
  }
  if (cfg.command == "check-quadratic") {
    check(lieosc_check_quadratic(osc.h, &report));
  } else if (cfg.command == "check-casimir") {
    check(lieosc_check_casimir(osc.h, &report));
  } else if (cfg.command == "spectrum") {
    check(lieosc_spectrum(osc.h, &report));
  } else {
    const int sites = cfg.command == "monodromy" ? cfg.sites : 1;
    check(lieosc_check_rtt(osc.h, cfg.u->c_str(), cfg.v->c_str(), cfg.eta->c_str(), sites, &report));
  }
  return finish(cfg, report);
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--family", cfg.family, "a, b, c or d")->required();
  sub->add_option("--rank", cfg.rank, "rank of the algebra")->required();
  sub->add_option("--format", cfg.format, "json or csv");
  sub->add_option("--output", cfg.output, "output file (default: $LIEOSC_OUTPUT_DIR or stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of oscillator representations, L-operators and rational R-matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lieosc_version()));
  RunConfig cfg;
  int cutoff = 0;
  std::string u, v, eta;
  int samples = 0;
  std::uint64_t seed = 0;

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"gen-rep", "defining representation matrices"},
      {"gen-tensors", "invariant tensors c, d, h, dyyy or v"},
      {"osc-rep", "oscillator representation on its Fock basis"},
      {"check-quadratic", "quadratic relation of L and its eigen structure"},
      {"check-casimir", "Casimir values and operator product laws"},
      {"check-ybe", "Yang-Baxter equation at a point or seeded samples"},
      {"check-rtt", "RTT relation for one site"},
      {"monodromy", "RTT relation for a chain of sites"},
      {"verify-all", "every check for one algebra"},
      {"spectrum", "eigenvalues and multiplicities of L per invariant block"},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, cfg);
    sub->add_option("--cutoff", cutoff, "bound on the total occupation (bosonic families)");
    sub->add_option("--u", u, "spectral parameter u (rational)");
    sub->add_option("--v", v, "spectral parameter v (rational)");
    sub->add_option("--eta", eta, "spectral scale eta (rational)");
    sub->add_option("--samples", samples, "number of seeded parameter samples");
    sub->add_option("--seed", seed, "seed for the samples");
    sub->add_option("--tensor", cfg.tensor, "c, d, h, dyyy or v");
    sub->add_option("--sites", cfg.sites, "chain length for monodromy (1-3)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  if (sub->count("--cutoff")) cfg.cutoff = cutoff;
  if (sub->count("--u")) cfg.u = u;
  if (sub->count("--v")) cfg.v = v;
  if (sub->count("--eta")) cfg.eta = eta;
  if (sub->count("--samples")) cfg.samples = samples;
  if (sub->count("--seed")) cfg.seed = seed;
  if (sub->count("--sites") && cfg.command != "monodromy") {
    std::cerr << "error: --sites only applies to monodromy\n";
    return kUsage;
  }

  try {
    validate(cfg);
    return run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kUsage;
  } catch (const LibraryError& e) {
    std::cerr << "error (" << lieosc_status_name(e.status) << "): " << e.message << "\n";
    return exit_code_for(e.status);
  }
}
