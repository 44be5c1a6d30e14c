#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "calc/harness.hpp"
#include "calc/printer.hpp"
#include "calc/smtlib.hpp"

namespace fs = std::filesystem;
using namespace calc;

namespace {

enum Exit { kSat = 0, kUnsat = 1, kError = 2, kAlarm = 3 };

// Thrown for input problems already reported on stderr.
struct InputError {};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << path << ": error: cannot read file\n";
    throw InputError{};
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

smtlib::SourceScript load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return smtlib::parse(text);
  } catch (const smtlib::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    throw InputError{};
  }
}

Formula to_formula(const std::string& path, const smtlib::SourceScript& script) {
  try {
    auto f = smtlib::desugar(script);
    f.validate();
    return f;
  } catch (const smtlib::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << path << ": error: " << e.what() << "\n";
  }
  throw InputError{};
}

Variant variant_or_throw(const std::string& name) {
  auto v = parse_variant(name);
  if (!v) throw CLI::ValidationError("--variant", "unknown variant '" + name + "'");
  return *v;
}

void write_stats(const StatsReport& r, const std::string& target, const std::string& format) {
  std::string text;
  if (format == "csv") {
    text = StatsReport::csv_header() + "\n" + r.csv_row() + "\n";
  } else {
    text = r.to_json().dump(2) + "\n";
  }
  if (target == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(target);
  if (!out) {
    std::cerr << target << ": error: cannot write stats\n";
    throw InputError{};
  }
  out << text;
}

int run_solve(const std::string& path, const std::string& variant_name, const std::string& stats,
              const std::string& format) {
  const Variant variant = variant_or_throw(variant_name);
  const auto script = load(path);
  const auto f = to_formula(path, script);
  SolveResult result;
  StatsReport report;
  try {
    const auto start = std::chrono::steady_clock::now();
    result = solve(f, variant);
    report.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  } catch (const std::logic_error& e) {
    std::cerr << path << ": internal error: " << e.what() << "\n";
    return kAlarm;
  }
  report.instance = fs::path(path).filename().string();
  report.variant = to_string(variant);
  report.verdict = result.sat ? "sat" : "unsat";
  report.stats = result.stats;

  std::cout << report.verdict << "\n";
  if (result.sat && script.wants_model()) std::cout << smtlib::print_model(f, result.model);
  if (!stats.empty()) write_stats(report, stats, format);
  return result.sat ? kSat : kUnsat;
}

std::vector<std::string> collect_inputs(const std::vector<std::string>& paths) {
  std::vector<std::string> files;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<std::string> found;
      for (const auto& e : fs::recursive_directory_iterator(p))
        if (e.is_regular_file() && e.path().extension() == ".smt2") found.push_back(e.path().string());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }
  return files;
}

std::vector<Variant> parse_variants(const std::vector<std::string>& names) {
  std::vector<Variant> vs;
  for (const auto& n : names) vs.push_back(variant_or_throw(n));
  if (vs.empty()) throw CLI::ValidationError("--variants", "no variants given");
  return vs;
}

int run_compare_cmd(const std::vector<std::string>& paths, const std::vector<std::string>& variant_names,
                    unsigned jobs, std::uint64_t seed) {
  const auto variants = parse_variants(variant_names);
  std::vector<Instance> instances;
  bool input_error = false;
  for (const auto& file : collect_inputs(paths)) {
    try {
      instances.push_back(Instance{file, to_formula(file, load(file))});
    } catch (const InputError&) {
      input_error = true;
    }
  }
  // The seed only permutes the order the instances are solved in.
  std::vector<std::size_t> order(instances.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (seed) std::shuffle(order.begin(), order.end(), std::mt19937_64(seed));
  std::vector<Instance> shuffled;
  for (auto i : order) shuffled.push_back(instances[i]);

  auto outcome = run_compare(shuffled, variants, jobs);
  std::vector<std::size_t> position(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;

  std::cout << StatsReport::csv_header() << ",agreement\n";
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const bool agree = std::find(outcome.disagreements.begin(), outcome.disagreements.end(),
                                 instances[i].name) == outcome.disagreements.end();
    for (std::size_t v = 0; v < variants.size(); ++v)
      std::cout << outcome.rows[position[i] * variants.size() + v].csv_row() << ","
                << (agree ? "agree" : "DISAGREE") << "\n";
  }
  for (const auto& name : outcome.disagreements) std::cerr << name << ": error: variants disagree\n";
  if (!outcome.disagreements.empty()) return kAlarm;
  return input_error ? kError : kSat;
}

int run_verify_cmd(const std::string& path, const std::string& variant_name) {
  const Variant variant = variant_or_throw(variant_name);
  const auto f = to_formula(path, load(path));
  VerifyReport report;
  try {
    report = run_verify(f, variant);
  } catch (const std::logic_error& e) {
    std::cerr << path << ": internal error: " << e.what() << "\n";
    return kAlarm;
  }
  std::cout << (report.unsat ? "unsat" : "sat") << "\n"
            << "cells checked: " << report.cells_checked << "\n"
            << "pins checked: " << report.pins_checked << "\n"
            << "violations: " << report.violations.size() << "\n";
  for (const auto& v : report.violations)
    std::cerr << path << ": violation: cell " << v.cell_id << " at level " << v.level << " is satisfiable at "
              << v.pin << "\n";
  if (!report.violations.empty()) return kAlarm;
  return report.unsat ? kUnsat : kSat;
}

int run_fuzz(std::size_t count, std::uint64_t seed, std::size_t vars, unsigned degree, std::size_t constraints,
             const std::string& emit, bool verify) {
  std::mt19937_64 rng(seed);
  FuzzOptions options;
  options.vars = vars;
  options.degree = degree;
  options.max_constraints = constraints;
  if (!emit.empty()) fs::create_directories(emit);

  const std::vector<Variant> variants{Variant::Base, Variant::Closed, Variant::ClosedHeuristic};
  std::size_t sat = 0, unsat = 0, problems = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < count; ++k) {
    const auto f = random_formula(rng, options);
    const std::string name = "fuzz-" + std::to_string(seed) + "-" + std::to_string(k);
    if (!emit.empty()) std::ofstream(fs::path(emit) / (name + ".smt2")) << smtlib::print_script(f);
    std::optional<bool> verdict;
    for (auto v : variants) {
      try {
        const auto r = solve(f, v);
        if (verdict && *verdict != r.sat) {
          std::cerr << name << ": error: variants disagree on " << f.to_string() << "\n";
          ++problems;
        }
        verdict = r.sat;
        if (!verify) continue;
        const auto report = verify_result(f, r);
        for (const auto& viol : report.violations) {
          std::cerr << name << ": violation (" << to_string(v) << "): cell " << viol.cell_id << " satisfiable at "
                    << viol.pin << " for " << f.to_string() << "\n";
          ++problems;
        }
      } catch (const std::exception& e) {
        std::cerr << name << ": error (" << to_string(v) << "): " << e.what() << " for " << f.to_string() << "\n";
        ++problems;
      }
    }
    if (verdict) ++(*verdict ? sat : unsat);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "instances " << count << " sat " << sat << " unsat " << unsat << " problems " << problems
            << " time " << seconds << "s\n";
  return problems ? kAlarm : kSat;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact satisfiability checking for conjunctions of polynomial constraints over the reals"};
  app.require_subcommand(1);

  std::string file, variant = "closed", stats, format = "json";
  auto* solve_cmd = app.add_subcommand("solve", "Decide an SMT-LIB file");
  solve_cmd->add_option("file", file, "Input file")->required();
  solve_cmd->add_option("--variant", variant, "base, closed or closed-heuristic")->capture_default_str();
  solve_cmd->add_option("--stats", stats, "Write statistics to a file, or - for stdout");
  solve_cmd->add_option("--format", format, "Statistics format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::vector<std::string> paths;
  std::vector<std::string> variant_names{"base", "closed", "closed-heuristic"};
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  auto* compare_cmd = app.add_subcommand("compare", "Solve files under several variants, CSV on stdout");
  compare_cmd->add_option("paths", paths, "Files or directories of .smt2 files")->required();
  compare_cmd->add_option("--variants", variant_names, "Variants to run")->delimiter(',')->capture_default_str();
  compare_cmd->add_option("--jobs", jobs, "Parallel solves")->check(CLI::PositiveNumber);
  compare_cmd->add_option("--seed", seed, "Shuffle the solving order (0 keeps input order)");

  auto* verify_cmd = app.add_subcommand("verify", "Re-check every unsat cell by pinning");
  verify_cmd->add_option("file", file, "Input file")->required();
  verify_cmd->add_option("--variant", variant, "base, closed or closed-heuristic")->capture_default_str();

  std::size_t count = 100, vars = 0, constraints = 3;
  unsigned degree = 3;
  std::uint64_t fuzz_seed = 1;
  std::string emit;
  bool no_verify = false;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Differential testing on random conjunctions");
  fuzz_cmd->add_option("--count", count, "Number of instances")->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz_seed, "Random seed")->capture_default_str();
  fuzz_cmd->add_option("--vars", vars, "Variables per instance (0: 2 or 3)")->capture_default_str();
  fuzz_cmd->add_option("--degree", degree, "Maximal total degree")->capture_default_str();
  fuzz_cmd->add_option("--constraints", constraints, "Maximal number of constraints")->capture_default_str();
  fuzz_cmd->add_option("--emit", emit, "Also write the instances to this directory");
  fuzz_cmd->add_flag("--no-verify", no_verify, "Skip pin verification");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*solve_cmd) return run_solve(file, variant, stats, format);
    if (*compare_cmd) return run_compare_cmd(paths, variant_names, jobs, seed);
    if (*verify_cmd) return run_verify_cmd(file, variant);
    if (*fuzz_cmd) return run_fuzz(count, fuzz_seed, vars, degree, constraints, emit, !no_verify);
  } catch (const InputError&) {
    return kError;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
