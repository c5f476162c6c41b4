#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rps/combinatorics.hpp"
#include "rps/entropy.hpp"
#include "rps/error.hpp"
#include "rps/json_io.hpp"
#include "rps/maxent_verifier.hpp"
#include "rps/pes.hpp"
#include "rps/rps_core.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitVerification = 4;

struct CliConfig {
  double base = 2.0;
  int precision = 4;
  std::string format = "table";  // table | json | csv
  std::size_t cap = 8;
};

std::string fixed(double v, int precision) {
  if (v == 0.0) v = 0.0;  // never print "-0.0000"
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

void require_positive_n(unsigned n) {
  if (n == 0) throw std::domain_error("n must be >= 1");
}

void require_valid_config(const CliConfig& cfg) {
  if (!(cfg.base > 1.0) || !std::isfinite(cfg.base)) {
    throw std::domain_error("--base must be a finite number > 1");
  }
  if (cfg.cap == 0) throw std::domain_error("--cap must be >= 1");
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rps::ValidationError("cannot open input file: " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

nlohmann::json parse_document(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw rps::ValidationError(std::string("input is not valid JSON: ") + e.what());
  }
}

void require_valid(const rps::ValidationReport& report) {
  if (!report.ok()) {
    throw rps::ValidationError("document failed validation", report.violations);
  }
}

void print_json(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const std::vector<std::string>& labels, bool include_empty,
                  const CliConfig& cfg) {
  rps::FrameOfDiscernment frame(labels);
  if (frame.size() > cfg.cap) {
    throw rps::CapacityError(
        "a frame of " + std::to_string(frame.size()) + " elements enumerates " +
        rps::pes_size(static_cast<unsigned>(frame.size()), include_empty).str() +
        " events, over the cap of " + std::to_string(cfg.cap) +
        " (pass --cap to override)");
  }
  if (cfg.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& event : rps::enumerate_events(frame, include_empty)) {
      out.push_back(rps::event_labels(event, frame));
    }
    print_json(out);
  } else {
    for (const auto& event : rps::enumerate_events(frame, include_empty)) {
      std::cout << rps::event_to_string(event, frame) << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------------ entropy

int render_entropy(const rps::EntropyReport& report,
                   const rps::FrameOfDiscernment& frame, const std::string& kind,
                   const CliConfig& cfg) {
  if (cfg.format == "json") {
    print_json(rps::entropy_report_to_json(report, frame));
    return 0;
  }
  std::cout << fixed(report.value, cfg.precision) << "\n";
  if (report.terms) {
    for (const auto& term : *report.terms) {
      const std::string rendered =
          kind == "deng" ? rps::subset_to_string(term.event.indices(), frame)
                         : rps::event_to_string(term.event, frame);
      std::cout << rendered << "\t" << fixed(term.contribution, cfg.precision) << "\n";
    }
  }
  return 0;
}

int cmd_entropy(const std::string& input, const std::string& kind, bool with_terms,
                bool renormalize, const CliConfig& cfg) {
  const nlohmann::json doc = parse_document(input);
  if (kind == "deng") {
    rps::MassFunction m = rps::mass_function_from_json(doc);
    if (renormalize) m = m.renormalized();
    require_valid(rps::validate(m));
    return render_entropy(rps::deng_entropy(m, cfg.base, with_terms), m.frame(), kind,
                          cfg);
  }
  rps::PermutationMassFunction pmf = rps::pmf_from_json(doc);
  if (renormalize) pmf = pmf.renormalized();
  require_valid(rps::validate(pmf));
  if (kind == "shannon") {
    const rps::ProbabilityDistribution p = rps::restrict_to_singletons(pmf);
    return render_entropy(rps::shannon_entropy(p, cfg.base, with_terms), pmf.frame(),
                          kind, cfg);
  }
  return render_entropy(rps::rps_entropy(pmf, cfg.base, with_terms), pmf.frame(), kind,
                        cfg);
}

// ------------------------------------------------------------------- maxent

int cmd_maxent(unsigned n, const std::string& kind, bool emit_distribution,
               const CliConfig& cfg) {
  require_positive_n(n);
  double value = 0.0;
  if (kind == "rps") value = rps::max_rps_entropy(n, cfg.base);
  if (kind == "deng") value = rps::max_deng_entropy(n, cfg.base);
  if (kind == "shannon") value = rps::max_shannon_entropy(n, cfg.base);

  if (!emit_distribution) {
    if (cfg.format == "json") {
      print_json({{"kind", kind}, {"n", n}, {"value", value}});
    } else {
      std::cout << fixed(value, cfg.precision) << "\n";
    }
    return 0;
  }

  const rps::FrameOfDiscernment frame = rps::FrameOfDiscernment::of_size(n);
  nlohmann::json distribution;
  if (kind == "rps") {
    distribution = rps::to_json(rps::max_rps_pmf(frame, cfg.cap));
  } else if (kind == "deng") {
    distribution = rps::to_json(rps::max_deng_mass_function(frame));
  } else {
    distribution = rps::to_json(rps::uniform_singleton_distribution(frame));
  }

  if (cfg.format == "json") {
    print_json({{"kind", kind}, {"n", n}, {"value", value},
                {"distribution", distribution}});
  } else {
    // Keep stdout a clean, reloadable document; the scalar goes to stderr.
    std::cerr << fixed(value, cfg.precision) << "\n";
    print_json(distribution);
  }
  return 0;
}

// -------------------------------------------------------------------- table

int cmd_table(unsigned n_max, const CliConfig& cfg) {
  require_positive_n(n_max);
  struct Row {
    unsigned n;
    double se, de, rps;
  };
  std::vector<Row> rows;
  for (unsigned n = 1; n <= n_max; ++n) {
    rows.push_back({n, rps::max_shannon_entropy(n, cfg.base),
                    rps::max_deng_entropy(n, cfg.base),
                    rps::max_rps_entropy(n, cfg.base)});
  }

  if (cfg.format == "csv") {
    std::cout << "N,H_max_SE,H_max_DE,H_max_RPS\n";
    for (const Row& row : rows) {
      std::cout << row.n << "," << fixed(row.se, cfg.precision) << ","
                << fixed(row.de, cfg.precision) << ","
                << fixed(row.rps, cfg.precision) << "\n";
    }
  } else if (cfg.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const Row& row : rows) {
      out.push_back({{"n", row.n},
                     {"h_max_se", row.se},
                     {"h_max_de", row.de},
                     {"h_max_rps", row.rps}});
    }
    print_json(out);
  } else {
    const int width = cfg.precision + 9;
    std::printf("%4s %*s %*s %*s\n", "N", width, "H_max_SE", width, "H_max_DE", width,
                "H_max_RPS");
    for (const Row& row : rows) {
      std::printf("%4u %*s %*s %*s\n", row.n, width,
                  fixed(row.se, cfg.precision).c_str(), width,
                  fixed(row.de, cfg.precision).c_str(), width,
                  fixed(row.rps, cfg.precision).c_str());
    }
  }
  return 0;
}

// --------------------------------------------------------------- degenerate

int cmd_degenerate(unsigned n, const std::string& mode, const CliConfig& cfg) {
  require_positive_n(n);
  const bool order_ignored = mode == "order-ignored";
  const double degenerate_value = order_ignored
                                      ? rps::max_rps_entropy_order_ignored(n, cfg.base)
                                      : rps::max_rps_entropy_singleton_only(n, cfg.base);
  const double classical_value = order_ignored ? rps::max_deng_entropy(n, cfg.base)
                                               : rps::max_shannon_entropy(n, cfg.base);
  const char* classical_name = order_ignored ? "max Deng entropy" : "max Shannon entropy";
  const bool equal = std::abs(degenerate_value - classical_value) <= 1e-12;

  if (cfg.format == "json") {
    print_json({{"mode", mode},
                {"n", n},
                {"degenerate_max_rps", degenerate_value},
                {"classical_max", classical_value},
                {"equal", equal}});
  } else {
    std::printf("degenerate max RPS entropy (%s): %s\n", mode.c_str(),
                fixed(degenerate_value, cfg.precision).c_str());
    std::printf("%s: %s\n", classical_name, fixed(classical_value, cfg.precision).c_str());
    std::cout << (equal ? "EQUAL" : "DIFFER") << "\n";
  }
  return equal ? 0 : kExitVerification;
}

// ------------------------------------------------------------------- verify

struct VerifyFlags {
  double tolerance = 1e-5;
  std::size_t iterations = 100000;
  double step = 0.1;
  std::uint64_t seed = 0;
  std::string start = "uniform";
  std::size_t samples = 100000;
  bool oracle = false;
};

int cmd_verify(unsigned n, const VerifyFlags& flags, const CliConfig& cfg,
               std::size_t cap) {
  require_positive_n(n);
  rps::OptimizerConfig config;
  config.max_iterations = flags.iterations;
  config.step_size = flags.step;
  config.seed = flags.seed;
  config.start = flags.start == "dirichlet" ? rps::StartPoint::dirichlet
                                            : rps::StartPoint::uniform;
  config.log_base = cfg.base;

  const rps::FrameOfDiscernment frame = rps::FrameOfDiscernment::of_size(n);
  const auto [pmf, result] = rps::maximize_rps_entropy(frame, config, cap);
  (void)pmf;

  const double analytic = rps::max_rps_entropy(n, cfg.base);
  bool ok = result.converged && result.entropy_gap <= flags.tolerance &&
            result.entropy_gap >= -1e-9 && result.pmf_sup_distance <= flags.tolerance;

  double oracle_best = 0.0;
  bool oracle_ok = true;
  if (flags.oracle) {
    oracle_best = rps::random_search_oracle(frame, flags.samples, flags.seed, cap,
                                            cfg.base);
    oracle_ok = oracle_best <= analytic;
    ok = ok && oracle_ok;
  }

  if (cfg.format == "json") {
    nlohmann::json out = rps::verification_result_to_json(result);
    out["analytic_max"] = analytic;
    out["ok"] = ok;
    if (flags.oracle) {
      out["oracle_best"] = oracle_best;
      out["oracle_bound_ok"] = oracle_ok;
    }
    print_json(out);
  } else {
    std::cout << "converged: " << (result.converged ? "true" : "false") << "\n";
    std::cout << "iterations_used: " << result.iterations_used << "\n";
    std::cout << "analytic_max: " << fixed(analytic, cfg.precision) << "\n";
    std::cout << "achieved_entropy: " << fixed(result.achieved_entropy, cfg.precision)
              << "\n";
    std::printf("entropy_gap: %.6e\n", result.entropy_gap);
    std::printf("pmf_sup_distance: %.6e\n", result.pmf_sup_distance);
    std::printf("kkt_residual: %.6e\n", result.kkt_residual);
    if (flags.oracle) {
      std::cout << "oracle_best: " << fixed(oracle_best, cfg.precision) << "\n";
      std::cout << "oracle_bound_ok: " << (oracle_ok ? "true" : "false") << "\n";
    }
    std::cout << (ok ? "OK" : "FAILED") << "\n";
  }
  return ok ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random permutation set entropy toolkit"};
  app.require_subcommand(1);

  CliConfig cfg;
  app.add_option("--base", cfg.base, "Logarithm base (> 1)")
      ->capture_default_str();
  app.add_option("--precision", cfg.precision, "Printed decimal places")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cap", cfg.cap, "Max frame size for event materialization")
      ->capture_default_str();

  int exit_code = 0;

  auto* enumerate = app.add_subcommand(
      "enumerate", "List the permutation event space of the given elements");
  enumerate->fallthrough();
  std::vector<std::string> elements;
  bool include_empty = false;
  enumerate->add_option("elements", elements, "Frame element labels")->required();
  enumerate->add_flag("--include-empty", include_empty, "Include the empty event");
  enumerate->callback([&] {
    require_valid_config(cfg);
    exit_code = cmd_enumerate(elements, include_empty, cfg);
  });

  auto* entropy = app.add_subcommand(
      "entropy", "Entropy of a mass document (JSON file path, or - for stdin)");
  entropy->fallthrough();
  std::string input;
  std::string entropy_kind = "rps";
  bool with_terms = false;
  bool renormalize = false;
  entropy->add_option("input", input, "Input path or -")->required();
  entropy->add_option("--kind", entropy_kind, "Entropy kind")
      ->check(CLI::IsMember({"rps", "deng", "shannon"}))
      ->capture_default_str();
  entropy->add_flag("--terms", with_terms, "Print per-event contributions");
  entropy->add_flag("--renormalize", renormalize,
                    "Rescale masses to sum to one before validation");
  entropy->callback([&] {
    require_valid_config(cfg);
    exit_code = cmd_entropy(input, entropy_kind, with_terms, renormalize, cfg);
  });

  auto* maxent = app.add_subcommand(
      "maxent", "Analytic maximum entropy for a frame of n elements");
  maxent->fallthrough();
  unsigned maxent_n = 0;
  std::string maxent_kind = "rps";
  bool emit_distribution = false;
  maxent->add_option("n", maxent_n, "Number of frame elements")->required();
  maxent->add_option("--kind", maxent_kind, "Entropy kind")
      ->check(CLI::IsMember({"rps", "deng", "shannon"}))
      ->capture_default_str();
  maxent->add_flag("--emit-distribution", emit_distribution,
                   "Write the maximizing distribution as a JSON document");
  maxent->callback([&] {
    require_valid_config(cfg);
    exit_code = cmd_maxent(maxent_n, maxent_kind, emit_distribution, cfg);
  });

  auto* table = app.add_subcommand(
      "table", "Maximum Shannon, Deng, and RPS entropies for N = 1..n");
  table->fallthrough();
  unsigned table_n = 0;
  table->add_option("n", table_n, "Largest N")->required();
  table->callback([&] {
    require_valid_config(cfg);
    exit_code = cmd_table(table_n, cfg);
  });

  auto* degenerate = app.add_subcommand(
      "degenerate", "Compare a degenerate max RPS entropy with its classical twin");
  degenerate->fallthrough();
  unsigned degenerate_n = 0;
  std::string mode = "order-ignored";
  degenerate->add_option("n", degenerate_n, "Number of frame elements")->required();
  degenerate->add_option("--mode", mode, "Degeneration mode")
      ->check(CLI::IsMember({"order-ignored", "singleton-only"}))
      ->capture_default_str();
  degenerate->callback([&] {
    require_valid_config(cfg);
    exit_code = cmd_degenerate(degenerate_n, mode, cfg);
  });

  auto* verify = app.add_subcommand(
      "verify", "Numerically re-derive the maximum RPS entropy and check it");
  verify->fallthrough();
  unsigned verify_n = 0;
  VerifyFlags flags;
  verify->add_option("n", verify_n, "Number of frame elements")->required();
  verify->add_option("--tolerance", flags.tolerance,
                     "Pass threshold on entropy gap and sup distance")
      ->capture_default_str();
  verify->add_option("--iterations", flags.iterations, "Iteration budget")
      ->capture_default_str();
  verify->add_option("--step", flags.step, "Initial ascent step size")
      ->capture_default_str();
  verify->add_option("--seed", flags.seed, "Seed for randomized start and oracle")
      ->capture_default_str();
  verify->add_option("--start", flags.start, "Start point")
      ->check(CLI::IsMember({"uniform", "dirichlet"}))
      ->capture_default_str();
  verify->add_option("--samples", flags.samples, "Oracle sample count")
      ->capture_default_str();
  verify->add_flag("--oracle", flags.oracle,
                   "Also run the random-search oracle and check the bound");
  verify->callback([&] {
    require_valid_config(cfg);
    // The optimizer has a tighter default cap than enumeration; an explicit
    // --cap still overrides it.
    const std::size_t cap =
        app.count("--cap") > 0 ? cfg.cap : rps::kDefaultOptimizerCap;
    exit_code = cmd_verify(verify_n, flags, cfg, cap);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  } catch (const rps::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const rps::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const std::string& violation : e.violations()) {
      std::cerr << "  - " << violation << "\n";
    }
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
