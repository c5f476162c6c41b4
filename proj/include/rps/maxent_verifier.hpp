#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "rps/rps_core.hpp"

namespace rps {

/// Largest frame the optimizer and oracle materialize by default. The event
/// count grows as sum of P(n, i), so n = 7 already means 13699 coordinates.
inline constexpr std::size_t kDefaultOptimizerCap = 7;

enum class StartPoint { uniform, dirichlet };

struct OptimizerConfig {
  std::size_t max_iterations = 100000;
  double step_size = 0.1;
  double tolerance = 1e-10;  // sup-norm on iterate change
  std::uint64_t seed = 0;
  StartPoint start = StartPoint::uniform;
  double log_base = 2.0;
};

struct VerificationResult {
  bool converged = false;
  std::size_t iterations_used = 0;
  double achieved_entropy = 0.0;
  double entropy_gap = 0.0;       // analytic max minus achieved
  double pmf_sup_distance = 0.0;  // sup-norm to the closed-form maximizer
  double kkt_residual = 0.0;      // relative spread of the ratio m / (F(i)-1)
};

/// Maximize the permutation-set entropy over the simplex of non-empty-event
/// masses by projected gradient ascent, with no knowledge of the closed form.
/// Returns the final mass function and metrics against the analytic answers.
std::pair<PermutationMassFunction, VerificationResult> maximize_rps_entropy(
    const FrameOfDiscernment& frame, const OptimizerConfig& config = {},
    std::size_t cap = kDefaultOptimizerCap);

/// Relative spread of the stationarity ratios r = m(A) / (F(|A|)-1) over the
/// full event space: max |r - mean| / mean. Zero iff the ratio is constant,
/// which characterizes the entropy maximizer. Requires strictly positive mass
/// on every non-empty event.
double check_stationarity(const PermutationMassFunction& pmf, double base = 2.0);

/// Draw `samples` mass functions uniformly from the simplex (Dirichlet with
/// concentration 1) and return the best entropy seen. Deterministic per seed.
double random_search_oracle(const FrameOfDiscernment& frame, std::size_t samples,
                            std::uint64_t seed,
                            std::size_t cap = kDefaultOptimizerCap,
                            double base = 2.0);

}  // namespace rps
