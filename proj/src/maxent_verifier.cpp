#include "rps/maxent_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rps/combinatorics.hpp"
#include "rps/entropy.hpp"
#include "rps/error.hpp"

namespace rps {

namespace {

constexpr double kMassFloor = 1e-15;

void require_within_cap(const FrameOfDiscernment& frame, std::size_t cap,
                        const char* what) {
  if (frame.size() > cap) {
    throw CapacityError(std::string(what) + " materializes " +
                        pes_size(static_cast<unsigned>(frame.size()), false).str() +
                        " events, over the cap of n = " + std::to_string(cap));
  }
}

// Flattened view of the non-empty event space: the events in canonical order
// plus each event's log2(F(i) - 1) denominator.
struct EventSpace {
  std::vector<PermutationEvent> events;
  std::vector<double> log2_denoms;

  explicit EventSpace(const FrameOfDiscernment& frame) {
    const unsigned n = static_cast<unsigned>(frame.size());
    std::vector<double> by_card(n + 1, 0.0);
    for (unsigned i = 1; i <= n; ++i) {
      by_card[i] = (combinatorics::f_sum(i) - BigCount(1)).log2();
    }
    for (const auto& event : enumerate_events(frame, false)) {
      log2_denoms.push_back(by_card[event.cardinality()]);
      events.push_back(event);
    }
  }

  std::size_t size() const { return events.size(); }

  double entropy(const std::vector<double>& x, double log2_base) const {
    double h = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] <= 0.0) continue;
      h -= x[k] * (std::log2(x[k]) - log2_denoms[k]);
    }
    return h / log2_base;
  }

  PermutationMassFunction to_pmf(const FrameOfDiscernment& frame,
                                 const std::vector<double>& x) const {
    PermutationMassFunction::MassMap masses;
    for (std::size_t k = 0; k < x.size(); ++k) masses.emplace(events[k], x[k]);
    return PermutationMassFunction(frame, std::move(masses));
  }
};

// Euclidean projection onto the probability simplex (Duchi et al.'s
// sort-and-threshold form).
void project_onto_simplex(std::vector<double>& v) {
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double running = 0.0;
  double theta = 0.0;
  std::size_t rho = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    running += u[j];
    const double candidate = (running - 1.0) / static_cast<double>(j + 1);
    if (u[j] - candidate > 0.0) {
      rho = j + 1;
      theta = candidate;
    }
  }
  (void)rho;
  for (double& x : v) x = std::max(x - theta, 0.0);
}

// Deterministic uniform draw in (0, 1], identical across platforms: take the
// top 53 bits of the generator word.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

std::vector<double> dirichlet_point(std::size_t m, std::mt19937_64& rng) {
  std::vector<double> x(m);
  double total = 0.0;
  for (double& v : x) {
    v = -std::log(unit_uniform(rng));
    total += v;
  }
  for (double& v : x) v /= total;
  return x;
}

double sup_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

double ratio_spread(const std::vector<double>& x,
                    const std::vector<double>& log2_denoms) {
  std::vector<double> ratios(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] <= 0.0) return std::numeric_limits<double>::infinity();
    ratios[k] = x[k] / std::exp2(log2_denoms[k]);
  }
  const double mean =
      std::accumulate(ratios.begin(), ratios.end(), 0.0) / ratios.size();
  double worst = 0.0;
  for (double r : ratios) worst = std::max(worst, std::abs(r - mean));
  return worst / mean;
}

}  // namespace

std::pair<PermutationMassFunction, VerificationResult> maximize_rps_entropy(
    const FrameOfDiscernment& frame, const OptimizerConfig& config,
    std::size_t cap) {
  if (config.max_iterations == 0) {
    throw std::domain_error("max_iterations must be >= 1");
  }
  if (!(config.step_size > 0.0) || !(config.tolerance > 0.0)) {
    throw std::domain_error("step_size and tolerance must be > 0");
  }
  if (!(config.log_base > 1.0) || !std::isfinite(config.log_base)) {
    throw std::domain_error("log base must be a finite number > 1");
  }
  require_within_cap(frame, cap, "maximize_rps_entropy");

  const unsigned n = static_cast<unsigned>(frame.size());
  const EventSpace space(frame);
  const std::size_t m = space.size();
  const double log2_base = std::log2(config.log_base);
  const double ln_base = std::log(config.log_base);

  std::vector<double> x(m, 1.0 / static_cast<double>(m));
  if (config.start == StartPoint::dirichlet) {
    std::mt19937_64 rng(config.seed);
    x = dirichlet_point(m, rng);
  }

  VerificationResult result;
  double h = space.entropy(x, log2_base);
  std::vector<double> grad(m), candidate(m);
  for (std::size_t iter = 1; iter <= config.max_iterations; ++iter) {
    for (std::size_t k = 0; k < m; ++k) {
      const double mass = std::max(x[k], kMassFloor);
      grad[k] = (-(std::log(mass) - space.log2_denoms[k] * std::numbers::ln2) - 1.0) /
                ln_base;
    }

    // Backtracking: halve the step until the entropy does not decrease.
    double step = config.step_size;
    double h_next = h;
    for (int halvings = 0; halvings < 80; ++halvings) {
      for (std::size_t k = 0; k < m; ++k) candidate[k] = x[k] + step * grad[k];
      project_onto_simplex(candidate);
      h_next = space.entropy(candidate, log2_base);
      if (h_next >= h) break;
      step *= 0.5;
    }
    if (h_next < h) {
      // No acceptable step; treat the iterate as stationary.
      result.iterations_used = iter;
      result.converged = true;
      break;
    }

    const double change = sup_distance(x, candidate);
    x.swap(candidate);
    h = h_next;
    result.iterations_used = iter;
    if (change < config.tolerance) {
      result.converged = true;
      break;
    }
  }

  result.achieved_entropy = h;
  result.entropy_gap = max_rps_entropy(n, config.log_base) - h;
  result.kkt_residual = ratio_spread(x, space.log2_denoms);

  const PermutationMassFunction analytic = max_rps_pmf(frame, cap);
  double sup = 0.0;
  auto it = analytic.masses().begin();
  for (std::size_t k = 0; k < m; ++k, ++it) {
    sup = std::max(sup, std::abs(x[k] - it->second));
  }
  result.pmf_sup_distance = sup;

  return {space.to_pmf(frame, x), result};
}

double check_stationarity(const PermutationMassFunction& pmf, double base) {
  if (!(base > 1.0) || !std::isfinite(base)) {
    throw std::domain_error("log base must be a finite number > 1");
  }
  const EventSpace space(pmf.frame());
  std::vector<double> x(space.size());
  for (std::size_t k = 0; k < space.size(); ++k) {
    const double mass = pmf.mass(space.events[k]);
    if (mass <= 0.0) {
      throw std::domain_error("stationarity check requires positive mass on " +
                              event_to_string(space.events[k], pmf.frame()));
    }
    x[k] = mass;
  }
  return ratio_spread(x, space.log2_denoms);
}

double random_search_oracle(const FrameOfDiscernment& frame, std::size_t samples,
                            std::uint64_t seed, std::size_t cap, double base) {
  if (samples == 0) throw std::domain_error("samples must be >= 1");
  if (!(base > 1.0) || !std::isfinite(base)) {
    throw std::domain_error("log base must be a finite number > 1");
  }
  require_within_cap(frame, cap, "random_search_oracle");

  const EventSpace space(frame);
  const double log2_base = std::log2(base);
  std::mt19937_64 rng(seed);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < samples; ++s) {
    best = std::max(best, space.entropy(dirichlet_point(space.size(), rng), log2_base));
  }
  return best;
}

}  // namespace rps
