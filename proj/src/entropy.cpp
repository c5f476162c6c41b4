#include "rps/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "rps/combinatorics.hpp"
#include "rps/error.hpp"

namespace rps {

namespace {

void require_valid_base(double base) {
  if (!(base > 1.0) || !std::isfinite(base)) {
    throw std::domain_error("log base must be a finite number > 1");
  }
}

void require_positive_n(unsigned n, const char* what) {
  if (n == 0) throw std::domain_error(std::string(what) + " requires n >= 1");
}

// One entropy term -mass * log_base(mass / denominator), taking the
// denominator as a precomputed log2 so exact integer denominators keep
// their precision.
double term_value(double mass, double log2_denominator, double log2_base) {
  return -mass * (std::log2(mass) - log2_denominator) / log2_base;
}

EntropyReport make_report(double base, bool with_terms) {
  EntropyReport report;
  report.base = base;
  if (with_terms) report.terms.emplace();
  return report;
}

void add_term(EntropyReport& report, PermutationEvent event, double contribution) {
  report.value += contribution;
  if (report.terms) report.terms->push_back({std::move(event), contribution});
}

// Non-empty subsets of {0..n-1} in cardinality-major, lexicographic order.
template <typename Fn>
void for_each_subset(unsigned n, Fn&& fn) {
  std::vector<unsigned> subset;
  for (unsigned card = 1; card <= n; ++card) {
    subset.resize(card);
    for (unsigned p = 0; p < card; ++p) subset[p] = p;
    while (true) {
      fn(subset);
      int p = static_cast<int>(card) - 1;
      while (p >= 0 && subset[p] == n - card + p) --p;
      if (p < 0) break;
      ++subset[p];
      for (unsigned q = p + 1; q < card; ++q) subset[q] = subset[q - 1] + 1;
    }
  }
}

}  // namespace

EntropyReport shannon_entropy(const ProbabilityDistribution& p, double base,
                              bool with_terms) {
  require_valid_base(base);
  const double log2_base = std::log2(base);
  EntropyReport report = make_report(base, with_terms);
  for (unsigned k = 0; k < p.probs().size(); ++k) {
    const double prob = p.probs()[k];
    if (prob <= 0.0) continue;  // 0*log(0) = 0
    add_term(report, PermutationEvent({k}), -prob * std::log2(prob) / log2_base);
  }
  return report;
}

EntropyReport deng_entropy(const MassFunction& m, double base, bool with_terms) {
  require_valid_base(base);
  const double log2_base = std::log2(base);
  EntropyReport report = make_report(base, with_terms);
  for (const auto& [subset, mass] : m.masses()) {
    if (mass <= 0.0 || subset.empty()) continue;
    const double log2_denom =
        (BigCount::pow2(static_cast<unsigned>(subset.size())) - BigCount(1)).log2();
    add_term(report, PermutationEvent(subset), term_value(mass, log2_denom, log2_base));
  }
  return report;
}

EntropyReport rps_entropy(const PermutationMassFunction& pmf, double base,
                          bool with_terms) {
  require_valid_base(base);
  const double log2_base = std::log2(base);
  EntropyReport report = make_report(base, with_terms);
  for (const auto& [event, mass] : pmf.masses()) {
    if (mass <= 0.0 || event.empty()) continue;
    const double log2_denom =
        (combinatorics::f_sum(static_cast<unsigned>(event.cardinality())) - BigCount(1))
            .log2();
    add_term(report, event, term_value(mass, log2_denom, log2_base));
  }
  return report;
}

BigCount max_deng_normalizer(unsigned n) {
  require_positive_n(n, "max_deng_normalizer");
  BigCount total(0);
  for (unsigned i = 1; i <= n; ++i) {
    total += combinatorics::combination_count(n, i) * (BigCount::pow2(i) - BigCount(1));
  }
  return total;
}

BigCount order_ignored_normalizer(unsigned n) {
  require_positive_n(n, "order_ignored_normalizer");
  BigCount total(0);
  for (unsigned i = 1; i <= n; ++i) {
    total += combinatorics::combination_count(n, i) *
             (combinatorics::f_sum_combinatorial(i) - BigCount(1));
  }
  return total;
}

BigCount singleton_only_normalizer(unsigned n) {
  require_positive_n(n, "singleton_only_normalizer");
  BigCount total(0);
  for (unsigned i = 1; i <= n; ++i) {
    // Arrangement counts collapse to i + 1 here, so F(i) - 1 becomes i.
    total += combinatorics::degenerate_permutation_count(n, i) * BigCount(i);
  }
  return total;
}

double max_shannon_entropy(unsigned n, double base) {
  require_positive_n(n, "max_shannon_entropy");
  return BigCount(n).log(base);
}

double max_deng_entropy(unsigned n, double base) {
  require_positive_n(n, "max_deng_entropy");
  return max_deng_normalizer(n).log(base);
}

double max_rps_entropy(unsigned n, double base) {
  require_positive_n(n, "max_rps_entropy");
  return combinatorics::rps_normalizer(n).log(base);
}

double max_rps_entropy_order_ignored(unsigned n, double base) {
  require_positive_n(n, "max_rps_entropy_order_ignored");
  return order_ignored_normalizer(n).log(base);
}

double max_rps_entropy_singleton_only(unsigned n, double base) {
  require_positive_n(n, "max_rps_entropy_singleton_only");
  return singleton_only_normalizer(n).log(base);
}

MassFunction max_deng_mass_function(const FrameOfDiscernment& frame, std::size_t cap) {
  const unsigned n = static_cast<unsigned>(frame.size());
  if (n > cap) {
    throw CapacityError("max_deng_mass_function materializes 2^" + std::to_string(n) +
                        " subsets, over the cap of n = " + std::to_string(cap));
  }
  const double normalizer = max_deng_normalizer(n).to_double();
  std::vector<double> mass_by_card(n + 1, 0.0);
  for (unsigned i = 1; i <= n; ++i) {
    mass_by_card[i] = (BigCount::pow2(i) - BigCount(1)).to_double() / normalizer;
  }
  MassFunction::MassMap masses;
  for_each_subset(n, [&](const std::vector<unsigned>& subset) {
    masses.emplace(subset, mass_by_card[subset.size()]);
  });
  return MassFunction(frame, std::move(masses));
}

PermutationMassFunction max_rps_pmf(const FrameOfDiscernment& frame, std::size_t cap) {
  const unsigned n = static_cast<unsigned>(frame.size());
  if (n > cap) {
    throw CapacityError("max_rps_pmf materializes " + pes_size(n, false).str() +
                        " events, over the cap of n = " + std::to_string(cap));
  }
  const double normalizer = combinatorics::rps_normalizer(n).to_double();
  std::vector<double> mass_by_card(n + 1, 0.0);
  for (unsigned i = 1; i <= n; ++i) {
    mass_by_card[i] = (combinatorics::f_sum(i) - BigCount(1)).to_double() / normalizer;
  }
  PermutationMassFunction::MassMap masses;
  for (const auto& event : enumerate_events(frame, false)) {
    masses.emplace(event, mass_by_card[event.cardinality()]);
  }
  return PermutationMassFunction(frame, std::move(masses));
}

}  // namespace rps
