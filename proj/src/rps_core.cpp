#include "rps/rps_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rps {

namespace {

std::string trimmed_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void check_masses_common(double total, bool saw_nonfinite,
                         std::vector<std::string>& violations) {
  if (saw_nonfinite) return;  // the sum is meaningless with non-finite entries
  if (std::abs(total - 1.0) > kMassSumTolerance) {
    violations.push_back("sum = " + trimmed_number(total) + " != 1 (tolerance 1e-9)");
  }
}

// Label lookups would throw for out-of-frame indices, which validate() must
// report rather than propagate; fall back to the raw indices in that case.
std::string safe_event_name(const PermutationEvent& event,
                            const FrameOfDiscernment& frame) {
  if (event.valid_for(frame.size())) return event_to_string(event, frame);
  std::string out = "(indices ";
  for (std::size_t k = 0; k < event.indices().size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(event.indices()[k]);
  }
  return out + ")";
}

bool subset_in_frame(const IndexSubset& subset, const FrameOfDiscernment& frame) {
  return subset.empty() ||
         *std::max_element(subset.begin(), subset.end()) < frame.size();
}

std::string safe_subset_name(const IndexSubset& subset,
                             const FrameOfDiscernment& frame) {
  if (subset_in_frame(subset, frame)) {
    return subset_to_string(subset, frame);
  }
  std::string out = "{indices ";
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(subset[k]);
  }
  return out + "}";
}

}  // namespace

std::string ValidationReport::joined() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

double PermutationMassFunction::mass(const PermutationEvent& event) const {
  const auto it = masses_.find(event);
  return it == masses_.end() ? 0.0 : it->second;
}

double PermutationMassFunction::total_mass() const {
  double total = 0.0;
  for (const auto& [event, mass] : masses_) total += mass;
  return total;
}

PermutationMassFunction PermutationMassFunction::renormalized() const {
  const double total = total_mass();
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw std::domain_error("cannot renormalize: total mass is " +
                            trimmed_number(total));
  }
  MassMap scaled = masses_;
  for (auto& [event, mass] : scaled) mass /= total;
  return PermutationMassFunction(frame_, std::move(scaled));
}

double MassFunction::mass(const IndexSubset& subset) const {
  const auto it = masses_.find(subset);
  return it == masses_.end() ? 0.0 : it->second;
}

double MassFunction::total_mass() const {
  double total = 0.0;
  for (const auto& [subset, mass] : masses_) total += mass;
  return total;
}

MassFunction MassFunction::renormalized() const {
  const double total = total_mass();
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw std::domain_error("cannot renormalize: total mass is " +
                            trimmed_number(total));
  }
  MassMap scaled = masses_;
  for (auto& [subset, mass] : scaled) mass /= total;
  return MassFunction(frame_, std::move(scaled));
}

ValidationReport validate(const PermutationMassFunction& pmf) {
  ValidationReport report;
  double total = 0.0;
  bool saw_nonfinite = false;
  for (const auto& [event, mass] : pmf.masses()) {
    const std::string name = safe_event_name(event, pmf.frame());
    if (!std::isfinite(mass)) {
      report.violations.push_back("mass of " + name + " is not finite");
      saw_nonfinite = true;
      continue;
    }
    if (mass < 0.0) {
      report.violations.push_back("mass of " + name + " is negative: " +
                                  trimmed_number(mass));
    }
    if (!event.valid_for(pmf.frame().size())) {
      report.violations.push_back("event " + name +
                                  " has indices outside the frame");
    }
    if (event.empty() && mass > kEmptyMassTolerance) {
      report.violations.push_back("empty event has nonzero mass " +
                                  trimmed_number(mass));
    }
    total += mass;
  }
  check_masses_common(total, saw_nonfinite, report.violations);
  return report;
}

ValidationReport validate(const MassFunction& m) {
  ValidationReport report;
  double total = 0.0;
  bool saw_nonfinite = false;
  for (const auto& [subset, mass] : m.masses()) {
    const std::string name = safe_subset_name(subset, m.frame());
    if (!std::isfinite(mass)) {
      report.violations.push_back("mass of " + name + " is not finite");
      saw_nonfinite = true;
      continue;
    }
    if (mass < 0.0) {
      report.violations.push_back("mass of " + name + " is negative: " +
                                  trimmed_number(mass));
    }
    if (!std::is_sorted(subset.begin(), subset.end()) ||
        std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
      report.violations.push_back("subset key " + name + " is not a sorted set");
    }
    if (!subset_in_frame(subset, m.frame())) {
      report.violations.push_back("subset " + name +
                                  " has indices outside the frame");
    }
    if (subset.empty() && mass > kEmptyMassTolerance) {
      report.violations.push_back("empty set has nonzero mass " +
                                  trimmed_number(mass));
    }
    total += mass;
  }
  check_masses_common(total, saw_nonfinite, report.violations);
  return report;
}

ValidationReport validate(const ProbabilityDistribution& p) {
  ValidationReport report;
  if (p.probs().size() != p.frame().size()) {
    report.violations.push_back("distribution has " +
                                std::to_string(p.probs().size()) +
                                " entries for a frame of size " +
                                std::to_string(p.frame().size()));
    return report;
  }
  double total = 0.0;
  bool saw_nonfinite = false;
  for (std::size_t k = 0; k < p.probs().size(); ++k) {
    const double v = p.probs()[k];
    if (!std::isfinite(v)) {
      report.violations.push_back("probability of " + p.frame().label(k) +
                                  " is not finite");
      saw_nonfinite = true;
      continue;
    }
    if (v < 0.0) {
      report.violations.push_back("probability of " + p.frame().label(k) +
                                  " is negative: " + trimmed_number(v));
    }
    total += v;
  }
  check_masses_common(total, saw_nonfinite, report.violations);
  return report;
}

MassFunction degenerate_to_mass_function(const PermutationMassFunction& pmf) {
  MassFunction::MassMap masses;
  for (const auto& [event, mass] : pmf.masses()) {
    masses[forget_order(event)] += mass;
  }
  return MassFunction(pmf.frame(), std::move(masses));
}

ProbabilityDistribution restrict_to_singletons(const PermutationMassFunction& pmf) {
  std::vector<double> probs(pmf.frame().size(), 0.0);
  for (const auto& [event, mass] : pmf.masses()) {
    if (event.cardinality() == 1) {
      probs[event.indices().front()] += mass;
    } else if (mass > kEmptyMassTolerance) {
      throw std::domain_error("mass " + trimmed_number(mass) +
                              " on non-singleton event " +
                              event_to_string(event, pmf.frame()));
    }
  }
  return ProbabilityDistribution(pmf.frame(), std::move(probs));
}

ProbabilityDistribution uniform_singleton_distribution(const FrameOfDiscernment& frame) {
  std::vector<double> probs(frame.size(), 1.0 / static_cast<double>(frame.size()));
  return ProbabilityDistribution(frame, std::move(probs));
}

std::string subset_to_string(const IndexSubset& subset, const FrameOfDiscernment& frame) {
  std::string out = "{";
  bool first = true;
  for (unsigned i : subset) {
    if (!first) out += ",";
    out += frame.label(i);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace rps
