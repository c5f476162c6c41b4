#pragma once

#include <map>
#include <string>
#include <vector>

#include "rps/pes.hpp"

namespace rps {

/// Per-invariant findings from a validate() call; empty means valid.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string joined() const;
};

/// Unordered subset of frame indices, kept sorted ascending.
using IndexSubset = std::vector<unsigned>;

/// Cardinality-major, then lexicographic. Keeps serialized mass functions in
/// the same stable order as permutation events.
struct SubsetOrder {
  bool operator()(const IndexSubset& a, const IndexSubset& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Normalized mass assignment over the permutation event space, with zero
/// mass on the empty event. Construction stores what it is given; validate()
/// reports invariant violations, so candidates can be inspected before use.
class PermutationMassFunction {
 public:
  using MassMap = std::map<PermutationEvent, double>;

  PermutationMassFunction(FrameOfDiscernment frame, MassMap masses)
      : frame_(std::move(frame)), masses_(std::move(masses)) {}

  const FrameOfDiscernment& frame() const { return frame_; }
  const MassMap& masses() const { return masses_; }

  /// Mass of an event; absent events carry zero, indistinguishably from an
  /// explicit zero entry.
  double mass(const PermutationEvent& event) const;

  double total_mass() const;

  /// Explicitly opt-in renormalization: scales all masses by 1/total.
  /// Throws std::domain_error when the total is not positive.
  PermutationMassFunction renormalized() const;

 private:
  FrameOfDiscernment frame_;
  MassMap masses_;
};

/// Classical evidence-theory mass function over unordered subsets.
class MassFunction {
 public:
  using MassMap = std::map<IndexSubset, double, SubsetOrder>;

  MassFunction(FrameOfDiscernment frame, MassMap masses)
      : frame_(std::move(frame)), masses_(std::move(masses)) {}

  const FrameOfDiscernment& frame() const { return frame_; }
  const MassMap& masses() const { return masses_; }

  double mass(const IndexSubset& subset) const;
  double total_mass() const;
  MassFunction renormalized() const;

 private:
  FrameOfDiscernment frame_;
  MassMap masses_;
};

/// Probability distribution over the frame's elements.
class ProbabilityDistribution {
 public:
  ProbabilityDistribution(FrameOfDiscernment frame, std::vector<double> probs)
      : frame_(std::move(frame)), probs_(std::move(probs)) {}

  const FrameOfDiscernment& frame() const { return frame_; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  FrameOfDiscernment frame_;
  std::vector<double> probs_;
};

/// Tolerance on the sum-to-one invariant of input distributions.
inline constexpr double kMassSumTolerance = 1e-9;
/// Mass on the empty event at or below this is treated as exactly zero.
inline constexpr double kEmptyMassTolerance = 1e-12;

/// Checks all invariants: non-negative finite masses, events valid for the
/// frame, zero empty-event mass, total within kMassSumTolerance of one.
ValidationReport validate(const PermutationMassFunction& pmf);
ValidationReport validate(const MassFunction& m);
ValidationReport validate(const ProbabilityDistribution& p);

/// Projects each tuple's mass onto its underlying unordered subset: the
/// order-ignored view of an RPS. Total mass is preserved.
MassFunction degenerate_to_mass_function(const PermutationMassFunction& pmf);

/// Reads a PMF whose support lies on single-element events as an ordinary
/// probability distribution. Throws std::domain_error, naming the offending
/// event, if any mass above kEmptyMassTolerance sits on another cardinality.
ProbabilityDistribution restrict_to_singletons(const PermutationMassFunction& pmf);

/// The maximum-entropy distribution on a plain sample space: 1/n everywhere.
ProbabilityDistribution uniform_singleton_distribution(const FrameOfDiscernment& frame);

/// Subset rendered as "{R,B}" in frame order.
std::string subset_to_string(const IndexSubset& subset, const FrameOfDiscernment& frame);

}  // namespace rps
