#pragma once

#include <optional>
#include <vector>

#include "rps/bigcount.hpp"
#include "rps/rps_core.hpp"

namespace rps {

/// One event's contribution to an entropy sum. For set-based entropies the
/// event holds the subset's indices in ascending order.
struct EntropyTerm {
  PermutationEvent event;
  double contribution = 0.0;
};

/// Entropy value in the requested log base, with an optional per-event
/// breakdown summing to the value.
struct EntropyReport {
  double value = 0.0;
  double base = 2.0;
  std::optional<std::vector<EntropyTerm>> terms;
};

/// -sum p_k log(p_k), with 0*log(0) = 0. Throws std::domain_error unless
/// base > 1.
EntropyReport shannon_entropy(const ProbabilityDistribution& p, double base = 2.0,
                              bool with_terms = false);

/// Belief entropy -sum m(A) log(m(A) / (2^|A| - 1)) over focal elements.
EntropyReport deng_entropy(const MassFunction& m, double base = 2.0,
                           bool with_terms = false);

/// -sum M(A) log(M(A) / (F(|A|) - 1)) over positive-mass permutation
/// events; the empty event never contributes.
EntropyReport rps_entropy(const PermutationMassFunction& pmf, double base = 2.0,
                          bool with_terms = false);

/// log(n): entropy of the uniform distribution on n outcomes.
double max_shannon_entropy(unsigned n, double base = 2.0);

/// log of sum over non-empty subsets of (2^|A| - 1).
double max_deng_entropy(unsigned n, double base = 2.0);

/// log of sum over i of P(n,i) (F(i) - 1): the entropy ceiling over all
/// permutation mass functions on an n-element frame.
double max_rps_entropy(unsigned n, double base = 2.0);

/// Maximum permutation-set entropy when tuple order is ignored: permutation
/// counts collapse to binomial counts and F to 2^i. Equals max_deng_entropy
/// on the same integer normalizer.
double max_rps_entropy_order_ignored(unsigned n, double base = 2.0);

/// Maximum permutation-set entropy when events are limited to single
/// elements: the normalizer collapses to n, so this equals
/// max_shannon_entropy.
double max_rps_entropy_singleton_only(unsigned n, double base = 2.0);

/// Exact integer normalizers behind the analytic maxima above.
BigCount max_deng_normalizer(unsigned n);
BigCount order_ignored_normalizer(unsigned n);
BigCount singleton_only_normalizer(unsigned n);

inline constexpr std::size_t kDengMaterializationCap = 20;
inline constexpr std::size_t kRpsMaterializationCap = 8;

/// Mass function reaching max_deng_entropy: each non-empty subset gets
/// (2^|A| - 1) / normalizer. Throws CapacityError when the frame exceeds
/// the cap (2^n subsets get materialized).
MassFunction max_deng_mass_function(const FrameOfDiscernment& frame,
                                    std::size_t cap = kDengMaterializationCap);

/// PMF reaching max_rps_entropy: every event of cardinality i gets
/// (F(i) - 1) / normalizer. Throws CapacityError when the frame exceeds
/// the cap (~e*n! events get materialized).
PermutationMassFunction max_rps_pmf(const FrameOfDiscernment& frame,
                                    std::size_t cap = kRpsMaterializationCap);

}  // namespace rps
