#pragma once

#include <cstddef>

#include "rps/bigcount.hpp"

namespace rps::combinatorics {

/// n! with a shared thread-safe memo table.
BigCount factorial(unsigned n);

/// Number of ordered i-tuples of distinct items from an n-set: n!/(n-i)!.
/// Throws std::domain_error when i > n.
BigCount permutation_count(unsigned n, unsigned i);

/// Number of i-subsets of an n-set: n!/(i!(n-i)!).
/// Throws std::domain_error when i > n.
BigCount combination_count(unsigned n, unsigned i);

/// F(i): the count of ordered arrangements of all subsets of an i-set,
/// sum over k of i!/(i-k)!. F(0) = 1 (the single empty arrangement).
BigCount f_sum(unsigned i);

/// Order-ignored variant of F: sum of binomial coefficients C(i,k), i.e. 2^i.
BigCount f_sum_combinatorial(unsigned i);

/// Singleton-only variant of the permutation count: 1 when i = 0, n when
/// i = 1, 0 otherwise. Defined only for n >= 1 (std::domain_error on n = 0).
BigCount degenerate_permutation_count(unsigned n, unsigned i);

/// Normalizing constant of the maximum-entropy permutation mass function:
/// sum over i = 1..n of permutation_count(n,i) * (F(i) - 1).
/// Throws std::domain_error on n = 0.
BigCount rps_normalizer(unsigned n);

}  // namespace rps::combinatorics
