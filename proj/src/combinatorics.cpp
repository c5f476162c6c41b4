#include "rps/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace rps::combinatorics {

namespace {

// Memo tables grow on demand under a lock; results are identical whether or
// not a value was cached.
class SequenceCache {
 public:
  using Step = BigCount (*)(const BigCount& prev, unsigned n);

  SequenceCache(BigCount first, Step step) : step_(step) {
    values_.push_back(std::move(first));
  }

  BigCount get(unsigned n) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (values_.size() <= n) {
      const unsigned next = static_cast<unsigned>(values_.size());
      values_.push_back(step_(values_.back(), next));
    }
    return values_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<BigCount> values_;
  Step step_;
};

SequenceCache& factorial_cache() {
  static SequenceCache cache(
      BigCount(1), [](const BigCount& prev, unsigned n) { return prev * BigCount(n); });
  return cache;
}

// F satisfies F(i) = i*F(i-1) + 1: splitting the arrangements of an i-set by
// whether they are empty, and factoring the choice of leading element out of
// the non-empty ones.
SequenceCache& f_cache() {
  static SequenceCache cache(
      BigCount(1),
      [](const BigCount& prev, unsigned n) { return BigCount(n) * prev + BigCount(1); });
  return cache;
}

}  // namespace

BigCount factorial(unsigned n) { return factorial_cache().get(n); }

BigCount permutation_count(unsigned n, unsigned i) {
  if (i > n) {
    throw std::domain_error("permutation_count: i = " + std::to_string(i) +
                            " exceeds n = " + std::to_string(n));
  }
  return factorial(n).exact_div(factorial(n - i));
}

BigCount combination_count(unsigned n, unsigned i) {
  if (i > n) {
    throw std::domain_error("combination_count: i = " + std::to_string(i) +
                            " exceeds n = " + std::to_string(n));
  }
  return factorial(n).exact_div(factorial(i) * factorial(n - i));
}

BigCount f_sum(unsigned i) { return f_cache().get(i); }

BigCount f_sum_combinatorial(unsigned i) { return BigCount::pow2(i); }

BigCount degenerate_permutation_count(unsigned n, unsigned i) {
  if (n == 0) {
    throw std::domain_error("degenerate_permutation_count requires n >= 1");
  }
  if (i == 0) return BigCount(1);
  if (i == 1) return BigCount(n);
  return BigCount(0);
}

BigCount rps_normalizer(unsigned n) {
  if (n == 0) throw std::domain_error("rps_normalizer requires n >= 1");
  BigCount total(0);
  for (unsigned i = 1; i <= n; ++i) {
    total += permutation_count(n, i) * (f_sum(i) - BigCount(1));
  }
  return total;
}

}  // namespace rps::combinatorics
