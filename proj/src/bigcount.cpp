#include "rps/bigcount.hpp"

#include <cmath>
#include <stdexcept>

namespace rps {

BigCount& BigCount::operator+=(const BigCount& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigCount& BigCount::operator*=(const BigCount& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigCount& BigCount::operator-=(const BigCount& rhs) {
  if (value_ < rhs.value_) {
    throw std::domain_error("BigCount subtraction would go negative: " + str() +
                            " - " + rhs.str());
  }
  value_ -= rhs.value_;
  return *this;
}

std::strong_ordering BigCount::operator<=>(const BigCount& rhs) const {
  const int c = cmp(value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigCount BigCount::exact_div(const BigCount& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("BigCount division by zero");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return BigCount(q);
}

BigCount BigCount::pow2(unsigned exponent) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, exponent);
  return BigCount(v);
}

double BigCount::log2() const {
  if (is_zero()) throw std::domain_error("log of zero BigCount");
  signed long exp = 0;
  // value = d * 2^exp with 0.5 <= d < 1
  const double d = mpz_get_d_2exp(&exp, value_.get_mpz_t());
  return static_cast<double>(exp) + std::log2(d);
}

double BigCount::log(double base) const {
  if (!(base > 1.0) || !std::isfinite(base)) {
    throw std::domain_error("log base must be a finite number > 1");
  }
  return log2() / std::log2(base);
}

}  // namespace rps
