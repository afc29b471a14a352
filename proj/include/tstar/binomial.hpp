#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tstar/errors.hpp"

namespace tstar {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

// Exact C(m, t); zero when t > m.
template <class Int = big_int>
Int binom(long long m, long long t) {
  if (m < 0 || t < 0) throw argument_error("binom: arguments must be nonnegative");
  if (t > m) return Int{0};
  if (t > m - t) t = m - t;
  Int r{1};
  // after step j, r == C(m - t + j, j)
  for (long long j = 1; j <= t; ++j) {
    r *= (m - t + j);
    r /= j;
  }
  return r;
}

// Pascal triangle rows 0..max_m, for sweeps that evaluate many coefficients.
template <class Int = big_int>
class binomial_table {
 public:
  explicit binomial_table(int max_m) : max_m_(max_m) {
    if (max_m < 0) throw argument_error("binomial_table: negative size");
    entries_.reserve(static_cast<std::size_t>(max_m + 1) * (max_m + 2) / 2);
    for (int m = 0; m <= max_m; ++m) {
      for (int t = 0; t <= m; ++t) {
        if (t == 0 || t == m) {
          entries_.emplace_back(1);
        } else {
          entries_.push_back(at(m - 1, t - 1) + at(m - 1, t));
        }
      }
    }
  }

  int max_m() const noexcept { return max_m_; }

  const Int& operator()(long long m, long long t) const {
    if (m < 0 || t < 0) throw argument_error("binom: arguments must be nonnegative");
    if (m > max_m_) throw argument_error("binomial_table: row out of range");
    if (t > m) return zero_;
    return at(static_cast<int>(m), static_cast<int>(t));
  }

 private:
  const Int& at(int m, int t) const {
    return entries_[static_cast<std::size_t>(m) * (m + 1) / 2 + t];
  }

  int max_m_;
  std::vector<Int> entries_;
  Int zero_{0};
};

}  // namespace tstar
