#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace testing_support {

using C = std::complex<double>;

inline double rel(C x, C y) {
  return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-30});
}

// Small deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  C polar(double rlo, double rhi) {
    const double r = std::exp(uniform(std::log(rlo), std::log(rhi)));
    return std::polar(r, uniform(-M_PI, M_PI));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace testing_support
