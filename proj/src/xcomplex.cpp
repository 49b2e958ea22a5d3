#include "qbilat/xcomplex.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace qbilat {

namespace {

constexpr long kClamp = 1L << 20;

std::complex<double> scale(std::complex<double> m, long e) {
  const int s = int(std::clamp(e, -kClamp, kClamp));
  return {std::ldexp(m.real(), s), std::ldexp(m.imag(), s)};
}

}  // namespace

void XComplex::normalize() {
  if (m_ == 0.0) {
    e_ = 0;
    return;
  }
  const double big = std::max(std::abs(m_.real()), std::abs(m_.imag()));
  if (!std::isfinite(big)) return;
  int s = 0;
  std::frexp(big, &s);
  m_ = scale(m_, -s);
  e_ += s;
}

XComplex XComplex::pow(std::complex<double> z, long n) {
  XComplex base(z), out(1.0);
  if (n < 0) {
    base = XComplex(1.0) / base;
    n = -n;
  }
  while (n > 0) {
    if (n & 1) out *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return out;
}

double XComplex::log2_abs() const {
  if (m_ == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log2(std::abs(m_)) + double(e_);
}

std::complex<double> XComplex::value() const { return scale(m_, e_); }

std::complex<double> XComplex::log() const {
  return std::log(m_) + double(e_) * std::numbers::ln2;
}

XComplex& XComplex::operator*=(const XComplex& o) {
  m_ *= o.m_;
  e_ += o.e_;
  normalize();
  return *this;
}

XComplex& XComplex::operator/=(const XComplex& o) {
  m_ /= o.m_;
  e_ -= o.e_;
  normalize();
  return *this;
}

XComplex& XComplex::operator+=(const XComplex& o) {
  if (o.m_ == 0.0) return *this;
  if (m_ == 0.0) return *this = o;
  if (o.e_ > e_) {
    m_ = scale(m_, e_ - o.e_) + o.m_;
    e_ = o.e_;
  } else {
    m_ += scale(o.m_, o.e_ - e_);
  }
  normalize();
  return *this;
}

XComplex& XComplex::operator-=(const XComplex& o) { return *this += -o; }

XComplex XComplex::operator-() const {
  XComplex r = *this;
  r.m_ = -r.m_;
  return r;
}

}  // namespace qbilat
