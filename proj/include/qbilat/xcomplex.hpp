#pragma once

#include <cmath>
#include <complex>

namespace qbilat {

// Complex number with a separate binary exponent: value = m * 2^e.
// Used for summands whose factors leave double range on long tails.
class XComplex {
 public:
  XComplex() = default;
  XComplex(std::complex<double> v) : m_(v) { normalize(); }  // NOLINT(google-explicit-constructor)
  XComplex(double v) : XComplex(std::complex<double>(v)) {}  // NOLINT(google-explicit-constructor)

  // z^n by repeated squaring with renormalization after each step.
  static XComplex pow(std::complex<double> z, long n);

  bool is_zero() const noexcept { return m_ == 0.0; }
  std::complex<double> mantissa() const noexcept { return m_; }
  long exponent() const noexcept { return e_; }
  // log2 of the magnitude; -inf for zero.
  double log2_abs() const;
  // Converts to double precision; overflows to inf, underflows to 0.
  std::complex<double> value() const;
  std::complex<double> log() const;

  XComplex& operator*=(const XComplex& o);
  XComplex& operator/=(const XComplex& o);
  XComplex& operator+=(const XComplex& o);
  XComplex& operator-=(const XComplex& o);
  XComplex operator-() const;

  friend XComplex operator*(XComplex a, const XComplex& b) { return a *= b; }
  friend XComplex operator/(XComplex a, const XComplex& b) { return a /= b; }
  friend XComplex operator+(XComplex a, const XComplex& b) { return a += b; }
  friend XComplex operator-(XComplex a, const XComplex& b) { return a -= b; }

 private:
  XComplex(std::complex<double> m, long e) : m_(m), e_(e) { normalize(); }
  void normalize();

  std::complex<double> m_{0.0};
  long e_ = 0;
};

}  // namespace qbilat
