#pragma once

#include <complex>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "qbilat/error.hpp"
#include "qbilat/xcomplex.hpp"

namespace qbilat {

using Complex = std::complex<double>;

// Factors with |1 - x| <= kSnapTol * (|x| + 1) are treated as exact zeros.
inline constexpr double kSnapTol = 1e-15;
inline constexpr double kInfEps = 1e-16;

class QBase {
 public:
  explicit QBase(Complex q);

  Complex q() const noexcept { return q_; }
  QBase squared() const { return QBase(q_ * q_); }

 private:
  Complex q_;
};

// z^n by repeated squaring; n may be negative.
Complex ipow(Complex z, long n);

// 1 - x with the snap-to-zero rule applied.
Complex one_minus(Complex x);
// y - b, snapped to 0 relative to |y| + |b|.
Complex minus_snapped(Complex y, Complex b);

// Smallest j in [lo, hi] with 1 - x q^j an exact (snapped) zero.
std::optional<long> lattice_hit(Complex x, Complex q, long lo, long hi);
// min |1 - x q^j| over j in [lo, hi] (only the j nearest |x q^j| = 1 are examined).
double lattice_gap(Complex x, Complex q, long lo, long hi);

class PochResult {
 public:
  static PochResult finite(Complex v) { return PochResult(false, v); }
  static PochResult pole() { return PochResult(true, 0.0); }

  bool is_pole() const noexcept { return pole_; }
  // Throws PoleInTerm when called on a pole.
  Complex value() const;

  friend bool operator==(const PochResult&, const PochResult&) = default;

 private:
  PochResult(bool p, Complex v) : pole_(p), value_(v) {}
  bool pole_;
  Complex value_;
};

Complex qpoch_inf(Complex a, const QBase& base, double eps = kInfEps);
PochResult qpoch(Complex a, const QBase& base, long k);

class PochIndex {
 public:
  PochIndex(long k) : k_(k), inf_(false) {}  // NOLINT(google-explicit-constructor)
  static PochIndex infinity() { return PochIndex(); }

  bool is_infinite() const noexcept { return inf_; }
  long k() const noexcept { return k_; }

 private:
  PochIndex() : k_(0), inf_(true) {}
  long k_;
  bool inf_;
};

// Running product of Pochhammer factors that may carry poles and exact zeros.
class PochProduct {
 public:
  PochProduct& operator*=(const PochResult& r);
  PochProduct& operator*=(Complex v);

  // AmbiguousZeroTimesPole if both an exact zero and a pole were absorbed.
  PochResult result() const;

 private:
  Complex value_{1.0};
  bool zero_ = false;
  bool pole_ = false;
};

PochResult qpoch_multi(std::span<const Complex> as, const QBase& base, PochIndex k);
inline PochResult qpoch_multi(std::initializer_list<Complex> as, const QBase& base, PochIndex k) {
  return qpoch_multi(std::span<const Complex>(as.begin(), as.size()), base, k);
}

// num/den with Finite/Pole = 0; a pole in num raises PoleInTerm.
Complex quotient(const PochResult& num, const PochResult& den);

Complex vwp_factor(Complex a, const QBase& base, long k);

// Shorthands used by term builders.
Complex inf_product(std::initializer_list<Complex> as, const QBase& base);
Complex inf_ratio(std::initializer_list<Complex> num, std::initializer_list<Complex> den,
                  const QBase& base);

// prod (num;q)_k / prod (den;q)_k computed factor by factor, so it stays finite
// where the individual products over- or underflow. A numerator zero (k >= 0) or
// denominator pole (k < 0) reached first gives 0; the opposite order raises PoleInTerm.
Complex poch_ratio(std::span<const Complex> num, std::span<const Complex> den, const QBase& base,
                   long k);
inline Complex poch_ratio(std::initializer_list<Complex> num, std::initializer_list<Complex> den,
                          const QBase& base, long k) {
  return poch_ratio(std::span<const Complex>(num.begin(), num.size()),
                    std::span<const Complex>(den.begin(), den.size()), base, k);
}

// poch_ratio(num, den, base, k) * z^k memoized for sequential k (0, 1, 2, ... or -1, -2, ...).
class RatioSeq {
 public:
  RatioSeq(std::vector<Complex> num, std::vector<Complex> den, QBase base, Complex z = 1.0);
  Complex at(long k);
  // Same value in extended range.
  XComplex xat(long k);

 private:
  void advance(long k);

  std::vector<Complex> num_, den_;
  QBase base_;
  Complex z_;
  long k_ = 0;
  XComplex val_{1.0};
  bool dead_ = false;  // value frozen at 0
};

}  // namespace qbilat
