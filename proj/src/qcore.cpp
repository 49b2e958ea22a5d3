#include "qbilat/qcore.hpp"

#include <algorithm>
#include <cmath>

namespace qbilat {

namespace {

constexpr int kMaxInfFactors = 200000;
constexpr long kResync = 16;

}  // namespace

QBase::QBase(Complex q) : q_(q) {
  const double m = std::abs(q);
  if (!(m > 0.0 && m < 1.0)) throw Error(Errc::InvalidBase, "need 0 < |q| < 1");
}

Complex ipow(Complex z, long n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  Complex r = 1.0;
  while (n) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

Complex one_minus(Complex x) {
  const Complex f = 1.0 - x;
  if (f == 0.0 || std::abs(f) <= kSnapTol * (std::abs(x) + 1.0)) return 0.0;
  return f;
}

Complex minus_snapped(Complex y, Complex b) {
  const Complex d = y - b;
  if (d == 0.0 || std::abs(d) <= kSnapTol * (std::abs(y) + std::abs(b))) return 0.0;
  return d;
}

namespace {

// Candidate exponents j in [lo, hi] where |x q^j| is closest to 1.
template <class F>
void near_unit_exponents(Complex x, Complex q, long lo, long hi, F&& visit) {
  if (lo > hi) return;
  const double ax = std::abs(x);
  long c = lo;
  if (ax > 0.0) {
    const double j0 = -std::log(ax) / std::log(std::abs(q));
    if (std::isfinite(j0)) c = static_cast<long>(std::llround(std::clamp(j0, -1e15, 1e15)));
  }
  long prev = lo - 1;
  for (long j = c - 1; j <= c + 1; ++j) {
    const long jj = std::clamp(j, lo, hi);
    if (jj == prev) continue;
    prev = jj;
    if (visit(jj)) return;
  }
}

}  // namespace

std::optional<long> lattice_hit(Complex x, Complex q, long lo, long hi) {
  std::optional<long> hit;
  near_unit_exponents(x, q, lo, hi, [&](long j) {
    if (one_minus(x * ipow(q, j)) == 0.0) {
      hit = j;
      return true;
    }
    return false;
  });
  return hit;
}

double lattice_gap(Complex x, Complex q, long lo, long hi) {
  double best = INFINITY;
  near_unit_exponents(x, q, lo, hi, [&](long j) {
    best = std::min(best, std::abs(1.0 - x * ipow(q, j)));
    return false;
  });
  return best;
}

Complex PochResult::value() const {
  if (pole_) throw Error(Errc::PoleInTerm, "value() on a pole");
  return value_;
}

Complex qpoch_inf(Complex a, const QBase& base, double eps) {
  if (!(eps > 0.0)) throw Error(Errc::InvalidArgument, "eps must be positive");
  const Complex q = base.q();
  Complex prod = 1.0;
  Complex x = a;
  int agree = 0;
  for (long j = 0; j < kMaxInfFactors; ++j) {
    if (j % kResync == 0) x = a * ipow(q, j);
    const Complex f = one_minus(x);
    if (f == 0.0) return 0.0;
    const Complex next = prod * f;
    if (std::abs(x) < eps) {
      agree = std::abs(next - prod) <= eps * std::abs(next) ? agree + 1 : 0;
      if (agree >= 2) return next;
    }
    prod = next;
    x *= q;
  }
  return prod;
}

PochResult qpoch(Complex a, const QBase& base, long k) {
  const Complex q = base.q();
  if (k >= 0) {
    Complex prod = 1.0;
    Complex x = a;
    for (long j = 0; j < k; ++j) {
      if (j % kResync == 0) x = a * ipow(q, j);
      prod *= one_minus(x);
      x *= q;
    }
    return PochResult::finite(prod);
  }
  // (a;q)_{-n} = 1 / prod_{j=1}^{n} (1 - a q^{-j})
  const long n = -k;
  const Complex qi = 1.0 / q;
  Complex prod = 1.0;
  Complex x = a * qi;
  for (long j = 1; j <= n; ++j) {
    if (j % kResync == 0) x = a * ipow(q, -j);
    prod *= one_minus(x);
    x *= qi;
  }
  if (prod == 0.0) return PochResult::pole();
  return PochResult::finite(1.0 / prod);
}

PochProduct& PochProduct::operator*=(const PochResult& r) {
  if (r.is_pole()) {
    pole_ = true;
    return *this;
  }
  return *this *= r.value();
}

PochProduct& PochProduct::operator*=(Complex v) {
  if (v == 0.0) zero_ = true;
  value_ *= v;
  return *this;
}

PochResult PochProduct::result() const {
  if (pole_ && zero_) throw Error(Errc::AmbiguousZeroTimesPole, "0 * pole in product");
  if (pole_) return PochResult::pole();
  return PochResult::finite(zero_ ? Complex(0.0) : value_);
}

PochResult qpoch_multi(std::span<const Complex> as, const QBase& base, PochIndex k) {
  PochProduct p;
  for (const Complex& a : as) {
    if (k.is_infinite())
      p *= qpoch_inf(a, base);
    else
      p *= qpoch(a, base, k.k());
  }
  return p.result();
}

Complex quotient(const PochResult& num, const PochResult& den) {
  if (num.is_pole()) throw Error(Errc::PoleInTerm, "pole in numerator");
  if (den.is_pole()) return 0.0;
  return num.value() / den.value();
}

Complex vwp_factor(Complex a, const QBase& base, long k) {
  const Complex d = one_minus(a);
  if (d == 0.0) throw Error(Errc::DegenerateSpecialParameter, "special parameter a = 1");
  return one_minus(a * ipow(base.q(), 2 * k)) / d;
}

Complex inf_product(std::initializer_list<Complex> as, const QBase& base) {
  Complex r = 1.0;
  for (const Complex& a : as) r *= qpoch_inf(a, base);
  return r;
}

Complex inf_ratio(std::initializer_list<Complex> num, std::initializer_list<Complex> den,
                  const QBase& base) {
  return inf_product(num, base) / inf_product(den, base);
}

namespace {

enum class StepEvent { None, Kill, Pole };

struct Step {
  Complex f = 1.0;
  StepEvent ev = StepEvent::None;
};

// j >= 0: factor from index j to j+1 at qj = q^j.
Step forward_step(std::span<const Complex> num, std::span<const Complex> den, Complex qj) {
  Complex n = 1.0, d = 1.0;
  for (const Complex& a : num) n *= one_minus(a * qj);
  if (n == 0.0) return {0.0, StepEvent::Kill};
  for (const Complex& b : den) d *= one_minus(b * qj);
  if (d == 0.0) return {0.0, StepEvent::Pole};
  return {n / d, StepEvent::None};
}

// m >= 1: factor from index -m+1 to -m at y = q^m.
Step backward_step(std::span<const Complex> num, std::span<const Complex> den, Complex y) {
  Complex n = 1.0, d = 1.0;
  for (const Complex& b : den) n *= minus_snapped(y, b);
  if (n == 0.0) return {0.0, StepEvent::Kill};
  for (const Complex& a : num) d *= minus_snapped(y, a);
  if (d == 0.0) return {0.0, StepEvent::Pole};
  const long extra = static_cast<long>(num.size()) - static_cast<long>(den.size());
  Complex f = n / d;
  if (extra != 0) f *= ipow(y, extra);
  return {f, StepEvent::None};
}

}  // namespace

Complex poch_ratio(std::span<const Complex> num, std::span<const Complex> den, const QBase& base,
                   long k) {
  const Complex q = base.q();
  Complex val = 1.0;
  if (k >= 0) {
    Complex qj = 1.0;
    for (long j = 0; j < k; ++j) {
      if (j % kResync == 0) qj = ipow(q, j);
      const Step s = forward_step(num, den, qj);
      if (s.ev == StepEvent::Kill) return 0.0;
      if (s.ev == StepEvent::Pole) throw Error(Errc::PoleInTerm, "denominator vanishes");
      val *= s.f;
      qj *= q;
    }
    return val;
  }
  Complex y = q;
  for (long m = 1; m <= -k; ++m) {
    if (m % kResync == 0) y = ipow(q, m);
    const Step s = backward_step(num, den, y);
    if (s.ev == StepEvent::Kill) return 0.0;
    if (s.ev == StepEvent::Pole) throw Error(Errc::PoleInTerm, "pole in numerator");
    val *= s.f;
    y *= q;
  }
  return val;
}

RatioSeq::RatioSeq(std::vector<Complex> num, std::vector<Complex> den, QBase base, Complex z)
    : num_(std::move(num)), den_(std::move(den)), base_(base), z_(z) {}

void RatioSeq::advance(long k) {
  const bool same_side = (k >= 0 && k_ >= 0 && k >= k_) || (k <= 0 && k_ <= 0 && k <= k_);
  if (!same_side) {
    k_ = 0;
    val_ = XComplex(1.0);
    dead_ = false;
  }
  const Complex q = base_.q();
  while (k_ != k) {
    if (dead_) {
      k_ = k;
      break;
    }
    Step s;
    Complex zf;
    if (k > k_) {
      s = forward_step(num_, den_, ipow(q, k_));
      ++k_;
      zf = z_;
    } else {
      --k_;
      s = backward_step(num_, den_, ipow(q, -k_));
      zf = 1.0 / z_;
    }
    if (s.ev == StepEvent::Kill) {
      dead_ = true;
      val_ = XComplex(0.0);
    } else if (s.ev == StepEvent::Pole) {
      throw Error(Errc::PoleInTerm, "pole while extending Pochhammer ratio");
    } else {
      val_ *= XComplex(s.f) * XComplex(zf);
    }
  }
}

Complex RatioSeq::at(long k) { return xat(k).value(); }

XComplex RatioSeq::xat(long k) {
  advance(k);
  return dead_ ? XComplex(0.0) : val_;
}

}  // namespace qbilat
