#include "qbilat/inversion.hpp"

#include <array>
#include <cmath>

namespace qbilat {

namespace {

constexpr long kScreenDepth = 1L << 20;

Complex entry_ratio(Complex num, Complex den, const QBase& base, long k) {
  try {
    return poch_ratio({num}, {den}, base, k);
  } catch (const Error& e) {
    if (e.code() == Errc::PoleInTerm) throw Error(Errc::PrefactorPole, e.what());
    throw;
  }
}

}  // namespace

InverseParams InverseParams::make(Complex a, Complex b, Complex c, QBase base, double margin) {
  if (a == 0.0 || b == 0.0 || c == 0.0)
    throw Error(Errc::InvalidInverseParams, "a, b and c must be nonzero");
  if (std::abs(1.0 - a) <= margin) throw Error(Errc::InvalidInverseParams, "a = 1");
  if (std::abs(1.0 - b * c / a) <= margin) throw Error(Errc::InvalidInverseParams, "bc/a = 1");
  const Complex q = base.q();
  const std::array<Complex, 8> num{a * q / b, b * q / a, a * q / c, c * q / a,
                                   b * q,     q / b,     c * q,     q / c};
  const std::array<Complex, 8> den{q,          q,          a * q,     q / a,
                                   a * q / (b * c), b * c * q / a, c * q / b, b * q / c};
  for (const auto* list : {&num, &den})
    for (const Complex& x : *list)
      if (!(lattice_gap(x, q, 0, kScreenDepth) > margin))
        throw Error(Errc::InvalidInverseParams, "argument too close to the lattice q^{-m}");
  Complex pre = 1.0;
  for (const Complex& x : num) pre *= qpoch_inf(x, base);
  for (const Complex& x : den) pre /= qpoch_inf(x, base);
  return InverseParams(a, b, c, base, pre);
}

Complex f_entry(const InverseParams& p, long n, long k) {
  const Complex a = p.a(), b = p.b(), c = p.c(), q = p.base().q();
  const Complex lead = (1.0 - b * c * ipow(q, 2 * n) / a) / (1.0 - b * c / a);
  const Complex r1 = entry_ratio(b, c * q, p.base(), n + k);
  if (r1 == 0.0) return 0.0;
  const Complex r2 = entry_ratio(a / c, a * q / b, p.base(), k - n);
  return p.prefactor() * lead * r1 * r2;
}

Complex g_entry(const InverseParams& p, long k, long l) {
  const Complex a = p.a(), b = p.b(), c = p.c(), q = p.base().q();
  const Complex r1 = entry_ratio(c, b * q, p.base(), k + l);
  if (r1 == 0.0) return 0.0;
  const Complex r2 = entry_ratio(a / b, a * q / c, p.base(), k - l);
  return vwp_factor(a, p.base(), k) * r1 * r2 * ipow(q, k - l);
}

Complex orthogonality_residual(const InverseParams& p, long n, long l,
                               const TruncationPolicy& trunc) {
  const auto r = eval_custom_bilateral(
      [&](long k) {
        const Complex f = f_entry(p, n, k);
        return f == 0.0 ? Complex(0.0) : f * g_entry(p, k, l);
      },
      trunc);
  return r.value - (n == l ? 1.0 : 0.0);
}

Complex dual_orthogonality_residual(const InverseParams& p, long k, long j,
                                    const TruncationPolicy& trunc) {
  const auto r = eval_custom_bilateral(
      [&](long l) {
        const Complex g = g_entry(p, k, l);
        return g == 0.0 ? Complex(0.0) : g * f_entry(p, l, j);
      },
      trunc);
  return r.value - (k == j ? 1.0 : 0.0);
}

}  // namespace qbilat
