#pragma once

// Building blocks shared by the record definitions.

#include <initializer_list>
#include <vector>

#include "qbilat/catalog.hpp"

namespace qbilat::detail {

inline Complex qp(Complex q, long n) { return ipow(q, n); }

// Extended-range pieces for summands evaluated far out on slowly decaying tails.
inline XComplex xqp(Complex q, long n) { return XComplex::pow(q, n); }
// 1 - x w
inline XComplex om(Complex x, const XComplex& w) { return XComplex(1.0) - XComplex(x) * w; }
// (1 - a q^{2n})/(1 - a)
inline XComplex xvwp(Complex a, Complex q, long n) {
  return om(a, xqp(q, 2 * n)) / XComplex(1.0 - a);
}



// (q, aq, q/a, aq/bc, aq/bd, aq/be, aq/cd, aq/ce, aq/de)_inf over
// (aq/b, aq/c, aq/d, aq/e, q/b, q/c, q/d, q/e, a^2q/bcde)_inf
Complex bailey_products(Complex a, Complex b, Complex c, Complex d, Complex e, const QBase& h);

// Unilateral very-well-poised series with special parameter A:
// sum_k (1 - A q^{2k})/(1 - A) (A, up...)_k / (q, lo...)_k z^k,
// with base-q^2 factors (up2;q^2)_k/(lo2;q^2)_k.
Complex vwp_phi(Complex A, std::vector<Complex> up, std::vector<Complex> lo, const QBase& h,
                Complex z, const TruncationPolicy& t, std::vector<Complex> up2 = {},
                std::vector<Complex> lo2 = {});

// Bilateral very-well-poised series with special parameter a.
Complex vwp_psi(Complex a, std::vector<Complex> up, std::vector<Complex> lo, const QBase& h,
                Complex z, const TruncationPolicy& t);

// ratio(n) * pre * q^{n(n-1)/2} z^n
//   * (b q^{1+n}, b q^{1-n}/a, e^2 q^{2+n}/b, e^2 q^{2-n}/(ab); q^2)_inf,
// accumulated as a sum of logarithms since the factors over- and underflow separately.
Complex quad_term(RatioSeq& ratio, const XComplex& pre, Complex a, Complex b, Complex e, long n, Complex q,
                  Complex z);

// Guard list builder.
class Guards {
 public:
  Guards& point(std::initializer_list<Complex> xs);
  Guards& forward(std::initializer_list<Complex> xs);
  Guards& lattice(std::initializer_list<Complex> xs, Complex base = 0.0);
  std::vector<GuardArg> take() { return std::move(g_); }

 private:
  std::vector<GuardArg> g_;
};

Slot cont(const char* name);
Slot real_pos(const char* name);
Slot real_any(const char* name);
Slot nonneg(const char* name, long hi);
Slot integer(const char* name, long lo, long hi);
Slot base_like(const char* name);

std::vector<IdentityRecord> classical_records();
std::vector<IdentityRecord> theorem_records();
std::vector<IdentityRecord> corollary_records();

}  // namespace qbilat::detail
