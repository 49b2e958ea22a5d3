#pragma once

#include "qbilat/qcore.hpp"
#include "qbilat/series.hpp"

namespace qbilat {

// Parameters of the bilateral inverse pair (f, g). Immutable; the n,k-independent
// ratio of infinite products in f is computed once at construction.
class InverseParams {
 public:
  // margin: minimum |1 - x q^m| for every screened argument x (m >= 0).
  static InverseParams make(Complex a, Complex b, Complex c, QBase base, double margin = 1e-8);

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }
  Complex c() const noexcept { return c_; }
  const QBase& base() const noexcept { return base_; }
  Complex prefactor() const noexcept { return pre_; }

 private:
  InverseParams(Complex a, Complex b, Complex c, QBase base, Complex pre)
      : a_(a), b_(b), c_(c), base_(base), pre_(pre) {}

  Complex a_, b_, c_;
  QBase base_;
  Complex pre_;
};

Complex f_entry(const InverseParams& p, long n, long k);
Complex g_entry(const InverseParams& p, long k, long l);

// sum_k f_{nk} g_{kl} - delta_{nl}
Complex orthogonality_residual(const InverseParams& p, long n, long l,
                               const TruncationPolicy& trunc = {});
// sum_l g_{kl} f_{lj} - delta_{kj}
Complex dual_orthogonality_residual(const InverseParams& p, long k, long j,
                                    const TruncationPolicy& trunc = {});

}  // namespace qbilat
