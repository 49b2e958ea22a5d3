#include "qbilat/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qbilat {

namespace {

constexpr long kRecompute = 64;
constexpr long kLatticeSearch = 1L << 20;

bool near(Complex x, Complex y, double tol = 1e-10) {
  return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y));
}

Complex prod_of(const std::vector<Complex>& v) {
  Complex r = 1.0;
  for (const Complex& x : v) r *= x;
  return r;
}

struct Ratio {
  Complex num = 1.0;
  Complex den = 1.0;
};

// Forward step t_{k+1}/t_k without the vwp factor, powers supplied by the caller.
Ratio forward_ratio(const SeriesSpec& s, Complex qk, Complex qk2) {
  const auto& p = s.parts();
  Ratio r;
  for (const Complex& a : p.upper) r.num *= one_minus(a * qk);
  for (const Complex& x : p.upper2) r.num *= one_minus(x * qk2);
  for (const Complex& b : p.lower) r.den *= one_minus(b * qk);
  for (const Complex& x : p.lower2) r.den *= one_minus(x * qk2);
  if (s.kind() == SeriesKind::Unilateral) r.den *= one_minus(qk * s.base().q());
  r.num *= s.argument();
  return r;
}

// Backward step t_{-n-1}/t_{-n} for y = q^{n+1}; with vwp the extra q^{-2}
// keeps the scaled base term bounded (see sum_backward).
Ratio backward_ratio(const SeriesSpec& s, Complex y) {
  const auto& p = s.parts();
  const Complex w = y * y;
  Ratio r;
  for (const Complex& b : p.lower) r.num *= minus_snapped(y, b);
  for (const Complex& x : p.lower2) r.num *= minus_snapped(w, x);
  for (const Complex& a : p.upper) r.den *= minus_snapped(y, a);
  for (const Complex& x : p.upper2) r.den *= minus_snapped(w, x);
  r.den *= s.argument();
  if (p.vwp) {
    const Complex q = s.base().q();
    r.den *= q * q;
  }
  return r;
}

struct DirState {
  Complex sum = 0.0;
  double abs_sum = 0.0;
  long terms = 0;
  EvalStatus status = EvalStatus::Converged;
};

void step_term(Complex base, Ratio r, Complex& next, bool& killed) {
  if (base == 0.0) {
    next = 0.0;
    killed = true;
    return;
  }
  if (r.num == 0.0) {
    next = 0.0;
    killed = true;
    return;
  }
  if (r.den == 0.0) throw Error(Errc::PoleInTerm, "vanishing denominator factor");
  next = base * (r.num / r.den);
  killed = false;
}

bool tail_done(Complex prev, Complex cur, Complex sum, const TruncationPolicy& tr) {
  const double ap = std::abs(prev);
  return ap < tr.eps_term * std::max(1.0, std::abs(sum)) && std::abs(cur) < tr.tail_ratio_guard * ap;
}

DirState sum_forward(const SeriesSpec& s, const TruncationPolicy& tr) {
  const Complex q = s.base().q();
  const auto& vwp = s.parts().vwp;
  const Complex vden = vwp ? one_minus(*vwp) : Complex(1.0);
  if (vwp && vden == 0.0) throw Error(Errc::DegenerateSpecialParameter, "special parameter a = 1");
  auto full = [&](Complex base, Complex qk2) {
    return vwp ? base * one_minus(*vwp * qk2) / vden : base;
  };

  DirState st;
  Complex base = 1.0;
  Complex qk = 1.0;
  Complex term = full(base, 1.0);
  st.sum = term;
  st.abs_sum = std::abs(term);
  st.terms = 1;
  for (long k = 0;; ++k) {
    if (st.terms >= tr.max_terms_per_direction) {
      st.status = EvalStatus::MaxTermsHit;
      return st;
    }
    Complex nb;
    bool killed;
    step_term(base, forward_ratio(s, qk, qk * qk), nb, killed);
    if (killed) {
      st.status = EvalStatus::Terminated;
      return st;
    }
    const long kn = k + 1;
    qk *= q;
    if (kn % kRecompute == 0) {
      qk = ipow(q, kn);
      Complex fresh = 1.0;
      for (long j = 0; j < kn; ++j) {
        const Complex qj = ipow(q, j);
        const Ratio r = forward_ratio(s, qj, qj * qj);
        fresh *= r.num / r.den;
      }
      nb = fresh;
    }
    const Complex nt = full(nb, qk * qk);
    st.sum += nt;
    st.abs_sum += std::abs(nt);
    ++st.terms;
    const bool done = tail_done(term, nt, st.sum, tr);
    base = nb;
    term = nt;
    if (done) return st;
  }
}

DirState sum_backward(const SeriesSpec& s, const TruncationPolicy& tr) {
  const Complex q = s.base().q();
  const auto& vwp = s.parts().vwp;
  const Complex vden = vwp ? one_minus(*vwp) : Complex(1.0);
  if (vwp && vden == 0.0) throw Error(Errc::DegenerateSpecialParameter, "special parameter a = 1");
  // With vwp the tracked base carries an extra q^{2n}, so t_{-n} = base * (q^{2n} - a)/(1 - a).
  auto full = [&](Complex base, Complex y2) {
    return vwp ? base * minus_snapped(y2, *vwp) / vden : base;
  };

  DirState st;
  Complex base = 1.0;
  Complex prev_term = full(1.0, 1.0);  // t_0, used only for the tail test
  Complex y = 1.0;
  bool first = true;
  for (long n = 0;; ++n) {
    if (st.terms >= tr.max_terms_per_direction) {
      st.status = EvalStatus::MaxTermsHit;
      return st;
    }
    y *= q;  // q^{n+1}
    if ((n + 1) % kRecompute == 0) y = ipow(q, n + 1);
    Complex nb;
    bool killed;
    step_term(base, backward_ratio(s, y), nb, killed);
    if (killed) {
      st.status = EvalStatus::Terminated;
      return st;
    }
    if ((n + 1) % kRecompute == 0) {
      Complex fresh = 1.0;
      for (long j = 1; j <= n + 1; ++j) {
        const Ratio r = backward_ratio(s, ipow(q, j));
        fresh *= r.num / r.den;
      }
      nb = fresh;
    }
    const Complex nt = full(nb, y * y);
    st.sum += nt;
    st.abs_sum += std::abs(nt);
    ++st.terms;
    const bool done = !first && tail_done(prev_term, nt, st.sum, tr);
    first = false;
    base = nb;
    prev_term = nt;
    if (done) return st;
  }
}

EvalResult combine(const DirState& f, const DirState* b) {
  EvalResult r;
  r.value = f.sum + (b ? b->sum : Complex(0.0));
  r.terms_forward = f.terms;
  r.terms_backward = b ? b->terms : 0;
  r.abs_sum = f.abs_sum + (b ? b->abs_sum : 0.0);
  // the tail test is absolute below |sum| = 1, so a truncated sum is only known to that scale
  MagnitudeProbe::note(r.status == EvalStatus::Terminated ? r.abs_sum : std::max(r.abs_sum, 1.0),
                       std::abs(r.value));
  const bool hit = f.status == EvalStatus::MaxTermsHit || (b && b->status == EvalStatus::MaxTermsHit);
  const bool conv = f.status == EvalStatus::Converged || (b && b->status == EvalStatus::Converged);
  r.status = hit ? EvalStatus::MaxTermsHit : conv ? EvalStatus::Converged : EvalStatus::Terminated;
  return r;
}

void check_kind(const SeriesSpec& s, SeriesKind k, const char* who) {
  if (s.kind() != k) throw Error(Errc::InvalidSpec, std::string(who) + ": wrong series kind");
}

}  // namespace

namespace {
thread_local MagnitudeProbe* active_probe = nullptr;
}  // namespace

MagnitudeProbe::MagnitudeProbe() : prev_(active_probe) { active_probe = this; }

MagnitudeProbe::~MagnitudeProbe() {
  active_probe = prev_;
  if (prev_) {
    prev_->mag_ = std::max(prev_->mag_, mag_);
    prev_->cond_ = std::max(prev_->cond_, cond_);
  }
}

void MagnitudeProbe::note(double magnitude, double result) {
  if (!active_probe) return;
  MagnitudeProbe& p = *active_probe;
  if (!(magnitude <= p.mag_)) p.mag_ = magnitude;
  if (magnitude == 0.0) return;
  const double c = result == 0.0 ? std::numeric_limits<double>::infinity() : magnitude / result;
  if (!(c <= p.cond_)) p.cond_ = c;
}

void TruncationPolicy::validate() const {
  if (!(eps_term > 0.0)) throw Error(Errc::InvalidArgument, "eps_term must be positive");
  if (max_terms_per_direction < 1) throw Error(Errc::InvalidArgument, "max_terms_per_direction < 1");
  if (!(tail_ratio_guard > 0.0 && tail_ratio_guard <= 1.0))
    throw Error(Errc::InvalidArgument, "tail_ratio_guard must lie in (0, 1]");
}

SeriesSpec SeriesSpec::make(SeriesKind kind, SeriesParts parts, QBase base, Complex z) {
  const std::size_t extra = parts.vwp ? 2 : 0;
  const std::size_t nu = parts.upper.size() + 2 * parts.upper2.size() + extra;
  const std::size_t nl = parts.lower.size() + 2 * parts.lower2.size() + extra;
  if (kind == SeriesKind::Unilateral && nu != nl + 1)
    throw Error(Errc::InvalidSpec, "unilateral series needs |upper| = |lower| + 1");
  if (kind == SeriesKind::Bilateral && nu != nl)
    throw Error(Errc::InvalidSpec, "bilateral series needs |upper| = |lower|");
  SeriesSpec s(kind, std::move(parts), base, z);
  if (kind == SeriesKind::Unilateral) {
    if (auto n = s.termination_index()) {
      const Complex q = base.q();
      for (const Complex& b : s.parts_.lower)
        if (lattice_hit(b, q, 0, *n - 1))
          throw Error(Errc::PoleInTerm, "lower parameter at q^{-m} below the termination index");
      for (const Complex& x : s.parts_.lower2)
        if (lattice_hit(x, q * q, 0, *n - 1))
          throw Error(Errc::PoleInTerm, "lower parameter at q^{-2m} below the termination index");
    }
  }
  return s;
}

SeriesSpec SeriesSpec::unilateral(std::vector<Complex> upper, std::vector<Complex> lower,
                                  QBase base, Complex z) {
  return make(SeriesKind::Unilateral, SeriesParts{std::move(upper), std::move(lower), {}, {}, {}},
              base, z);
}

SeriesSpec SeriesSpec::bilateral(std::vector<Complex> upper, std::vector<Complex> lower,
                                 QBase base, Complex z) {
  return make(SeriesKind::Bilateral, SeriesParts{std::move(upper), std::move(lower), {}, {}, {}},
              base, z);
}

std::optional<long> SeriesSpec::termination_index() const {
  const Complex q = base_.q();
  std::optional<long> best;
  auto consider = [&](std::optional<long> j) {
    if (j && (!best || *j < *best)) best = j;
  };
  for (const Complex& a : parts_.upper) consider(lattice_hit(a, q, 0, kLatticeSearch));
  for (const Complex& x : parts_.upper2) consider(lattice_hit(x, q * q, 0, kLatticeSearch));
  return best;
}

std::optional<long> SeriesSpec::back_termination_index() const {
  if (kind_ != SeriesKind::Bilateral) return std::nullopt;
  const Complex q = base_.q();
  std::optional<long> best;
  auto consider = [&](std::optional<long> j) {
    if (j && (!best || -*j < *best)) best = -*j;
  };
  for (const Complex& b : parts_.lower) consider(lattice_hit(b, q, -kLatticeSearch, -1));
  for (const Complex& x : parts_.lower2) consider(lattice_hit(x, q * q, -kLatticeSearch, -1));
  return best;
}

std::vector<Complex> SeriesSpec::expanded_upper() const {
  std::vector<Complex> out;
  const Complex q = base_.q();
  if (parts_.vwp) {
    const Complex r = std::sqrt(*parts_.vwp);
    if (kind_ == SeriesKind::Unilateral) {
      out.push_back(*parts_.vwp);
      out.push_back(q * r);
      out.push_back(-q * r);
    } else {
      out.push_back(q * r);
      out.push_back(-q * r);
    }
  }
  bool skip_special = kind_ == SeriesKind::Unilateral && parts_.vwp;
  for (const Complex& a : parts_.upper) {
    // the special parameter already leads the unilateral list
    if (skip_special && near(a, *parts_.vwp, 1e-15)) {
      skip_special = false;
      continue;
    }
    out.push_back(a);
  }
  for (const Complex& x : parts_.upper2) {
    const Complex r = std::sqrt(x);
    out.push_back(r);
    out.push_back(-r);
  }
  return out;
}

std::vector<Complex> SeriesSpec::expanded_lower() const {
  std::vector<Complex> out;
  if (parts_.vwp) {
    const Complex r = std::sqrt(*parts_.vwp);
    out.push_back(r);
    out.push_back(-r);
  }
  for (const Complex& b : parts_.lower) out.push_back(b);
  for (const Complex& x : parts_.lower2) {
    const Complex r = std::sqrt(x);
    out.push_back(r);
    out.push_back(-r);
  }
  return out;
}

Classification classify(const SeriesSpec& spec) {
  Classification c;
  const auto up = spec.expanded_upper();
  const auto lo = spec.expanded_lower();
  const Complex q = spec.base().q();
  const Complex z = spec.argument();
  if (up.empty()) return c;
  if (spec.kind() == SeriesKind::Unilateral) {
    c.balanced = near(z, q) && near(prod_of(lo), prod_of(up) * q);
    if (up.size() >= 2) {
      c.well_poised = true;
      for (std::size_t i = 1; i < up.size(); ++i)
        c.well_poised = c.well_poised && near(up[0] * q, up[i] * lo[i - 1]);
    }
    c.very_well_poised = c.well_poised && up.size() >= 3 && near(up[1] * up[1], q * q * up[0]) &&
                         near(up[1], -up[2]);
  } else {
    c.balanced = near(z, q) && near(prod_of(lo), prod_of(up) * q * q);
    c.well_poised = true;
    for (std::size_t i = 1; i < up.size(); ++i)
      c.well_poised = c.well_poised && near(up[0] * lo[0], up[i] * lo[i]);
    c.very_well_poised = c.well_poised && up.size() >= 2 && near(up[0], -up[1]) &&
                         near(up[0], q * lo[0]) && near(up[0], -q * lo[1]);
  }
  return c;
}

EvalResult eval_phi(const SeriesSpec& spec, const TruncationPolicy& trunc) {
  check_kind(spec, SeriesKind::Unilateral, "eval_phi");
  trunc.validate();
  if (!spec.termination_index() && !(std::abs(spec.argument()) < 1.0))
    throw Error(Errc::Divergent, "nonterminating series with |z| >= 1");
  const DirState f = sum_forward(spec, trunc);
  return combine(f, nullptr);
}

EvalResult eval_psi(const SeriesSpec& spec, const TruncationPolicy& trunc) {
  check_kind(spec, SeriesKind::Bilateral, "eval_psi");
  trunc.validate();
  const auto& p = spec.parts();
  const double az = std::abs(spec.argument());
  if (!spec.termination_index() && !(az < 1.0))
    throw Error(Errc::Divergent, "forward tail diverges (|z| >= 1)");
  if (!spec.back_termination_index()) {
    double ratio = std::abs(prod_of(p.lower)) * std::abs(prod_of(p.lower2));
    const double den = std::abs(prod_of(p.upper)) * std::abs(prod_of(p.upper2));
    ratio = den == 0.0 ? INFINITY : ratio / den;
    if (p.vwp) ratio /= std::norm(spec.base().q());
    if (!(ratio < az)) throw Error(Errc::Divergent, "backward tail diverges (|b/a| >= |z|)");
  }
  const DirState f = sum_forward(spec, trunc);
  const DirState b = sum_backward(spec, trunc);
  return combine(f, &b);
}

EvalResult eval_series(const SeriesSpec& spec, const TruncationPolicy& trunc) {
  return spec.kind() == SeriesKind::Unilateral ? eval_phi(spec, trunc) : eval_psi(spec, trunc);
}

EvalResult eval_custom_bilateral(const TermFn& term, const TruncationPolicy& trunc) {
  trunc.validate();
  constexpr int kMaxRise = 50;
  DirState dirs[2];
  for (int d = 0; d < 2; ++d) {
    DirState& st = dirs[d];
    double m2 = 0.0, m1 = 0.0;  // |t| two and one steps back
    int rise = 0;
    for (long i = 0;; ++i) {
      if (st.terms >= trunc.max_terms_per_direction) {
        st.status = EvalStatus::MaxTermsHit;
        break;
      }
      const long k = d == 0 ? i : -(i + 1);
      const Complex t = term(k);
      if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
        throw Error(Errc::Divergent, "non-finite term at k=" + std::to_string(k));
      st.sum += t;
      ++st.terms;
      const double m0 = std::abs(t);
      st.abs_sum += m0;
      if (i >= 1 && m0 > 0.0 && m0 >= m1) {
        if (++rise >= kMaxRise) throw Error(Errc::NonDecayingTail, "terms stopped decaying");
      } else {
        rise = 0;
      }
      if (i >= 2) {
        const double lim = trunc.eps_term * std::max(1.0, std::abs(st.sum));
        const double ratio = m2 > 0.0 ? std::sqrt(m0 / m2) : 0.0;
        if (m0 <= lim && m1 <= lim && m2 <= lim && ratio < trunc.tail_ratio_guard) {
          st.status = (m0 == 0.0 && m1 == 0.0 && m2 == 0.0) ? EvalStatus::Terminated
                                                              : EvalStatus::Converged;
          break;
        }
      }
      m2 = m1;
      m1 = m0;
    }
  }
  return combine(dirs[0], &dirs[1]);
}

const char* status_name(EvalStatus s) noexcept {
  switch (s) {
    case EvalStatus::Converged: return "Converged";
    case EvalStatus::Terminated: return "Terminated";
    case EvalStatus::MaxTermsHit: return "MaxTermsHit";
  }
  return "?";
}

}  // namespace qbilat
