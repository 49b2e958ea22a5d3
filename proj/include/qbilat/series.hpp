#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qbilat/qcore.hpp"

namespace qbilat {

enum class SeriesKind { Unilateral, Bilateral };

// Parameter lists of a series. upper2/lower2 are base-q^2 parameters, each
// standing for a pair x, -x of base q ((x,-x;q)_k = (x^2;q^2)_k, so supply x^2).
// vwp holds the special parameter a of the factor (1 - a q^{2k})/(1 - a), which
// stands for the pairs q sqrt(a), -q sqrt(a) over sqrt(a), -sqrt(a).
struct SeriesParts {
  std::vector<Complex> upper;
  std::vector<Complex> lower;
  std::vector<Complex> upper2;
  std::vector<Complex> lower2;
  std::optional<Complex> vwp;
};

class SeriesSpec {
 public:
  static SeriesSpec make(SeriesKind kind, SeriesParts parts, QBase base, Complex z);
  static SeriesSpec unilateral(std::vector<Complex> upper, std::vector<Complex> lower,
                               QBase base, Complex z);
  static SeriesSpec bilateral(std::vector<Complex> upper, std::vector<Complex> lower,
                              QBase base, Complex z);

  SeriesKind kind() const noexcept { return kind_; }
  const SeriesParts& parts() const noexcept { return parts_; }
  const QBase& base() const noexcept { return base_; }
  Complex argument() const noexcept { return z_; }

  // Smallest N with an upper parameter at q^{-N} (all terms past N vanish).
  std::optional<long> termination_index() const;
  // Bilateral only: smallest m >= 1 with a lower parameter at q^m (terms k <= -m vanish).
  std::optional<long> back_termination_index() const;

  // Flat base-q lists (principal square roots) as written in the textbook form.
  std::vector<Complex> expanded_upper() const;
  std::vector<Complex> expanded_lower() const;

 private:
  SeriesSpec(SeriesKind kind, SeriesParts parts, QBase base, Complex z)
      : kind_(kind), parts_(std::move(parts)), base_(base), z_(z) {}

  SeriesKind kind_;
  SeriesParts parts_;
  QBase base_;
  Complex z_;
};

struct TruncationPolicy {
  double eps_term = 1e-14;
  long max_terms_per_direction = 2000;
  double tail_ratio_guard = 0.999;

  void validate() const;
};

enum class EvalStatus { Converged, Terminated, MaxTermsHit };

struct EvalResult {
  Complex value;
  long terms_forward = 0;
  long terms_backward = 0;
  double abs_sum = 0.0;  // sum of |term|; abs_sum / |value| measures cancellation
  EvalStatus status = EvalStatus::Converged;
};

struct Classification {
  bool balanced = false;
  bool well_poised = false;
  bool very_well_poised = false;
};

Classification classify(const SeriesSpec& spec);

EvalResult eval_phi(const SeriesSpec& spec, const TruncationPolicy& trunc = {});
EvalResult eval_psi(const SeriesSpec& spec, const TruncationPolicy& trunc = {});
// Dispatches on spec.kind().
EvalResult eval_series(const SeriesSpec& spec, const TruncationPolicy& trunc = {});

// While alive, collects on this thread what summations (and closed forms that subtract
// nearly equal quantities) report about cancellation: for each, the magnitude that was
// combined (sum of |term|, at least 1 unless the sum terminated) and its ratio to the result.
class MagnitudeProbe {
 public:
  MagnitudeProbe();
  ~MagnitudeProbe();
  MagnitudeProbe(const MagnitudeProbe&) = delete;
  MagnitudeProbe& operator=(const MagnitudeProbe&) = delete;

  // Largest combined magnitude.
  double magnitude() const noexcept { return mag_; }
  // Largest magnitude / |result| over the reports.
  double condition() const noexcept { return cond_; }
  // No-op without an active probe.
  static void note(double magnitude, double result);

 private:
  MagnitudeProbe* prev_;
  double mag_ = 0.0;
  double cond_ = 1.0;
};

using TermFn = std::function<Complex(long)>;
EvalResult eval_custom_bilateral(const TermFn& term, const TruncationPolicy& trunc = {});

const char* status_name(EvalStatus s) noexcept;

}  // namespace qbilat
