#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qbilat/catalog.hpp"
#include "qbilat/inversion.hpp"

namespace qbilat {

struct SampleDomain {
  double q_lo = 0.1, q_hi = 0.75;
  double mag_lo = 0.3, mag_hi = 3.0;
  double complex_fraction = 0.2;  // share of samples whose continuous slots get a random phase
  double pole_margin = 1e-3;
  double region_margin = 0.98;
  // Samples whose summed magnitudes exceed the result by more than this factor are
  // rejected: double precision cannot certify a residual there.
  double max_condition = 1e5;
  // Slot values pinned on every draw; integer slots take the rounded real part.
  std::map<std::string, Complex> fixed;

  // InvalidArgument on empty intervals or q outside (0, 1).
  void validate() const;
};

// Deterministic rejection sampler over a slot list.
class Sampler {
 public:
  using Accept = std::function<bool(const ParamSet&)>;

  Sampler(std::vector<Slot> slots, Accept accept, const SampleDomain& domain, std::uint64_t seed,
          std::string label);

  // Next accepted assignment, or nullopt once the rejection budget is spent.
  std::optional<ParamSet> next();
  void set_budget(long max_rejections) { budget_ = max_rejections; }
  long rejected() const noexcept { return rejected_; }
  // Count a candidate that passed `accept` but was discarded later.
  void reject_last() { ++rejected_; }

 private:
  ParamSet draw();

  std::vector<Slot> slots_;
  Accept accept_;
  SampleDomain dom_;
  std::mt19937_64 rng_;
  long rejected_ = 0;
  long budget_ = 0;
};

std::uint64_t seed_for(std::uint64_t seed, const std::string& label);

// n admissible assignments of the record's slots; RegionTooThin after 1000 n rejections.
std::vector<ParamSet> sample_params(const std::string& id, const SampleDomain& domain,
                                    std::uint64_t seed, int n);

struct VerificationReport {
  std::string id;
  std::string kind;  // identity | specialization | orthogonality
  std::uint64_t seed = 0;
  double tol = 0.0;
  long requested = 0, accepted = 0, rejected = 0;
  long ill_conditioned = 0;  // part of rejected
  double max_rel_residual = 0.0;
  double mean_rel_residual = 0.0;
  ParamSet worst_sample;
  TruncationPolicy truncation;
  std::string error;  // first evaluation failure, if any
  bool pass = false;
};

inline constexpr double kDefaultTol = 1e-8;
inline constexpr double kExactTol = 1e-10;

// Exact records are held to min(tol, kExactTol).
double record_tolerance(const IdentityRecord& rec, double tol);

VerificationReport verify_identity(const std::string& id, const SampleDomain& domain,
                                   std::uint64_t seed, int n, double tol = kDefaultTol,
                                   const TruncationPolicy& trunc = {});
// Same, for a record object (used for mutated copies).
VerificationReport verify_record(const IdentityRecord& rec, const SampleDomain& domain,
                                 std::uint64_t seed, int n, double tol = kDefaultTol,
                                 const TruncationPolicy& trunc = {});
VerificationReport verify_link(const SpecializationLink& link, const SampleDomain& domain,
                               std::uint64_t seed, int n, double tol = kDefaultTol,
                               const TruncationPolicy& trunc = {});
// Max |residual| over both orthogonality grids on [-r, r]^2 for n sampled (a, b, c, q).
VerificationReport verify_matrix_inverse(const SampleDomain& domain, std::uint64_t seed, int n,
                                         long index_radius, double tol = kDefaultTol,
                                         const TruncationPolicy& trunc = {});

struct VerifyAllOptions {
  int identity_samples = 20;
  int link_samples = 10;
  int inverse_samples = 10;
  long inverse_radius = 3;
};

// Every record, every link, then the matrix inverse, in that order.
std::vector<VerificationReport> verify_all(const SampleDomain& domain, std::uint64_t seed,
                                           double tol = kDefaultTol,
                                           const TruncationPolicy& trunc = {},
                                           const VerifyAllOptions& opt = {});

}  // namespace qbilat
