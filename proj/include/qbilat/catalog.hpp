#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qbilat/qcore.hpp"
#include "qbilat/series.hpp"

namespace qbilat {

// A parameter assignment: the base q plus named continuous and integer slots.
struct ParamSet {
  Complex q{0.5};
  std::map<std::string, Complex> values;
  std::map<std::string, long> ints;

  // InvalidArgument when the slot is missing.
  Complex v(const std::string& name) const;
  long n(const std::string& name) const;

  friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

enum class SlotRole { Continuous, NonnegInteger, Integer };

struct Slot {
  std::string name;
  SlotRole role = SlotRole::Continuous;
  long lo = 0, hi = 0;    // sampling range of integer slots
  bool real = false;      // continuous slot restricted to the real line
  bool positive = false;  // ... and to positive values
  bool base_like = false; // sampled like q (a second base)
};

const char* role_name(SlotRole r) noexcept;

// Screens keep parameters away from the points where a factor of either side
// blows up. Point: |1 - x| > margin. Forward: 1 - x q^m away from 0 for m >= 0.
// Lattice: the same for every integer m.
enum class GuardKind { Point, Forward, Lattice };

struct GuardArg {
  Complex x;
  GuardKind kind;
  Complex base{0.0};  // lattice base; 0 selects q
};

using SideFn = std::function<Complex(const ParamSet&, const TruncationPolicy&)>;
using ListFn = std::function<std::vector<Complex>(const ParamSet&)>;
using GuardFn = std::function<std::vector<GuardArg>(const ParamSet&)>;

struct IdentityRecord {
  std::string id;
  std::string title;
  std::string anchor;  // verbatim phrase locating the identity in its source
  std::vector<Slot> slots;
  std::string region_text;
  ListFn region;   // every value must have modulus below 1
  GuardFn guards;
  std::function<bool(const ParamSet&)> sample_filter;  // extra sampling restriction
  bool exact = false;  // both sides finite; verified at the tighter tolerance
  SideFn lhs;
  SideFn rhs;
  std::vector<std::string> links;
  std::vector<IdentityRecord> sub_records;

  // region_margin bounds every region modulus; pole_margin bounds every guard gap.
  bool admissible(const ParamSet& p, double region_margin = 1.0, double pole_margin = 1e-8) const;
  // Names and ranges of all slots present in p, and q inside the unit disc.
  bool complete(const ParamSet& p) const;
};

struct ResidualResult {
  Complex lhs;
  Complex rhs;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
};

ResidualResult make_residual(Complex lhs, Complex rhs);

// Top-level records in id order (sub-records are reachable through find_identity).
const std::vector<IdentityRecord>& list_identities();
// UnknownIdentity if absent; searches sub-records too.
const IdentityRecord& find_identity(const std::string& id);

ResidualResult eval_identity(const std::string& id, const ParamSet& params,
                             const TruncationPolicy& trunc = {});
ResidualResult eval_record(const IdentityRecord& rec, const ParamSet& params,
                           const TruncationPolicy& trunc = {});

// A specialization chain: `general` taken at a special point must reproduce
// `special`. Points are drawn in the slots of `special` (plus extra_slots) and
// mapped into the slots of `general`.
struct SpecializationLink {
  std::string id;
  std::string general;
  std::string special;
  std::string description;
  std::vector<Slot> extra_slots;
  std::function<ParamSet(const ParamSet&)> to_general;
  // General side (after any normalization) against the special side.
  std::function<ResidualResult(const ParamSet&, const TruncationPolicy&)> cross;
  double tol = 1e-9;
};

const std::vector<SpecializationLink>& list_links();
const SpecializationLink& find_link(const std::string& id);
// NotAdmissible if the point fails either identity's predicate.
ResidualResult specialization_check(const SpecializationLink& link, const ParamSet& params,
                                    const TruncationPolicy& trunc = {});

// Mutation support: the record with its RHS scaled by `factor`.
IdentityRecord scaled_rhs(const IdentityRecord& rec, Complex factor);

}  // namespace qbilat
