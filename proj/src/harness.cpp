#include "qbilat/harness.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <thread>

namespace qbilat {

void SampleDomain::validate() const {
  if (!(q_lo > 0.0 && q_lo <= q_hi && q_hi < 1.0))
    throw Error(Errc::InvalidArgument, "q range must lie inside (0, 1)");
  if (!(mag_lo > 0.0 && mag_lo <= mag_hi))
    throw Error(Errc::InvalidArgument, "magnitude range must be positive and nonempty");
  if (!(complex_fraction >= 0.0 && complex_fraction <= 1.0))
    throw Error(Errc::InvalidArgument, "complex fraction must lie in [0, 1]");
  if (!(pole_margin >= 0.0) || !(region_margin > 0.0))
    throw Error(Errc::InvalidArgument, "margins must be nonnegative");
  if (!(max_condition >= 1.0))
    throw Error(Errc::InvalidArgument, "condition limit must be at least 1");
}

std::uint64_t seed_for(std::uint64_t seed, const std::string& label) {
  std::uint64_t h = 14695981039346656037ULL;  // FNV-1a
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return seed ^ h;
}

Sampler::Sampler(std::vector<Slot> slots, Accept accept, const SampleDomain& domain,
                 std::uint64_t seed, std::string label)
    : slots_(std::move(slots)), accept_(std::move(accept)), dom_(domain),
      rng_(seed_for(seed, label)) {
  dom_.validate();
}

ParamSet Sampler::draw() {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double lmin = std::log(dom_.mag_lo), lmax = std::log(dom_.mag_hi);
  ParamSet p;
  p.q = dom_.q_lo + (dom_.q_hi - dom_.q_lo) * unit(rng_);
  const bool phased = unit(rng_) < dom_.complex_fraction;
  for (const Slot& s : slots_) {
    const auto pin = dom_.fixed.find(s.name);
    if (s.role != SlotRole::Continuous) {
      std::uniform_int_distribution<long> pick(s.lo, s.hi);
      p.ints[s.name] = pick(rng_);
      if (pin != dom_.fixed.end()) p.ints[s.name] = std::lround(pin->second.real());
      continue;
    }
    if (pin != dom_.fixed.end()) {
      p.values[s.name] = pin->second;
      continue;
    }
    if (s.base_like) {
      p.values[s.name] = dom_.q_lo + (dom_.q_hi - dom_.q_lo) * unit(rng_);
      continue;
    }
    const double mag = std::exp(lmin + (lmax - lmin) * unit(rng_));
    const double u = unit(rng_);
    if (s.real) {
      p.values[s.name] = (s.positive || u < 0.5) ? mag : -mag;
    } else if (phased) {
      p.values[s.name] = std::polar(mag, 2.0 * std::numbers::pi * u);
    } else {
      p.values[s.name] = mag;
    }
  }
  return p;
}

std::optional<ParamSet> Sampler::next() {
  while (rejected_ <= budget_) {
    ParamSet p = draw();
    if (accept_(p)) return p;
    ++rejected_;
  }
  return std::nullopt;
}

namespace {

Sampler::Accept record_acceptor(const IdentityRecord& rec, const SampleDomain& d) {
  return [&rec, d](const ParamSet& p) {
    if (!rec.complete(p)) return false;
    if (rec.sample_filter && !rec.sample_filter(p)) return false;
    return rec.admissible(p, d.region_margin, d.pole_margin);
  };
}

constexpr long kBudgetPerSample = 1000;
constexpr double kVanishing = 1e-12;

struct Outcome {
  double residual = 0.0;
  bool vanishing = false;
  bool ill_conditioned = false;
  std::string error;
};

// Evaluations run concurrently; results are consumed in draw order.
template <class Eval>
std::vector<Outcome> evaluate_batch(const std::vector<ParamSet>& batch, Eval eval) {
  std::vector<std::future<Outcome>> jobs;
  jobs.reserve(batch.size());
  for (const auto& p : batch)
    jobs.push_back(std::async(std::launch::async, [&eval, &p] {
      Outcome o;
      try {
        o = eval(p);
      } catch (const std::exception& e) {
        o.residual = std::numeric_limits<double>::infinity();
        o.error = e.what();
      }
      return o;
    }));
  std::vector<Outcome> out;
  out.reserve(batch.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

template <class Eval>
VerificationReport run(Sampler& sampler, int n, double tol, Eval eval, VerificationReport rep) {
  if (n < 1) throw Error(Errc::InvalidArgument, "sample count must be at least 1");
  sampler.set_budget(kBudgetPerSample * n);
  rep.requested = n;
  rep.tol = tol;
  const long width = std::max(1U, std::thread::hardware_concurrency());
  double sum = 0.0;
  bool worst_set = false;
  bool exhausted = false;
  while (rep.accepted < n && !exhausted) {
    std::vector<ParamSet> batch;
    while (long(batch.size()) < std::min<long>(width, n - rep.accepted)) {
      auto p = sampler.next();
      if (!p) {
        exhausted = true;
        break;
      }
      batch.push_back(std::move(*p));
    }
    const auto results = evaluate_batch(batch, eval);
    for (std::size_t i = 0; i < batch.size() && rep.accepted < n; ++i) {
      const Outcome& o = results[i];
      if (o.vanishing || o.ill_conditioned) {
        sampler.reject_last();
        if (o.ill_conditioned) ++rep.ill_conditioned;
        continue;
      }
      ++rep.accepted;
      sum += o.residual;
      if (!worst_set || !(o.residual <= rep.max_rel_residual)) {
        rep.max_rel_residual = o.residual;
        rep.worst_sample = batch[i];
        worst_set = true;
      }
      if (!o.error.empty() && rep.error.empty()) rep.error = o.error;
    }
  }
  rep.rejected = sampler.rejected();
  if (rep.accepted == 0)
    throw Error(Errc::RegionTooThin, rep.id + ": no admissible sample within the rejection budget");
  rep.mean_rel_residual = sum / double(rep.accepted);
  rep.pass = rep.accepted >= 1 && rep.max_rel_residual < tol && rep.error.empty();
  return rep;
}

Outcome residual_outcome(const ResidualResult& r, const MagnitudeProbe& probe,
                         double max_condition) {
  Outcome o;
  o.residual = r.rel_residual;
  o.vanishing = std::max(std::abs(r.lhs), std::abs(r.rhs)) < kVanishing;
  o.ill_conditioned = probe.condition() > max_condition;
  return o;
}

}  // namespace

double record_tolerance(const IdentityRecord& rec, double tol) {
  return rec.exact ? std::min(tol, kExactTol) : tol;
}

std::vector<ParamSet> sample_params(const std::string& id, const SampleDomain& domain,
                                    std::uint64_t seed, int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "sample count must be at least 1");
  const IdentityRecord& rec = find_identity(id);
  Sampler s(rec.slots, record_acceptor(rec, domain), domain, seed, rec.id);
  s.set_budget(kBudgetPerSample * n);
  std::vector<ParamSet> out;
  while (int(out.size()) < n) {
    auto p = s.next();
    if (!p) throw Error(Errc::RegionTooThin, id + ": rejection budget exhausted");
    out.push_back(std::move(*p));
  }
  return out;
}

VerificationReport verify_record(const IdentityRecord& rec, const SampleDomain& domain,
                                 std::uint64_t seed, int n, double tol,
                                 const TruncationPolicy& trunc) {
  Sampler s(rec.slots, record_acceptor(rec, domain), domain, seed, rec.id);
  VerificationReport rep;
  rep.id = rec.id;
  rep.kind = "identity";
  rep.seed = seed;
  rep.truncation = trunc;
  const double t = record_tolerance(rec, tol);
  return run(
      s, n, t,
      [&](const ParamSet& p) {
        MagnitudeProbe probe;
        const ResidualResult main = eval_record(rec, p, trunc);
        Outcome o = residual_outcome(main, probe, domain.max_condition);
        // sub-records ride along at every sample where they are admissible and resolvable
        for (const auto& sub : rec.sub_records) {
          if (!sub.admissible(p, domain.region_margin, domain.pole_margin)) continue;
          MagnitudeProbe sp;
          const ResidualResult r = eval_record(sub, p, trunc);
          if (!residual_outcome(r, sp, domain.max_condition).ill_conditioned)
            o.residual = std::max(o.residual, r.rel_residual);
        }
        return o;
      },
      rep);
}

VerificationReport verify_identity(const std::string& id, const SampleDomain& domain,
                                   std::uint64_t seed, int n, double tol,
                                   const TruncationPolicy& trunc) {
  return verify_record(find_identity(id), domain, seed, n, tol, trunc);
}

VerificationReport verify_link(const SpecializationLink& link, const SampleDomain& domain,
                               std::uint64_t seed, int n, double tol,
                               const TruncationPolicy& trunc) {
  const IdentityRecord& special = find_identity(link.special);
  const IdentityRecord& general = find_identity(link.general);
  std::vector<Slot> slots = special.slots;
  slots.insert(slots.end(), link.extra_slots.begin(), link.extra_slots.end());
  Sampler s(
      slots,
      [&](const ParamSet& p) {
        if (!special.admissible(p, domain.region_margin, domain.pole_margin)) return false;
        const ParamSet g = link.to_general(p);
        if (general.sample_filter && !general.sample_filter(g)) return false;
        return general.admissible(g, domain.region_margin, domain.pole_margin);
      },
      domain, seed, link.id);
  VerificationReport rep;
  rep.id = link.id;
  rep.kind = "specialization";
  rep.seed = seed;
  rep.truncation = trunc;
  return run(
      s, n, std::min(tol, link.tol),
      [&](const ParamSet& p) {
        MagnitudeProbe probe;
        const ResidualResult r = specialization_check(link, p, trunc);
        return residual_outcome(r, probe, domain.max_condition);
      },
      rep);
}

VerificationReport verify_matrix_inverse(const SampleDomain& domain, std::uint64_t seed, int n,
                                         long index_radius, double tol,
                                         const TruncationPolicy& trunc) {
  if (index_radius < 0) throw Error(Errc::InvalidArgument, "index radius must be nonnegative");
  const std::vector<Slot> slots{Slot{"a"}, Slot{"b"}, Slot{"c"}};
  const double margin = domain.pole_margin;
  auto make = [margin](const ParamSet& p) {
    return InverseParams::make(p.v("a"), p.v("b"), p.v("c"), QBase(p.q), margin);
  };
  Sampler s(
      slots,
      [&](const ParamSet& p) {
        try {
          make(p);
          return true;
        } catch (const Error&) {
          return false;
        }
      },
      domain, seed, "matrix_inverse");
  VerificationReport rep;
  rep.id = "matrix_inverse";
  rep.kind = "orthogonality";
  rep.seed = seed;
  rep.truncation = trunc;
  return run(
      s, n, tol,
      [&](const ParamSet& p) {
        const auto ip = make(p);
        MagnitudeProbe probe;
        Outcome o;
        for (long i = -index_radius; i <= index_radius; ++i)
          for (long j = -index_radius; j <= index_radius; ++j) {
            o.residual = std::max(o.residual, std::abs(orthogonality_residual(ip, i, j, trunc)));
            o.residual =
                std::max(o.residual, std::abs(dual_orthogonality_residual(ip, i, j, trunc)));
          }
        if (std::isnan(o.residual)) o.residual = std::numeric_limits<double>::infinity();
        // the targets are 0 and 1, so the summed magnitude is the condition number
        o.ill_conditioned = probe.magnitude() > domain.max_condition;
        return o;
      },
      rep);
}

std::vector<VerificationReport> verify_all(const SampleDomain& domain, std::uint64_t seed,
                                           double tol, const TruncationPolicy& trunc,
                                           const VerifyAllOptions& opt) {
  std::vector<VerificationReport> out;
  auto guarded = [&](auto&& fn, const std::string& id, const std::string& kind) {
    try {
      out.push_back(fn());
    } catch (const Error& e) {
      VerificationReport r;
      r.id = id;
      r.kind = kind;
      r.seed = seed;
      r.tol = tol;
      r.truncation = trunc;
      r.error = e.what();
      r.max_rel_residual = r.mean_rel_residual = std::numeric_limits<double>::infinity();
      out.push_back(std::move(r));
    }
  };
  for (const auto& rec : list_identities())
    guarded([&] { return verify_record(rec, domain, seed, opt.identity_samples, tol, trunc); },
            rec.id, "identity");
  for (const auto& link : list_links())
    guarded([&] { return verify_link(link, domain, seed, opt.link_samples, tol, trunc); }, link.id,
            "specialization");
  guarded(
      [&] {
        return verify_matrix_inverse(domain, seed, opt.inverse_samples, opt.inverse_radius, tol,
                                     trunc);
      },
      "matrix_inverse", "orthogonality");
  return out;
}

}  // namespace qbilat
