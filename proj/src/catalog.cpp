#include "qbilat/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "catalog_detail.hpp"

namespace qbilat {

namespace detail {

Complex bailey_products(Complex a, Complex b, Complex c, Complex d, Complex e, const QBase& h) {
  const Complex q = h.q();
  return inf_ratio({q, a * q, q / a, a * q / (b * c), a * q / (b * d), a * q / (b * e),
                    a * q / (c * d), a * q / (c * e), a * q / (d * e)},
                   {a * q / b, a * q / c, a * q / d, a * q / e, q / b, q / c, q / d, q / e,
                    a * a * q / (b * c * d * e)},
                   h);
}

Complex vwp_phi(Complex A, std::vector<Complex> up, std::vector<Complex> lo, const QBase& h,
                Complex z, const TruncationPolicy& t, std::vector<Complex> up2,
                std::vector<Complex> lo2) {
  SeriesParts parts;
  parts.upper.push_back(A);
  parts.upper.insert(parts.upper.end(), up.begin(), up.end());
  parts.lower = std::move(lo);
  parts.upper2 = std::move(up2);
  parts.lower2 = std::move(lo2);
  parts.vwp = A;
  return eval_phi(SeriesSpec::make(SeriesKind::Unilateral, std::move(parts), h, z), t).value;
}

Complex vwp_psi(Complex a, std::vector<Complex> up, std::vector<Complex> lo, const QBase& h,
                Complex z, const TruncationPolicy& t) {
  SeriesParts parts;
  parts.upper = std::move(up);
  parts.lower = std::move(lo);
  parts.vwp = a;
  return eval_psi(SeriesSpec::make(SeriesKind::Bilateral, std::move(parts), h, z), t).value;
}

Complex quad_term(RatioSeq& ratio, const XComplex& pre, Complex a, Complex b, Complex e, long n,
                  Complex q, Complex z) {
  XComplex t = ratio.xat(n) * pre;
  if (t.is_zero()) return 0.0;
  t *= xqp(q, n * (n - 1) / 2) * xqp(z, n);
  const XComplex qn = xqp(q, n), q2 = XComplex(q * q);
  const double stop = std::log2(kInfEps);
  for (const XComplex& x : {XComplex(b * q) * qn, XComplex(b * q / a) / qn,
                            XComplex(e * e * q * q / b) * qn, XComplex(e * e * q * q / (a * b)) / qn}) {
    XComplex y = x;
    for (int j = 0; j < 1 << 20 && y.log2_abs() > stop; ++j) {
      // inside double range the snapped 1 - y decides exact zeros
      const XComplex f = y.log2_abs() < 900 ? XComplex(one_minus(y.value())) : XComplex(1.0) - y;
      if (f.is_zero()) return 0.0;
      t *= f;
      y *= q2;
    }
  }
  return t.value();
}

Guards& Guards::point(std::initializer_list<Complex> xs) {
  for (Complex x : xs) g_.push_back({x, GuardKind::Point});
  return *this;
}
Guards& Guards::forward(std::initializer_list<Complex> xs) {
  for (Complex x : xs) g_.push_back({x, GuardKind::Forward});
  return *this;
}
Guards& Guards::lattice(std::initializer_list<Complex> xs, Complex base) {
  for (Complex x : xs) g_.push_back({x, GuardKind::Lattice, base});
  return *this;
}

Slot cont(const char* name) { return Slot{name}; }
Slot real_pos(const char* name) {
  Slot s{name};
  s.real = s.positive = true;
  return s;
}
Slot real_any(const char* name) {
  Slot s{name};
  s.real = true;
  return s;
}
Slot nonneg(const char* name, long hi) { return Slot{name, SlotRole::NonnegInteger, 0, hi}; }
Slot integer(const char* name, long lo, long hi) { return Slot{name, SlotRole::Integer, lo, hi}; }
Slot base_like(const char* name) {
  Slot s{name};
  s.real = s.positive = s.base_like = true;
  return s;
}

}  // namespace detail

using namespace detail;

Complex ParamSet::v(const std::string& name) const {
  const auto it = values.find(name);
  if (it == values.end()) throw Error(Errc::InvalidArgument, "missing parameter " + name);
  return it->second;
}

long ParamSet::n(const std::string& name) const {
  const auto it = ints.find(name);
  if (it == ints.end()) throw Error(Errc::InvalidArgument, "missing parameter " + name);
  return it->second;
}

const char* role_name(SlotRole r) noexcept {
  switch (r) {
    case SlotRole::Continuous: return "continuous";
    case SlotRole::NonnegInteger: return "nonneg_integer";
    case SlotRole::Integer: return "integer";
  }
  return "?";
}

bool IdentityRecord::complete(const ParamSet& p) const {
  if (!(std::abs(p.q) > 0.0 && std::abs(p.q) < 1.0)) return false;
  for (const Slot& s : slots) {
    if (s.role == SlotRole::Continuous) {
      const auto it = p.values.find(s.name);
      if (it == p.values.end() || !std::isfinite(std::abs(it->second))) return false;
      if (s.base_like && !(std::abs(it->second) > 0.0 && std::abs(it->second) < 1.0)) return false;
    } else {
      const auto it = p.ints.find(s.name);
      if (it == p.ints.end()) return false;
      if (s.role == SlotRole::NonnegInteger && it->second < 0) return false;
    }
  }
  return true;
}

bool IdentityRecord::admissible(const ParamSet& p, double region_margin,
                                double pole_margin) const {
  if (!complete(p)) return false;
  try {
    if (region)
      for (Complex x : region(p))
        if (!(std::abs(x) < region_margin)) return false;
    if (guards) {
      constexpr long kDepth = 1L << 20;
      for (const GuardArg& g : guards(p)) {
        const Complex base = g.base == 0.0 ? p.q : g.base;
        double gap = 0.0;
        switch (g.kind) {
          case GuardKind::Point: gap = std::abs(1.0 - g.x); break;
          case GuardKind::Forward: gap = lattice_gap(g.x, base, 0, kDepth); break;
          case GuardKind::Lattice: gap = lattice_gap(g.x, base, -kDepth, kDepth); break;
        }
        if (!(gap > pole_margin)) return false;
      }
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

ResidualResult make_residual(Complex lhs, Complex rhs) {
  ResidualResult r{lhs, rhs};
  r.abs_residual = std::abs(lhs - rhs);
  r.rel_residual = r.abs_residual / std::max({std::abs(lhs), std::abs(rhs), 1e-30});
  if (std::isnan(r.rel_residual)) r.rel_residual = std::numeric_limits<double>::infinity();
  return r;
}

namespace {

std::vector<IdentityRecord> build_registry() {
  std::vector<IdentityRecord> all;
  for (auto* part : {&classical_records, &theorem_records, &corollary_records})
    for (auto& r : (*part)()) all.push_back(std::move(r));
  std::sort(all.begin(), all.end(),
            [](const IdentityRecord& x, const IdentityRecord& y) { return x.id < y.id; });
  return all;
}

const IdentityRecord* search(const std::vector<IdentityRecord>& recs, const std::string& id) {
  for (const auto& r : recs) {
    if (r.id == id) return &r;
    if (const auto* s = search(r.sub_records, id)) return s;
  }
  return nullptr;
}

}  // namespace

const std::vector<IdentityRecord>& list_identities() {
  static const std::vector<IdentityRecord> registry = build_registry();
  return registry;
}

const IdentityRecord& find_identity(const std::string& id) {
  if (const auto* r = search(list_identities(), id)) return *r;
  throw Error(Errc::UnknownIdentity, "no identity with id '" + id + "'");
}

ResidualResult eval_record(const IdentityRecord& rec, const ParamSet& params,
                           const TruncationPolicy& trunc) {
  if (!rec.admissible(params)) throw Error(Errc::NotAdmissible, rec.id + ": parameters not admissible");
  const Complex l = rec.lhs(params, trunc);
  const Complex r = rec.rhs(params, trunc);
  return make_residual(l, r);
}

ResidualResult eval_identity(const std::string& id, const ParamSet& params,
                             const TruncationPolicy& trunc) {
  return eval_record(find_identity(id), params, trunc);
}

IdentityRecord scaled_rhs(const IdentityRecord& rec, Complex factor) {
  IdentityRecord out = rec;
  out.rhs = [inner = rec.rhs, factor](const ParamSet& p, const TruncationPolicy& t) {
    return factor * inner(p, t);
  };
  for (auto& s : out.sub_records) s = scaled_rhs(s, factor);
  return out;
}

namespace {

ParamSet with(ParamSet p, std::initializer_list<std::pair<const char*, Complex>> vs,
              std::initializer_list<std::pair<const char*, long>> ns = {}) {
  for (const auto& [k, x] : vs) p.values[k] = x;
  for (const auto& [k, x] : ns) p.ints[k] = x;
  return p;
}

std::vector<SpecializationLink> build_links() {
  std::vector<SpecializationLink> links;
  {
    SpecializationLink l;
    l.id = "milne_N0_bailey";
    l.general = "milne_8psi8_transform";
    l.special = "bailey_6psi6";
    l.description = "N = 0: the f pair cancels and the 8psi8 is the 6psi6";
    l.extra_slots = {cont("f")};
    l.to_general = [](const ParamSet& p) { return with(p, {}, {{"N", 0}}); };
    l.cross = [](const ParamSet& p, const TruncationPolicy& t) {
      return make_residual(find_identity("milne_8psi8_transform").lhs(with(p, {}, {{"N", 0}}), t),
                           find_identity("bailey_6psi6").rhs(p, t));
    };
    links.push_back(std::move(l));
  }
  {
    SpecializationLink l;
    l.id = "milne_N1_shukla";
    l.general = "milne_8psi8_transform";
    l.special = "shukla_8psi8";
    l.description = "N = 1: the terminating 4phi3 is the bracket of the 8psi8 summation";
    l.to_general = [](const ParamSet& p) { return with(p, {}, {{"N", 1}}); };
    l.cross = [](const ParamSet& p, const TruncationPolicy& t) {
      return make_residual(find_identity("milne_8psi8_transform").lhs(with(p, {}, {{"N", 1}}), t),
                           find_identity("shukla_8psi8").rhs(p, t));
    };
    links.push_back(std::move(l));
  }
  {
    // With u = e and then e -> e/q the summand is C times the 6psi6 summand at e.
    SpecializationLink l;
    l.id = "shn_bailey";
    l.general = "thm_shn";
    l.special = "bailey_6psi6";
    l.description = "u = e, then e -> e/q: the summand is a constant multiple of the 6psi6 summand";
    l.to_general = [](const ParamSet& p) {
      const Complex eq = p.v("e") / p.q;
      return with(p, {{"e", eq}, {"u", eq}});
    };
    l.cross = [to = l.to_general](const ParamSet& p, const TruncationPolicy& t) {
      const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"), q = p.q;
      const Complex C = (1.0 - a * a * q / (b * c * d * e)) * (d * e / (a * q)) *
                        (1.0 - a * q / e) / ((1.0 - a / (b * c)) * (1.0 - d));
      return make_residual(find_identity("thm_shn").lhs(to(p), t) / C,
                           find_identity("bailey_6psi6").rhs(p, t));
    };
    links.push_back(std::move(l));
  }
  {
    SpecializationLink l;
    l.id = "weierstrass_66b_66a";
    l.general = "telescoped_6psi6";
    l.special = "balanced_6psi6";
    l.description = "the two-term product equals the balanced 6psi6 product";
    l.to_general = [](const ParamSet& p) { return p; };
    l.cross = [](const ParamSet& p, const TruncationPolicy& t) {
      return make_residual(find_identity("telescoped_6psi6").rhs(p, t),
                           find_identity("balanced_6psi6").rhs(p, t));
    };
    l.tol = 1e-10;
    links.push_back(std::move(l));
  }
  return links;
}

}  // namespace

const std::vector<SpecializationLink>& list_links() {
  static const std::vector<SpecializationLink> links = build_links();
  return links;
}

const SpecializationLink& find_link(const std::string& id) {
  for (const auto& l : list_links())
    if (l.id == id) return l;
  throw Error(Errc::UnknownIdentity, "no specialization link '" + id + "'");
}

ResidualResult specialization_check(const SpecializationLink& link, const ParamSet& params,
                                    const TruncationPolicy& trunc) {
  const auto& special = find_identity(link.special);
  const auto& general = find_identity(link.general);
  for (const Slot& s : link.extra_slots)
    if (!params.values.count(s.name) && !params.ints.count(s.name))
      throw Error(Errc::NotAdmissible, link.id + ": missing parameter " + s.name);
  if (!special.admissible(params) || !general.admissible(link.to_general(params)))
    throw Error(Errc::NotAdmissible, link.id + ": point outside one of the identities");
  return link.cross(params, trunc);
}

}  // namespace qbilat
