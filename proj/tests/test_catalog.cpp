#include <set>

#include "doctest.h"
#include "qbilat/catalog.hpp"
#include "qbilat/harness.hpp"
#include "support.hpp"

using namespace qbilat;
using testing_support::rel;

namespace {

ParamSet point(Complex q, std::map<std::string, Complex> v, std::map<std::string, long> n = {}) {
  ParamSet p;
  p.q = q;
  p.values = std::move(v);
  p.ints = std::move(n);
  return p;
}

Complex naive_inf(Complex x, Complex q) {
  Complex r = 1.0;
  for (int j = 0; j < 600; ++j) r *= 1.0 - x * std::pow(q, double(j));
  return r;
}

// Term-by-term 6psi6 with the very-well-poised factor written out.
Complex naive_6psi6(Complex a, Complex b, Complex c, Complex d, Complex e, Complex q) {
  const Complex z = a * a * q / (b * c * d * e);
  const Complex num[] = {b, c, d, e};
  const Complex den[] = {a * q / b, a * q / c, a * q / d, a * q / e};
  Complex s = 1.0, t = 1.0;
  for (int k = 0; k < 120; ++k) {
    Complex r = z;
    for (int i = 0; i < 4; ++i)
      r *= (1.0 - num[i] * std::pow(q, double(k))) / (1.0 - den[i] * std::pow(q, double(k)));
    t *= r;
    s += t * (1.0 - a * std::pow(q, 2.0 * (k + 1))) / (1.0 - a);
  }
  t = 1.0;
  for (int k = 0; k > -120; --k) {
    // t_{k-1} / t_k
    Complex r = 1.0 / z;
    for (int i = 0; i < 4; ++i)
      r *= (1.0 - den[i] * std::pow(q, double(k - 1))) / (1.0 - num[i] * std::pow(q, double(k - 1)));
    t *= r;
    s += t * (1.0 - a * std::pow(q, 2.0 * (k - 1))) / (1.0 - a);
  }
  return s;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("registry contents") {
  const auto& recs = list_identities();
  CHECK(recs.size() == 22);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (i > 0) CHECK(recs[i - 1].id < recs[i].id);
    const auto& r = recs[i];
    ids.insert(r.id);
    CHECK_FALSE(r.title.empty());
    CHECK_FALSE(r.anchor.empty());
    CHECK_FALSE(r.slots.empty());
    CHECK(r.lhs);
    CHECK(r.rhs);
    for (const auto& l : r.links) CHECK_NOTHROW(find_link(l));
    for (const auto& s : r.sub_records) CHECK(&find_identity(s.id) == &s);
  }
  CHECK(ids.size() == recs.size());
  CHECK(&find_identity("bailey_6psi6") == &recs.front());
  CHECK_THROWS_AS(find_identity("bailey"), Error);
  try {
    find_identity("nosuch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownIdentity);
  }
  CHECK(list_links().size() == 4);
  CHECK_THROWS_AS(find_link("nosuch"), Error);
}

TEST_CASE("Jackson summation at a terminating point") {
  const auto p = point(0.3, {{"a", 0.4}, {"b", 0.7}, {"c", 0.6}, {"d", 0.5}}, {{"N", 4}});
  const auto r = eval_identity("jackson_8phi7", p);
  CHECK(r.rel_residual < 1e-10);
  // product side by hand
  const Complex a = 0.4, b = 0.7, c = 0.6, d = 0.5, q = 0.3;
  Complex rhs = 1.0;
  for (int j = 0; j < 4; ++j) {
    const Complex qj = std::pow(q, double(j));
    rhs *= (1.0 - a * q * qj) * (1.0 - a * q / (b * c) * qj) * (1.0 - a * q / (b * d) * qj) *
           (1.0 - a * q / (c * d) * qj);
    rhs /= (1.0 - a * q / b * qj) * (1.0 - a * q / c * qj) * (1.0 - a * q / d * qj) *
           (1.0 - a * q / (b * c * d) * qj);
  }
  CHECK(rel(r.rhs, rhs) < 1e-14);
}

TEST_CASE("Bailey 6psi6 against a direct sum") {
  const auto p = point(0.3, {{"a", 9.0}, {"b", 3.0}, {"c", 3.0}, {"d", 3.0}, {"e", 3.0}});
  const auto r = eval_identity("bailey_6psi6", p);
  CHECK(r.rel_residual < 1e-9);
  CHECK(rel(r.lhs, naive_6psi6(9.0, 3.0, 3.0, 3.0, 3.0, 0.3)) < 1e-11);
  // product side with plain infinite products
  const Complex a = 9.0, b = 3.0, q = 0.3;
  Complex rhs = naive_inf(a * q, q) * std::pow(naive_inf(a * q / (b * b), q), 6.0) *
                naive_inf(q, q) * naive_inf(q / a, q) /
                (std::pow(naive_inf(a * q / b, q) * naive_inf(q / b, q), 4.0) *
                 naive_inf(a * a * q / std::pow(b, 4.0), q));
  CHECK(rel(r.rhs, rhs) < 1e-11);

  const Complex w = Complex(0.8, 0.3);
  const auto pc = point(0.45, {{"a", w}, {"b", 1.7}, {"c", Complex(-1.2, 0.4)}, {"d", 2.1}, {"e", 1.3}});
  const auto rc = eval_identity("bailey_6psi6", pc);
  CHECK(rc.rel_residual < 1e-10);
  CHECK(rel(rc.lhs, naive_6psi6(w, 1.7, Complex(-1.2, 0.4), 2.1, 1.3, 0.45)) < 1e-11);
}

TEST_CASE("inadmissible points are refused") {
  auto p = point(0.3, {{"a", 9.0}, {"b", 1.0 / 0.3}, {"c", 3.0}, {"d", 3.0}, {"e", 3.0}});
  CHECK_THROWS_AS(eval_identity("bailey_6psi6", p), Error);
  try {
    eval_identity("bailey_6psi6", p);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAdmissible);
  }
  // outside the region
  p.values["b"] = 1.0;
  p.values["c"] = 1.1;
  CHECK_FALSE(find_identity("bailey_6psi6").admissible(p));
  // missing slot
  p.values.erase("e");
  CHECK_FALSE(find_identity("bailey_6psi6").complete(p));
  // bad base
  auto j = point(1.2, {{"a", 0.4}, {"b", 0.7}, {"c", 0.6}, {"d", 0.5}}, {{"N", 2}});
  CHECK_FALSE(find_identity("jackson_8phi7").admissible(j));
  j.q = 0.3;
  j.ints["N"] = -1;
  CHECK_FALSE(find_identity("jackson_8phi7").admissible(j));
}

TEST_CASE("every record balances at well-conditioned sample points") {
  std::vector<const IdentityRecord*> all;
  for (const auto& r : list_identities()) {
    all.push_back(&r);
    for (const auto& s : r.sub_records) all.push_back(&s);
  }
  CHECK(all.size() == 23);
  const SampleDomain dom;
  for (const IdentityRecord* r : all) {
    CAPTURE(r->id);
    const auto pts = sample_params(r->id, dom, 11, 12);
    int used = 0;
    for (const auto& p : pts) {
      MagnitudeProbe probe;
      const auto res = eval_record(*r, p);
      if (probe.condition() > dom.max_condition) continue;
      ++used;
      CHECK(res.rel_residual < record_tolerance(*r, kDefaultTol));
    }
    CHECK(used >= 3);
  }
}

TEST_CASE("specialization links") {
  const SampleDomain dom;
  for (const auto& l : list_links()) {
    CAPTURE(l.id);
    CHECK_NOTHROW(find_identity(l.general));
    CHECK_NOTHROW(find_identity(l.special));
    const auto rep = verify_link(l, dom, 3, 6);
    CHECK(rep.pass);
    CHECK(rep.accepted == 6);
  }
  // a point the special identity refuses
  const auto& l = find_link("milne_N0_bailey");
  auto p = point(0.3, {{"a", 9.0}, {"b", 1.0 / 0.3}, {"c", 3.0}, {"d", 3.0}, {"e", 3.0}, {"f", 0.7}});
  CHECK_THROWS_AS(specialization_check(l, p), Error);
  p.values.erase("f");
  p.values["b"] = 3.0;
  CHECK_THROWS_AS(specialization_check(l, p), Error);
}

TEST_CASE("bibasic telescoping over the finite grid") {
  const auto& rec = find_identity("bibasic_telescoping");
  double worst = 0.0;
  for (long m = 0; m <= 5; ++m)
    for (long n = 0; n <= 5; ++n) {
      const auto p = point(0.45, {{"a", 0.31}, {"b", 0.57}, {"c", 1.9}, {"d", 0.73}, {"p", 0.35}},
                           {{"m", m}, {"n", n}});
      REQUIRE(rec.admissible(p));
      worst = std::max(worst, eval_record(rec, p).rel_residual);
    }
  CHECK(worst < 1e-12);
}

TEST_CASE("sub-records are reachable but not listed") {
  const auto& sub = find_identity("eq_ex18");
  CHECK(sub.id == "eq_ex18");
  for (const auto& r : list_identities()) CHECK(r.id != sub.id);
}

TEST_CASE("scaled right side breaks the identity") {
  const auto p = point(0.3, {{"a", 0.4}, {"b", 0.7}, {"c", 0.6}, {"d", 0.5}}, {{"N", 4}});
  const auto bad = scaled_rhs(find_identity("jackson_8phi7"), 1.0 + 1e-4);
  CHECK(eval_record(bad, p).rel_residual > 5e-5);
}

}  // TEST_SUITE
