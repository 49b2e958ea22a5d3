#include "catalog_detail.hpp"

#include <algorithm>
#include <cmath>

namespace qbilat::detail {

namespace {

using P = const ParamSet&;
using T = const TruncationPolicy&;

IdentityRecord bailey() {
  IdentityRecord r;
  r.id = "bailey_6psi6";
  r.title = "Bailey's very-well-poised 6psi6 summation";
  r.anchor = "stands on the top of the classical hierarchy";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), cont("e")};
  r.region_text = "|a^2 q/(bcde)| < 1";
  r.region = [](P p) {
    const Complex a = p.v("a");
    return std::vector<Complex>{a * a * p.q / (p.v("b") * p.v("c") * p.v("d") * p.v("e"))};
  };
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"), q = p.q;
    return Guards()
        .point({a})
        .lattice({b, c, d, e, a * q / b, a * q / c, a * q / d, a * q / e})
        .forward({q / b, q / c, q / d, q / e, a * a * q / (b * c * d * e)})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"), q = p.q;
    return vwp_psi(a, {b, c, d, e}, {a * q / b, a * q / c, a * q / d, a * q / e}, QBase(q),
                   a * a * q / (b * c * d * e), t);
  };
  r.rhs = [](P p, T) {
    return bailey_products(p.v("a"), p.v("b"), p.v("c"), p.v("d"), p.v("e"), QBase(p.q));
  };
  r.links = {"milne_N0_bailey", "shn_bailey"};
  return r;
}

IdentityRecord jackson() {
  IdentityRecord r;
  r.id = "jackson_8phi7";
  r.title = "Jackson's terminating very-well-poised balanced 8phi7 summation";
  r.anchor = "One of the most important theorems";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), nonneg("N", 6)};
  r.region_text = "none (terminating)";
  r.exact = true;
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
    const long N = p.n("N");
    return Guards()
        .point({a})
        .forward({a * q / b, a * q / c, a * q / d, b * c * d * qp(q, -N) / a, a * qp(q, 1 + N),
                  a * q / (b * c * d)})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
    const long N = p.n("N");
    return vwp_phi(a, {b, c, d, a * a * qp(q, 1 + N) / (b * c * d), qp(q, -N)},
                   {a * q / b, a * q / c, a * q / d, b * c * d * qp(q, -N) / a, a * qp(q, 1 + N)},
                   QBase(q), q, t);
  };
  r.rhs = [](P p, T) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
    return poch_ratio({a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)},
                      {a * q / b, a * q / c, a * q / d, a * q / (b * c * d)}, QBase(q), p.n("N"));
  };
  return r;
}

IdentityRecord jackson_shifted() {
  IdentityRecord r;
  r.id = "jackson_8phi7_shifted";
  r.title = "Jackson's 8phi7 summation with parameters shifted by q^l";
  r.anchor = "we may deduce from Jackson's terminating";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), integer("l", -3, 3), nonneg("N", 6)};
  r.region_text = "none (terminating)";
  r.exact = true;
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
    const long l = p.n("l"), N = p.n("N");
    return Guards()
        .point({a})
        .forward({a * q / d, a * qp(q, 1 - l) / c, b * qp(q, 1 + l), c * d * qp(q, -N) / b,
                  a * qp(q, 1 + N), b * q / (c * d), b * q, a * q / c})
        .lattice({b * q, b * qp(q, 1 + N) / d, c * d / a, c * qp(q, -N) / a, c / a,
                  c * d * qp(q, -N) / a, b * q / d, b * qp(q, 1 + N)})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
    const long l = p.n("l"), N = p.n("N");
    return vwp_phi(a,
                   {d, c * qp(q, l), a * qp(q, -l) / b, a * b * qp(q, 1 + N) / (c * d), qp(q, -N)},
                   {a * q / d, a * qp(q, 1 - l) / c, b * qp(q, 1 + l), c * d * qp(q, -N) / b,
                    a * qp(q, 1 + N)},
                   QBase(q), q, t);
  };
  r.rhs = [](P p, T) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
    const long l = p.n("l"), N = p.n("N");
    const QBase h(q);
    return poch_ratio({a * q, a * q / (c * d), b * q / c, b * q / d},
                      {b * q / (c * d), b * q, a * q / d, a * q / c}, h, N) *
           poch_ratio({b * q, b * qp(q, 1 + N) / d, c * d / a, c * qp(q, -N) / a},
                      {c / a, c * d * qp(q, -N) / a, b * q / d, b * qp(q, 1 + N)}, h, l);
  };
  return r;
}

// lambda = -c sqrt(ab/q), with the positive root for real positive a, b.
Complex watson_lambda(P p) { return -p.v("c") * std::sqrt(p.v("a") * p.v("b") / p.q); }

IdentityRecord qwatson() {
  IdentityRecord r;
  r.id = "qwatson_8phi7";
  r.title = "q-analogue of Watson's summation as a nonterminating 8phi7";
  r.anchor = "is a q-analogue of a";
  r.slots = {real_pos("a"), real_pos("b"), real_any("c")};
  r.region_text = "|lambda q/(ab)| < 1 with lambda = -c sqrt(ab/q)";
  r.region = [](P p) {
    return std::vector<Complex>{watson_lambda(p) * p.q / (p.v("a") * p.v("b"))};
  };
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), q = p.q, lam = watson_lambda(p);
    return Guards()
        .point({lam})
        .forward({lam * q / a, lam * q / b, c * c, lam * lam * q * q / (c * c), a * b * q,
                  c * c * q, c * c * q / (a * b)})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), q = p.q, lam = watson_lambda(p);
    return vwp_phi(lam, {a, b, lam * q / (c * c)}, {lam * q / a, lam * q / b, c * c}, QBase(q),
                   -lam * q / (a * b), t, {c * c}, {lam * lam * q * q / (c * c)});
  };
  r.rhs = [](P p, T) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), q = p.q, lam = watson_lambda(p);
    return inf_ratio({lam * q, c * c / lam}, {lam * q / a, lam * q / b}, QBase(q)) *
           inf_ratio({a * q, b * q, c * c * q / a, c * c * q / b},
                     {q, a * b * q, c * c * q, c * c * q / (a * b)}, QBase(q * q));
  };
  return r;
}

IdentityRecord shukla() {
  IdentityRecord r;
  r.id = "shukla_8psi8";
  r.title = "Shukla's very-well-poised 8psi8 summation";
  r.anchor = "even (slightly) more general";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), cont("e"), cont("f")};
  r.region_text = "|a^2/(bcde)| < 1";
  r.region = [](P p) {
    const Complex a = p.v("a");
    return std::vector<Complex>{a * a / (p.v("b") * p.v("c") * p.v("d") * p.v("e"))};
  };
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  f = p.v("f"), q = p.q;
    return Guards()
        .point({a, b * q / f, b * f / (a * q), b * c * d * e / (a * a), f / (a * q), f / q})
        .lattice({b, c, d, e, f, a * q * q / f, a * q / b, a * q / c, a * q / d, a * q / e,
                  a * q / f, f / q})
        .forward({q / b, q / c, q / d, q / e, a * a * q / (b * c * d * e)})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  f = p.v("f"), q = p.q;
    return vwp_psi(a, {b, c, d, e, f, a * q * q / f},
                   {a * q / b, a * q / c, a * q / d, a * q / e, a * q / f, f / q}, QBase(q),
                   a * a / (b * c * d * e), t);
  };
  r.rhs = [](P p, T) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  f = p.v("f"), q = p.q;
    const Complex br = 1.0 - (1.0 - b * c / a) * (1.0 - b * d / a) * (1.0 - b * e / a) /
                                 ((1.0 - b * q / f) * (1.0 - b * f / (a * q)) *
                                  (1.0 - b * c * d * e / (a * a)));
    return br * (1.0 - f / (b * q)) * (1.0 - b * f / (a * q)) /
           ((1.0 - f / (a * q)) * (1.0 - f / q)) * bailey_products(a, b, c, d, e, QBase(q));
  };
  r.links = {"milne_N1_shukla"};
  return r;
}

Complex lhs_balanced(P p, T t) {
  const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
  return vwp_psi(a, {b, c, d, a * a / (b * c * d)},
                 {a * q / b, a * q / c, a * q / d, b * c * d * q / a}, QBase(q), q, t);
}

Complex rhs_balanced(P p, T) {
  const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
  return inf_ratio({a * q, q / a, a * q / (b * c), b * c * q / a, a * q / (b * d), b * d * q / a,
                    c * d * q / a, a * q / (c * d)},
                   {a * q / b, a * q / c, a * q / d, q / b, q / c, q / d, b * c * d * q / a,
                    b * c * d * q / (a * a)},
                   QBase(q));
}

Complex rhs_telescoped(P p, T) {
  const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
  const QBase h(q);
  const Complex pre = (1.0 - b) * (1.0 - c) * (1.0 - d) * (1.0 - b * c * d / (a * a)) /
                      ((1.0 - a) * (1.0 - b * d / a) * (1.0 - c * d / a) * (1.0 - b * c / a));
  const Complex x = inf_ratio({b * q, c * q, d * q, a * a * q / (b * c * d)},
                              {a * q / b, a * q / c, a * q / d, b * c * d * q / a}, h);
  const Complex y = inf_ratio({b / a, c / a, d / a, a / (b * c * d)},
                              {1.0 / b, 1.0 / c, 1.0 / d, b * c * d / (a * a)}, h);
  MagnitudeProbe::note(std::max(std::abs(x), std::abs(y)), std::abs(x - y));
  return pre * (x - y);
}

std::vector<GuardArg> guards_balanced(P p) {
  const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
  return Guards()
      .point({a})
      .lattice({b, c, d, a * a / (b * c * d), a * q / b, a * q / c, a * q / d, b * c * d * q / a})
      .forward({q / b, q / c, q / d, b * c * d * q / (a * a)})
      .take();
}

std::vector<GuardArg> guards_telescoped(P p) {
  const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d");
  auto g = guards_balanced(p);
  auto extra = Guards()
                   .point({b * d / a, c * d / a, b * c / a})
                   .forward({1.0 / b, 1.0 / c, 1.0 / d, b * c * d / (a * a)})
                   .take();
  g.insert(g.end(), extra.begin(), extra.end());
  return g;
}

std::vector<IdentityRecord> balanced_family() {
  // One evaluator object serves both records with this series on the left.
  const SideFn shared_lhs = lhs_balanced;
  std::vector<IdentityRecord> out;
  {
    IdentityRecord r;
    r.id = "balanced_6psi6";
    r.title = "very-well-poised balanced 6psi6 summation";
    r.anchor = "very-well-poised balanced";
    r.slots = {cont("a"), cont("b"), cont("c"), cont("d")};
    r.region_text = "none (argument q)";
    r.guards = guards_balanced;
    r.lhs = shared_lhs;
    r.rhs = rhs_balanced;
    r.links = {"weierstrass_66b_66a"};
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "telescoped_6psi6";
    r.title = "balanced 6psi6 evaluated as a difference of two products";
    r.anchor = "the above summation reduces to";
    r.slots = {cont("a"), cont("b"), cont("c"), cont("d")};
    r.region_text = "none (argument q)";
    r.guards = guards_telescoped;
    r.lhs = shared_lhs;
    r.rhs = rhs_telescoped;
    r.links = {"weierstrass_66b_66a"};
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "weierstrass_equivalence";
    r.title = "two-term product equals the balanced product (a theta function identity)";
    r.anchor = "theta function identity of Weierstrass";
    r.slots = {cont("a"), cont("b"), cont("c"), cont("d")};
    r.region_text = "none (products only)";
    r.exact = true;
    r.guards = guards_telescoped;
    r.lhs = rhs_telescoped;
    r.rhs = rhs_balanced;
    r.links = {"weierstrass_66b_66a"};
    out.push_back(std::move(r));
  }
  return out;
}

IdentityRecord bibasic() {
  IdentityRecord r;
  r.id = "bibasic_telescoping";
  r.title = "indefinite bibasic sum in bases p and q";
  r.anchor = "the indefinite bibasic sum";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), base_like("p"), nonneg("m", 5),
             nonneg("n", 5)};
  r.region_text = "none (finite sum)";
  r.exact = true;
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), pb = p.v("p"), q = p.q;
    return Guards()
        .point({a * d, b / d, c / d, a * d / (b * c)})
        .lattice({a, b, a * d * pb / c, b * c * pb / d, c / (a * d), d / (b * c), 1.0 / a,
                  1.0 / b},
                 pb)
        .lattice({c, a * d * d / (b * c), d * q, a * d * q / b, 1.0 / d, b / (a * d), 1.0 / c,
                  b * c / (a * d * d)})
        .take();
  };
  r.lhs = [](P p, T) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), pb = p.v("p"), q = p.q;
    const QBase hp(pb), hq(q);
    Complex s = 0.0;
    for (long k = -p.n("m"); k <= p.n("n"); ++k) {
      const Complex pk = qp(pb, k), qk = qp(q, k);
      s += (1.0 - a * d * pk * qk) * (1.0 - b * pk / (d * qk)) / ((1.0 - a * d) * (1.0 - b / d)) *
           poch_ratio({a, b}, {a * d * pb / c, b * c * pb / d}, hp, k) *
           poch_ratio({c, a * d * d / (b * c)}, {d * q, a * d * q / b}, hq, k) * qk;
    }
    return s;
  };
  r.rhs = [](P p, T) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), pb = p.v("p"), q = p.q;
    const long m = p.n("m"), n = p.n("n");
    const QBase hp(pb), hq(q);
    const Complex pre = (1.0 - a) * (1.0 - b) * (1.0 - c) * (1.0 - a * d * d / (b * c)) /
                        (d * (1.0 - a * d) * (1.0 - b / d) * (1.0 - c / d) *
                         (1.0 - a * d / (b * c)));
    const Complex top = poch_ratio({a * pb, b * pb}, {a * d * pb / c, b * c * pb / d}, hp, n) *
                        poch_ratio({c * q, a * d * d * q / (b * c)}, {d * q, a * d * q / b}, hq, n);
    const Complex bottom =
        poch_ratio({c / (a * d), d / (b * c)}, {1.0 / a, 1.0 / b}, hp, m + 1) *
        poch_ratio({1.0 / d, b / (a * d)}, {1.0 / c, b * c / (a * d * d)}, hq, m + 1);
    MagnitudeProbe::note(std::max(std::abs(top), std::abs(bottom)), std::abs(top - bottom));
    return pre * (top - bottom);
  };
  return r;
}

}  // namespace

std::vector<IdentityRecord> classical_records() {
  std::vector<IdentityRecord> out{bailey(), jackson(), jackson_shifted(), qwatson(), shukla(),
                                  bibasic()};
  for (auto& r : balanced_family()) out.push_back(std::move(r));
  return out;
}

}  // namespace qbilat::detail
