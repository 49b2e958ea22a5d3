#include "catalog_detail.hpp"

namespace qbilat::detail {

namespace {

using P = const ParamSet&;
using T = const TruncationPolicy&;

Complex bilateral_sum(const TermFn& term, T t) { return eval_custom_bilateral(term, t).value; }

IdentityRecord cor_10phi9() {
  IdentityRecord r;
  r.id = "cor_10phi9_transform";
  r.title = "terminating very-well-poised balanced 10phi9 transformation";
  r.anchor = "terminating very-well-poised balanced";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), cont("e"), nonneg("N", 6),
             nonneg("M", 6)};
  r.region_text = "none (terminating)";
  r.exact = true;
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"), q = p.q;
    const long N = p.n("N"), M = p.n("M");
    return Guards()
        .point({a, c * e / a})
        .forward({a * q / b, a * q / c, a * q / d, b * qp(q, -N), e * qp(q, 1 + N),
                  c * d * qp(q, -M) / e, a * qp(q, 1 + M)})
        .forward({e * q / (c * d), a * q / d, e * q, a * q / c, c * e * q / a, e * q / c, q / b,
                  a * q / b})
        .forward({c * q / b, e * q / a, e * q / d, c * d * qp(q, -M) / a, e * qp(q, 1 + M),
                  b * c * qp(q, -N) / a, c * e * qp(q, 1 + N) / a})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"), q = p.q;
    const long N = p.n("N"), M = p.n("M");
    return vwp_phi(a,
                   {b, c, d, a * qp(q, 1 + N) / b, a * qp(q, -N) / e,
                    a * e * qp(q, 1 + M) / (c * d), qp(q, -M)},
                   {a * q / b, a * q / c, a * q / d, b * qp(q, -N), e * qp(q, 1 + N),
                    c * d * qp(q, -M) / e, a * qp(q, 1 + M)},
                   QBase(q), q, t);
  };
  r.rhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"), q = p.q;
    const long N = p.n("N"), M = p.n("M");
    const QBase h(q);
    return poch_ratio({a * q, e * q / c, a * q / (c * d), e * q / d},
                      {e * q / (c * d), a * q / d, e * q, a * q / c}, h, M) *
           poch_ratio({a * q / (b * c), c * q / b, e * q, e * q / a},
                      {c * e * q / a, e * q / c, q / b, a * q / b}, h, N) *
           vwp_phi(c * e / a,
                   {b * e / a, c, c * d / a, e * qp(q, 1 + M) / d, c * qp(q, -M) / a,
                    e * qp(q, 1 + N) / b, qp(q, -N)},
                   {c * q / b, e * q / a, e * q / d, c * d * qp(q, -M) / a, e * qp(q, 1 + M),
                    b * c * qp(q, -N) / a, c * e * qp(q, 1 + N) / a},
                   h, q, t);
  };
  return r;
}

IdentityRecord cor_10psi10() {
  IdentityRecord r;
  r.id = "cor_10psi10_transform";
  r.title = "very-well-poised balanced 10psi10 transformed to a terminating 10phi9";
  r.anchor = "transformation for a particular very-well-poised balanced";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), cont("e"), nonneg("N", 6),
             nonneg("M", 6)};
  r.region_text = "none (argument q)";
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"), q = p.q;
    const long N = p.n("N"), M = p.n("M");
    return Guards()
        .point({a, c * d / a})
        .lattice({b, c, d, e, a * qp(q, 1 + N) / b, a * qp(q, -N) / d, a * qp(q, 1 + M) / e,
                  a * qp(q, -M) / c, a * q / b, a * q / c, a * q / d, a * q / e, b * qp(q, -N),
                  d * qp(q, 1 + N), e * qp(q, -M), c * qp(q, 1 + M)})
        .forward({c * q, q / c, d * q, q / d, c * q / a, a * q / c, d * q / a, a * q / d})
        .forward({c * d * q / a, c * q / d, a * q / e, q / e, d * q / c, q / b, a * q / b})
        .forward({c * q / b, d * q / e, b * c * qp(q, -N) / a, d * e * qp(q, -M) / a,
                  c * d * qp(q, 1 + N) / a, c * d * qp(q, 1 + M) / a})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"), q = p.q;
    const long N = p.n("N"), M = p.n("M");
    return vwp_psi(a,
                   {b, c, d, e, a * qp(q, 1 + N) / b, a * qp(q, -N) / d, a * qp(q, 1 + M) / e,
                    a * qp(q, -M) / c},
                   {a * q / b, a * q / c, a * q / d, a * q / e, b * qp(q, -N), d * qp(q, 1 + N),
                    e * qp(q, -M), c * qp(q, 1 + M)},
                   QBase(q), q, t);
  };
  r.rhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"), q = p.q;
    const long N = p.n("N"), M = p.n("M");
    const QBase h(q);
    return inf_ratio({q, q, a * q, q / a, c * d * q / a, a * q / (c * d), c * q / d, d * q / c},
                     {c * q, q / c, d * q, q / d, c * q / a, a * q / c, d * q / a, a * q / d}, h) *
           poch_ratio({c * q, c * q / a, d * q / e, a * q / (d * e)},
                      {c * d * q / a, c * q / d, a * q / e, q / e}, h, M) *
           poch_ratio({a * q / (b * c), c * q / b, d * q, d * q / a},
                      {c * d * q / a, d * q / c, q / b, a * q / b}, h, N) *
           vwp_phi(c * d / a,
                   {c * d / a, b * d / a, c * e / a, d * qp(q, 1 + N) / b, c * qp(q, 1 + M) / e,
                    qp(q, -N), qp(q, -M)},
                   {q, c * q / b, d * q / e, b * c * qp(q, -N) / a, d * e * qp(q, -M) / a,
                    c * d * qp(q, 1 + N) / a, c * d * qp(q, 1 + M) / a},
                   h, q, t);
  };
  return r;
}

// Shared right-hand product of the two 8psi8 transformations with f and N.
Complex psi8_products(Complex a, Complex b, Complex c, Complex d, Complex e, Complex f, long N,
                      const QBase& h) {
  const Complex q = h.q();
  return inf_ratio({q, a * q, q / a, a * q / (c * d), a * q / (c * e), a * q / (d * e), f * q / c,
                    f * q / d, f * q / e},
                   {a * q / c, a * q / d, a * q / e, q / c, q / d, q / e, f * q, f * q / a,
                    a * f * q / (c * d * e)},
                   h) *
         poch_ratio({a * q / (b * c), c * q / b, f * q, f * q / a},
                    {c * f * q / a, f * q / c, q / b, a * q / b}, h, N);
}

std::vector<GuardArg> psi8_guards(P p) {
  const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                f = p.v("f"), q = p.q;
  const long N = p.n("N");
  return Guards()
      .point({a, c * f / a})
      .lattice({b, c, d, e, a * qp(q, 1 + N) / b, a * qp(q, -N) / f, a * q / b, a * q / c,
                a * q / d, a * q / e, b * qp(q, -N), f * qp(q, 1 + N)})
      .forward({q / c, q / d, q / e, f * q, f * q / a, a * f * q / (c * d * e), c * f * q / a,
                f * q / c, q / b})
      .forward({c * q / b, f * q / d, f * q / e, b * c * qp(q, -N) / a, c * f * qp(q, 1 + N) / a})
      .take();
}

IdentityRecord cor_8psi8_bracketed() {
  IdentityRecord r;
  r.id = "cor_8psi8_bracketed";
  r.title = "bracketed 8psi8 continued analytically to a 10phi9 of argument a/de";
  r.anchor = "applied analytic continuation to obtain";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), cont("e"), cont("f"), cont("g"),
             nonneg("N", 6)};
  r.region_text = "|af/(cde)| < 1";
  r.region = [](P p) {
    return std::vector<Complex>{p.v("a") * p.v("f") / (p.v("c") * p.v("d") * p.v("e"))};
  };
  r.guards = [](P p) {
    const Complex a = p.v("a"), c = p.v("c"), d = p.v("d"), e = p.v("e"), f = p.v("f"),
                  g = p.v("g");
    auto out = psi8_guards(p);
    auto extra = Guards()
                     .point({a * g / (c * f), g, d * e / a})
                     .lattice({f / (a * g)})
                     .forward({c * f / (a * g), g})
                     .take();
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  f = p.v("f"), g = p.v("g"), q = p.q;
    const long N = p.n("N");
    const QBase h(q);
    const Complex z = a * f * q / (c * d * e);
    RatioSeq ratio({b, c, d, e, a * qp(q, 1 + N) / b, a * qp(q, -N) / f},
                   {a * q / b, a * q / c, a * q / d, a * q / e, b * qp(q, -N), f * qp(q, 1 + N)},
                   h, z);
    return bilateral_sum(
        [&](long j) {
          const XComplex rt = ratio.xat(j);
          if (rt.is_zero()) return Complex(0.0);
          const XComplex qj = xqp(q, j), qmj = xqp(q, -j);
          // bracket times (1 - g q^{-j}/c), which cancels its own denominator factor
          const XComplex br = om(g / c, qmj) - XComplex((1.0 - f / c) / (1.0 - d * e / a)) *
                                                   om(d / a, qmj) * om(e / a, qmj) /
                                                   om(f / (a * g), qmj);
          return (xvwp(a, q, j) * rt * br * om(a * g / f, qj) /
                  XComplex((1.0 - a * g / (c * f)) * (1.0 - g)))
              .value();
        },
        t);
  };
  r.rhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  f = p.v("f"), g = p.v("g"), q = p.q;
    const long N = p.n("N");
    const QBase h(q);
    return psi8_products(a, b, c, d, e, f, N, h) *
           vwp_phi(c * f / a,
                   {b * f / a, c * d / a, c * e / a, g * q, c * f * q / (a * g),
                    f * qp(q, 1 + N) / b, qp(q, -N)},
                   {c * q / b, f * q / d, f * q / e, c * f / (a * g), g, b * c * qp(q, -N) / a,
                    c * f * qp(q, 1 + N) / a},
                   h, a / (d * e), t);
  };
  return r;
}

IdentityRecord eq_8psi8_to_8phi7() {
  IdentityRecord r;
  r.id = "eq_8psi8_to_8phi7";
  r.title = "8psi8 transformed to an 8phi7 of argument aq/de";
  r.anchor = "If we let g";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), cont("e"), cont("f"), nonneg("N", 6)};
  r.region_text = "|afq/(cde)| < 1";
  r.region = [](P p) {
    return std::vector<Complex>{p.v("a") * p.v("f") * p.q / (p.v("c") * p.v("d") * p.v("e"))};
  };
  r.guards = psi8_guards;
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  f = p.v("f"), q = p.q;
    const long N = p.n("N");
    return vwp_psi(a, {b, c, d, e, a * qp(q, 1 + N) / b, a * qp(q, -N) / f},
                   {a * q / b, a * q / c, a * q / d, a * q / e, b * qp(q, -N), f * qp(q, 1 + N)},
                   QBase(q), a * f * q / (c * d * e), t);
  };
  r.rhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  f = p.v("f"), q = p.q;
    const long N = p.n("N");
    const QBase h(q);
    return psi8_products(a, b, c, d, e, f, N, h) *
           vwp_phi(c * f / a, {b * f / a, c * d / a, c * e / a, f * qp(q, 1 + N) / b, qp(q, -N)},
                   {c * q / b, f * q / d, f * q / e, b * c * qp(q, -N) / a,
                    c * f * qp(q, 1 + N) / a},
                   h, a * q / (d * e), t);
  };
  return r;
}

IdentityRecord shukla_qN() {
  IdentityRecord r;
  r.id = "shukla_8psi8_qN";
  r.title = "8psi8 summation with a q^N-linked parameter pair";
  r.anchor = "originally due to H. S. Shukla";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), cont("f"), nonneg("N", 6)};
  r.region_text = "|fq/c| < 1";
  r.region = [](P p) { return std::vector<Complex>{p.v("f") * p.q / p.v("c")}; };
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), f = p.v("f"), q = p.q;
    const long N = p.n("N");
    return Guards()
        .point({a})
        .lattice({b, c, d, a / d, a * qp(q, 1 + N) / b, a * qp(q, -N) / f, a * q / b, a * q / c,
                  a * q / d, d * q, b * qp(q, -N), f * qp(q, 1 + N)})
        .forward({q / d, d * q / a, q / c, f * q, f * q / a, d * f * q / a, f * q / d, q / b})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), f = p.v("f"), q = p.q;
    const long N = p.n("N");
    return vwp_psi(a, {b, c, d, a / d, a * qp(q, 1 + N) / b, a * qp(q, -N) / f},
                   {a * q / b, a * q / c, a * q / d, d * q, b * qp(q, -N), f * qp(q, 1 + N)},
                   QBase(q), f * q / c, t);
  };
  r.rhs = [](P p, T) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), f = p.v("f"), q = p.q;
    const long N = p.n("N");
    const QBase h(q);
    return inf_ratio({q, q, a * q, q / a, a * q / (c * d), d * q / c, f * q / d, d * f * q / a},
                     {d * q, q / d, a * q / d, d * q / a, a * q / c, q / c, f * q, f * q / a}, h) *
           poch_ratio({a * q / (b * d), d * q / b, f * q, f * q / a},
                      {d * f * q / a, f * q / d, q / b, a * q / b}, h, N);
  };
  return r;
}

IdentityRecord cor_quadratic_transform() {
  IdentityRecord r;
  r.id = "cor_quadratic_transform";
  r.title = "bilateral quadratic transformation to a 10phi9 of argument -cq/b";
  r.anchor = "bilateral quadratic transformation";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), nonneg("N", 6)};
  r.region_text = "none (q^{n(n-1)/2} in the summand)";
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
    const long N = p.n("N");
    return Guards()
        .point({a, b * c / a})
        .lattice({b, c, d, a * qp(q, 1 + N) / d, a * qp(q, -N) / b, a * q / b, a * q / c,
                  a * q / d, d * qp(q, -N), b * qp(q, 1 + N)})
        .forward({b * q, q / b, b * q / a, q / c, a * q / c, b * c * q / a, b * q / c, q / d})
        .forward({c * c * q / a, c * q / d, c * d * qp(q, -N) / a, b * c * qp(q, 1 + N) / a,
                  b * b * q / a})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
    const long N = p.n("N");
    const QBase h(q);
    RatioSeq ratio({b, c, d, a * qp(q, 1 + N) / d, a * qp(q, -N) / b},
                   {a * q / b, a * q / c, a * q / d, d * qp(q, -N), b * qp(q, 1 + N)}, h);
    return bilateral_sum(
        [&](long n) {
          return quad_term(ratio, xvwp(a, q, n), a, b, c, n, q, -a * q / c);
        },
        t);
  };
  r.rhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
    const long N = p.n("N");
    const QBase h(q), h2(q * q);
    return inf_ratio({q, q, a * q, q / a, a * q / (b * c), b * q / c},
                     {b * q, q / b, b * q / a, a * q / b, q / c, a * q / c}, h) *
           inf_product({q, b * b * q / a, c * c * q * q / a, c * c * q * q / (b * b)}, h2) *
           poch_ratio({b * q / a, b * q, c * q / d, a * q / (c * d)},
                      {b * c * q / a, b * q / c, q / d, a * q / d}, h, N) *
           vwp_phi(b * c / a, {b * c / a, b / c, b * d / a, b * qp(q, 1 + N) / d, qp(q, -N)},
                   {q, c * c * q / a, c * q / d, c * d * qp(q, -N) / a, b * c * qp(q, 1 + N) / a},
                   h, -c * q / b, t, {c * c * q / a}, {b * b * q / a});
  };
  return r;
}

IdentityRecord eq_ex18() {
  IdentityRecord r;
  r.id = "eq_ex18";
  r.title = "bilateral quadratic transformation without the f bracket (argument -a^2q/bcd)";
  r.anchor = "multiply both sides of";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), cont("e")};
  r.region_text = "|aeq/(bcd)| < 1";
  r.region = [](P p) {
    return std::vector<Complex>{p.v("a") * p.v("e") * p.q / (p.v("b") * p.v("c") * p.v("d"))};
  };
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"), q = p.q;
    return Guards()
        .point({a, b * e / a})
        .lattice({b, c, d, a * q / b, a * q / c, a * q / d})
        .forward({q / b, a * q / b, b * e * q / a, q / c, q / d, a * q / c, a * q / d,
                  a * e * q / (b * c * d), e * e * q / a, e * q / c, e * q / d, b * b * q / a})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"), q = p.q;
    const QBase h(q);
    const Complex z = -a * a * q / (b * c * d);
    RatioSeq ratio({b, c, d}, {a * q / b, a * q / c, a * q / d}, h);
    return bilateral_sum(
        [&](long n) {
          return quad_term(ratio, xvwp(a, q, n), a, b, e, n, q, z);
        },
        t);
  };
  r.rhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"), q = p.q;
    const QBase h(q), h2(q * q);
    return inf_ratio({q, a * q, q / a, e * q / c, e * q / d, a * q / (b * c), a * q / (b * d),
                      a * q / (c * d)},
                     {q / b, a * q / b, b * e * q / a, q / c, q / d, a * q / c, a * q / d,
                      a * e * q / (b * c * d)},
                     h) *
           inf_product({q, b * b * q / a, e * e * q * q / a, e * e * q * q / (b * b)}, h2) *
           vwp_phi(b * e / a, {b / e, b * c / a, b * d / a}, {e * e * q / a, e * q / c, e * q / d},
                   h, -a * e * q / (b * c * d), t, {e * e * q / a}, {b * b * q / a});
  };
  return r;
}

IdentityRecord cor_quadratic_bracketed() {
  IdentityRecord r;
  r.id = "cor_quadratic_bracketed";
  r.title = "bilateral quadratic transformation with an f bracket";
  r.anchor = "provided |ae/bcd|<1";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), cont("e"), cont("f")};
  r.region_text = "|ae/(bcd)| < 1";
  r.region = [](P p) {
    return std::vector<Complex>{p.v("a") * p.v("e") / (p.v("b") * p.v("c") * p.v("d"))};
  };
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  f = p.v("f"), q = p.q;
    return Guards()
        .point({a, b * e / a, e / b})
        .lattice({b, c * q, d * q, a * q / b, a * q / c, a * q / d, c, d})
        .forward({q / b, a * q / b, b * e * q / a, q / c, q / d, a * q / c, a * q / d,
                  a * e * q / (b * c * d), e * e * q / a, e * q / c, e * q / d, b * e / (a * f), f,
                  b * b * q / a})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  f = p.v("f"), q = p.q;
    const QBase h(q);
    const Complex z = -a * a / (b * c * d);
    RatioSeq ratio({b, c * q, d * q}, {a * q / b, a * q / c, a * q / d}, h);
    return bilateral_sum(
        [&](long n) {
          const XComplex qn = xqp(q, n);
          const XComplex br = XComplex(1.0) - om(e / f, qn) * om(a * f / b, qn) *
                                                  XComplex((1.0 - c * d / a) / (1.0 - e / b)) /
                                                  (om(c, qn) * om(d, qn));
          return quad_term(ratio, xvwp(a, q, n) * br, a, b, e, n, q, z);
        },
        t);
  };
  r.rhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  f = p.v("f"), q = p.q;
    const QBase h(q), h2(q * q);
    const Complex pre = b * c * d * (1.0 - f) * (1.0 - a * f / (b * e)) /
                        (a * f * (1.0 - b / e) * (1.0 - c) * (1.0 - d));
    return pre *
           inf_ratio({q, a * q, q / a, e * q / c, e * q / d, a * q / (b * c), a * q / (b * d),
                      a / (c * d)},
                     {q / b, a * q / b, b * e * q / a, q / c, q / d, a * q / c, a * q / d,
                      a * e * q / (b * c * d)},
                     h) *
           inf_product({q, b * b * q / a, e * e * q * q / a, e * e * q * q / (b * b)}, h2) *
           vwp_phi(b * e / a, {b / e, b * c / a, b * d / a, f * q, b * e * q / (a * f)},
                   {e * e * q / a, e * q / c, e * q / d, b * e / (a * f), f}, h,
                   -a * e / (b * c * d), t, {e * e * q / a}, {b * b * q / a});
  };
  r.sub_records = {eq_ex18()};
  return r;
}

IdentityRecord cor_quadratic_summation() {
  IdentityRecord r;
  r.id = "cor_quadratic_summation";
  r.title = "bilateral quadratic summation";
  r.anchor = "bilateral quadratic summation formula";
  r.slots = {cont("a"), cont("b"), cont("c")};
  r.region_text = "|cq/b| < 1";
  r.region = [](P p) { return std::vector<Complex>{p.v("c") * p.q / p.v("b")}; };
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), q = p.q;
    return Guards()
        .point({a})
        .lattice({b, c, a / c, a * q / b, a * q / c, c * q})
        .forward({q / b, q / c, c * q / a})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), q = p.q;
    const QBase h(q);
    RatioSeq ratio({b, c, a / c}, {a * q / b, a * q / c, c * q}, h);
    return bilateral_sum(
        [&](long n) {
          return quad_term(ratio, xvwp(a, q, n), a, b, c, n, q, -a * q / b);
        },
        t);
  };
  r.rhs = [](P p, T) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), q = p.q;
    return inf_ratio({q, q, a * q, q / a, a * q / (b * c), c * q / b},
                     {q / b, a * q / b, c * q, q / c, a * q / c, c * q / a}, QBase(q)) *
           inf_product({b * q / c, b * c * q / a, c * q * q / b, c * c * c * q * q / (a * b)},
                       QBase(q * q));
  };
  return r;
}

IdentityRecord cor_double_bracket() {
  IdentityRecord r;
  r.id = "cor_10psi10_double_bracket";
  r.title = "10psi10 with two quasi-parameter pairs as a double-bracketed bilateral sum";
  r.anchor = "transformation for a particular very-well-poised";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), cont("e"),
             cont("f"), cont("g"), cont("u"), cont("v")};
  r.region_text = "|a^2/(defgq)| < 1 and |a/(deq)| < 1";
  r.region = [](P p) {
    const Complex a = p.v("a"), d = p.v("d"), e = p.v("e"), q = p.q;
    return std::vector<Complex>{a * a / (d * e * p.v("f") * p.v("g") * q), a / (d * e * q)};
  };
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  f = p.v("f"), g = p.v("g"), u = p.v("u"), v = p.v("v"), q = p.q;
    return Guards()
        .point({a, b * c / a, c / b, u / q, a * q / u, v / q, a * q / v})
        .lattice({d, e, f, g, u, a * q * q / u, v, a * q * q / v, a * q / d, a * q / e, a * q / f,
                  a * q / g, a * q / u, u / q, a * q / v, v / q})
        .lattice({c * d * q / a, c * e * q / a, b * f * q / a, b * g * q / a, b * q / d, b * q / e,
                  c * q / f, c * q / g, c * d / a, c * e / a, b * f / a, b * g / a})
        .forward({q / d, q / e, q / f, q / g, a * q / (b * c), b * c * q / a,
                  a * b / (c * d * e), a * c / (b * f * g)})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), d = p.v("d"), e = p.v("e"), f = p.v("f"), g = p.v("g"),
                  u = p.v("u"), v = p.v("v"), q = p.q;
    return vwp_psi(a, {d, e, f, g, u, a * q * q / u, v, a * q * q / v},
                   {a * q / d, a * q / e, a * q / f, a * q / g, a * q / u, u / q, a * q / v, v / q},
                   QBase(q), a * a / (d * e * f * g * q), t);
  };
  r.rhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  f = p.v("f"), g = p.v("g"), u = p.v("u"), v = p.v("v"), q = p.q;
    const QBase h(q);
    const Complex A = b * c / a, z = a * a / (d * e * f * g * q);
    RatioSeq ratio({c * d * q / a, c * e * q / a, b * f * q / a, b * g * q / a},
                   {b * q / d, b * q / e, c * q / f, c * q / g}, h, z);
    const Complex s = bilateral_sum(
        [&](long n) {
          const XComplex rt = ratio.xat(n);
          if (rt.is_zero()) return Complex(0.0);
          const XComplex qn = xqp(q, n), one(1.0);
          const XComplex b1 = one - XComplex((1.0 - c * d * e / (a * b)) / (1.0 - c / b)) *
                                        om(c * q / u, qn) * om(c * u / (a * q), qn) /
                                        (om(c * d / a, qn) * om(c * e / a, qn));
          const XComplex b2 = one - XComplex((1.0 - b * f * g / (a * c)) / (1.0 - b / c)) *
                                        om(b * q / v, qn) * om(b * v / (a * q), qn) /
                                        (om(b * f / a, qn) * om(b * g / a, qn));
          return (xvwp(A, q, n) * rt * b1 * b2).value();
        },
        t);
    return (b - c) * (c - b) /
           ((1.0 - u / q) * (1.0 - a * q / u) * (1.0 - v / q) * (1.0 - a * q / v)) *
           inf_ratio({a * q, q / a, a / (c * d), a / (c * e), a * q / (d * e), a / (b * f),
                      a / (b * g), a * q / (f * g), b * q / d, b * q / e, c * q / f, c * q / g},
                     {q / d, a * q / d, q / e, a * q / e, q / f, a * q / f, q / g, a * q / g,
                      a * q / (b * c), b * c * q / a, a * b / (c * d * e), a * c / (b * f * g)},
                     h) *
           s;
  };
  return r;
}

}  // namespace

std::vector<IdentityRecord> corollary_records() {
  return {cor_10phi9(),       cor_10psi10(),          cor_8psi8_bracketed(),
          eq_8psi8_to_8phi7(), shukla_qN(),            cor_quadratic_transform(),
          cor_quadratic_bracketed(), cor_quadratic_summation(), cor_double_bracket()};
}

}  // namespace qbilat::detail
