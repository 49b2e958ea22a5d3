#include "catalog_detail.hpp"

namespace qbilat::detail {

namespace {

using P = const ParamSet&;
using T = const TruncationPolicy&;

IdentityRecord thm_88n() {
  IdentityRecord r;
  r.id = "thm_88n";
  r.title = "8psi8 summation with upper parameters differing multiplicatively from lower ones";
  r.anchor = "differ multiplicatively from corresponding lower parameters";
  // Both sides vanish identically for k < 0 and for k > N; sampling stays in 0 <= k <= N.
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), integer("k", 0, 3), nonneg("N", 6)};
  r.region_text = "none (argument q)";
  r.sample_filter = [](P p) { return p.n("k") <= p.n("N"); };
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
    const long k = p.n("k"), N = p.n("N");
    return Guards()
        .point({a})
        .lattice({b, c, d * qp(q, k), a * qp(q, -k) / c, a * qp(q, 1 + N) / b,
                  a * qp(q, -N) / d, a * q / b, a * q / c, a * qp(q, 1 - k) / d,
                  c * qp(q, 1 + k), b * qp(q, -N), d * qp(q, 1 + N)})
        .forward({c * d * q / a, d * q / c, q / b, a * q / b})
        .lattice({c * d / a, b * d / a, c * q, c * q / a, d * qp(q, 1 + N) / b, c * q / b, d / a,
                  d, b * c * qp(q, -N) / a, c * d * qp(q, 1 + N) / a})
        .forward({c * q, q / c, d * q, q / d, c * q / a, a * q / c, d * q / a, a * q / d})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
    const long k = p.n("k"), N = p.n("N");
    return vwp_psi(a,
                   {b, c, d * qp(q, k), a * qp(q, -k) / c, a * qp(q, 1 + N) / b,
                    a * qp(q, -N) / d},
                   {a * q / b, a * q / c, a * qp(q, 1 - k) / d, c * qp(q, 1 + k), b * qp(q, -N),
                    d * qp(q, 1 + N)},
                   QBase(q), q, t);
  };
  r.rhs = [](P p, T) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), q = p.q;
    const long k = p.n("k"), N = p.n("N");
    const QBase h(q);
    const Complex kpart = poch_ratio(
        {c * d / a, b * d / a, c * q, c * q / a, d * qp(q, 1 + N) / b, qp(q, -N)},
        {q, c * q / b, d / a, d, b * c * qp(q, -N) / a, c * d * qp(q, 1 + N) / a}, h, k);
    if (kpart == 0.0) return Complex(0.0);
    return poch_ratio({a * q / (b * c), c * q / b, d * q, d * q / a},
                      {c * d * q / a, d * q / c, q / b, a * q / b}, h, N) *
           kpart *
           inf_ratio({q, q, a * q, q / a, c * d * q / a, a * q / (c * d), c * q / d, d * q / c},
                     {c * q, q / c, d * q, q / d, c * q / a, a * q / c, d * q / a, a * q / d}, h);
  };
  return r;
}

IdentityRecord thm_qun() {
  IdentityRecord r;
  r.id = "thm_qun";
  r.title = "bilateral quadratic summation with base-q^2 products in the summand";
  r.anchor = "converges absolutely for |q|<1";
  // The right side carries 1/(q;q)_k, so both sides vanish for k < 0.
  r.slots = {cont("a"), cont("b"), cont("c"), integer("k", 0, 3)};
  r.region_text = "none (q^{n(n-1)/2} in the summand)";
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), q = p.q;
    const long k = p.n("k");
    return Guards()
        .point({a})
        .lattice({b, c * qp(q, k), a * qp(q, -k) / b, a * q / b, a * qp(q, 1 - k) / c,
                  b * qp(q, 1 + k)})
        .lattice({b * c / a, b * q, b * q / a, b / c, c / a, c, c * c * q / a})
        .lattice({b * b * q / a}, q * q)
        .forward({q / b, q / c, a * q / c})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), q = p.q;
    const long k = p.n("k");
    const QBase h(q);
    RatioSeq ratio({b, c * qp(q, k), a * qp(q, -k) / b},
                   {a * q / b, a * qp(q, 1 - k) / c, b * qp(q, 1 + k)}, h);
    return eval_custom_bilateral(
               [&](long n) {
                 return quad_term(ratio, xvwp(a, q, n), a, b, c, n, q, -a * q / c);
               },
               t)
        .value;
  };
  r.rhs = [](P p, T) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), q = p.q;
    const long k = p.n("k");
    const QBase h(q), h2(q * q);
    const Complex kpart = poch_ratio({b * c / a, b * q, b * q / a, b / c},
                                     {q, c / a, c, c * c * q / a}, h, k);
    if (kpart == 0.0) return Complex(0.0);
    return kpart * poch_ratio({c * c * q / a}, {b * b * q / a}, h2, k) * ipow(-c / b, k) *
           inf_ratio({q, q, a * q, q / a, a * q / (b * c), b * q / c},
                     {b * q, q / b, b * q / a, a * q / b, q / c, a * q / c}, h) *
           inf_product({q, b * b * q / a, c * c * q * q / a, c * c * q * q / (b * b)}, h2);
  };
  return r;
}

IdentityRecord thm_shn() {
  IdentityRecord r;
  r.id = "thm_shn";
  r.title = "bilateral summation with a bracketed correction in a free parameter u";
  r.anchor = "provided |a^2/bcde|<1";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), cont("e"), cont("u")};
  r.region_text = "|a^2/(bcde)| < 1";
  r.region = [](P p) {
    const Complex a = p.v("a");
    return std::vector<Complex>{a * a / (p.v("b") * p.v("c") * p.v("d") * p.v("e"))};
  };
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"), q = p.q;
    return Guards()
        .point({a, a / (b * c)})
        .lattice({b, c, d * q, e * q, a * q / b, a * q / c, a * q / d, a * q / e, d, e})
        .forward({q / b, q / c, 1.0 / d, 1.0 / e, a * a * q / (b * c * d * e)})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  u = p.v("u"), q = p.q;
    const QBase h(q);
    const Complex z = a * a / (b * c * d * e);
    RatioSeq ratio({b, c, d * q, e * q}, {a * q / b, a * q / c, a * q / d, a * q / e}, h, z);
    return eval_custom_bilateral(
               [&](long n) {
                 const XComplex rt = ratio.xat(n);
                 if (rt.is_zero()) return Complex(0.0);
                 const XComplex qn = xqp(q, n);
                 const XComplex br =
                     XComplex(1.0) - XComplex((1.0 - d * e / a) / (1.0 - a / (b * c))) *
                                         om(u, qn) * om(a * a / (b * c * u), qn) /
                                         (om(d, qn) * om(e, qn));
                 return (xvwp(a, q, n) * rt * br).value();
               },
               t)
        .value;
  };
  r.rhs = [](P p, T) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  u = p.v("u"), q = p.q;
    return (1.0 - a / (c * u)) * (1.0 - b * u / a) / (b - a / c) *
           inf_ratio({q, a * q, q / a, a * q / (b * c), a * q / (b * d), a * q / (b * e),
                      a * q / (c * d), a * q / (c * e), a / (d * e)},
                     {q / b, a * q / b, q / c, a * q / c, 1.0 / d, a * q / d, 1.0 / e, a * q / e,
                      a * a * q / (b * c * d * e)},
                     QBase(q));
  };
  r.links = {"shn_bailey"};
  return r;
}

IdentityRecord milne() {
  IdentityRecord r;
  r.id = "milne_8psi8_transform";
  r.title = "Milne's 8psi8 transformation to a terminating balanced 4phi3";
  r.anchor = "due to Milne";
  r.slots = {cont("a"), cont("b"), cont("c"), cont("d"), cont("e"), cont("f"), nonneg("N", 6)};
  r.region_text = "|a^2 q^{1-N}/(bcde)| < 1";
  r.region = [](P p) {
    const Complex a = p.v("a");
    return std::vector<Complex>{a * a * qp(p.q, 1 - p.n("N")) /
                                (p.v("b") * p.v("c") * p.v("d") * p.v("e"))};
  };
  r.guards = [](P p) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  f = p.v("f"), q = p.q;
    const long N = p.n("N");
    return Guards()
        .point({a})
        .lattice({b, c, d, e, f, a * qp(q, 1 + N) / f, a * q / b, a * q / c, a * q / d,
                  a * q / e, a * q / f, f * qp(q, -N)})
        .forward({q / b, q / c, q / d, q / e, a * a * q / (b * c * d * e), q / f, b * q / f,
                  b * f * qp(q, -N) / a, b * c * d * e / (a * a)})
        .take();
  };
  r.lhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  f = p.v("f"), q = p.q;
    const long N = p.n("N");
    return vwp_psi(a, {b, c, d, e, f, a * qp(q, 1 + N) / f},
                   {a * q / b, a * q / c, a * q / d, a * q / e, a * q / f, f * qp(q, -N)},
                   QBase(q), a * a * qp(q, 1 - N) / (b * c * d * e), t);
  };
  r.rhs = [](P p, T t) {
    const Complex a = p.v("a"), b = p.v("b"), c = p.v("c"), d = p.v("d"), e = p.v("e"),
                  f = p.v("f"), q = p.q;
    const long N = p.n("N");
    const QBase h(q);
    const Complex phi =
        eval_phi(SeriesSpec::unilateral({qp(q, -N), b * c / a, b * d / a, b * e / a},
                                        {b * q / f, b * f * qp(q, -N) / a, b * c * d * e / (a * a)},
                                        h, q),
                 t)
            .value;
    return bailey_products(a, b, c, d, e, h) *
           poch_ratio({b * q / f, a * q / (b * f)}, {a * q / f, q / f}, h, N) * phi;
  };
  r.links = {"milne_N0_bailey", "milne_N1_shukla"};
  return r;
}

}  // namespace

std::vector<IdentityRecord> theorem_records() {
  return {thm_88n(), thm_qun(), thm_shn(), milne()};
}

}  // namespace qbilat::detail
