#include "doctest.h"
#include "qbilat/series.hpp"
#include "support.hpp"

using namespace qbilat;
using testing_support::rel;

namespace {

SeriesSpec bailey_lhs(Complex a, Complex b, Complex c, Complex d, Complex e, Complex q) {
  SeriesParts p;
  p.upper = {b, c, d, e};
  p.lower = {a * q / b, a * q / c, a * q / d, a * q / e};
  p.vwp = a;
  return SeriesSpec::make(SeriesKind::Bilateral, p, QBase(q), a * a * q / (b * c * d * e));
}

Complex bailey_rhs(Complex a, Complex b, Complex c, Complex d, Complex e, Complex q) {
  const QBase h(q);
  return inf_ratio({q, a * q, q / a, a * q / (b * c), a * q / (b * d), a * q / (b * e),
                    a * q / (c * d), a * q / (c * e), a * q / (d * e)},
                   {a * q / b, a * q / c, a * q / d, a * q / e, q / b, q / c, q / d, q / e,
                    a * a * q / (b * c * d * e)},
                   h);
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("spec construction checks counts") {
  const QBase h(0.5);
  CHECK_THROWS_AS(SeriesSpec::unilateral({0.5}, {0.3}, h, 0.2), Error);
  CHECK_THROWS_AS(SeriesSpec::bilateral({0.5}, {}, h, 0.2), Error);
  // lower parameter q^{-1} sits below the termination index 3
  CHECK_THROWS_AS(SeriesSpec::unilateral({ipow(0.5, -3), 0.3}, {2.0}, h, 0.5), Error);
  auto s = SeriesSpec::unilateral({ipow(0.5, -3), 0.3}, {0.4}, h, 0.5);
  CHECK(s.termination_index() == 3L);
}

TEST_CASE("classification") {
  const Complex q = 0.3;
  {
    // 6psi6 written with explicit sqrt(a) = 2 pairs
    const Complex a = 4.0, b = 0.5, s = 2.0;
    auto spec = SeriesSpec::bilateral({q * s, -q * s, b, b, b, b},
                                      {s, -s, a * q / b, a * q / b, a * q / b, a * q / b},
                                      QBase(q), a * a * q / (b * b * b * b));
    const auto c = classify(spec);
    CHECK(c.very_well_poised);
    CHECK(c.well_poised);
  }
  {
    const Complex a = 0.4, b = 0.7, c = 0.7, d = 0.7;
    const long N = 3;
    const Complex qn = ipow(q, N);
    const Complex s = std::sqrt(a);
    auto spec = SeriesSpec::unilateral(
        {a, q * s, -q * s, b, c, d, a * a * q * qn / (b * c * d), 1.0 / qn},
        {s, -s, a * q / b, a * q / c, a * q / d, b * c * d / (a * qn), a * q * qn}, QBase(q), q);
    const auto cl = classify(spec);
    CHECK(cl.balanced);
    CHECK(cl.very_well_poised);
    // the same series through the combined vwp factor classifies identically
    SeriesParts p;
    p.upper = {a, b, c, d, a * a * q * qn / (b * c * d), 1.0 / qn};
    p.lower = {a * q / b, a * q / c, a * q / d, b * c * d / (a * qn), a * q * qn};
    p.vwp = a;
    const auto cl2 = classify(SeriesSpec::make(SeriesKind::Unilateral, p, QBase(q), q));
    CHECK(cl2.balanced);
    CHECK(cl2.very_well_poised);
  }
  {
    const auto c = classify(SeriesSpec::unilateral({0.5}, {}, QBase(q), 0.3));
    CHECK_FALSE(c.balanced);
    CHECK_FALSE(c.well_poised);
    CHECK_FALSE(c.very_well_poised);
  }
}

TEST_CASE("unilateral evaluation") {
  const QBase h(0.5);
  SUBCASE("q-binomial theorem") {
    const Complex a = 0.5, z = 0.25;
    const auto r = eval_phi(SeriesSpec::unilateral({a}, {}, h, z));
    CHECK(rel(r.value, qpoch_inf(a * z, h) / qpoch_inf(z, h)) < 1e-10);
    CHECK(r.status == EvalStatus::Converged);
  }
  SUBCASE("terminating sum against explicit terms") {
    const double q = 0.5;
    const Complex a1 = 1.0 / (q * q), a2 = 0.3, b1 = 0.4, z = q;
    Complex direct = 0.0;
    for (int k = 0; k <= 2; ++k) {
      Complex t = std::pow(z, k);
      for (int j = 0; j < k; ++j)
        t *= (1.0 - a1 * std::pow(q, j)) * (1.0 - a2 * std::pow(q, j)) /
             ((1.0 - std::pow(q, j + 1)) * (1.0 - b1 * std::pow(q, j)));
      direct += t;
    }
    const auto r = eval_phi(SeriesSpec::unilateral({ipow(q, -2), a2}, {b1}, h, z));
    CHECK(r.status == EvalStatus::Terminated);
    CHECK(r.terms_forward == 3);
    CHECK(rel(r.value, direct) < 1e-15);
  }
  SUBCASE("zero argument") {
    const auto r = eval_phi(SeriesSpec::unilateral({0.5, 0.2}, {0.7}, h, 0.0));
    CHECK(r.value == Complex(1.0));
  }
  SUBCASE("divergent argument") {
    CHECK_THROWS_WITH_AS(eval_phi(SeriesSpec::unilateral({0.5}, {}, h, 1.5)),
                         doctest::Contains("Divergent"), Error);
  }
  SUBCASE("kind mismatch") {
    CHECK_THROWS_AS(eval_psi(SeriesSpec::unilateral({0.5}, {}, h, 0.2)), Error);
  }
}

TEST_CASE("bilateral evaluation") {
  SUBCASE("lower parameter q makes the back tail vanish") {
    const Complex q = 0.45;
    const QBase h(q);
    const auto uni = eval_phi(SeriesSpec::unilateral({0.5, Complex(0.2, 0.3)}, {0.8}, h, 0.6));
    const auto bi =
        eval_psi(SeriesSpec::bilateral({0.5, Complex(0.2, 0.3)}, {q, 0.8}, h, 0.6));
    CHECK(bi.terms_backward == 0);
    CHECK(rel(uni.value, bi.value) < 1e-12);
  }
  SUBCASE("Bailey 6psi6 outside its region") {
    CHECK_THROWS_WITH_AS(eval_psi(bailey_lhs(4, 1.3, 1.3, 1.3, 1.3, 0.4)),
                         doctest::Contains("Divergent"), Error);
    // |a^2 q/bcde| = 1.52 here, also outside
    CHECK_THROWS_AS(eval_psi(bailey_lhs(9, 2, 2, 2, 2, 0.3)), Error);
  }
  SUBCASE("Bailey 6psi6 inside its region") {
    const auto r = eval_psi(bailey_lhs(9, 3, 3, 3, 3, 0.3));
    CHECK(rel(r.value, bailey_rhs(9, 3, 3, 3, 3, 0.3)) < 1e-9);
    const Complex a(0.8, 0.3), b(1.7, -0.2), c = 2.1, d(0.9, 1.4), e = 1.6, q = 0.62;
    const auto r2 = eval_psi(bailey_lhs(a, b, c, d, e, q));
    CHECK(rel(r2.value, bailey_rhs(a, b, c, d, e, q)) < 1e-10);
  }
  SUBCASE("complex base") {
    const Complex a(0.8, 0.3), b(1.7, -0.2), c = 2.1, d(0.9, 1.4), e = 1.6, q(0.35, 0.4);
    const auto r = eval_psi(bailey_lhs(a, b, c, d, e, q));
    CHECK(rel(r.value, bailey_rhs(a, b, c, d, e, q)) < 1e-10);
  }
  SUBCASE("doubling the term budget changes nothing once converged") {
    const auto spec = bailey_lhs(1.3, 2.2, 1.9, 2.4, 1.1, 0.7);
    TruncationPolicy t1, t2;
    t2.max_terms_per_direction = 2 * t1.max_terms_per_direction;
    const auto r1 = eval_psi(spec, t1), r2 = eval_psi(spec, t2);
    REQUIRE(r1.status == EvalStatus::Converged);
    CHECK(std::abs(r1.value - r2.value) <= 10 * t1.eps_term * std::abs(r1.value));
  }
  SUBCASE("term budget exhaustion is reported, not raised") {
    TruncationPolicy t;
    t.max_terms_per_direction = 5;
    const auto r = eval_psi(bailey_lhs(1.3, 2.2, 1.9, 2.4, 1.1, 0.7), t);
    CHECK(r.status == EvalStatus::MaxTermsHit);
  }
}

TEST_CASE("custom bilateral sums") {
  SUBCASE("single term") {
    const Complex c(2.5, -1.0);
    const auto r = eval_custom_bilateral([&](long k) { return k == 0 ? c : Complex(0.0); });
    CHECK(r.value == c);
    CHECK(r.terms_forward <= 4);
    CHECK(r.terms_backward <= 3);
  }
  SUBCASE("two-sided geometric") {
    const double z = 0.5;
    const auto r = eval_custom_bilateral([&](long k) { return Complex(std::pow(z, std::labs(k))); });
    CHECK(rel(r.value, (1 + z) / (1 - z)) < 1e-12);
  }
  SUBCASE("non-decaying tail") {
    CHECK_THROWS_WITH_AS(eval_custom_bilateral([](long k) { return Complex(k >= 0 ? 1.0 : 0.0); }),
                         doctest::Contains("NonDecayingTail"), Error);
  }
  SUBCASE("quadratic summand with n-dependent base-q^2 products") {
    const Complex q = 0.3, a = 4, b = 0.7, c = 0.6;
    const QBase h(q), h2(q * q);
    const long k = 0;
    auto term = [&](long n) {
      const Complex r = poch_ratio({b, c * ipow(q, k), a * ipow(q, -k) / b},
                                   {a * q / b, a * ipow(q, 1 - k) / c, b * ipow(q, 1 + k)}, h, n);
      if (r == 0.0) return Complex(0.0);
      return vwp_factor(a, h, n) * r * ipow(q, n * (n - 1) / 2) * ipow(-a * q / c, n) *
             qpoch_inf(b * ipow(q, 1 + n), h2) * qpoch_inf(b * ipow(q, 1 - n) / a, h2) *
             qpoch_inf(c * c * ipow(q, 2 + n) / b, h2) *
             qpoch_inf(c * c * ipow(q, 2 - n) / (a * b), h2);
    };
    const auto lhs = eval_custom_bilateral(term);
    const Complex rhs =
        inf_ratio({q, q, a * q, q / a, a * q / (b * c), b * q / c},
                  {b * q, q / b, b * q / a, a * q / b, q / c, a * q / c}, h) *
        inf_product({q, b * b * q / a, c * c * q * q / a, c * c * q * q / (b * b)}, h2);
    CHECK(rel(lhs.value, rhs) < 1e-8);
  }
}

}  // TEST_SUITE
