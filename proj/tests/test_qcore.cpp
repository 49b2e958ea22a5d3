#include "doctest.h"
#include "qbilat/qcore.hpp"
#include "support.hpp"

using namespace qbilat;
using testing_support::Gen;
using testing_support::rel;

TEST_SUITE("qcore") {

TEST_CASE("base must lie strictly inside the unit disc") {
  CHECK_THROWS_AS(QBase(0.0), Error);
  CHECK_THROWS_AS(QBase(1.0), Error);
  CHECK_THROWS_AS(QBase(Complex(0.8, 0.7)), Error);
  CHECK(QBase(Complex(0.3, -0.4)).q() == Complex(0.3, -0.4));
}

TEST_CASE("infinite product") {
  const QBase h(0.5);
  CHECK(qpoch_inf(0.0, h) == Complex(1.0));
  CHECK(qpoch_inf(1.0, h) == Complex(0.0));

  // oracle: 100 explicit factors of (1 - 0.5^{j+1})
  double oracle = 1.0;
  for (int j = 0; j < 100; ++j) oracle *= 1.0 - std::pow(0.5, j + 1);
  CHECK(rel(qpoch_inf(0.5, h), oracle) < 1e-14);

  CHECK_THROWS_AS(qpoch_inf(0.5, h, 0.0), Error);
}

TEST_CASE("finite index") {
  const QBase h(0.5);
  CHECK(qpoch(0.7, h, 0) == PochResult::finite(1.0));
  CHECK(qpoch(0.5, h, 1) == PochResult::finite(0.5));
  CHECK(qpoch(0.25, h, -1) == PochResult::finite(2.0));
  CHECK(qpoch(0.5, h, -1).is_pole());
  CHECK_THROWS_AS(qpoch(0.5, h, -1).value(), Error);
}

TEST_CASE("condensed products") {
  const QBase h(0.5);
  CHECK(qpoch_multi({}, h, 3) == PochResult::finite(1.0));
  CHECK(qpoch_multi({0.5, 0.25}, h, 1) == PochResult::finite(0.375));
  CHECK(qpoch_multi({0.5}, h, -1).is_pole());
  CHECK(rel(qpoch_multi({0.5, 0.25}, h, PochIndex::infinity()).value(),
            qpoch_inf(0.5, h) * qpoch_inf(0.25, h)) < 1e-15);

  PochProduct mixed;
  mixed *= qpoch(1.0, h, 2);   // exact zero
  mixed *= qpoch(0.5, h, -1);  // pole
  CHECK_THROWS_WITH_AS(mixed.result(), doctest::Contains("AmbiguousZeroTimesPole"), Error);
}

TEST_CASE("quotient semantics") {
  CHECK(quotient(PochResult::finite(3.0), PochResult::pole()) == Complex(0.0));
  CHECK(quotient(PochResult::finite(3.0), PochResult::finite(2.0)) == Complex(1.5));
  CHECK_THROWS_AS(quotient(PochResult::pole(), PochResult::finite(1.0)), Error);
}

TEST_CASE("very-well-poised factor") {
  const QBase h(0.5);
  CHECK(vwp_factor(0.3, h, 0) == Complex(1.0));
  CHECK(std::abs(vwp_factor(0.5, h, 1) - 1.75) < 1e-15);
  CHECK(std::abs(vwp_factor(2.0, h, 1) + 0.5) < 1e-15);
  CHECK_THROWS_WITH_AS(vwp_factor(1.0, h, 2), doctest::Contains("DegenerateSpecialParameter"),
                       Error);
}

TEST_CASE("exact zeros survive floating point q^{-N}") {
  Gen g(11);
  for (int t = 0; t < 300; ++t) {
    const Complex q = t % 3 == 0 ? Complex(g.uniform(0.1, 0.9)) : g.polar(0.1, 0.9);
    const QBase h(q);
    const long N = g.integer(0, 12);
    const Complex a = ipow(q, -N);
    CHECK(qpoch(a, h, N + 1).value() == Complex(0.0));
    CHECK(qpoch(a, h, N).value() != Complex(0.0));
    CHECK(qpoch_inf(a, h) == Complex(0.0));
  }
}

TEST_CASE("functional equations") {
  Gen g(2024);
  for (int t = 0; t < 200; ++t) {
    const Complex q = t % 4 == 0 ? g.polar(0.1, 0.8) : Complex(g.uniform(0.1, 0.8));
    const QBase h(q);
    const Complex a = g.polar(0.3, 3.0);
    const long n = g.integer(-6, 6), m = g.integer(-6, 6);
    const auto lhs = qpoch(a, h, n + m);
    const auto p1 = qpoch(a, h, n);
    const auto p2 = qpoch(a * ipow(q, n), h, m);
    if (!lhs.is_pole() && !p1.is_pole() && !p2.is_pole())
      CHECK(rel(lhs.value(), p1.value() * p2.value()) < 1e-12);

    const long k = g.integer(1, 6);
    const auto r1 = qpoch(a, h, -k);
    const auto r2 = qpoch(a * ipow(q, -k), h, k);
    if (!r1.is_pole()) CHECK(rel(r1.value() * r2.value(), 1.0) < 1e-12);

    const long j = g.integer(-5, 5);
    const auto pj = qpoch(a, h, j);
    if (!pj.is_pole())
      CHECK(rel(qpoch_inf(a, h), pj.value() * qpoch_inf(a * ipow(q, j), h)) < 1e-10);
  }
}

TEST_CASE("stable Pochhammer ratios") {
  const QBase h(0.75);
  const Complex b = 0.6, c = 1.7;
  // direct products overflow at this depth; the ratio stays finite
  const Complex r = poch_ratio({b}, {c}, h, -400);
  CHECK(std::isfinite(std::abs(r)));
  CHECK(std::abs(r) > 0.0);
  CHECK(rel(poch_ratio({b}, {c}, h, -7),
            qpoch(b, h, -7).value() / qpoch(c, h, -7).value()) < 1e-13);
  CHECK(rel(poch_ratio({b, 0.2}, {c}, h, 5),
            qpoch(b, h, 5).value() * qpoch(0.2, h, 5).value() / qpoch(c, h, 5).value()) < 1e-14);
  // denominator pole on the back tail: exact zero; numerator pole: error
  CHECK(poch_ratio({b}, {0.75}, h, -2) == Complex(0.0));
  CHECK_THROWS_AS(poch_ratio({0.75}, {b}, h, -2), Error);
  // numerator zero before the denominator one
  CHECK(poch_ratio({1.0}, {1.0 / 0.75}, h, 4) == Complex(0.0));

  RatioSeq seq({b, 0.2}, {c, 0.9}, h);
  for (long k : {0L, 1L, 2L, 3L, -1L, -2L, -3L, 5L, 2L})
    CHECK(rel(seq.at(k), poch_ratio({b, 0.2}, {c, 0.9}, h, k)) < 1e-14);
}

TEST_CASE("lattice helpers") {
  const Complex q = 0.3;
  CHECK(lattice_hit(ipow(q, -4), q, 0, 100) == 4L);
  CHECK_FALSE(lattice_hit(1.1 * ipow(q, -4), q, 0, 100));
  CHECK(lattice_gap(0.05, q, 0, 10) == doctest::Approx(0.95));
  CHECK(lattice_gap(ipow(q, -2) * 1.001, q, 0, 10) == doctest::Approx(0.001).epsilon(1e-6));
}

TEST_CASE("extended-range complex") {
  const XComplex big = XComplex::pow(Complex(0.5, 0.1), -3000);
  CHECK(big.log2_abs() == doctest::Approx(3000 * -std::log2(std::abs(Complex(0.5, 0.1)))));
  CHECK(std::isinf(std::abs(big.value())));
  const XComplex back = big * XComplex::pow(Complex(0.5, 0.1), 3000);
  CHECK(rel(back.value(), 1.0) < 1e-11);
  CHECK(rel((XComplex(3.0) / XComplex(4.0)).value(), 0.75) == 0.0);
  CHECK(rel((XComplex(Complex(1, 2)) + XComplex(Complex(3, -1))).value(), Complex(4, 1)) < 1e-16);
  CHECK((XComplex(2.5) - XComplex(2.5)).is_zero());
  CHECK(XComplex::pow(0.0, 3).is_zero());
  CHECK(rel(XComplex(Complex(-2, 1)).log(), std::log(Complex(-2, 1))) < 1e-15);
}

TEST_CASE("ratio sequence with argument survives long tails") {
  const QBase h(0.9);
  const Complex z = 0.7;
  RatioSeq seq({0.5}, {1.3}, h, z);
  for (long k : {0L, 4L, -3L})
    CHECK(rel(seq.at(k), poch_ratio({0.5}, {1.3}, h, k) * std::pow(z, double(k))) < 1e-13);
  // the value underflows a double long before the sum would stop
  RatioSeq far({0.5}, {1.3}, h, 1e-3);
  CHECK(far.xat(2000).log2_abs() < -10000);
  CHECK(far.at(2000) == Complex(0.0));
}

}  // TEST_SUITE
