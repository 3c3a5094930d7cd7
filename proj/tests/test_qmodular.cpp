#include <doctest.h>

#include <cmath>
#include <complex>

#include "hilbgw/qmodular.hpp"

using namespace hilbgw;

TEST_CASE("cot_expansion small cases") {
  // r=1, order 3: (1/12) u + (1/720) u^3, u^{-1} cancels
  ULaurent<Rat> k = cot_expansion(1, 3);
  CHECK(k.coeff(-1).coeff(0) == Rat(0));
  CHECK(k.coeff(0).coeff(0) == Rat(0));
  CHECK(k.coeff(1).coeff(0) == Rat(1, 12));
  CHECK(k.coeff(2).coeff(0) == Rat(0));
  CHECK(k.coeff(3).coeff(0) == Rat(1, 720));
  // coefficient of u^1 is r^2/12 for various r
  for (int r = 1; r <= 6; ++r) CHECK(cot_expansion(r, 1).coeff(1).coeff(0) == Rat(r * r, 12));
  CHECK_THROWS(cot_expansion(0, 3));
}

TEST_CASE("cot_expansion only odd exponents, u^-1 zero") {
  for (int r = 1; r <= 10; ++r) {
    ULaurent<Rat> k = cot_expansion(r, 9);
    CHECK(k.coeff(-1).coeff(0) == Rat(0));
    for (int e = 0; e <= 9; e += 2) CHECK(k.coeff(e).coeff(0) == Rat(0));
  }
}

TEST_CASE("cot_expansion float sanity check against the actual function") {
  // (-i r/2)((-q)^r+1)/((-q)^r-1) at q = -e^{iu0} equals -(r/2) cot(r u0/2).
  // cot_expansion stores the pole-subtracted expansion (the -1/u is written
  // off against the h=0 term), so compare after adding 1/u0 back.
  const double u0 = 0.05;
  for (int r = 1; r <= 10; ++r) {
    std::complex<double> iu(0.0, u0);
    std::complex<double> mq = std::exp(iu);  // -q
    std::complex<double> mqr = std::pow(mq, r);
    std::complex<double> val = std::complex<double>(0.0, -r / 2.0) * (mqr + 1.0) / (mqr - 1.0);
    CHECK(std::abs(val.imag()) < 1e-12);
    ULaurent<Rat> k = cot_expansion(r, 13);
    double approx = -1.0 / u0;
    for (int e = 1; e <= 13; e += 2) approx += k.coeff(e).coeff(0).to_double() * std::pow(u0, e);
    CHECK(std::abs(val.real() - approx) < 1e-10);
  }
}

TEST_CASE("bseries") {
  ULaurent<Rat> b = bseries(3, 4);
  // u^{-1} row identically zero (g = 1)
  for (int m = 0; m <= 4; ++m) CHECK(b.coeff(-1).coeff(m) == Rat(0));
  // u^1 Q^2: (1/12)(sigma_3(2)-sigma_1(2)) = (1/12)(9-3) = 1/2
  CHECK(b.coeff(1).coeff(2) == Rat(1, 2));
  // u^1 Q^1: sigma_3(1) = sigma_1(1)
  CHECK(b.coeff(1).coeff(1) == Rat(0));
}

TEST_CASE("trace_u_expansion") {
  // n=1: Tr_1 = 0
  ULaurent<Rat> t1 = trace_u_expansion(1, 7);
  CHECK(t1.is_zero());
  // lowest u-exponent >= -1 and the u^{-1} coefficient vanishes
  for (int n = 1; n <= 6; ++n) {
    ULaurent<Rat> t = trace_u_expansion(n, 5);
    CHECK(t.lo() == -1);
    CHECK(t.coeff(-1).coeff(0) == Rat(0));
  }
}

TEST_CASE("lemma 3.4 trace identity") {
  LemmaTraceReport rep = lemma_trace_check(5, 9, 9);
  CHECK(rep.pass);
  // full strength run used by the acceptance suite at smaller size here
  rep = lemma_trace_check(7, 11, 11);
  CHECK(rep.pass);
}
