#include <doctest.h>

#include "test_util.hpp"
#include "wnk/winf.hpp"

using namespace wnk;

TEST_CASE("central term series, frozen values") {
  // h=2, N=1, K=h: no pole, zero constant, x^1 = -1/16, x^2 = 1/32
  XSeries s2 = central_term(0, 2, 1, 4, 2);
  CHECK(s2.coeff(-1) == Rational(0));
  CHECK(s2.coeff(0) == Rational(0));
  CHECK(s2.coeff(1) == rat(-1, 16));
  CHECK(s2.coeff(2) == rat(1, 32));
  // h=3, N=2, K=h
  XSeries s3 = central_term(0, 3, 2, 4, 3);
  CHECK(s3.coeff(-1) == Rational(0));
  CHECK(s3.coeff(0) == Rational(0));
  CHECK(s3.coeff(1) == rat(-1, 9));
  CHECK(s3.coeff(2) == rat(1, 18));
  // n != 0 gives nothing
  CHECK(central_term(1, 2, 1, 4, 2).c.empty());
}

TEST_CASE("K = h is the unique pole-cancelling constant") {
  for (int h : {2, 3, 4}) {
    int N = h - 1;
    CHECK_NOTHROW(central_term(0, h, N, 4, h));
    // with K = h -/+ 1 the residue is K - h = -/+ 1
    XSeries lo = central_term(0, h, N, 4, h - 1);
    CHECK(lo.lo == -1);
    CHECK(lo.coeff(-1) == Rational(-1));
    XSeries hi = central_term(0, h, N, 4, h + 1);
    CHECK(hi.lo == -1);
    CHECK(hi.coeff(-1) == Rational(1));
  }
}

TEST_CASE("the x^1 coefficient reproduces the Virasoro constant") {
  // alpha on -lam D is the n = 0 Virasoro constant (h^2-1)/(24h)
  for (int h : {2, 3, 4, 5}) CHECK(alpha_correction(0, 1, h, h - 1) == rat(h * h - 1, 24 * h));
}

TEST_CASE("phi matrix examples") {
  // n=0, k=0: -Identity
  BandedMatrix id = phi_matrix(0, 0, 2, 1);
  REQUIRE(id.diags().size() == 1);
  CHECK(id.diags().begin()->first == 0);
  CHECK(id.diags().begin()->second.eval(7) == Rational(-1));

  // n=1, k=1, h=2, N=1: entries -(1/4)(-i - 1/2) on offset -2
  BandedMatrix m = phi_matrix(1, 1, 2, 1);
  REQUIRE(m.diags().size() == 1);
  auto& [d, p] = *m.diags().begin();
  CHECK(d == -2);
  for (int i = -3; i <= 3; ++i) CHECK(p.eval(i) == rat(-1, 4) * (Rational(-i) - rat(1, 2)));

  // k=0 general: -h^{-n} on offset -nh
  BandedMatrix g = phi_matrix(2, 0, 3, 2);
  REQUIRE(g.diags().count(-6));
  CHECK(g.diags().at(-6).eval(11) == rat(-1, 9));
}

TEST_CASE("comm:W central series examples") {
  // (e^{x m} - e^{y k}) / (1 - e^{x+y}) for (k, m) = (1, -1): frozen values
  CHECK(omega_exponential(1, 0, -1, 0) == Rational(1));
  CHECK(omega_exponential(1, 1, -1, 0) == Rational(-1));       // 1! [x^1 y^0] = -1
  CHECK(omega_exponential(1, 2, -1, 0) == Rational(1));        // 2! * 1/2
  CHECK(omega_exponential(1, 1, -1, 1) == Rational(0));
  // Virasoro cocycle -(a^3-a)/6 in the D-basis
  for (int a = 1; a <= 3; ++a)
    CHECK(omega_exponential(a, 1, -a, 1) == rat(-(a * a * a - a), 6));
  // no central part off the diagonal
  CHECK(omega_exponential(2, 1, -1, 1) == Rational(0));
}

TEST_CASE("expected brackets") {
  // [X, X] = 0
  ExpectedBracket self = expected_bracket(2, 1, 2, 1, 2, 1);
  CHECK(self.combo.empty());
  CHECK(is_zero(self.central));

  // [J^1_2, J^1_{-2}] = 4 J^1_0 - h (Virasoro with the central term)
  for (int h : {2, 3}) {
    ExpectedBracket eb = expected_bracket(2, 1, -2, 1, h, h - 1);
    REQUIRE(eb.combo.size() == 1);
    CHECK(eb.combo.at({1, 0}) == Rational(4));
    CHECK(eb.central == Rational(-h));
  }

  // boson modes: [J^0_a, J^0_{-a}] = a h
  for (int h : {2, 3})
    for (int a = 1; a <= 2; ++a) {
      ExpectedBracket eb = expected_bracket(a, 0, -a, 0, h, h - 1);
      CHECK(eb.combo.empty());
      CHECK(eb.central == Rational(a * h));
    }
}

TEST_CASE("measured gl cocycle matches the algebra route") {
  // commuting shift matrices: the whole bracket is the central scalar
  for (int h : {2, 3}) {
    int N = h - 1;
    for (int a = 1; a <= 2; ++a) {
      Rational measured = measure_gl_cocycle(phi_matrix(-a, 0, h, N), phi_matrix(a, 0, h, N),
                                             4 * a * h + 6, 1);
      ExpectedBracket eb = expected_bracket(-a, 0, a, 0, h, N);
      CHECK(measured == eb.central);
    }
  }
}

TEST_CASE("fermionic algebra checks") {
  FermionCheckReport rep = check_fermion_algebra(5, 1);
  CHECK(rep.anticommutators_ok);
  CHECK(rep.projective_ok);
  CHECK(rep.ok());
}

TEST_CASE("fermionic brackets on a small window") {
  BracketCheckReport rep = check_fermionic_brackets(2, 1, 1, 10, 1);
  CHECK(rep.central_unique_ok);
  CHECK(rep.failures.empty());
  CHECK(rep.pairs_checked > 0);
}

TEST_CASE("bosonic brackets on a small window") {
  BracketCheckReport rep = check_bosonic_brackets(2, 1, 1, 6);
  CHECK(rep.failures.empty());
  CHECK(rep.pairs_checked > 0);
}

TEST_CASE("cross-picture central scalars agree") {
  // the two reports carry identical expected central scalars per pair; a
  // disagreement would surface as a FAIL in either picture
  BracketCheckReport f = check_fermionic_brackets(3, 1, 1, 14, 1);
  BracketCheckReport b = check_bosonic_brackets(3, 1, 1, 6);
  CHECK(f.failures.empty());
  CHECK(b.failures.empty());
  REQUIRE(f.lines.size() == b.lines.size());
  for (std::size_t i = 0; i < f.lines.size(); ++i) CHECK(f.lines[i] == b.lines[i]);
}

TEST_CASE("stirling numbers") {
  // x(x-1)(x-2) = 2x - 3x^2 + x^3
  auto s = stirling_first(3);
  REQUIRE(s.size() == 4);
  CHECK(s[0] == Rational(0));
  CHECK(s[1] == Rational(2));
  CHECK(s[2] == Rational(-3));
  CHECK(s[3] == Rational(1));
}
