#include <doctest.h>

#include "test_util.hpp"
#include "wnk/basis.hpp"
#include "wnk/mode_poly.hpp"

using namespace wnk;

TEST_CASE("Heisenberg commutation relations by action") {
  const int cap = 8;
  std::vector<Monomial> basis = enumerate_basis(cap);
  for (int m = -4; m <= 4; ++m)
    for (int mp = -4; mp <= 4; ++mp) {
      if (m == 0 || mp == 0) continue;
      for (const Monomial& b : basis) {
        TruncatedSeries probe(cap, -6);
        probe.add_term(b, Rational(1));
        TruncatedSeries lhs =
            apply_mode(m, apply_mode(mp, probe)) - apply_mode(mp, apply_mode(m, probe));
        TruncatedSeries expect = probe;
        expect.scale(m == -mp ? Rational(m) : Rational(0));
        // the commutator leaves weight unchanged, so no cap effects
        CHECK(lhs == expect);
      }
    }
}

TEST_CASE("normal ordering and canonical merging") {
  ModePolynomial p;
  p.add_term(ModeTerm{rat(1, 2), {3, -1}, 0, 0});
  p.add_term(ModeTerm{rat(1, 2), {-1, 3}, 0, 0});
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms()[0].coeff == Rational(1));
  CHECK(p.terms()[0].modes == std::vector<int>{-1, 3});

  ModePolynomial q;
  q.add_term(ModeTerm{Rational(1), {-1, 3}, 0, 0});
  q.add_term(ModeTerm{Rational(-1), {3, -1}, 0, 0});
  CHECK(q.empty());
}

TEST_CASE("concat product rejects ill-ordered factors") {
  ModePolynomial mult = ModePolynomial::mode(-2);
  ModePolynomial deriv = ModePolynomial::mode(5);
  CHECK_NOTHROW(concat_product(mult, deriv));
  CHECK_THROWS_AS(concat_product(deriv, mult), internal_error);
}

TEST_CASE("dilaton shift substitutes J_{-(h+1)}") {
  const int h = 2;
  ModePolynomial p;
  p.add_term(ModeTerm{Rational(1), {-3, -3, 1}, 0, 0});
  ModePolynomial s = p.dilaton_shifted(h);
  // (J - eps^{-1})^2 J_1 = J^2 J_1 - 2 eps^{-1} J J_1 + eps^{-2} J_1
  REQUIRE(s.terms().size() == 3);
  CHECK(s.terms()[0].modes == std::vector<int>{1});
  CHECK(s.terms()[0].eps_pow == -2);
  CHECK(s.terms()[0].coeff == Rational(1));
  CHECK(s.terms()[1].modes == std::vector<int>{-3, 1});
  CHECK(s.terms()[1].eps_pow == -1);
  CHECK(s.terms()[1].coeff == Rational(-2));
  CHECK(s.terms()[2].modes == std::vector<int>{-3, -3, 1});
  CHECK(s.terms()[2].eps_pow == 0);
}

TEST_CASE("mode application dresses eps") {
  TruncatedSeries one = series_one(6, -4);
  // J_{-n} multiplies by n t_n eps^{-1}
  TruncatedSeries m = apply_mode(-3, one);
  CHECK(m.coeff(monomial_var(3, 1, -1)) == Rational(3));
  // J_n = eps d/dt_n
  TruncatedSeries d = apply_mode(3, m);
  CHECK(d.coeff(monomial_one()) == Rational(3));
}

TEST_CASE("weight and eps bookkeeping of terms") {
  ModeTerm t{Rational(1), {-5, -1, 2, 3}, -1, 0};
  CHECK(t.weight_shift() == 5 + 1 - 2 - 3);
  CHECK(t.eps_degree() == 2 - 2 - 1);
  CHECK(t.num_derivations() == 2);
  CHECK(mode_term_within_cap(t, 6));
  CHECK(!mode_term_within_cap(t, 5));
  CHECK(!mode_term_within_cap(t, 4));
}

TEST_CASE("apply refuses operators carrying lambda powers") {
  ModePolynomial p = ModePolynomial::scalar(Rational(1), 0, 2);
  TruncatedSeries one = series_one(4, -2);
  CHECK_THROWS_AS(p.apply(one), domain_error);
}

TEST_CASE("rendering is canonical") {
  ModePolynomial p;
  p.add_term(ModeTerm{rat(-1, 2), {-3, 1}, -1, 0});
  p.add_term(ModeTerm{rat(1, 16), {}, 0, 0});
  CHECK(p.render() == "-1/2 J[-3] J[1] eps^-1 + 1/16");
}
