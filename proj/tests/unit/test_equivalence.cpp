#include <doctest.h>

#include "test_util.hpp"
#include "wnk/equivalence.hpp"

using namespace wnk;

TEST_CASE("period-side vertex operator equals the reduced t-side one") {
  for (int h : {2, 3, 4}) {
    VertexOperatorData a = build_gamma_a(h, 3, 8);
    VertexOperatorData red = mod_h_reduce(build_gamma_kp(h, 3, 8, false));
    CHECK(a == red);
  }
}

TEST_CASE("extract_W window") {
  for (int h : {2, 3}) {
    ExtractedOperators w = extract_W(h, 2, -2, 2, 6);
    // W^0_0 is the scalar h; all other W^0_n vanish
    CHECK(w.at(0, 0) == ModePolynomial::scalar(Rational(h)));
    for (int n = -2; n <= 2; ++n)
      if (n != 0) CHECK(w.at(0, n).empty());
  }
}

TEST_CASE("cross-picture equivalence report") {
  for (int h : {2, 3}) {
    EquivalenceReport rep = check_picture_equivalence(h, 2, 2, 8, 3);
    CHECK(rep.prefactor_ok);
    CHECK(rep.per_branch_ok);
    CHECK(rep.convolution_ok);
    CHECK(rep.reduction_factor_ok);
    CHECK(rep.action_ok);
    CHECK(rep.ok());
    CHECK(rep.mismatches.empty());
  }
}

TEST_CASE("a perturbed operator is detected") {
  VertexOperatorData a = build_gamma_a(2, 2, 6);
  VertexOperatorData b = a;
  b.add_mult({-1, 1}, 1, rat(1, 7));
  CHECK(!(a == b));
}

TEST_CASE("action mismatch reporting") {
  ModePolynomial x = ModePolynomial::mode(-1);
  ModePolynomial y = ModePolynomial::mode(-1, rat(1, 2));
  auto bad = first_action_mismatch(x, y, 4);
  REQUIRE(bad.has_value());
  CHECK(!first_action_mismatch(x, x, 4).has_value());
}
