#include <doctest.h>

#include "test_util.hpp"
#include "wnk/wedge.hpp"

using namespace wnk;

TEST_CASE("vacuum labels") {
  WedgeState v = vacuum(0);
  CHECK(v.label(0) == -1);
  CHECK(v.label(5) == -6);
  CHECK(v.energy() == 0);
  WedgeState s{1, {3, 1}};
  CHECK(s.label(0) == 3);   // 1 - 1 + 3
  CHECK(s.label(1) == 0);   // 1 - 2 + 1
  CHECK(s.label(2) == -2);  // tail
  CHECK(s.energy() == 4);
}

TEST_CASE("wedging the top slot of the vacuum") {
  // psi_{-i+1/2} with i = m on vacuum(m) gives vacuum(m+1) with sign +1
  for (int m = -2; m <= 2; ++m) {
    SignedState r = psi_apply(1 - 2 * m, vacuum(m));  // 2r = 1 - 2i, i = m
    REQUIRE(!r.zero());
    CHECK(r.sign == 1);
    CHECK(r.state == vacuum(m + 1));
  }
}

TEST_CASE("wedging an occupied slot vanishes") {
  WedgeState v = vacuum(0);
  CHECK(wedge_label(-1, v).zero());
  CHECK(wedge_label(-7, v).zero());
  CHECK(!wedge_label(0, v).zero());
  CHECK(!wedge_label(3, v).zero());
}

TEST_CASE("contraction removes with the position sign") {
  WedgeState v = vacuum(0);
  SignedState a = contract_label(-1, v);  // top slot, position 0
  REQUIRE(!a.zero());
  CHECK(a.sign == 1);
  CHECK(a.state.charge == -1);
  SignedState b = contract_label(-2, v);  // second slot
  REQUIRE(!b.zero());
  CHECK(b.sign == -1);
  CHECK(contract_label(4, v).zero());
}

TEST_CASE("anticommutators on a small sector") {
  std::vector<WedgeState> states = enumerate_states(4, 1);
  for (int tr = -9; tr <= 9; tr += 2)
    for (int ts = -9; ts <= 9; ts += 2)
      for (const WedgeState& st : states) {
        std::map<WedgeState, Rational> acc;
        auto add = [&](const SignedState& s, int outer) {
          if (s.zero() || outer == 0) return;
          acc[s.state] += Rational(s.sign * outer);
        };
        SignedState a = psi_star_apply(ts, st);
        if (!a.zero()) add(psi_apply(tr, a.state), a.sign);
        SignedState b = psi_apply(tr, st);
        if (!b.zero()) add(psi_star_apply(ts, b.state), b.sign);
        for (auto it = acc.begin(); it != acc.end();)
          it = is_zero(it->second) ? acc.erase(it) : std::next(it);
        if (tr + ts == 0) {
          REQUIRE(acc.size() == 1);
          CHECK(acc.begin()->first == st);
          CHECK(acc.begin()->second == Rational(1));
        } else {
          CHECK(acc.empty());
        }
      }
}

TEST_CASE("rhat normal ordering annihilates the vacuum on diagonals") {
  WedgeState v = vacuum(0);
  for (int i = -4; i <= 4; ++i) CHECK(rhat_apply(i, i, v).zero());
  // off-diagonal examples
  CHECK(!rhat_apply(2, -1, v).zero());  // move the top label -1 up to 2
  CHECK(rhat_apply(-1, -1, v).zero());
}

TEST_CASE("rhat shifts energy by the matrix offset") {
  std::vector<WedgeState> states = enumerate_states(5, 1);
  for (const WedgeState& st : states)
    for (int i = -5; i <= 5; ++i)
      for (int j = -5; j <= 5; ++j) {
        SignedState r = rhat_apply(i, j, st);
        if (r.zero()) continue;
        CHECK(r.state.energy() - st.energy() == j - i);
        CHECK(r.state.charge == st.charge);
      }
}

TEST_CASE("banded matrix polynomial diagonals") {
  PolyQ p = PolyQ::linear(rat(1, 2), Rational(3));  // 1/2 + 3x
  CHECK(p.eval(2) == rat(13, 2));
  PolyQ shifted = p.shifted_arg(-1);
  CHECK(shifted.eval(3) == p.eval(2));
  PolyQ prod = p * p;
  CHECK(prod.eval(2) == p.eval(2) * p.eval(2));
}

TEST_CASE("banded matrix product entries") {
  // A has entry (c-2, c) = c, B has entry (c+1, c) = 1; AB has entry
  // (c-1, c) = A_{c-1... } evaluated at column c+1
  BandedMatrix a, b;
  a.add_diag(-2, PolyQ::linear(Rational(0), Rational(1)));
  b.add_diag(1, PolyQ::constant(Rational(1)));
  BandedMatrix ab = a * b;
  REQUIRE(ab.diags().size() == 1);
  auto& [offset, poly] = *ab.diags().begin();
  CHECK(offset == -1);
  for (int col = -3; col <= 3; ++col) CHECK(poly.eval(col) == Rational(col + 1));

  BandedMatrix ba = b * a;
  auto& [offset2, poly2] = *ba.diags().begin();
  CHECK(offset2 == -1);
  for (int col = -3; col <= 3; ++col) CHECK(poly2.eval(col) == Rational(col));

  // bracket = AB - BA
  BandedMatrix br = bracket(a, b);
  REQUIRE(br.diags().size() == 1);
  CHECK(br.diags().begin()->second.eval(5) == Rational(1));
}

TEST_CASE("truncation overflow is flagged") {
  BandedMatrix raise;
  raise.add_diag(6, PolyQ::constant(Rational(1)));  // lowers energy by ... offset 6: j - i = -6
  BandedMatrix lower;
  lower.add_diag(-6, PolyQ::constant(Rational(1)));  // raises energy by 6
  WedgeVector r = rhat_matrix_apply(lower, vacuum(0), 3);
  CHECK(r.overflow);
  WedgeVector ok = rhat_matrix_apply(lower, vacuum(0), 8);
  CHECK(!ok.overflow);
}

TEST_CASE("state enumeration covers the sector once") {
  std::vector<WedgeState> states = enumerate_states(3, 1);
  // partitions of 0..3: 1,1,2,3 -> 7 per charge, 3 charges
  CHECK(states.size() == 7 * 3);
  for (std::size_t i = 1; i < states.size(); ++i) CHECK(states[i - 1] < states[i]);
}
