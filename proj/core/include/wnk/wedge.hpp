#pragma once

#include <compare>
#include <map>
#include <vector>

#include "wnk/errors.hpp"
#include "wnk/rational.hpp"

namespace wnk {

// A basis vector of the infinite wedge: labels i_0 > i_1 > ... with
// i_s = charge - s - 1 for s >> 0. Stored as the charge plus the partition
// of deviations from the vacuum; energy is the partition size.
struct WedgeState {
  int charge = 0;
  std::vector<int> parts;  // weakly decreasing, > 0

  int energy() const {
    int e = 0;
    for (int p : parts) e += p;
    return e;
  }
  int label(int s) const {
    return charge - s - 1 + (s < (int)parts.size() ? parts[s] : 0);
  }
  friend auto operator<=>(const WedgeState&, const WedgeState&) = default;
};

inline WedgeState vacuum(int charge) { return WedgeState{charge, {}}; }

// result of applying a fermionic operator to a basis state
struct SignedState {
  int sign = 0;  // 0 encodes the zero vector
  WedgeState state;
  bool zero() const { return sign == 0; }
};

// wedging by the basis vector with the given label
SignedState wedge_label(int label, const WedgeState& st);
// contraction by the basis vector with the given label
SignedState contract_label(int label, const WedgeState& st);

// psi_r with r = -i + 1/2 wedges label i; pass twice_r = 2r (odd)
SignedState psi_apply(int twice_r, const WedgeState& st);
// psi*_r with r = i - 1/2 contracts label i
SignedState psi_star_apply(int twice_r, const WedgeState& st);

// normal-ordered :psi_{-i+1/2} psi*_{j-1/2}: representing E_{ij}:
// psi psi* for j > 0 and -psi* psi for j <= 0
SignedState rhat_apply(int i, int j, const WedgeState& st);

// univariate polynomial over Q, used for banded-matrix diagonals
struct PolyQ {
  std::vector<Rational> c;  // c[k] x^k, no trailing zeros

  static PolyQ constant(const Rational& v);
  static PolyQ linear(const Rational& a0, const Rational& a1);  // a0 + a1 x
  Rational eval(int x) const;
  PolyQ shifted_arg(int delta) const;  // p(x + delta)
  bool zero() const { return c.empty(); }
  void trim();
  PolyQ& operator+=(const PolyQ& o);
  PolyQ& scale(const Rational& s);
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c == b.c; }
};

// matrix with finitely many diagonals, entry (col + offset, col) = P(col)
class BandedMatrix {
 public:
  const std::map<int, PolyQ>& diags() const { return diags_; }
  void add_diag(int offset, const PolyQ& p);
  BandedMatrix& operator+=(const BandedMatrix& o);
  BandedMatrix& operator-=(const BandedMatrix& o);
  BandedMatrix& scale(const Rational& s);
  friend BandedMatrix operator*(const BandedMatrix& a, const BandedMatrix& b);
  friend BandedMatrix bracket(const BandedMatrix& a, const BandedMatrix& b);
  friend bool operator==(const BandedMatrix& a, const BandedMatrix& b) {
    return a.diags_ == b.diags_;
  }

 private:
  std::map<int, PolyQ> diags_;
};

// image of a state under the normal-ordered representation of a banded
// matrix; overflow reports a contribution that left the energy truncation
struct WedgeVector {
  std::map<WedgeState, Rational> terms;
  bool overflow = false;

  void add(const WedgeState& st, const Rational& c, int energy_cap);
  WedgeVector& operator+=(const WedgeVector& o);
  bool operator==(const WedgeVector& o) const { return terms == o.terms; }
};

WedgeVector rhat_matrix_apply(const BandedMatrix& a, const WedgeState& st, int energy_cap);

// all states with energy <= energy_cap and |charge| <= charge_window
std::vector<WedgeState> enumerate_states(int energy_cap, int charge_window);

}  // namespace wnk
