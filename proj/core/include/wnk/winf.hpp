#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wnk/vertex.hpp"
#include "wnk/wedge.hpp"

namespace wnk {

// dense Laurent series in one variable with rational coefficients
struct XSeries {
  int lo = 0;                // exponent of c[0]
  std::vector<Rational> c;   // coefficients starting at x^lo

  Rational coeff(int k) const {
    int idx = k - lo;
    return (idx >= 0 && idx < (int)c.size()) ? c[idx] : Rational(0);
  }
  void trim();
};

XSeries x_exp(const Rational& a, int order);               // e^{a x}
XSeries x_mul(const XSeries& a, const XSeries& b, int hi);
XSeries x_add(const XSeries& a, const XSeries& b);
// inverse of 1 - e^{a x} = x * unit; result has a simple pole
XSeries x_inv_one_minus_exp(const Rational& a, int order);

// delta_{n,0} ( e^{-xN/(2h)} / (1 - e^{x/h}) - K/(1 - e^x) ), expanded to
// x^order. For K = h the pole cancels; any other K leaves a simple pole
// whose residue is K - h. Throws internal_error if K == h and a pole
// survives.
XSeries central_term(int n, int h, int N, int x_order, int K);

// signed Stirling numbers of the first kind: x(x-1)...(x-k+1) = sum s(k,p) x^p
std::vector<Rational> stirling_first(int k);

// generator -lam^{n+k} d_lam^k maps to this banded matrix acting on the
// wedge space: -h^{-n-k} sum_i prod_{l=0}^{k-1} (-i - N/2 - l h) E_{i-nh, i}
BandedMatrix phi_matrix(int n, int k, int h, int N);

// the central-series correction the extended embedding attaches to the
// generator -lam^{n+k} d^k (zero unless n = 0)
Rational alpha_correction(int n, int k, int h, int N);

// ---- expected brackets (ground truth from the algebra) ---------------------

// [J^{k1}_{n1}, J^{k2}_{n2}] = sum combo[(k,n)] J^k_n + central * Id
// where the J's are the images of -lam^{n+k} d^k and central already
// includes the factor h for the central element.
struct ExpectedBracket {
  std::map<std::pair<int, int>, Rational> combo;  // (k, n) -> coefficient
  Rational central = Rational(0);                 // h * omega(A, B)
};

ExpectedBracket expected_bracket(int n1, int k1, int n2, int k2, int h, int N);

// cocycle of the bracket in the exponential basis:
// omega(lam^{n1} D^p, lam^{n2} D^q) = p! q! [x^p y^q]
//     (e^{x n2} - e^{y n1})/(1 - e^{x+y}),   zero unless n1 + n2 = 0
Rational omega_exponential(int n1, int p, int n2, int q);

// ---- fermionic side ---------------------------------------------------------

struct FermionCheckReport {
  bool anticommutators_ok = false;
  bool projective_ok = false;
  std::vector<std::string> failures;
  bool ok() const { return anticommutators_ok && projective_ok; }
};

// anticommutation relations and scalar-only projective defect of rhat on
// the truncated sector
FermionCheckReport check_fermion_algebra(int energy_cap, int charge_window);

struct BracketCheckReport {
  int pairs_checked = 0;
  bool central_unique_ok = false;  // K = h is the unique pole-cancelling constant
  std::vector<std::string> failures;
  std::vector<std::string> lines;  // one PASS/FAIL line per generator pair
  bool ok() const { return central_unique_ok && failures.empty(); }
};

// verifies, on the truncated wedge sector, that the matrix images of the
// generators (corrected by the central term) realize the expected brackets
BracketCheckReport check_fermionic_brackets(int h, int n_window, int k_max, int energy_cap,
                                            int charge_window);

// measures [rhat(A), rhat(B)] - rhat([A,B]) on the sector and returns the
// scalar; throws internal_error if the defect is not scalar
Rational measure_gl_cocycle(const BandedMatrix& a, const BandedMatrix& b, int energy_cap,
                            int charge_window);

// ---- bosonic side -----------------------------------------------------------

// verifies the bracket table on the bosonic operators (full, unreduced,
// undilatoned extraction); weight_cap is the cap for probe monomials
BracketCheckReport check_bosonic_brackets(int h, int n_window, int k_max, int weight_cap);

}  // namespace wnk
