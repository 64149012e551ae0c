#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wnk/vertex.hpp"

namespace wnk {

// Vertex operator of the singularity-side picture at t = 0, assembled from
// the period closed forms and the quantization rules q^ = q/eps,
// p^ = eps d/dq, then written in the t variables via the change of
// variables. Branches are carried by the zeta-exponent residues, so this is
// directly comparable with the mod-h reduction of the t-side operator.
VertexOperatorData build_gamma_a(int h, int s_order, int weight_cap, bool dilaton = false);

// Expands sum_a c_a(0,lam,s) Gamma_a(0,lam,s) = sum W^k_n lam^{-n-k} s^k
// with c_a = c(s/lam)/c(s) and reads off the window.
ExtractedOperators extract_W(int h, int k_max, int n_min, int n_max, int weight_cap);

// The operator identities tying the two pictures together, verified as
// exact identities of expanded operators and by action on all basis
// monomials up to the weight cap.
struct EquivalenceReport {
  bool prefactor_ok = false;         // (hs) w^{-N/2} zeta^{-N/2}/(w-zeta) == c(s/lam)
  bool per_branch_ok = false;        // Gamma_a(0,lam,s) == red Gamma(w,zeta)
  bool convolution_ok = false;       // c(s) * sum W lam^{-n-k} s^k == sum_a c(s/lam) red Gamma
  bool reduction_factor_ok = false;  // Gamma = e^{M_h} red Gamma e^{D_h}, M_h in closed form
  bool action_ok = false;            // identities re-checked by action on basis monomials
  std::vector<std::string> mismatches;

  bool ok() const {
    return prefactor_ok && per_branch_ok && convolution_ok && reduction_factor_ok && action_ok;
  }
};

EquivalenceReport check_picture_equivalence(int h, int n_window, int k_max, int weight_cap,
                                            int s_order);

// first basis monomial (weight <= cap) on which the two operators act
// differently, if any
std::optional<Monomial> first_action_mismatch(const ModePolynomial& a, const ModePolynomial& b,
                                              int weight_cap, int reduced_h = 0);

}  // namespace wnk
