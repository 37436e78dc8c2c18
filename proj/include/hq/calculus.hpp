#pragma once
// First-order generalised differential calculi (Lambda^1, omega), their group
// constructors, innerness detection, and the exterior-algebra builders that
// attach a differential to a bosonisation:
//   inner_exterior    d = [theta, .} on nichols/quadratic/universal quotients
//   shuffle_exterior  delta by the coaction recursion on Sh_-(Lambda^1)
//   delta_unique_nichols  the unique delta forced on B_-(Lambda^1), if any
#include <optional>

#include "hq/boson.hpp"

namespace hq {

struct FirstOrderCalculus {
  HopfPtr over;           // A
  CrossedModule lambda1;  // Lambda^1
  Mat omega;              // dim Lambda^1 x (dim A - 1), on the canonical A+ basis
  Mat omega_tilde;        // omega o pi : dim Lambda^1 x dim A
  Mat d0;                 // Omega^1 <- A, da = a1 (x) omega~(a2)
  std::optional<Vec> theta;        // inner witness when known by construction
  std::vector<Vec> standard_basis; // basis of image(omega) (standard sub-calculus)
};

// Builds from an explicit omega; verifies omega is a crossed-module morphism
// from A+ (product action, adjoint coaction) to Lambda^1. Throws on failure.
FirstOrderCalculus first_order(HopfPtr a, const CrossedModule& v, const Mat& omega);

// k(G) case: class data {(rep c, omega_c in Lambda^1_c)} with omega_c fixed by
// the centralizer of c; omega is assembled over each orbit by the left action
// and the calculus is inner with theta the sum of the orbit forms.
FirstOrderCalculus first_order_kofG(const GroupGradedModule& gm,
                                    const std::vector<std::pair<int, Vec>>& class_data);

// kG case: a cocycle omega_{gh} = omega_h + omega_g<h with values in the
// grade-e part; inner with theta = -|G|^{-1} sum_g omega_g.
FirstOrderCalculus first_order_kG(const GroupGradedModule& gm,
                                  const std::vector<Vec>& cocycle);

struct InnerDetection {
  std::optional<Vec> theta;  // canonical solution of omega(a) = theta<a on A+
  bool bicovariant = false;  // Delta_R theta - theta (x) 1 lies in Lambda^1 [] A
};
InnerDetection detect_inner(const FirstOrderCalculus& c);

// Quasi-integral: eps(mu) = 1 and omega(mu a) = 0 for all a in A+; then
// theta = omega(1 - mu) makes the standard sub-calculus inner.
std::optional<Vec> quasint_mu(const FirstOrderCalculus& c);

// Omega = A .|x Lambda with d = [theta, .}. Flavors: nichols, quadratic,
// universal_theta. Construction verifies the calculus is inner via theta,
// Psi(eta (x) theta) = theta (x) eta, and the theta^2 relations required by
// the chosen quotient; throws std::invalid_argument with a witness otherwise.
GradedSuperHopf inner_exterior(const FirstOrderCalculus& c, Flavor flavor, int cap);

// Omega = A .|x Sh_-(Lambda^1) with delta built by the recursion
// delta_n = (delta_{n-1} (x) id) + (-1)^n (id (x) omega~) o coact_n.
GradedSuperHopf shuffle_exterior(const FirstOrderCalculus& c, int cap);

// The unique delta on B_-(Lambda^1) extending the calculus, if it exists:
// degree 1 is delta(eta) = -mult [2,-Psi]^+ (eta_0 (x) omega~(eta_1)) via the
// deterministic preimage (choice-independence is an invariant of the quotient);
// higher degrees are forced by the super-derivation property through the
// surjective product B^{n-1} (x) B^1 -> B^n. Absent when any step has no
// solution.
std::optional<std::vector<Mat>> delta_unique_nichols(const FirstOrderCalculus& c, int cap);

}  // namespace hq
