#pragma once
// First-order codifferentials i : Lambda^1 -> A+ and their canonical
// extensions to degree -1 super-(co)derivations on a bosonisation:
//   extend_codiff_tensor   the free extension on A .|x T_-Lambda^1
//   coinner_subshuffle     the coinner i on A .|x B_{theta*}(Lambda^1)
//   augment_universal      descent of the free extension to Omega_theta
//   dual_inner_codiff      the codifferential dual to an inner d = [theta, .}
// plus the augmentation suite (Lie derivative L = di + id) and the braided
// duality pairings relating differentials on A to codifferentials on H.
#include <optional>

#include "hq/calculus.hpp"

namespace hq {

struct Codifferential {
  HopfPtr over;           // A
  CrossedModule lambda1;  // Lambda^1
  Mat i1;                 // (dim A - 1) x dim Lambda^1, on the canonical A+ basis
  std::optional<Vec> theta_star;  // coinner witness in Lambda^1*, when known
};

// Builds from an explicit i1; verifies i1 is a crossed-module morphism from
// Lambda^1 to A+ (adjoint action, Delta - 1 (x) id coaction), equivalently
//   S a1 i(eta) a2 = i(eta < a),   Delta i(eta) = i(eta_0) (x) eta_1 + 1 (x) i(eta),
// and that eps o i = 0. Throws std::invalid_argument on failure.
Codifferential first_order_codiff(HopfPtr a, const CrossedModule& v, const Mat& i1);

// Canonical solution theta* of i(eta) = <theta*, eta_0> eta_1 - <theta*, eta> 1,
// if the calculus is coinner.
std::optional<Vec> detect_coinner(const Codifferential& c);

// Omega_tens = A .|x T_-Lambda^1 with i extended as a super-derivation by
//   i(a (x) v_1...v_n) = i(a (x) v_1...v_{n-1}) (x) v_n
//                        - (-1)^n (a (x) v_1...v_{n-1}) . i(v_n).
// The result carries theta_star iff the first order is coinner and
// <theta*, v> w = w_0 <theta*, v < w_1> for all v, w (the criterion for the
// whole tower to stay coinner).
GradedSuperHopf extend_codiff_tensor(const Codifferential& c, int cap);

// Omega = A .|x B_{theta*}(Lambda^1) with the coinner
//   i(a (x) v_1...v_n) = <theta*, (v_1)_0> a (v_1)_1 (x) v_2...v_n
//                        + (-1)^n a (x) v_1...v_{n-1} <theta*, v_n>.
// Requires theta* right-invariant. When omega (a crossed morphism on the A+
// basis) is given, the shuffle delta is restricted to B_{theta*} after the two
// preservation conditions
//   <ts (x) ts, w_0 (x) omega~(w_1)> w_2 = <ts (x) ts, w_0 (x) omega~(w_1)> 1,
//   (q (x) id) = (-1)^{n-1} (id (x) q) on B^n,  q = <ts, (.)_0><ts, omega~((.)_1)>,
// hold as exact linear identities; otherwise throws and no object is built.
GradedSuperHopf coinner_subshuffle(HopfPtr a, const CrossedModule& v, const Vec& theta_star,
                                   const std::optional<Mat>& omega, int cap);

// Codifferential-only suite: i^2 = 0, super-Leibniz for i, super-coderivation
// law per degree/component. Requires i.
Report verify_codifferential(const GradedSuperHopf& o);

struct AugmentationReport {
  Report report;
  std::vector<Mat> lie;  // L[n] = d i + i d on Omega^n, n = 0..cap
};

// Full augmentation suite: the codifferential laws, L a degree-0 derivation
// and coderivation commuting with d and i, and L = [i(theta), .] on degree 0
// in the inner case. Requires both d and i. L[cap] lacks its i d summand under
// the degree cap, so the L laws are checked below the top degree only.
AugmentationReport verify_augmentation(const GradedSuperHopf& o);

// Descends the free tensor extension of i1 to a universal-theta quotient
// Omega_theta. Accepts iff theta < i(theta) is graded central there (checked
// degreewise, along with the identity i(theta^2) = -theta < i(theta) and
// well-definedness on the quotient); throws with a witness otherwise.
GradedSuperHopf augment_universal(const GradedSuperHopf& omega_theta, const Mat& i1);

// Codifferential on Omega(H) = H .|x Lambda* dual to an inner d = [theta, .}
// on the A side: i = i1 on degree 1 plus the dual-inner part
//   frak_i(phi) = <phi^1, theta> phi^2 - (-1)^{|phi^1|} phi^1 <phi^2, theta>,
// assembled as i(h (x) phi) = h (i1(phi^1) (x) phi^2 + 1 (x) frak_i(phi)).
// theta is given in the coordinates dual to Lambda^1* (dual-basis pairing).
GradedSuperHopf dual_inner_codiff(const GradedSuperHopf& right, const Mat& i1,
                                  const Vec& theta);

// The degree -1 part of i beyond first order: i(1 (x) phi) minus the
// i1(phi^1)(1 (x) phi^2) term must be of the form 1 (x) frak_i(phi); returns
// frak_i per degree (frak_i[0] is 0 x 1) and throws if the remainder is not of
// that form.
std::vector<Mat> frak_i(const GradedSuperHopf& o);

struct DualityPairing {
  GradedSuperHopf left;   // over A, carrying Lambda
  GradedSuperHopf right;  // over H, carrying Lambda^1* side
  Mat base_pairing;       // dim H x dim A, <h_i, a_j>
  std::vector<Mat> degree;        // degree[n]: right.lambda.dims[n] x left.lambda.dims[n]
  std::vector<Mat> omega_degree;  // kron(base_pairing, degree[n]) on Omega^n
};

// Degree pairings between mutually dual exterior towers. Legal flavor pairs:
// (nichols, nichols) with the braided-factorial pairing, (tensor, shuffle) and
// (universal_theta, subshuffle_theta) with plain evaluation through the
// section/inclusion. Verifies the base Hopf pairing, mutual adjointness of the
// degree-1 crossed modules, orthogonality to relations, the factorial
// transpose identity, product-vs-coproduct adjointness degreewise and
// nondegeneracy; throws std::invalid_argument on any failure.
DualityPairing braided_pairing(const GradedSuperHopf& left, const GradedSuperHopf& right,
                               const Mat& base_pairing);

// <i_right(phi), x> = <phi, d_left(x)> and <d_right(phi), x> = <phi, i_left(x)>
// degreewise through the Omega pairings, for whichever structures are present.
Report verify_mutual_duality(const DualityPairing& p);

}  // namespace hq
