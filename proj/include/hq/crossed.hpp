#pragma once
// Right A-crossed modules (Yetter-Drinfeld modules): a right action
// act: V(x)A -> V and right coaction coact: V -> V(x)A with the crossed
// compatibility Delta_R(v<a) = v0<a2 (x) (Sa1) v1 a3. The category is braided
// by Psi(v(x)w) = w0 (x) v<w1.
#include <map>
#include <string>
#include <vector>

#include "hq/hopf.hpp"
#include "hq/mat.hpp"
#include "hq/report.hpp"

namespace hq {

// Permutation of tensor legs: dims are the input leg dimensions; src[p] is the
// input leg that lands in output slot p. Returns the permutation matrix.
Mat tensor_permute(const std::vector<int>& dims, const std::vector<int>& src);

// Koszul sign of a leg permutation for legs of the given Z-degrees:
// (-1)^(sum of deg_i*deg_j over inverted pairs). All super signs in the
// library flow through this one function.
int koszul_sign(const std::vector<int>& src, const std::vector<int>& degs);

struct CrossedModule {
  HopfPtr over;
  int dim = 0;
  Mat act;    // dim x (dim * dimA)
  Mat coact;  // (dim * dimA) x dim
  std::vector<std::string> labels;

  Vec act_by(const Vec& v, const Vec& a) const { return act.apply(kron_vec(v, a)); }
};

Report verify_crossed(const CrossedModule& v);

// Psi_{V,W}: V(x)W -> W(x)V.
Mat braiding(const CrossedModule& v, const CrossedModule& w);

// f: V -> W commuting with action and coaction.
Report verify_morphism(const Mat& f, const CrossedModule& v, const CrossedModule& w);

// Basis of Lambda_A = {eta : eta < A+ = 0}.
std::vector<Vec> invariant_subspace(const CrossedModule& v);

// V (x) W with (v(x)w) < a = v<a1 (x) w<a2 and Delta_R = v0 (x) w0 (x) v1 w1.
CrossedModule tensor_crossed(const CrossedModule& v, const CrossedModule& w);

// Degree-n tensor power (n = 0 gives the trivial one-dimensional module).
CrossedModule tensor_power_crossed(const CrossedModule& v, int n);

struct CanonicalCrossed {
  CrossedModule regular_adjoint;  // a<b = ab, Delta_R a = a2 (x) (Sa1) a3
  CrossedModule adjoint_regular;  // a<b = (Sb1) a b2, Delta_R = Delta - 1(x)id
};
CanonicalCrossed canonical_crossed_structures(HopfPtr a);

struct GroupGradedModule {
  FiniteGroup group;
  std::vector<int> degree;  // grade (group element index) per basis vector
  bool left_action = true;  // true: k(G) case (left G-module); false: kG case
  std::vector<Mat> action;  // per group element, dim x dim
  std::vector<std::string> labels;
};

// Validates the grading/action compatibility and produces the crossed module
// over k(G) (left case) or kG (right case).
CrossedModule crossed_from_graded(const GroupGradedModule& gm);

// Dual crossed module on V* over H, via a nondegenerate Hopf pairing
// P(i,j) = <h_i, a_j>:  <phi<h, v> = <phi, v0><v1, h>,
// <phi, v<a> = <phi0, v><a, phi1>.
CrossedModule dual_crossed(const CrossedModule& v, HopfPtr h, const Mat& pairing);

// Completes action matrices given on generators to all of G (throws if the
// generators do not generate or the completion is inconsistent).
std::vector<Mat> complete_action(const FiniteGroup& g,
                                 const std::vector<std::pair<int, Mat>>& gens, int dim,
                                 bool left_action);

}  // namespace hq
