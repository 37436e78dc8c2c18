#pragma once
// Braided binomials, integers and factorials (left and right conventions) on
// tensor powers of a crossed module, and the degree-truncated graded
// braided(-super) Hopf algebras built from them:
//   tensor            T-V   (free, concatenation product, braided coproduct)
//   shuffle           Sh-V  (free, deconcatenation coproduct, shuffle product)
//   nichols           B-(V) = T-V / ker[n,-Psi]!
//   quadratic         T-V / ideal(ker(id - Psi))
//   universal_theta   T-V / ideal(theta^2 < A+, [theta^2, eta])
//   subshuffle_theta  B_{theta*}(V), the coinner-compatible sub-shuffle algebra
// Quotients are (projection, section) pairs with deterministic rref bases;
// subspaces are (retraction, inclusion) pairs from canonical kernel bases.
#include <map>
#include <vector>

#include "hq/crossed.hpp"

namespace hq {

class BraidedOperators {
 public:
  // q = sign * psi; recursions are in terms of q.
  BraidedOperators(int dim, Mat psi, int sign);
  BraidedOperators(const CrossedModule& v, int sign)
      : BraidedOperators(v.dim, braiding(v, v), sign) {}

  int dim() const { return d_; }
  int sign() const { return sign_; }
  const Mat& psi() const { return psi_; }  // unsigned braiding on V(x)V

  Mat psi_at(int n, int i) const;  // q acting on legs i, i+1 (1-based) of V^n
  const Mat& binom_left(int n, int r) const;   // [n r; sign*Psi]
  const Mat& binom_right(int n, int r) const;  // (n r; sign*Psi)
  const Mat& factorial(int n) const;           // [n, sign*Psi]!

 private:
  int d_;
  int sign_;
  Mat psi_, q_;
  mutable std::map<std::pair<int, int>, Mat> left_, right_;
  mutable std::map<int, Mat> fact_;
};

enum class Flavor { tensor, shuffle, nichols, quadratic, universal_theta, subshuffle_theta };

struct GradedBraidedHopf {
  CrossedModule base;  // V, the degree-1 crossed module
  int cap = 0;
  Flavor flavor = Flavor::tensor;
  std::vector<int> dims;  // degree 0..cap
  std::vector<Mat> proj;  // dims[n] x dimV^n
  std::vector<Mat> incl;  // dimV^n x dims[n], proj*incl = id
  std::vector<Mat> relations;  // basis of ker(proj[n]) as columns (may be 0 cols)
  // product[p][q]: dims[p+q] x (dims[p]*dims[q]), p+q <= cap
  std::vector<std::vector<Mat>> product;
  // coproduct[n][r]: (dims[r]*dims[n-r]) x dims[n]
  std::vector<std::vector<Mat>> coproduct;
  std::vector<CrossedModule> degree_module;  // crossed structure per degree
  Vec theta;       // universal_theta flavor: the right-invariant theta in V
  Vec theta_star;  // subshuffle flavor: the right-invariant theta* in V*

  int dim_at(int n) const { return dims[n]; }
  // Coordinates of theta^2 (= proj of theta(x)theta) in degree 2.
  Vec theta_squared() const;
};

GradedBraidedHopf tensor_hopf(const CrossedModule& v, int cap);
GradedBraidedHopf shuffle_hopf(const CrossedModule& v, int cap);
GradedBraidedHopf nichols(const CrossedModule& v, int cap, bool quadratic_only = false);
GradedBraidedHopf universal_theta(const CrossedModule& v, const Vec& theta, int cap);
GradedBraidedHopf subshuffle_theta(const CrossedModule& v, const Vec& theta_star, int cap);

// Full invariant suite: graded (co)associativity, (co)unit laws, degree-1
// primitivity, the braided-super bialgebra law per bidegree, and
// product/coproduct being crossed-module morphisms degreewise.
Report verify_graded_braided(const GradedBraidedHopf& g);

// True iff Delta_R theta = theta (x) 1.
bool is_right_invariant(const CrossedModule& v, const Vec& theta);
// True iff <theta*, v < a> = eps(a) <theta*, v>.
bool is_right_invariant_dual(const CrossedModule& v, const Vec& theta_star);

}  // namespace hq
