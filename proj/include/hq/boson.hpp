#pragma once
// Super-bosonisation Omega = A .|x Lambda of a graded braided(-super) Hopf
// algebra Lambda in right A-crossed modules: an ordinary N-graded super-Hopf
// algebra with Omega^0 = A, Omega^n = A (x) Lambda^n,
//   (a(x)eta)(b(x)zeta) = a b1 (x) (eta<b2) zeta,
//   Delta(a(x)eta)      = a1 (x) (eta^1)_0 (x) a2 (eta^1)_1 (x) eta^2,
// optionally carrying a degree +1 differential
//   d(a(x)eta) = a1 (x) omega~(a2) eta + a (x) delta eta
// and/or a degree -1 codifferential i. All structure maps are explicit
// per-degree matrices; every axiom is verified as a finite matrix identity.
#include <optional>

#include "hq/braided.hpp"

namespace hq {

struct GradedSuperHopf {
  HopfPtr base;  // A
  GradedBraidedHopf lambda;
  int cap = 0;
  std::vector<int> dims;  // dims[n] = dim A * lambda.dims[n]
  // product[p][q]: dims[p+q] x (dims[p]*dims[q]), p+q <= cap
  std::vector<std::vector<Mat>> product;
  // coproduct[n][r]: (dims[r]*dims[n-r]) x dims[n]
  std::vector<std::vector<Mat>> coproduct;
  std::vector<Mat> d;  // d[n]: dims[n+1] x dims[n], n = 0..cap-1 (empty: no d)
  std::vector<Mat> i;  // i[n]: dims[n-1] x dims[n], n >= 1; i[0]: 0 x dims[0]
  std::optional<Mat> omega_tilde;   // Lambda^1 <- A (omega o pi), when d built
  std::optional<Vec> theta;         // inner witness, Lambda^1 coordinates
  std::optional<Vec> theta_star;    // coinner witness, Lambda^1* coordinates

  bool has_d() const { return !d.empty(); }
  bool has_i() const { return !i.empty(); }
  int dim_at(int n) const { return dims[n]; }
  // Unit element of Omega (degree 0) and embedding of Lambda^n into Omega^n
  // as 1 (x) Lambda^n.
  Vec unit() const;
  Vec embed(int n, const Vec& eta) const;
};

// Build A .|x Lambda. If omega_tilde (dim Lambda^1 x dim A) is given, the
// differential is materialized with the given per-degree delta on Lambda
// (delta[n]: Lambda^{n+1} x Lambda^n; an empty list means delta = 0).
GradedSuperHopf bosonise(HopfPtr a, const GradedBraidedHopf& lam,
                         const std::optional<Mat>& omega_tilde = std::nullopt,
                         const std::vector<Mat>& delta = {});

// Graded super-Hopf suite: unit/counit, graded associativity and
// coassociativity, and the super-bialgebra law per bidegree (plain super flip
// with Koszul sign; no braiding — that is the point of bosonisation).
Report verify_graded_super(const GradedSuperHopf& o);

// Differential suite: d^2 = 0, super-Leibniz per bidegree, super-coderivation
// per degree/component. Requires d.
Report verify_strong_bicovariance(const GradedSuperHopf& o);

}  // namespace hq
