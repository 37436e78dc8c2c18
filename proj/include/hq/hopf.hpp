#pragma once
// Finite-dimensional Hopf algebras by structure constants over Q, with
// machine-verified axioms, plus augmentation-ideal data. Linear maps:
//   mul : A(x)A -> A        (dim x dim^2)
//   cop : A -> A(x)A        (dim^2 x dim)
//   cou : A -> k            (1 x dim)
//   antipode : A -> A       (dim x dim)
#include <memory>
#include <string>
#include <vector>

#include "hq/group.hpp"
#include "hq/mat.hpp"
#include "hq/report.hpp"

namespace hq {

struct AugmentationData {
  Mat incl;  // dim x (dim-1): inclusion of the canonical basis of A+ = ker(cou)
  Mat pi;    // (dim-1) x dim: coordinates of pi(a) = a - cou(a) 1 on that basis
};

struct HopfAlgebra {
  int dim = 0;
  Mat mul;       // dim x dim^2
  Vec unit;      // dim
  Mat cop;       // dim^2 x dim
  Mat cou;       // 1 x dim
  Mat antipode;  // dim x dim
  std::vector<std::string> labels;
  AugmentationData aug;

  Vec multiply(const Vec& x, const Vec& y) const { return mul.apply(kron_vec(x, y)); }
  Vec delta(const Vec& x) const { return cop.apply(x); }
  Rat counit(const Vec& x) const { return dot(cou.rowvec(0), x); }
  Vec basis(int i) const {
    Vec v(dim, Rat(0));
    v[i] = 1;
    return v;
  }
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// Builds from raw structure constants; verifies all Hopf axioms and computes
// augmentation data. Throws std::invalid_argument on axiom failure.
HopfPtr make_hopf(int dim, Mat mul, Vec unit, Mat cop, Mat cou, Mat antipode,
                  std::vector<std::string> labels);

HopfPtr function_algebra(const FiniteGroup& g);  // k(G), basis delta_x
HopfPtr group_algebra(const FiniteGroup& g);     // kG, basis x

Report verify_hopf(const HopfAlgebra& h);

// Canonical pairing <delta_x, g> = delta_{x,g} between k(G) and kG, as a
// matrix indexed (row = kG basis, col = k(G) basis) per the duality module's
// base_pairing orientation <H x A>.
Mat canonical_group_pairing(const FiniteGroup& g);

}  // namespace hq
