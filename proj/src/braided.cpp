#include "hq/braided.hpp"

#include <stdexcept>

namespace hq {

namespace {

long ipow(long d, int n) {
  long r = 1;
  for (int i = 0; i < n; ++i) r *= d;
  return r;
}

}  // namespace

BraidedOperators::BraidedOperators(int dim, Mat psi, int sign)
    : d_(dim), sign_(sign), psi_(std::move(psi)) {
  if (psi_.rows != d_ * d_ || psi_.cols != d_ * d_)
    throw std::invalid_argument("BraidedOperators: psi must act on V(x)V");
  if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("BraidedOperators: sign");
  q_ = sign_ < 0 ? -psi_ : psi_;
}

Mat BraidedOperators::psi_at(int n, int i) const {
  if (i < 1 || i >= n) throw std::invalid_argument("psi_at: leg out of range");
  return kron(Mat::identity(static_cast<int>(ipow(d_, i - 1))),
              kron(q_, Mat::identity(static_cast<int>(ipow(d_, n - i - 1)))));
}

const Mat& BraidedOperators::binom_left(int n, int r) const {
  auto key = std::make_pair(n, r);
  auto it = left_.find(key);
  if (it != left_.end()) return it->second;
  int N = static_cast<int>(ipow(d_, n));
  Mat m;
  if (r < 0 || r > n) {
    m = Mat::zero(N, N);
  } else if (r == 0 || n == 0) {
    m = Mat::identity(N);
  } else {
    // [n r] = Q_r Q_{r+1} ... Q_{n-1} ([n-1 r-1] (x) id) + [n-1 r] (x) id
    Mat p = Mat::identity(N);
    for (int i = n - 1; i >= r; --i) p = psi_at(n, i) * p;  // leftmost factor Q_r applied last
    m = p * kron(binom_left(n - 1, r - 1), Mat::identity(d_)) +
        kron(binom_left(n - 1, r), Mat::identity(d_));
  }
  return left_.emplace(key, std::move(m)).first->second;
}

const Mat& BraidedOperators::binom_right(int n, int r) const {
  auto key = std::make_pair(n, r);
  auto it = right_.find(key);
  if (it != right_.end()) return it->second;
  int N = static_cast<int>(ipow(d_, n));
  Mat m;
  if (r < 0 || r > n) {
    m = Mat::zero(N, N);
  } else if (r == 0 || n == 0) {
    m = Mat::identity(N);
  } else {
    // (n r) = ((n-1 r-1) (x) id) Q_{n-1} ... Q_r + (n-1 r) (x) id
    Mat p = Mat::identity(N);
    for (int i = r; i <= n - 1; ++i) p = psi_at(n, i) * p;  // Q_r applied first
    m = kron(binom_right(n - 1, r - 1), Mat::identity(d_)) * p +
        kron(binom_right(n - 1, r), Mat::identity(d_));
  }
  return right_.emplace(key, std::move(m)).first->second;
}

const Mat& BraidedOperators::factorial(int n) const {
  auto it = fact_.find(n);
  if (it != fact_.end()) return it->second;
  Mat m;
  if (n <= 1) {
    m = Mat::identity(static_cast<int>(ipow(d_, n)));
  } else {
    m = kron(Mat::identity(d_), factorial(n - 1)) * binom_left(n, 1);
  }
  return fact_.emplace(n, std::move(m)).first->second;
}

bool is_right_invariant(const CrossedModule& v, const Vec& theta) {
  return v.coact.apply(theta) == kron_vec(theta, v.over->unit);
}

bool is_right_invariant_dual(const CrossedModule& v, const Vec& theta_star) {
  return Mat::row(theta_star) * v.act == kron(Mat::row(theta_star), v.over->cou);
}

namespace {

struct SpacePair {
  Mat proj, incl, relmat;  // proj*incl = id; relmat columns span ker(proj)
  int dim = 0;
};

SpacePair free_space(int n) {
  SpacePair s;
  s.dim = n;
  s.proj = Mat::identity(n);
  s.incl = Mat::identity(n);
  s.relmat = Mat::zero(n, 0);
  return s;
}

SpacePair quotient_from_relations(int n, const std::vector<Vec>& rels) {
  if (rels.empty()) return free_space(n);
  Mat k = Mat::from_rows(rels, n);
  Rref rr = rref(k);
  std::vector<bool> is_pivot(n, false);
  for (int p : rr.pivot_cols) is_pivot[p] = true;
  SpacePair s;
  s.dim = n - rr.rank;
  s.incl = Mat(n, s.dim);
  s.proj = Mat(s.dim, n);
  int f = 0;
  for (int x = 0; x < n; ++x) {
    if (is_pivot[x]) continue;
    s.incl(x, f) = 1;
    s.proj(f, x) = 1;
    for (int i = 0; i < rr.rank; ++i)
      if (rr.echelon(i, x) != 0) s.proj(f, rr.pivot_cols[i]) = -rr.echelon(i, x);
    ++f;
  }
  s.relmat = Mat(n, rr.rank);
  for (int i = 0; i < rr.rank; ++i)
    for (int x = 0; x < n; ++x) s.relmat(x, i) = rr.echelon(i, x);
  return s;
}

SpacePair subspace_from_constraints(int n, const Mat& constraints) {
  auto kb = kernel_basis(constraints);
  SpacePair s;
  s.dim = static_cast<int>(kb.size());
  s.incl = Mat::from_cols(kb, n);
  s.proj = s.dim == n ? Mat::identity(n) : left_inverse(s.incl);
  s.relmat = Mat::zero(n, 0);
  return s;
}

// Degreewise spans of an ideal generated by the given (degree -> generator
// matrix) map inside the tensor algebra (product = concatenation).
std::vector<Vec> ideal_degree(int d, int n, const std::map<int, Mat>& gens) {
  std::vector<Vec> rels;
  for (const auto& [k, gk] : gens) {
    if (gk.cols == 0 || k > n) continue;
    for (int p = 0; p + k <= n; ++p) {
      int q = n - k - p;
      Mat lifted = kron(Mat::identity(static_cast<int>(ipow(d, p))),
                        kron(gk, Mat::identity(static_cast<int>(ipow(d, q)))));
      for (int j = 0; j < lifted.cols; ++j) rels.push_back(lifted.column(j));
    }
  }
  return rels;
}

bool tensor_family(Flavor f) {
  return f == Flavor::tensor || f == Flavor::nichols || f == Flavor::quadratic ||
         f == Flavor::universal_theta;
}

GradedBraidedHopf assemble(const CrossedModule& v, int cap, Flavor flavor,
                           const std::vector<SpacePair>& spaces) {
  BraidedOperators ops(v, -1);
  int d = v.dim;
  GradedBraidedHopf g;
  g.base = v;
  g.cap = cap;
  g.flavor = flavor;

  auto tprod = [&](int p, int q) -> Mat {
    if (tensor_family(flavor)) return Mat::identity(static_cast<int>(ipow(d, p + q)));
    return ops.binom_right(p + q, p);
  };
  auto tcop = [&](int n, int r) -> Mat {
    if (tensor_family(flavor)) return ops.binom_left(n, r);
    return Mat::identity(static_cast<int>(ipow(d, n)));
  };

  for (int n = 0; n <= cap; ++n) {
    const SpacePair& s = spaces[n];
    g.dims.push_back(s.dim);
    g.proj.push_back(s.proj);
    g.incl.push_back(s.incl);
    g.relations.push_back(s.relmat);

    // Degree-n crossed structure, transported through (proj, incl); verified
    // well defined first.
    CrossedModule power = tensor_power_crossed(v, n);
    int dA = v.over->dim;
    Mat idA = Mat::identity(dA);
    if (s.relmat.cols > 0) {
      if (!(s.proj * power.act * kron(s.relmat, idA)).is_zero())
        throw std::invalid_argument("braided: relations not a submodule at degree " +
                                    std::to_string(n));
      if (!(kron(s.proj, idA) * power.coact * s.relmat).is_zero())
        throw std::invalid_argument("braided: relations not a subcomodule at degree " +
                                    std::to_string(n));
    }
    if (s.dim < power.dim && s.relmat.cols == 0) {
      Mat qc = Mat::identity(power.dim) - s.incl * s.proj;
      if (!(qc * power.act * kron(s.incl, idA)).is_zero())
        throw std::invalid_argument("braided: subspace not action-stable at degree " +
                                    std::to_string(n));
      if (!(kron(qc, idA) * power.coact * s.incl).is_zero())
        throw std::invalid_argument("braided: subspace not coaction-stable at degree " +
                                    std::to_string(n));
    }
    CrossedModule deg;
    deg.over = v.over;
    deg.dim = s.dim;
    deg.act = s.proj * power.act * kron(s.incl, idA);
    deg.coact = kron(s.proj, idA) * power.coact * s.incl;
    for (int i = 0; i < s.dim; ++i) deg.labels.push_back("deg" + std::to_string(n) + "_" +
                                                         std::to_string(i));
    g.degree_module.push_back(std::move(deg));
  }

  // Products and coproducts on the chosen bases, with well-definedness checks
  // for quotients and closure checks for subspaces.
  g.product.assign(cap + 1, std::vector<Mat>());
  g.coproduct.assign(cap + 1, std::vector<Mat>());
  for (int n = 0; n <= cap; ++n) {
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      Mat tp = tprod(p, q);
      if (spaces[n].relmat.cols > 0 || spaces[p].relmat.cols > 0 || spaces[q].relmat.cols > 0) {
        if (!(spaces[n].proj * tp *
              kron(spaces[p].relmat, Mat::identity(static_cast<int>(ipow(d, q)))))
                 .is_zero() ||
            !(spaces[n].proj * tp *
              kron(Mat::identity(static_cast<int>(ipow(d, p))), spaces[q].relmat))
                 .is_zero())
          throw std::invalid_argument("braided: product not well defined at (" +
                                      std::to_string(p) + "," + std::to_string(q) + ")");
      }
      Mat prod = spaces[n].proj * tp * kron(spaces[p].incl, spaces[q].incl);
      if (!tensor_family(flavor) && spaces[n].dim < tp.rows) {
        Mat qc = Mat::identity(tp.rows) - spaces[n].incl * spaces[n].proj;
        if (!(qc * tp * kron(spaces[p].incl, spaces[q].incl)).is_zero())
          throw std::invalid_argument("braided: subspace not closed under product at (" +
                                      std::to_string(p) + "," + std::to_string(q) + ")");
      }
      g.product[p].push_back(std::move(prod));  // g.product[p][q]
    }
    for (int r = 0; r <= n; ++r) {
      Mat tc = tcop(n, r);
      if (spaces[n].relmat.cols > 0) {
        if (!(kron(spaces[r].proj, spaces[n - r].proj) * tc * spaces[n].relmat).is_zero())
          throw std::invalid_argument("braided: coproduct not well defined at degree " +
                                      std::to_string(n));
      }
      if (!tensor_family(flavor) && spaces[n].dim < tc.cols) {
        Mat qr = Mat::identity(static_cast<int>(ipow(d, r))) - spaces[r].incl * spaces[r].proj;
        Mat qs = Mat::identity(static_cast<int>(ipow(d, n - r))) -
                 spaces[n - r].incl * spaces[n - r].proj;
        if (!(kron(qr, Mat::identity(static_cast<int>(ipow(d, n - r)))) * tc * spaces[n].incl)
                 .is_zero() ||
            !(kron(Mat::identity(static_cast<int>(ipow(d, r))), qs) * tc * spaces[n].incl)
                 .is_zero())
          throw std::invalid_argument("braided: subspace not a subcoalgebra at degree " +
                                      std::to_string(n));
      }
      g.coproduct[n].push_back(kron(spaces[r].proj, spaces[n - r].proj) * tc * spaces[n].incl);
    }
  }
  return g;
}

}  // namespace

Vec GradedBraidedHopf::theta_squared() const {
  if (cap < 2) throw std::invalid_argument("theta_squared: cap < 2");
  return proj[2].apply(kron_vec(theta, theta));
}

GradedBraidedHopf tensor_hopf(const CrossedModule& v, int cap) {
  std::vector<SpacePair> spaces;
  for (int n = 0; n <= cap; ++n) spaces.push_back(free_space(static_cast<int>(ipow(v.dim, n))));
  return assemble(v, cap, Flavor::tensor, spaces);
}

GradedBraidedHopf shuffle_hopf(const CrossedModule& v, int cap) {
  std::vector<SpacePair> spaces;
  for (int n = 0; n <= cap; ++n) spaces.push_back(free_space(static_cast<int>(ipow(v.dim, n))));
  return assemble(v, cap, Flavor::shuffle, spaces);
}

GradedBraidedHopf nichols(const CrossedModule& v, int cap, bool quadratic_only) {
  BraidedOperators ops(v, -1);
  std::vector<SpacePair> spaces;
  if (!quadratic_only) {
    for (int n = 0; n <= cap; ++n) {
      if (n <= 1) {
        spaces.push_back(free_space(static_cast<int>(ipow(v.dim, n))));
      } else {
        spaces.push_back(quotient_from_relations(static_cast<int>(ipow(v.dim, n)),
                                                 kernel_basis(ops.factorial(n))));
      }
    }
    auto g = assemble(v, cap, Flavor::nichols, spaces);
    return g;
  }
  std::map<int, Mat> gens;
  if (cap >= 2) {
    auto k2 = kernel_basis(ops.factorial(2));
    gens[2] = Mat::from_cols(k2, v.dim * v.dim);
  }
  for (int n = 0; n <= cap; ++n)
    spaces.push_back(
        quotient_from_relations(static_cast<int>(ipow(v.dim, n)), ideal_degree(v.dim, n, gens)));
  return assemble(v, cap, Flavor::quadratic, spaces);
}

GradedBraidedHopf universal_theta(const CrossedModule& v, const Vec& theta, int cap) {
  if (!is_right_invariant(v, theta))
    throw std::invalid_argument("universal_theta: theta is not right-invariant");
  std::map<int, Mat> gens;
  if (cap >= 2 && !is_zero(theta)) {
    CrossedModule p2 = tensor_power_crossed(v, 2);
    const Mat& incl = v.over->aug.incl;
    std::vector<Vec> g2;
    Vec th2 = kron_vec(theta, theta);
    for (int j = 0; j < incl.cols; ++j) g2.push_back(p2.act.apply(kron_vec(th2, incl.column(j))));
    gens[2] = Mat::from_cols(g2, v.dim * v.dim);
    if (cap >= 3) {
      std::vector<Vec> g3;
      for (int i = 0; i < v.dim; ++i) {
        Vec eta(v.dim, Rat(0));
        eta[i] = 1;
        g3.push_back(sub(kron_vec(th2, eta), kron_vec(eta, th2)));  // [theta^2, eta]
      }
      gens[3] = Mat::from_cols(g3, v.dim * v.dim * v.dim);
    }
  }
  std::vector<SpacePair> spaces;
  for (int n = 0; n <= cap; ++n)
    spaces.push_back(
        quotient_from_relations(static_cast<int>(ipow(v.dim, n)), ideal_degree(v.dim, n, gens)));
  auto g = assemble(v, cap, Flavor::universal_theta, spaces);
  g.theta = theta;
  return g;
}

GradedBraidedHopf subshuffle_theta(const CrossedModule& v, const Vec& theta_star, int cap) {
  if (!is_right_invariant_dual(v, theta_star))
    throw std::invalid_argument("subshuffle_theta: theta* is not right-invariant");
  const HopfAlgebra& A = *v.over;
  int d = v.dim, dA = A.dim;
  // c(v(x)w) = <theta*,v0><theta*,w0> v1 w1 : V(x)V -> A
  Mat ca = kron(Mat::row(theta_star), Mat::identity(dA)) * v.coact;  // V -> A
  Mat c = A.mul * kron(ca, ca);
  Mat f = kron(Mat::row(theta_star), Mat::row(theta_star));  // V(x)V -> k
  Mat dmat = c - Mat::col(A.unit) * f;                       // "A-valued minus scalar" defect

  std::vector<SpacePair> spaces;
  for (int n = 0; n <= cap; ++n) {
    int N = static_cast<int>(ipow(d, n));
    if (n <= 1) {
      spaces.push_back(free_space(N));
      continue;
    }
    std::vector<Mat> cons;
    Mat g1;  // scalar contraction at legs (1,2)
    for (int j = 1; j <= n - 1; ++j) {
      Mat lift = kron(Mat::identity(static_cast<int>(ipow(d, j - 1))),
                      kron(dmat, Mat::identity(static_cast<int>(ipow(d, n - j - 1)))));
      cons.push_back(std::move(lift));
      Mat gj = kron(Mat::identity(static_cast<int>(ipow(d, j - 1))),
                    kron(f, Mat::identity(static_cast<int>(ipow(d, n - j - 1)))));
      if (j == 1)
        g1 = gj;
      else
        cons.push_back(gj - g1);
    }
    spaces.push_back(subspace_from_constraints(N, vstack(cons)));
  }
  auto g = assemble(v, cap, Flavor::subshuffle_theta, spaces);
  g.theta_star = theta_star;
  return g;
}

Report verify_graded_braided(const GradedBraidedHopf& g) {
  Report rep;
  int cap = g.cap;
  rep.add("degree0.is.scalars", g.dims[0] == 1);
  for (int n = 0; n <= cap; ++n) rep.dims[n] = g.dims[n];

  // Unit/counit laws: multiplying by degree 0 is the identity; the (0,n) and
  // (n,0) coproduct components are the identity.
  for (int n = 0; n <= cap; ++n) {
    rep.add("unit.left.deg" + std::to_string(n), g.product[0][n] == Mat::identity(g.dims[n]));
    rep.add("unit.right.deg" + std::to_string(n), g.product[n][0] == Mat::identity(g.dims[n]));
    rep.add("counit.left.deg" + std::to_string(n), g.coproduct[n][0] == Mat::identity(g.dims[n]));
    rep.add("counit.right.deg" + std::to_string(n), g.coproduct[n][n] == Mat::identity(g.dims[n]));
  }
  if (cap >= 1)
    rep.add("degree1.primitive", g.coproduct[1][0] == Mat::identity(g.dims[1]) &&
                                     g.coproduct[1][1] == Mat::identity(g.dims[1]));

  // Graded associativity / coassociativity.
  for (int p = 0; p <= cap; ++p)
    for (int q = 0; p + q <= cap; ++q)
      for (int r = 0; p + q + r <= cap; ++r) {
        Mat lhs = g.product[p + q][r] * kron(g.product[p][q], Mat::identity(g.dims[r]));
        Mat rhs = g.product[p][q + r] * kron(Mat::identity(g.dims[p]), g.product[q][r]);
        rep.add("assoc." + std::to_string(p) + "." + std::to_string(q) + "." + std::to_string(r),
                lhs == rhs);
      }
  for (int n = 0; n <= cap; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        int c = n - a - b;
        Mat lhs = kron(g.coproduct[a + b][a], Mat::identity(g.dims[c])) * g.coproduct[n][a + b];
        Mat rhs = kron(Mat::identity(g.dims[a]), g.coproduct[n - a][b]) * g.coproduct[n][a];
        rep.add("coassoc." + std::to_string(a) + "." + std::to_string(b) + "." + std::to_string(c),
                lhs == rhs);
      }

  // Braided-super bialgebra law per bidegree: the (r,s) component of
  // Delta(xy) for x in degree m, y in degree n equals the braided convolution
  // with Koszul sign (-1)^{s1 r2} and one Psi crossing.
  for (int m = 0; m <= cap; ++m)
    for (int n = 0; m + n <= cap; ++n)
      for (int r = 0; r <= m + n; ++r) {
        int s = m + n - r;
        Mat lhs = g.coproduct[m + n][r] * g.product[m][n];
        Mat rhs = Mat::zero(g.dims[r] * g.dims[s], g.dims[m] * g.dims[n]);
        for (int r1 = 0; r1 <= std::min(r, m); ++r1) {
          int s1 = m - r1, r2 = r - r1, s2 = n - r2;
          if (r2 < 0 || s2 < 0 || r2 > n) continue;
          Mat braid = braiding(g.degree_module[s1], g.degree_module[r2]);
          int sign = (s1 * r2) % 2 == 0 ? 1 : -1;
          Mat term = kron(g.product[r1][r2], g.product[s1][s2]) *
                     kron(Mat::identity(g.dims[r1]), kron(braid, Mat::identity(g.dims[s2]))) *
                     kron(g.coproduct[m][r1], g.coproduct[n][r2]);
          rhs = rhs + (sign < 0 ? -term : term);
        }
        rep.add("bialgebra." + std::to_string(m) + "." + std::to_string(n) + "->" +
                    std::to_string(r) + "." + std::to_string(s),
                lhs == rhs);
      }

  // Product and coproduct are crossed-module morphisms degreewise.
  for (int p = 0; p <= cap; ++p)
    for (int q = 0; p + q <= cap; ++q) {
      auto tc = tensor_crossed(g.degree_module[p], g.degree_module[q]);
      rep.merge(verify_morphism(g.product[p][q], tc, g.degree_module[p + q]),
                "product." + std::to_string(p) + "." + std::to_string(q) + ".");
      rep.merge(verify_morphism(g.coproduct[p + q][p], g.degree_module[p + q], tc),
                "coproduct." + std::to_string(p + q) + "." + std::to_string(p) + ".");
    }
  return rep;
}

}  // namespace hq
