#include "hq/boson.hpp"

#include <stdexcept>
#include <string>

namespace hq {

namespace {

// Iterate the nonzero entries of column j of m.
template <class F>
void for_nz(const Mat& m, int j, F&& f) {
  for (int i = 0; i < m.rows; ++i) {
    const Rat& c = m(i, j);
    if (c != 0) f(i, c);
  }
}

// Sparse column cache: per-column (row, value) lists. The verification loops
// below revisit the same structure-map columns many times; scanning a dense
// column each visit dominates the runtime without this.
struct Cols {
  std::vector<std::vector<std::pair<int, Rat>>> c;
  Cols() = default;
  explicit Cols(const Mat& m) : c(m.cols) {
    for (int j = 0; j < m.cols; ++j)
      for_nz(m, j, [&](int i, const Rat& v) { c[j].emplace_back(i, v); });
  }
};

std::string tag(std::initializer_list<int> xs) {
  std::string s;
  for (int x : xs) s += "." + std::to_string(x);
  return s;
}

bool same_base(const HopfPtr& a, const HopfPtr& b) {
  if (a.get() == b.get()) return true;
  return a->dim == b->dim && a->mul == b->mul && a->unit == b->unit && a->cop == b->cop &&
         a->cou == b->cou && a->antipode == b->antipode;
}

}  // namespace

Vec GradedSuperHopf::unit() const { return base->unit; }

Vec GradedSuperHopf::embed(int n, const Vec& eta) const {
  if (static_cast<int>(eta.size()) != lambda.dims[n])
    throw std::invalid_argument("embed: wrong degree-" + std::to_string(n) + " dimension");
  return kron_vec(base->unit, eta);
}

GradedSuperHopf bosonise(HopfPtr a, const GradedBraidedHopf& lam,
                         const std::optional<Mat>& omega_tilde, const std::vector<Mat>& delta) {
  if (!same_base(a, lam.base.over))
    throw std::invalid_argument("bosonise: Lambda is not a crossed module over this algebra");
  const HopfAlgebra& A = *a;
  const int dA = A.dim, cap = lam.cap;

  GradedSuperHopf o;
  o.base = a;
  o.lambda = lam;
  o.cap = cap;
  o.dims.resize(cap + 1);
  for (int n = 0; n <= cap; ++n) o.dims[n] = dA * lam.dims[n];
  if (!lam.theta.empty()) o.theta = lam.theta;
  if (!lam.theta_star.empty()) o.theta_star = lam.theta_star;

  // Product: (a (x) eta)(b (x) zeta) = a b1 (x) (eta < b2) zeta.
  o.product.resize(cap + 1);
  for (int p = 0; p <= cap; ++p) {
    o.product[p].resize(cap - p + 1);
    for (int q = 0; p + q <= cap; ++q) {
      const int dp = lam.dims[p], dq = lam.dims[q], dn = lam.dims[p + q];
      const Mat& act_p = lam.degree_module[p].act;
      const Mat& prod = lam.product[p][q];
      Mat out(dA * dn, dA * dp * dA * dq);
      for (int ia = 0; ia < dA; ++ia)
        for (int ih = 0; ih < dp; ++ih)
          for (int ib = 0; ib < dA; ++ib) {
            for_nz(A.cop, ib, [&](int k, const Rat& c1) {
              const int b1 = k / dA, b2 = k % dA;
              for_nz(A.mul, ia * dA + b1, [&](int am, const Rat& c2) {
                for_nz(act_p, ih * dA + b2, [&](int h2, const Rat& c3) {
                  const Rat c123 = c1 * c2 * c3;
                  for (int iz = 0; iz < dq; ++iz) {
                    const int col = ((ia * dp + ih) * dA + ib) * dq + iz;
                    for_nz(prod, h2 * dq + iz, [&](int l, const Rat& c4) {
                      out(am * dn + l, col) += c123 * c4;
                    });
                  }
                });
              });
            });
          }
      o.product[p][q] = std::move(out);
    }
  }

  // Coproduct: Delta(a (x) eta) = a1 (x) (eta^1)_0 (x) a2 (eta^1)_1 (x) eta^2.
  o.coproduct.resize(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    o.coproduct[n].resize(n + 1);
    for (int r = 0; r <= n; ++r) {
      const int s = n - r;
      const int dr = lam.dims[r], ds = lam.dims[s], dn = lam.dims[n];
      const Mat& lcop = lam.coproduct[n][r];
      const Mat& coact_r = lam.degree_module[r].coact;
      Mat out(dA * dr * dA * ds, dA * dn);
      for (int ia = 0; ia < dA; ++ia)
        for (int ih = 0; ih < dn; ++ih) {
          const int col = ia * dn + ih;
          for_nz(A.cop, ia, [&](int k1, const Rat& c1) {
            const int a1 = k1 / dA, a2 = k1 % dA;
            for_nz(lcop, ih, [&](int k2, const Rat& c2) {
              const int h1 = k2 / ds, h2 = k2 % ds;
              for_nz(coact_r, h1, [&](int kx, const Rat& c3) {
                const int h1p = kx / dA, x = kx % dA;
                const Rat c123 = c1 * c2 * c3;
                for_nz(A.mul, a2 * dA + x, [&](int am, const Rat& c4) {
                  out((a1 * dr + h1p) * (dA * ds) + am * ds + h2, col) += c123 * c4;
                });
              });
            });
          });
        }
      o.coproduct[n][r] = std::move(out);
    }
  }

  // Differential: d(a (x) eta) = a1 (x) omega~(a2) eta + a (x) delta(eta).
  if (omega_tilde) {
    const Mat& w = *omega_tilde;
    if (w.rows != lam.dims[1] || w.cols != dA)
      throw std::invalid_argument("bosonise: omega_tilde has wrong shape");
    if (!delta.empty() && static_cast<int>(delta.size()) != cap)
      throw std::invalid_argument("bosonise: delta must have one matrix per degree 0..cap-1");
    o.omega_tilde = w;
    o.d.resize(cap);
    for (int n = 0; n < cap; ++n) {
      const int dn = lam.dims[n], dn1 = lam.dims[n + 1];
      const Mat& prod1n = lam.product[1][n];
      Mat dm(dA * dn1, dA * dn);
      for (int ia = 0; ia < dA; ++ia)
        for (int ih = 0; ih < dn; ++ih) {
          const int col = ia * dn + ih;
          for_nz(A.cop, ia, [&](int k, const Rat& c1) {
            const int a1 = k / dA, a2 = k % dA;
            for_nz(w, a2, [&](int wv, const Rat& c2) {
              const Rat c12 = c1 * c2;
              for_nz(prod1n, wv * dn + ih, [&](int l, const Rat& c3) {
                dm(a1 * dn1 + l, col) += c12 * c3;
              });
            });
          });
        }
      if (!delta.empty()) {
        if (delta[n].rows != dn1 || delta[n].cols != dn)
          throw std::invalid_argument("bosonise: delta[" + std::to_string(n) +
                                      "] has wrong shape");
        for (int ih = 0; ih < dn; ++ih)
          for_nz(delta[n], ih, [&](int l, const Rat& c) {
            for (int ia = 0; ia < dA; ++ia) dm(ia * dn1 + l, ia * dn + ih) += c;
          });
      }
      o.d[n] = std::move(dm);
    }
  } else if (!delta.empty()) {
    throw std::invalid_argument("bosonise: delta given without omega_tilde");
  }
  return o;
}

Report verify_graded_super(const GradedSuperHopf& o) {
  Report rep;
  const int cap = o.cap;
  for (int n = 0; n <= cap; ++n) rep.dims[n] = o.dims[n];

  // Degree 0 is the base Hopf algebra on the nose.
  rep.add("degree0.product", o.product[0][0] == o.base->mul);
  rep.add("degree0.coproduct", o.coproduct[0][0] == o.base->cop);

  const Mat u = Mat::col(o.unit());
  const Mat& eps = o.base->cou;
  for (int n = 0; n <= cap; ++n) {
    const Mat id = Mat::identity(o.dims[n]);
    rep.add("unit.left" + tag({n}), mul_kron(o.product[0][n], u, id) == id);
    rep.add("unit.right" + tag({n}), mul_kron(o.product[n][0], id, u) == id);
    rep.add("counit.left" + tag({n}), kron_mul(eps, id, o.coproduct[n][0]) == id);
    rep.add("counit.right" + tag({n}), kron_mul(id, eps, o.coproduct[n][n]) == id);
  }

  for (int p = 0; p <= cap; ++p)
    for (int q = 0; p + q <= cap; ++q)
      for (int r = 0; p + q + r <= cap; ++r) {
        Mat lhs = mul_kron(o.product[p + q][r], o.product[p][q], Mat::identity(o.dims[r]));
        Mat rhs = mul_kron(o.product[p][q + r], Mat::identity(o.dims[p]), o.product[q][r]);
        rep.add("assoc" + tag({p, q, r}), lhs == rhs);
      }

  for (int n = 0; n <= cap; ++n)
    for (int r = 0; r <= n; ++r)
      for (int s = 0; r + s <= n; ++s) {
        const int t = n - r - s;
        Mat lhs = kron_mul(o.coproduct[r + s][r], Mat::identity(o.dims[t]),
                           o.coproduct[n][r + s]);
        Mat rhs = kron_mul(Mat::identity(o.dims[r]), o.coproduct[n - r][s],
                           o.coproduct[n][r]);
        rep.add("coassoc" + tag({r, s, t}), lhs == rhs);
      }

  // Super-bialgebra law, per bidegree and output component. The flip is the
  // plain super flip with Koszul sign (bosonisation trades the braiding for
  // the crossed structure of the coefficients).
  std::vector<std::vector<Cols>> pc(cap + 1), cc(cap + 1);
  for (int p = 0; p <= cap; ++p) {
    pc[p].resize(cap - p + 1);
    for (int q = 0; p + q <= cap; ++q) pc[p][q] = Cols(o.product[p][q]);
  }
  for (int n = 0; n <= cap; ++n) {
    cc[n].resize(n + 1);
    for (int r = 0; r <= n; ++r) cc[n][r] = Cols(o.coproduct[n][r]);
  }
  for (int m = 0; m <= cap; ++m)
    for (int n = 0; m + n <= cap; ++n)
      for (int r = 0; r <= m + n; ++r) {
        const int s = m + n - r;
        Mat lhs = o.coproduct[m + n][r] * o.product[m][n];
        Mat rhs(o.dims[r] * o.dims[s], o.dims[m] * o.dims[n]);
        for (int r1 = std::max(0, r - n); r1 <= std::min(r, m); ++r1) {
          const int r2 = r - r1, s1 = m - r1, s2 = n - r2;
          const int sgn = koszul_sign({1, 0}, {s1, r2});
          const int ds1 = o.dims[s1], ds2 = o.dims[s2], dr2 = o.dims[r2], ds = o.dims[s];
          const auto& c1 = cc[m][r1].c;
          const auto& c2 = cc[n][r2].c;
          const auto& p1 = pc[r1][r2].c;
          const auto& p2 = pc[s1][s2].c;
          for (int im = 0; im < o.dims[m]; ++im)
            for (int in2 = 0; in2 < o.dims[n]; ++in2) {
              const int col = im * o.dims[n] + in2;
              for (const auto& [uu, cu] : c1[im]) {
                const int u1 = uu / ds1, u2 = uu % ds1;
                for (const auto& [ww, cw] : c2[in2]) {
                  const int w1 = ww / ds2, w2 = ww % ds2;
                  Rat base = cu * cw;
                  if (sgn < 0) base = -base;
                  for (const auto& [z1, cz1] : p1[u1 * dr2 + w1]) {
                    const Rat bz = base * cz1;
                    for (const auto& [z2, cz2] : p2[u2 * ds2 + w2])
                      rhs(z1 * ds + z2, col) += bz * cz2;
                  }
                }
              }
            }
        }
        rep.add("bialgebra" + tag({m, n, r}), lhs == rhs);
      }
  return rep;
}

Report verify_strong_bicovariance(const GradedSuperHopf& o) {
  Report rep;
  const int cap = o.cap;
  for (int n = 0; n <= cap; ++n) rep.dims[n] = o.dims[n];
  if (!o.has_d()) {
    rep.add("differential.present", false, "no differential attached");
    return rep;
  }
  rep.add("differential.present", true);

  for (int n = 0; n + 2 <= cap; ++n)
    rep.add("d.squared" + tag({n}), (o.d[n + 1] * o.d[n]).is_zero());

  // Super-Leibniz: d(xy) = (dx)y + (-1)^p x(dy) for x of degree p.
  for (int p = 0; p <= cap; ++p)
    for (int q = 0; p + q + 1 <= cap; ++q) {
      Mat lhs = o.d[p + q] * o.product[p][q];
      Mat rhs = mul_kron(o.product[p + 1][q], o.d[p], Mat::identity(o.dims[q])) +
                mul_kron(o.product[p][q + 1], Mat::identity(o.dims[p]), o.d[q])
                    .scaled(Rat(koszul_sign({1, 0}, {1, p})));
      rep.add("leibniz" + tag({p, q}), lhs == rhs);
    }

  // Super-coderivation: Delta d = (d (x) id + (-1)^r id (x) d) Delta,
  // componentwise in Omega^r (x) Omega^s with r + s = n + 1.
  for (int n = 0; n + 1 <= cap; ++n)
    for (int r = 0; r <= n + 1; ++r) {
      const int s = n + 1 - r;
      Mat lhs = o.coproduct[n + 1][r] * o.d[n];
      Mat rhs(o.dims[r] * o.dims[s], o.dims[n]);
      if (r >= 1)
        rhs = rhs + kron_mul(o.d[r - 1], Mat::identity(o.dims[s]), o.coproduct[n][r - 1]);
      if (s >= 1)
        rhs = rhs + kron_mul(Mat::identity(o.dims[r]), o.d[s - 1], o.coproduct[n][r])
                        .scaled(Rat(koszul_sign({1, 0}, {1, r})));
      rep.add("coderivation" + tag({n, r}), lhs == rhs);
    }
  return rep;
}

}  // namespace hq
