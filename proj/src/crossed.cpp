#include "hq/crossed.hpp"

#include <stdexcept>

namespace hq {

Mat tensor_permute(const std::vector<int>& dims, const std::vector<int>& src) {
  int n = static_cast<int>(dims.size());
  if (static_cast<int>(src.size()) != n) throw std::invalid_argument("tensor_permute: arity");
  long total = 1;
  for (int d : dims) total *= d;
  Mat m(static_cast<int>(total), static_cast<int>(total));
  std::vector<int> idx(n, 0);
  for (long flat = 0; flat < total; ++flat) {
    // decode input multi-index (leg 0 is high-order)
    long rem = flat;
    for (int l = n - 1; l >= 0; --l) {
      idx[l] = static_cast<int>(rem % dims[l]);
      rem /= dims[l];
    }
    long out = 0;
    for (int p = 0; p < n; ++p) out = out * dims[src[p]] + idx[src[p]];
    m(static_cast<int>(out), static_cast<int>(flat)) = 1;
  }
  return m;
}

int koszul_sign(const std::vector<int>& src, const std::vector<int>& degs) {
  int s = 0;
  for (size_t p = 0; p < src.size(); ++p)
    for (size_t q = p + 1; q < src.size(); ++q)
      if (src[p] > src[q]) s += degs[src[p]] * degs[src[q]];
  return (s % 2 == 0) ? 1 : -1;
}

Report verify_crossed(const CrossedModule& v) {
  Report rep;
  const HopfAlgebra& A = *v.over;
  int dV = v.dim, dA = A.dim;
  Mat idV = Mat::identity(dV), idA = Mat::identity(dA);

  rep.add("shapes", v.act.rows == dV && v.act.cols == dV * dA && v.coact.rows == dV * dA &&
                        v.coact.cols == dV);
  if (!rep.all_pass()) return rep;

  rep.add("module.assoc", v.act * kron(v.act, idA) == v.act * kron(idV, A.mul));
  rep.add("module.unit", v.act * kron(idV, Mat::col(A.unit)) == idV);
  rep.add("comodule.coassoc", kron(v.coact, idA) * v.coact == kron(idV, A.cop) * v.coact);
  rep.add("comodule.counit", kron(idV, A.cou) * v.coact == idV);

  // Crossed compatibility Delta_R(v<a) = v0<a2 (x) (Sa1) v1 a3, built column
  // by column over basis pairs (sparse iteration keeps memory small).
  Mat cop2 = kron(A.cop, idA) * A.cop;  // a -> a1 (x) a2 (x) a3
  Mat rhs(dV * dA, dV * dA);
  for (int i = 0; i < dV; ++i) {
    Vec cv = v.coact.column(i);  // v0 (x) v1
    for (int j = 0; j < dA; ++j) {
      Vec ca = cop2.column(j);  // a1 (x) a2 (x) a3
      int col = i * dA + j;
      for (int p = 0; p < dV * dA; ++p) {
        if (cv[p] == 0) continue;
        int v0 = p / dA, v1 = p % dA;
        for (int q = 0; q < dA * dA * dA; ++q) {
          if (ca[q] == 0) continue;
          int a1 = q / (dA * dA), a2 = (q / dA) % dA, a3 = q % dA;
          Rat c = cv[p] * ca[q];
          Vec left = v.act.column(v0 * dA + a2);  // v0 < a2
          Vec m1 = A.multiply(A.antipode.column(a1), A.basis(v1));
          Vec right = A.multiply(m1, A.basis(a3));  // (Sa1) v1 a3
          for (int x = 0; x < dV; ++x) {
            if (left[x] == 0) continue;
            for (int y = 0; y < dA; ++y)
              if (right[y] != 0) rhs(x * dA + y, col) += c * left[x] * right[y];
          }
        }
      }
    }
  }
  rep.add("crossed.compat", v.coact * v.act == rhs);
  return rep;
}

Mat braiding(const CrossedModule& v, const CrossedModule& w) {
  if (v.over != w.over && !(v.over->mul == w.over->mul && v.over->cop == w.over->cop))
    throw std::invalid_argument("braiding: mismatched base Hopf algebras");
  int dV = v.dim, dW = w.dim, dA = v.over->dim;
  return kron(Mat::identity(dW), v.act) * tensor_permute({dV, dW, dA}, {1, 0, 2}) *
         kron(Mat::identity(dV), w.coact);
}

Report verify_morphism(const Mat& f, const CrossedModule& v, const CrossedModule& w) {
  Report rep;
  int dA = v.over->dim;
  rep.add("morphism.shape", f.rows == w.dim && f.cols == v.dim);
  if (!rep.all_pass()) return rep;
  rep.add("morphism.action", f * v.act == w.act * kron(f, Mat::identity(dA)));
  rep.add("morphism.coaction", w.coact * f == kron(f, Mat::identity(dA)) * v.coact);
  return rep;
}

std::vector<Vec> invariant_subspace(const CrossedModule& v) {
  const Mat& incl = v.over->aug.incl;
  std::vector<Mat> blocks;
  for (int j = 0; j < incl.cols; ++j)
    blocks.push_back(v.act * kron(Mat::identity(v.dim), Mat::col(incl.column(j))));
  if (blocks.empty()) {
    std::vector<Vec> all;
    for (int i = 0; i < v.dim; ++i) {
      Vec e(v.dim, Rat(0));
      e[i] = 1;
      all.push_back(e);
    }
    return all;
  }
  return kernel_basis(vstack(blocks));
}

CrossedModule tensor_crossed(const CrossedModule& v, const CrossedModule& w) {
  const HopfAlgebra& A = *v.over;
  int dV = v.dim, dW = w.dim, dA = A.dim;
  CrossedModule t;
  t.over = v.over;
  t.dim = dV * dW;
  // (v(x)w)<a = v<a1 (x) w<a2
  t.act = kron(v.act, w.act) * tensor_permute({dV, dW, dA, dA}, {0, 2, 1, 3}) *
          kron(Mat::identity(dV * dW), A.cop);
  // Delta_R(v(x)w) = v0 (x) w0 (x) v1 w1
  t.coact = kron(Mat::identity(dV * dW), A.mul) * tensor_permute({dV, dA, dW, dA}, {0, 2, 1, 3}) *
            kron(v.coact, w.coact);
  for (const auto& lv : v.labels)
    for (const auto& lw : w.labels) t.labels.push_back(lv + "." + lw);
  return t;
}

CrossedModule tensor_power_crossed(const CrossedModule& v, int n) {
  if (n == 0) {
    CrossedModule t;
    t.over = v.over;
    t.dim = 1;
    t.act = v.over->cou;                       // 1 x dA: k < a = cou(a)
    t.coact = Mat::col(v.over->unit);          // dA x 1
    t.labels = {"1"};
    return t;
  }
  CrossedModule t = v;
  for (int k = 1; k < n; ++k) t = tensor_crossed(t, v);
  return t;
}

CanonicalCrossed canonical_crossed_structures(HopfPtr a) {
  const HopfAlgebra& A = *a;
  int n = A.dim;
  Mat idA = Mat::identity(n);
  const Mat& incl = A.aug.incl;
  const Mat& pi = A.aug.pi;
  Mat cop2 = kron(A.cop, idA) * A.cop;

  CanonicalCrossed cc;
  // Regular action, adjoint coaction.
  cc.regular_adjoint.over = a;
  cc.regular_adjoint.dim = n - 1;
  cc.regular_adjoint.act = pi * A.mul * kron(incl, idA);
  // AdR: a -> a2 (x) (Sa1) a3, on legs [Sa1, a2, a3] permuted to [a2, Sa1, a3].
  Mat adr = kron(idA, A.mul) * tensor_permute({n, n, n}, {1, 0, 2}) *
            kron(A.antipode, Mat::identity(n * n)) * cop2;
  cc.regular_adjoint.coact = kron(pi, idA) * adr * incl;
  // Adjoint action, regular coaction.
  cc.adjoint_regular.over = a;
  cc.adjoint_regular.dim = n - 1;
  Mat mul3 = A.mul * kron(A.mul, idA);
  cc.adjoint_regular.act = pi * mul3 * tensor_permute({n, n, n}, {1, 0, 2}) *
                           kron(incl, kron(A.antipode, idA) * A.cop);
  cc.adjoint_regular.coact = kron(pi, idA) * (A.cop - kron(Mat::col(A.unit), idA)) * incl;

  for (int j = 0; j < n - 1; ++j) {
    cc.regular_adjoint.labels.push_back("p" + std::to_string(j));
    cc.adjoint_regular.labels.push_back("p" + std::to_string(j));
  }
  return cc;
}

CrossedModule crossed_from_graded(const GroupGradedModule& gm) {
  const FiniteGroup& G = gm.group;
  int dV = static_cast<int>(gm.degree.size());
  int n = G.order;
  if (static_cast<int>(gm.action.size()) != n)
    throw std::invalid_argument("graded: need one action matrix per group element");
  if (gm.action[0] != Mat::identity(dV))
    throw std::invalid_argument("graded: identity must act as identity");
  // Action is a (left or right) representation.
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      Mat expect = gm.left_action ? gm.action[g] * gm.action[h] : gm.action[h] * gm.action[g];
      if (expect != gm.action[G.mul(g, h)])
        throw std::invalid_argument("graded: action not a representation at (" +
                                    std::to_string(g) + "," + std::to_string(h) + ")");
    }
  // Grading compatibility.
  for (int h = 0; h < n; ++h)
    for (int i = 0; i < dV; ++i)
      for (int j = 0; j < dV; ++j) {
        if (gm.action[h](j, i) == 0) continue;
        int expect = gm.left_action ? G.conj(h, gm.degree[i])
                                    : G.mul(G.mul(G.inv(h), gm.degree[i]), h);
        if (gm.degree[j] != expect)
          throw std::invalid_argument("graded: action/grading incompatible at h=" +
                                      std::to_string(h) + " basis " + std::to_string(i));
      }

  CrossedModule v;
  v.dim = dV;
  v.labels = gm.labels;
  if (v.labels.empty())
    for (int i = 0; i < dV; ++i) v.labels.push_back("v" + std::to_string(i));
  if (gm.left_action) {
    v.over = function_algebra(G);
    v.act = Mat(dV, dV * n);
    for (int i = 0; i < dV; ++i) v.act(i, i * n + gm.degree[i]) = 1;  // v<d_g picks grade g
    v.coact = Mat(dV * n, dV);
    for (int h = 0; h < n; ++h)
      for (int i = 0; i < dV; ++i)
        for (int j = 0; j < dV; ++j) v.coact(j * n + h, i) = gm.action[h](j, i);
  } else {
    v.over = group_algebra(G);
    v.act = Mat(dV, dV * n);
    for (int h = 0; h < n; ++h)
      for (int i = 0; i < dV; ++i)
        for (int j = 0; j < dV; ++j) v.act(j, i * n + h) = gm.action[h](j, i);
    v.coact = Mat(dV * n, dV);
    for (int i = 0; i < dV; ++i) v.coact(i * n + gm.degree[i], i) = 1;  // v -> v (x) g
  }
  Report rep = verify_crossed(v);
  if (!rep.all_pass())
    throw std::invalid_argument("graded: crossed verification failed: " + rep.first_failure());
  return v;
}

CrossedModule dual_crossed(const CrossedModule& v, HopfPtr h, const Mat& pairing) {
  const HopfAlgebra& A = *v.over;
  const HopfAlgebra& H = *h;
  int dA = A.dim, dH = H.dim, dV = v.dim;
  if (pairing.rows != dH || pairing.cols != dA || rank(pairing) != dA || dA != dH)
    throw std::invalid_argument("dual_crossed: pairing must be square nondegenerate");
  auto pinv_opt = preimage_cols(pairing, Mat::identity(dA));
  Mat pinv = *pinv_opt;  // pairing * pinv = id

  CrossedModule d;
  d.over = h;
  d.dim = dV;
  // <phi_k < h_m, v_i> = sum_j coact[(k,j), i] P(m, j)
  d.act = Mat(dV, dV * dH);
  for (int k = 0; k < dV; ++k)
    for (int m = 0; m < dH; ++m)
      for (int i = 0; i < dV; ++i) {
        Rat s(0);
        for (int j = 0; j < dA; ++j) {
          const Rat& c = v.coact(k * dA + j, i);
          if (c != 0 && pairing(m, j) != 0) s += c * pairing(m, j);
        }
        if (s != 0) d.act(i, k * dH + m) = s;
      }
  // Delta_R phi_k = sum_{i,m} D[(i,m),k] phi_i (x) h_m determined by
  // sum_m D[(i,m),k] P(m,j) = <phi_k, v_i < a_j> = act[k, i*dA + j].
  d.coact = Mat(dV * dH, dV);
  for (int k = 0; k < dV; ++k)
    for (int i = 0; i < dV; ++i)
      for (int m = 0; m < dH; ++m) {
        Rat s(0);
        for (int j = 0; j < dA; ++j) {
          const Rat& c = v.act(k, i * dA + j);
          if (c != 0 && pinv(j, m) != 0) s += c * pinv(j, m);
        }
        if (s != 0) d.coact(i * dH + m, k) = s;
      }
  for (const auto& l : v.labels) d.labels.push_back(l + "*");
  Report rep = verify_crossed(d);
  if (!rep.all_pass())
    throw std::invalid_argument("dual_crossed: result not crossed: " + rep.first_failure());
  return d;
}

std::vector<Mat> complete_action(const FiniteGroup& g,
                                 const std::vector<std::pair<int, Mat>>& gens, int dim,
                                 bool left_action) {
  std::vector<Mat> act(g.order);
  std::vector<bool> known(g.order, false);
  act[0] = Mat::identity(dim);
  known[0] = true;
  for (const auto& [e, m] : gens) {
    if (known[e] && act[e] != m) throw std::invalid_argument("complete_action: inconsistent");
    act[e] = m;
    known[e] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b) {
        if (!known[a] || !known[b]) continue;
        int c = g.mul(a, b);
        Mat m = left_action ? act[a] * act[b] : act[b] * act[a];
        if (!known[c]) {
          act[c] = m;
          known[c] = true;
          changed = true;
        } else if (act[c] != m) {
          throw std::invalid_argument("complete_action: generators inconsistent");
        }
      }
  }
  for (bool k : known)
    if (!k) throw std::invalid_argument("complete_action: generators do not generate G");
  return act;
}

}  // namespace hq
