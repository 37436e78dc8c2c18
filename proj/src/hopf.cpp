#include "hq/hopf.hpp"

#include <stdexcept>

namespace hq {

namespace {

AugmentationData make_aug(const HopfAlgebra& h) {
  AugmentationData aug;
  auto kb = kernel_basis(h.cou);
  if (static_cast<int>(kb.size()) != h.dim - 1)
    throw std::invalid_argument("hopf: counit must be a nonzero functional");
  aug.incl = Mat::from_cols(kb, h.dim);
  // pi(a) = a - cou(a) 1, expressed on the A+ basis.
  Mat target = Mat::identity(h.dim) - Mat::col(h.unit) * h.cou;
  auto pi = preimage_cols(aug.incl, target);
  if (!pi) throw std::invalid_argument("hopf: counit projection does not land in A+");
  aug.pi = *pi;
  return aug;
}

}  // namespace

Report verify_hopf(const HopfAlgebra& h) {
  Report rep;
  int n = h.dim;
  Mat id = Mat::identity(n);
  Mat unit_col = Mat::col(h.unit);

  rep.add("shapes", h.mul.rows == n && h.mul.cols == n * n && h.cop.rows == n * n &&
                        h.cop.cols == n && h.cou.rows == 1 && h.cou.cols == n &&
                        h.antipode.rows == n && h.antipode.cols == n &&
                        static_cast<int>(h.unit.size()) == n);
  if (!rep.all_pass()) return rep;

  rep.add("associativity", h.mul * kron(h.mul, id) == h.mul * kron(id, h.mul));
  rep.add("unit.left", h.mul * kron(unit_col, id) == id);
  rep.add("unit.right", h.mul * kron(id, unit_col) == id);
  rep.add("coassociativity", kron(h.cop, id) * h.cop == kron(id, h.cop) * h.cop);
  rep.add("counit.left", kron(h.cou, id) * h.cop == id);
  rep.add("counit.right", kron(id, h.cou) * h.cop == id);
  // Delta and counit are algebra maps; Delta(1) = 1(x)1, cou(1) = 1.
  Mat mid_flip = kron(id, kron(flip_matrix(n, n), id));
  rep.add("coproduct.multiplicative",
          h.cop * h.mul == kron(h.mul, h.mul) * mid_flip * kron(h.cop, h.cop));
  rep.add("coproduct.unit", h.cop.apply(h.unit) == kron_vec(h.unit, h.unit));
  rep.add("counit.multiplicative", h.cou * h.mul == kron(h.cou, h.cou));
  rep.add("counit.unit", h.counit(h.unit) == 1);
  // Antipode axiom: m(S(x)id)Delta = unit cou = m(id(x)S)Delta.
  Mat conv = unit_col * h.cou;
  rep.add("antipode.left", h.mul * kron(h.antipode, id) * h.cop == conv);
  rep.add("antipode.right", h.mul * kron(id, h.antipode) * h.cop == conv);
  rep.add("antipode.bijective", rank(h.antipode) == n);
  return rep;
}

HopfPtr make_hopf(int dim, Mat mul, Vec unit, Mat cop, Mat cou, Mat antipode,
                  std::vector<std::string> labels) {
  auto h = std::make_shared<HopfAlgebra>();
  h->dim = dim;
  h->mul = std::move(mul);
  h->unit = std::move(unit);
  h->cop = std::move(cop);
  h->cou = std::move(cou);
  h->antipode = std::move(antipode);
  h->labels = std::move(labels);
  Report rep = verify_hopf(*h);
  if (!rep.all_pass())
    throw std::invalid_argument("hopf: axiom failed: " + rep.first_failure());
  h->aug = make_aug(*h);
  return h;
}

HopfPtr function_algebra(const FiniteGroup& g) {
  int n = g.order;
  Mat mul(n, n * n), cop(n * n, n), cou(1, n), S(n, n);
  Vec unit(n, Rat(1));  // 1 = sum of delta_x
  for (int x = 0; x < n; ++x) {
    mul(x, x * n + x) = 1;  // delta_x delta_y = delta_{x,y} delta_x
    for (int u = 0; u < n; ++u) {
      int v = g.mul(g.inv(u), x);  // uv = x
      cop(u * n + v, x) = 1;
    }
    S(g.inv(x), x) = 1;
  }
  cou(0, 0) = 1;  // identity element has index 0
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) labels.push_back("d_" + g.labels[x]);
  return make_hopf(n, mul, unit, cop, cou, S, labels);
}

HopfPtr group_algebra(const FiniteGroup& g) {
  int n = g.order;
  Mat mul(n, n * n), cop(n * n, n), cou(1, n), S(n, n);
  Vec unit(n, Rat(0));
  unit[0] = 1;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) mul(g.mul(x, y), x * n + y) = 1;
    cop(x * n + x, x) = 1;
    cou(0, x) = 1;
    S(g.inv(x), x) = 1;
  }
  return make_hopf(n, mul, unit, cop, cou, S, g.labels);
}

Mat canonical_group_pairing(const FiniteGroup& g) { return Mat::identity(g.order); }

}  // namespace hq
