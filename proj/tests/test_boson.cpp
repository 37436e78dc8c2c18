#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hq/boson.hpp"

using namespace hq;

namespace {

CrossedModule z2_minimal_module() {
  GroupGradedModule gm;
  gm.group = cyclic_group(2);
  gm.degree = {1, 1};
  gm.left_action = true;
  gm.action = {Mat::identity(2), Mat::identity(2)};
  gm.labels = {"e1", "e2"};
  return crossed_from_graded(gm);
}

CrossedModule z2_dual_module() {
  GroupGradedModule gm;
  gm.group = cyclic_group(2);
  gm.degree = {0, 1, 1};
  gm.left_action = false;
  Mat g(3, 3);
  g(0, 0) = -1;
  g(1, 1) = 1;
  g(2, 2) = -1;
  gm.action = {Mat::identity(3), g};
  gm.labels = {"gamma", "alpha1", "alpha2"};
  return crossed_from_graded(gm);
}

// omega~ of an inner calculus: omega~(a) = theta<a - eps(a) theta.
Mat inner_omega_tilde(const CrossedModule& v, const Vec& theta) {
  const HopfAlgebra& a = *v.over;
  Mat out(v.dim, a.dim);
  for (int j = 0; j < a.dim; ++j) {
    Vec col = sub(v.act_by(theta, a.basis(j)), scale(a.counit(a.basis(j)), theta));
    for (int i = 0; i < v.dim; ++i) out(i, j) = col[i];
  }
  return out;
}

// delta = [theta, .} on Lambda via its own products (theta given in V coords).
std::vector<Mat> commutator_delta(const GradedBraidedHopf& lam, const Vec& theta_v) {
  Vec th = lam.proj[1].apply(theta_v);
  std::vector<Mat> delta(lam.cap);
  for (int n = 0; n < lam.cap; ++n) {
    Mat left = lam.product[1][n] * kron(Mat::col(th), Mat::identity(lam.dims[n]));
    Mat right = lam.product[n][1] * kron(Mat::identity(lam.dims[n]), Mat::col(th));
    delta[n] = (n % 2 == 0) ? left - right : left + right;
  }
  return delta;
}

Vec basis_vec(int dim, int i) {
  Vec v(dim, Rat(0));
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("bosonised tensor algebra reproduces the two-arrow path algebra") {
  auto v = z2_minimal_module();
  auto kg = function_algebra(cyclic_group(2));
  auto omega = bosonise(kg, tensor_hopf(v, 3));
  CHECK(omega.dims == std::vector<int>{2, 4, 8, 16});
  auto rep = verify_graded_super(omega);
  INFO(rep.first_failure());
  CHECK(rep.all_pass());

  // Basis bookkeeping: alpha_i = delta_e (x) e_i, beta_i = delta_g (x) e_i.
  Vec de = basis_vec(2, 0), dg = basis_vec(2, 1);
  auto a = [&](int i) { return kron_vec(de, basis_vec(2, i)); };
  auto b = [&](int i) { return kron_vec(dg, basis_vec(2, i)); };
  const Mat& p01 = omega.product[0][1];
  const Mat& p10 = omega.product[1][0];
  const Mat& p11 = omega.product[1][1];
  for (int i = 0; i < 2; ++i) {
    CHECK(p01.apply(kron_vec(de, a(i))) == a(i));   // delta_e alpha_i = alpha_i
    CHECK(is_zero(p10.apply(kron_vec(a(i), de))));  // alpha_i delta_e = 0
    CHECK(is_zero(p01.apply(kron_vec(de, b(i)))));  // delta_e beta_i = 0
    CHECK(p10.apply(kron_vec(b(i), de)) == b(i));   // beta_i delta_e = beta_i
    for (int j = 0; j < 2; ++j) {
      CHECK(is_zero(p11.apply(kron_vec(a(i), a(j)))));  // alpha_i alpha_j = 0
      CHECK(is_zero(p11.apply(kron_vec(b(i), b(j)))));  // beta_i beta_j = 0
    }
  }

  // Coproduct of alpha_1: delta_e (x) alpha_1 + delta_g (x) beta_1 in
  // component (0,1) and alpha_1 (x) delta_e + beta_1 (x) delta_g in (1,0).
  Vec c01 = omega.coproduct[1][0].apply(a(0));
  CHECK(c01 == add(kron_vec(de, a(0)), kron_vec(dg, b(0))));
  Vec c10 = omega.coproduct[1][1].apply(a(0));
  CHECK(c10 == add(kron_vec(a(0), de), kron_vec(b(0), dg)));

  // Embedded Lambda multiplies by the Lambda product and A acts by the
  // smash relation (a (x) 1)(1 (x) eta) = a (x) eta.
  auto lam = tensor_hopf(v, 3);
  Vec e1 = basis_vec(2, 0), e2 = basis_vec(2, 1);
  CHECK(p11.apply(kron_vec(omega.embed(1, e1), omega.embed(1, e2))) ==
        omega.embed(2, lam.product[1][1].apply(kron_vec(e1, e2))));
  CHECK(p01.apply(kron_vec(de, omega.embed(1, e1))) == a(0));
}

TEST_CASE("minimal exterior calculus on the function algebra") {
  auto v = z2_minimal_module();
  auto kg = function_algebra(cyclic_group(2));
  auto lam = nichols(v, 3);
  Vec theta{rat(1), rat(0)};  // e1
  auto omega = bosonise(kg, lam, inner_omega_tilde(v, theta), commutator_delta(lam, theta));
  CHECK(omega.dims == std::vector<int>{2, 4, 2, 0});
  auto rep = verify_graded_super(omega);
  INFO(rep.first_failure());
  CHECK(rep.all_pass());
  auto drep = verify_strong_bicovariance(omega);
  INFO(drep.first_failure());
  CHECK(drep.all_pass());

  Vec de = basis_vec(2, 0), dg = basis_vec(2, 1);
  auto a = [&](int i) { return kron_vec(de, basis_vec(2, i)); };
  auto b = [&](int i) { return kron_vec(dg, basis_vec(2, i)); };

  // d delta_e = beta_1 - alpha_1.
  CHECK(omega.d[0].apply(de) == sub(b(0), a(0)));
  // d alpha_1 = d beta_1 = 0; d alpha_2 = beta_1 alpha_2 - alpha_1 beta_2 = -d beta_2.
  CHECK(is_zero(omega.d[1].apply(a(0))));
  CHECK(is_zero(omega.d[1].apply(b(0))));
  const Mat& p11 = omega.product[1][1];
  Vec expected = sub(p11.apply(kron_vec(b(0), a(1))), p11.apply(kron_vec(a(0), b(1))));
  CHECK(omega.d[1].apply(a(1)) == expected);
  CHECK(omega.d[1].apply(b(1)) == scale(rat(-1), expected));
  // The anticommutator form holds verbatim: d alpha_2 = beta_1 alpha_2 + alpha_2 beta_1.
  CHECK(omega.d[1].apply(a(1)) ==
        add(p11.apply(kron_vec(b(0), a(1))), p11.apply(kron_vec(a(1), b(0)))));

  // d agrees with the graded commutator [1 (x) theta, .} on degrees 0 and 1.
  Vec th = omega.embed(1, theta);
  for (int j = 0; j < omega.dims[0]; ++j) {
    Vec x = basis_vec(omega.dims[0], j);
    Vec comm = sub(omega.product[1][0].apply(kron_vec(th, x)),
                   omega.product[0][1].apply(kron_vec(x, th)));
    CHECK(omega.d[0].apply(x) == comm);
  }
  for (int j = 0; j < omega.dims[1]; ++j) {
    Vec x = basis_vec(omega.dims[1], j);
    Vec comm = add(p11.apply(kron_vec(th, x)), p11.apply(kron_vec(x, th)));
    CHECK(omega.d[1].apply(x) == comm);
  }

  // Zero omega~ and zero delta give the zero differential.
  auto flat = bosonise(kg, lam, Mat::zero(2, 2));
  for (const auto& m : flat.d) CHECK(m.is_zero());
}

TEST_CASE("universal theta quotient over the function algebra") {
  auto v = z2_minimal_module();
  auto kg = function_algebra(cyclic_group(2));
  Vec theta{rat(1), rat(0)};
  auto lam = universal_theta(v, theta, 3);
  auto omega = bosonise(kg, lam, inner_omega_tilde(v, theta), commutator_delta(lam, theta));
  CHECK(omega.dims == std::vector<int>{2, 4, 8, 14});
  auto rep = verify_graded_super(omega);
  INFO(rep.first_failure());
  CHECK(rep.all_pass());
  auto drep = verify_strong_bicovariance(omega);
  INFO(drep.first_failure());
  CHECK(drep.all_pass());

  Vec de = basis_vec(2, 0), dg = basis_vec(2, 1);
  auto a = [&](int i) { return kron_vec(de, basis_vec(lam.dims[1], i)); };
  auto b = [&](int i) { return kron_vec(dg, basis_vec(lam.dims[1], i)); };
  const Mat& p11 = omega.product[1][1];
  const Mat& p21 = omega.product[2][1];
  const Mat& p12 = omega.product[1][2];

  // d e^{(1)} = 2 theta^2 and d alpha_i = beta_1 alpha_i + alpha_i beta_1.
  Vec th2 = omega.embed(2, lam.theta_squared());
  CHECK(omega.d[1].apply(omega.embed(1, theta)) == scale(rat(2), th2));
  for (int i = 0; i < 2; ++i) {
    CHECK(omega.d[1].apply(a(i)) ==
          add(p11.apply(kron_vec(b(0), a(i))), p11.apply(kron_vec(a(i), b(0)))));
    CHECK(omega.d[1].apply(b(i)) ==
          add(p11.apply(kron_vec(a(0), b(i))), p11.apply(kron_vec(b(i), a(0)))));
  }

  // The degree-3 relation: alpha_1 beta_1 alpha_2 = alpha_2 beta_1 alpha_1
  // and beta_1 alpha_1 beta_2 = beta_2 alpha_1 beta_1.
  auto triple = [&](const Vec& x, const Vec& y, const Vec& z) {
    return p21.apply(kron_vec(p11.apply(kron_vec(x, y)), z));
  };
  CHECK(triple(a(0), b(0), a(1)) == triple(a(1), b(0), a(0)));
  CHECK(triple(b(0), a(0), b(1)) == triple(b(1), a(0), b(0)));
  // theta^2 is central against degree-1 elements.
  for (int j = 0; j < omega.dims[1]; ++j) {
    Vec x = basis_vec(omega.dims[1], j);
    CHECK(p21.apply(kron_vec(th2, x)) == p12.apply(kron_vec(x, th2)));
  }
}

TEST_CASE("coinner sub-shuffle calculus over the group algebra") {
  auto w = z2_dual_module();
  auto kz2 = group_algebra(cyclic_group(2));
  Vec theta_star{rat(0), rat(1), rat(0)};
  auto lam = subshuffle_theta(w, theta_star, 3);
  Vec theta{rat(1), rat(0), rat(0)};  // gamma
  auto omega = bosonise(kz2, lam, inner_omega_tilde(w, theta), commutator_delta(lam, theta));
  CHECK(omega.dims == std::vector<int>{2, 6, 18, 50});
  auto rep = verify_graded_super(omega);
  INFO(rep.first_failure());
  CHECK(rep.all_pass());
  auto drep = verify_strong_bicovariance(omega);
  INFO(drep.first_failure());
  CHECK(drep.all_pass());

  // Transport dictionary: a path starting at x with letter sequence
  // l_1...l_n is x (x) l_1 (x) ... (x) l_n.
  Vec e = basis_vec(2, 0), g = basis_vec(2, 1);
  Vec c = basis_vec(3, 0), a1 = basis_vec(3, 1), a2 = basis_vec(3, 2);
  Vec rho = kron_vec(g, c);
  auto deg2 = [&](const Vec& x, const Vec& l1, const Vec& l2) {
    return kron_vec(x, lam.proj[2].apply(kron_vec(l1, l2)));
  };

  // d e = 0, d g = -2 rho, d gamma = d rho = 0.
  CHECK(is_zero(omega.d[0].apply(e)));
  CHECK(omega.d[0].apply(g) == scale(rat(-2), rho));
  CHECK(is_zero(omega.d[1].apply(kron_vec(e, c))));
  CHECK(is_zero(omega.d[1].apply(rho)));
  // d alpha_i = 2 alpha_i rho (the path alpha_i then the loop at g),
  // d beta_i = -2 rho beta_i — for both i.
  for (int i = 1; i <= 2; ++i) {
    Vec ai = basis_vec(3, i);
    CHECK(omega.d[1].apply(kron_vec(e, ai)) == scale(rat(2), deg2(e, ai, c)));
    CHECK(omega.d[1].apply(kron_vec(g, ai)) == scale(rat(-2), deg2(g, c, ai)));
  }

  // d equals the graded commutator [1 (x) gamma, .} on degrees 0 and 1.
  Vec th = omega.embed(1, theta);
  for (int j = 0; j < omega.dims[0]; ++j) {
    Vec x = basis_vec(omega.dims[0], j);
    CHECK(omega.d[0].apply(x) == sub(omega.product[1][0].apply(kron_vec(th, x)),
                                     omega.product[0][1].apply(kron_vec(x, th))));
  }
  for (int j = 0; j < omega.dims[1]; ++j) {
    Vec x = basis_vec(omega.dims[1], j);
    CHECK(omega.d[1].apply(x) == add(omega.product[1][1].apply(kron_vec(th, x)),
                                     omega.product[1][1].apply(kron_vec(x, th))));
  }
}

TEST_CASE("corrupted differential is rejected with a witness") {
  auto v = z2_minimal_module();
  auto kg = function_algebra(cyclic_group(2));
  auto lam = nichols(v, 3);
  Vec theta{rat(1), rat(0)};
  auto omega = bosonise(kg, lam, inner_omega_tilde(v, theta), commutator_delta(lam, theta));
  omega.d[0](0, 0) += 1;
  auto rep = verify_strong_bicovariance(omega);
  CHECK(!rep.all_pass());
  CHECK(!rep.first_failure().empty());
}

TEST_CASE("construction rejects bad shapes") {
  auto v = z2_minimal_module();
  auto kg = function_algebra(cyclic_group(2));
  auto lam = nichols(v, 3);
  CHECK_THROWS(bosonise(group_algebra(cyclic_group(2)), lam));  // wrong base
  CHECK_THROWS(bosonise(kg, lam, Mat::zero(3, 2)));             // bad omega~ shape
  CHECK_THROWS(bosonise(kg, lam, std::nullopt, commutator_delta(lam, Vec{rat(1), rat(0)})));
}
