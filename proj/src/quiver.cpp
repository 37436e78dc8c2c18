#include "hq/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace hq {
namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("quiver: " + what); }

Vec unit_vec(int dim, int i) {
  Vec v(dim, Rat(0));
  v[i] = 1;
  return v;
}

// Arrow indices grouped by ordered pair, in arrow-index order.
std::map<std::pair<int, int>, std::vector<int>> blocks(const Quiver& q) {
  std::map<std::pair<int, int>, std::vector<int>> b;
  for (int k = 0; k < static_cast<int>(q.arrows.size()); ++k)
    b[{q.arrows[k].source, q.arrows[k].target}].push_back(k);
  return b;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Paths of a quiver per degree, with extension lookup.
struct PathData {
  struct Path {
    int start = 0, target = 0;
    std::vector<int> arrows;
  };
  std::vector<std::vector<Path>> paths;           // per degree
  std::vector<std::map<std::pair<int, int>, int>> ext;  // (prev index, arrow) -> index
};

PathData enumerate_paths(const Quiver& q, int cap) {
  PathData pd;
  pd.paths.resize(cap + 1);
  pd.ext.resize(cap + 1);
  for (int x = 0; x < q.vertices; ++x) pd.paths[0].push_back({x, x, {}});
  for (int n = 1; n <= cap; ++n)
    for (int p = 0; p < static_cast<int>(pd.paths[n - 1].size()); ++p)
      for (int k = 0; k < static_cast<int>(q.arrows.size()); ++k)
        if (q.arrows[k].source == pd.paths[n - 1][p].target) {
          PathData::Path np = pd.paths[n - 1][p];
          np.arrows.push_back(k);
          np.target = q.arrows[k].target;
          pd.ext[n][{p, k}] = static_cast<int>(pd.paths[n].size());
          pd.paths[n].push_back(np);
        }
  return pd;
}

std::string path_label(const FiniteGroup& g, const Quiver& q, const PathData::Path& p) {
  std::string s = g.labels[p.start];
  for (int k : p.arrows) {
    s += "-(" + std::to_string(q.arrows[k].colour) + ")->";
    s += g.labels[q.arrows[k].target];
  }
  return s;
}

}  // namespace

Quiver make_quiver(int vertices, std::vector<QuiverArrow> arrows, std::vector<int> marked) {
  if (vertices <= 0) fail("vertex count must be positive");
  std::set<std::tuple<int, int, int>> seen;
  std::map<std::pair<int, int>, int> block_count;
  for (const auto& a : arrows) {
    if (a.source < 0 || a.source >= vertices || a.target < 0 || a.target >= vertices)
      fail("arrow endpoint out of range");
    if (a.colour < 1) fail("arrow colours are 1-based");
    if (!seen.insert({a.source, a.target, a.colour}).second) fail("duplicate arrow colour in block");
    ++block_count[{a.source, a.target}];
  }
  for (const auto& a : arrows)
    if (a.colour > block_count[{a.source, a.target}]) fail("arrow colours must be 1..#parallel");
  std::set<std::pair<int, int>> marked_pairs;
  std::set<int> marked_set;
  for (int k : marked) {
    if (k < 0 || k >= static_cast<int>(arrows.size())) fail("marked index out of range");
    if (!marked_set.insert(k).second) fail("duplicate marked index");
    const auto& a = arrows[k];
    if (a.colour != 1) fail("marked arrows must have colour 1");
    if (a.source == a.target) fail("marked self-loop");
    if (!marked_pairs.insert({a.source, a.target}).second)
      fail("two marked arrows on one ordered pair");
  }
  Quiver q;
  q.vertices = vertices;
  q.arrows = std::move(arrows);
  q.marked = std::move(marked);
  std::sort(q.marked.begin(), q.marked.end());
  return q;
}

SetCalculus finite_set_calculus(const Quiver& q) {
  Quiver v = make_quiver(q.vertices, q.arrows, q.marked);
  const int na = static_cast<int>(v.arrows.size());
  SetCalculus c;
  c.quiver = v;
  c.theta = Vec(na, Rat(0));
  c.d = Mat(na, v.vertices);
  for (int k : v.marked) {
    c.theta[k] = 1;
    // d delta_x = [theta, delta_x]: incoming marked arrows minus outgoing.
    c.d(k, v.arrows[k].target) += 1;
    c.d(k, v.arrows[k].source) -= 1;
  }
  return c;
}

QuiverClassification classify_quiver(const Quiver& q) {
  QuiverClassification c;
  c.ramification = Mat(q.vertices, q.vertices);
  for (const auto& a : q.arrows) c.ramification(a.source, a.target) += 1;
  for (int k : q.marked) c.digraph.push_back({q.arrows[k].source, q.arrows[k].target});
  std::sort(c.digraph.begin(), c.digraph.end());
  return c;
}

Quiver quiver_from_classification(int vertices, const QuiverClassification& c) {
  if (c.ramification.rows != vertices || c.ramification.cols != vertices)
    fail("ramification matrix has wrong shape");
  std::set<std::pair<int, int>> marked_pairs(c.digraph.begin(), c.digraph.end());
  std::vector<QuiverArrow> arrows;
  std::vector<int> marked;
  for (int x = 0; x < vertices; ++x)
    for (int y = 0; y < vertices; ++y) {
      const Rat& r = c.ramification(x, y);
      if (r < 0 || r.get_den() != 1) fail("ramification entries must be nonnegative integers");
      int n = static_cast<int>(r.get_num().get_si());
      if (marked_pairs.count({x, y}) && n < 1) fail("marked pair with no arrows");
      for (int i = 1; i <= n; ++i) {
        if (i == 1 && marked_pairs.count({x, y}))
          marked.push_back(static_cast<int>(arrows.size()));
        arrows.push_back({x, y, i});
      }
    }
  return make_quiver(vertices, std::move(arrows), std::move(marked));
}

Mat canonical_form_iso(const Quiver& q) {
  SetCalculus from = finite_set_calculus(q);
  Quiver canon = quiver_from_classification(q.vertices, classify_quiver(q));
  SetCalculus to = finite_set_calculus(canon);
  std::set<int> marked_set(from.quiver.marked.begin(), from.quiver.marked.end());
  auto src_blocks = blocks(from.quiver);
  auto dst_blocks = blocks(canon);
  const int na = static_cast<int>(q.arrows.size());
  Mat t(na, na);
  for (const auto& [pair, src] : src_blocks) {
    // Marked arrow first, then the rest in arrow-index order.
    std::vector<int> ordered;
    for (int k : src)
      if (marked_set.count(k)) ordered.push_back(k);
    for (int k : src)
      if (!marked_set.count(k)) ordered.push_back(k);
    const auto& dst = dst_blocks.at(pair);
    for (size_t i = 0; i < ordered.size(); ++i) t(dst[i], ordered[i]) = 1;
  }
  if (t.apply(from.theta) != to.theta || t * from.d != to.d)
    throw std::logic_error("quiver: canonical form isomorphism failed verification");
  return t;
}

LaplacianCalculus laplacian_quantisation(const Mat& weights, const Rat& lambda) {
  const int n = weights.rows;
  if (n <= 0 || weights.cols != n) fail("weights must be a square matrix");
  for (int x = 0; x < n; ++x) {
    if (weights(x, x) != 0) fail("weights must have zero diagonal");
    for (int y = 0; y < n; ++y)
      if ((weights(x, y) != 0) != (weights(y, x) != 0)) fail("edge set must be symmetric");
  }
  LaplacianCalculus l;
  l.weights = weights;
  l.lambda = lambda;
  std::map<std::pair<int, int>, int> eidx;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (weights(x, y) != 0) {
        eidx[{x, y}] = static_cast<int>(l.edges.size());
        l.edges.push_back({x, y});
      }
  const int m = static_cast<int>(l.edges.size());

  // Delta f (x) = 2 sum_{x->y} (f(x) - f(y)) g_{y->x}.
  l.laplacian = Mat(n, n);
  for (const auto& [x, y] : l.edges) {
    l.laplacian(x, x) += 2 * weights(x, y);
    l.laplacian(x, y) -= 2 * weights(x, y);
  }

  // Quiver form: the graph (marked) plus a self-loop at every vertex.
  std::vector<QuiverArrow> arrows;
  std::vector<int> marked;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) {
        arrows.push_back({x, x, 1});
      } else if (weights(x, y) != 0) {
        marked.push_back(static_cast<int>(arrows.size()));
        arrows.push_back({x, y, 1});
      }
    }
  l.calculus = finite_set_calculus(make_quiver(n, std::move(arrows), std::move(marked)));
  const auto& qa = l.calculus.quiver.arrows;
  const int na = static_cast<int>(qa.size());

  // Transport: marked arrow (x -> y) |-> omega_{x->y} - lambda g_{y->x}
  // delta_x theta'; self-loop at x |-> delta_x theta'.
  l.transport = Mat(m + n, na);
  for (int k = 0; k < na; ++k) {
    int x = qa[k].source, y = qa[k].target;
    if (x == y) {
      l.transport(m + x, k) = 1;
    } else {
      l.transport(eidx.at({x, y}), k) = 1;
      l.transport(m + x, k) = -lambda * weights(x, y);
    }
  }

  // d~ delta_x = sum_{y->x} omega_{y->x} - sum_{x->y} omega_{x->y}
  //              + (lambda/2) (Delta delta_x) theta'.
  l.d_tilde = Mat(m + n, n);
  for (int e = 0; e < m; ++e) {
    l.d_tilde(e, l.edges[e].second) += 1;
    l.d_tilde(e, l.edges[e].first) -= 1;
  }
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x) l.d_tilde(m + x, z) += lambda / 2 * l.laplacian(x, z);

  if (l.d_tilde != l.transport * l.calculus.d)
    throw std::logic_error("quiver: laplacian d transport failed");
  // Deformed bimodule vs the quiver bigrading, through the transport.
  for (int z = 0; z < n; ++z) {
    Mat left(m + n, m + n), right(m + n, m + n);
    for (int e = 0; e < m; ++e) {
      auto [x, y] = l.edges[e];
      if (x == z) left(e, e) = 1;
      if (y == z) right(e, e) = 1;
      right(m + x, e) = lambda * weights(x, y) * Rat((x == z) - (y == z));
    }
    left(m + z, m + z) = 1;
    right(m + z, m + z) = 1;
    Mat gl(na, na), gr(na, na);
    for (int k = 0; k < na; ++k) {
      if (qa[k].source == z) gl(k, k) = 1;
      if (qa[k].target == z) gr(k, k) = 1;
    }
    if (left * l.transport != l.transport * gl || right * l.transport != l.transport * gr)
      throw std::logic_error("quiver: laplacian bimodule transport failed");
  }
  return l;
}

Report verify_laplacian_leibniz(const LaplacianCalculus& l) {
  const int n = l.weights.rows;
  Report rep;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // Delta(delta_a delta_b) = (Delta delta_a) delta_b + delta_a Delta
      // delta_b + 2 (d delta_a, d delta_b), evaluated pointwise.
      Vec lhs(n, Rat(0));
      if (a == b) lhs = l.laplacian.column(a);
      Vec rhs(n, Rat(0));
      rhs[b] += l.laplacian(b, a);
      rhs[a] += l.laplacian(a, b);
      for (const auto& [u, v] : l.edges) {
        Rat fa = Rat((v == a) - (u == a));
        Rat gb = Rat((u == b) - (v == b));
        rhs[u] += 2 * fa * gb * l.weights(u, v);
      }
      rep.add("laplacian.leibniz." + std::to_string(a) + "." + std::to_string(b), lhs == rhs);
    }
  return rep;
}

Quiver hopf_quiver(const FiniteGroup& g, const std::vector<int>& ramification,
                   const std::vector<int>& marked_classes) {
  auto cd = conjugacy_data(g);
  const int nc = static_cast<int>(cd.classes.size());
  if (static_cast<int>(ramification.size()) != nc ||
      static_cast<int>(marked_classes.size()) != nc)
    fail("ramification and marking must have one entry per conjugacy class");
  for (int c = 0; c < nc; ++c) {
    if (ramification[c] < 0) fail("negative ramification");
    if (marked_classes[c] != 0 && marked_classes[c] != 1) fail("marking entries must be 0 or 1");
    if (marked_classes[c] > ramification[c]) fail("marked class with zero ramification");
  }
  if (marked_classes[cd.class_of(0)] != 0) fail("the identity class cannot be marked");
  std::vector<QuiverArrow> arrows;
  std::vector<int> marked;
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      int c = cd.class_of(g.mul(g.inv(x), y));
      for (int i = 1; i <= ramification[c]; ++i) {
        if (i == 1 && marked_classes[c] == 1) marked.push_back(static_cast<int>(arrows.size()));
        arrows.push_back({x, y, i});
      }
    }
  return make_quiver(g.order, std::move(arrows), std::move(marked));
}

namespace {

std::map<std::tuple<int, int, int>, int> arrow_index(const Quiver& q) {
  std::map<std::tuple<int, int, int>, int> m;
  for (int k = 0; k < static_cast<int>(q.arrows.size()); ++k)
    m[{q.arrows[k].source, q.arrows[k].target, q.arrows[k].colour}] = k;
  return m;
}

// Canonical permutation action on all arrows: left-handed triples commute
// with the canonical right action (x -> y) * h = h^-1 x -> h^-1 y; the
// right-handed ones with the canonical left action h . (x -> y) = hx -> hy.
Mat canonical_permutation(const FiniteGroup& g, const Quiver& q,
                          const std::map<std::tuple<int, int, int>, int>& aidx, int h,
                          bool opposite_of_right_handed) {
  const int na = static_cast<int>(q.arrows.size());
  Mat m(na, na);
  for (int k = 0; k < na; ++k) {
    const auto& a = q.arrows[k];
    int x, y;
    if (opposite_of_right_handed) {  // canonical left action
      x = g.mul(h, a.source);
      y = g.mul(h, a.target);
    } else {  // canonical right action
      x = g.mul(g.inv(h), a.source);
      y = g.mul(g.inv(h), a.target);
    }
    m(aidx.at({x, y, a.colour}), k) = 1;
  }
  return m;
}

}  // namespace

HopfQuiverTriple make_triple(const FiniteGroup& g, const std::vector<int>& ramification,
                             const std::vector<int>& marked_classes,
                             const std::vector<Mat>& action, bool right_handed) {
  HopfQuiverTriple t;
  t.group = g;
  t.quiver = hopf_quiver(g, ramification, marked_classes);
  t.ramification = ramification;
  t.marked_classes = marked_classes;
  t.right_handed = right_handed;
  t.action = action;
  const int na = static_cast<int>(t.quiver.arrows.size());
  if (static_cast<int>(action.size()) != g.order) fail("one action matrix per group element");
  for (const auto& m : action)
    if (m.rows != na || m.cols != na) fail("action matrix has wrong shape");
  if (action[0] != Mat::identity(na)) fail("identity must act trivially");
  for (int h1 = 0; h1 < g.order; ++h1)
    for (int h2 = 0; h2 < g.order; ++h2) {
      Mat composed = right_handed ? action[h2] * action[h1] : action[h1] * action[h2];
      if (action[g.mul(h1, h2)] != composed) fail("action matrices do not compose");
    }
  auto aidx = arrow_index(t.quiver);
  std::set<int> marked_set(t.quiver.marked.begin(), t.quiver.marked.end());
  for (int h = 0; h < g.order; ++h) {
    for (int k = 0; k < na; ++k) {
      const auto& a = t.quiver.arrows[k];
      int x = right_handed ? g.mul(a.source, h) : g.mul(a.source, g.inv(h));
      int y = right_handed ? g.mul(a.target, h) : g.mul(a.target, g.inv(h));
      Vec img = action[h].column(k);
      for (int j = 0; j < na; ++j)
        if (img[j] != 0 &&
            (t.quiver.arrows[j].source != x || t.quiver.arrows[j].target != y))
          fail("action does not respect the arrow bigrading");
      if (marked_set.count(k) && img != unit_vec(na, aidx.at({x, y, 1})))
        fail("action does not restrict to the canonical one on marked arrows");
    }
    for (int k = 0; k < g.order; ++k) {
      Mat canon_k = canonical_permutation(g, t.quiver, aidx, k, right_handed);
      if (action[h] * canon_k != canon_k * action[h])
        fail("action does not commute with the canonical opposite-side action");
    }
  }
  return t;
}

HopfQuiverTriple canonical_triple(const FiniteGroup& g, const std::vector<int>& ramification,
                                  const std::vector<int>& marked_classes, bool right_handed) {
  Quiver q = hopf_quiver(g, ramification, marked_classes);
  auto aidx = arrow_index(q);
  const int na = static_cast<int>(q.arrows.size());
  std::vector<Mat> action;
  for (int h = 0; h < g.order; ++h) {
    Mat m(na, na);
    for (int k = 0; k < na; ++k) {
      const auto& a = q.arrows[k];
      int x = right_handed ? g.mul(a.source, h) : g.mul(a.source, g.inv(h));
      int y = right_handed ? g.mul(a.target, h) : g.mul(a.target, g.inv(h));
      m(aidx.at({x, y, a.colour}), k) = 1;
    }
    action.push_back(m);
  }
  return make_triple(g, ramification, marked_classes, action, right_handed);
}

TripleCrossed triple_to_crossed(const HopfQuiverTriple& t) {
  const FiniteGroup& g = t.group;
  auto cd = conjugacy_data(g);
  auto aidx = arrow_index(t.quiver);
  const int na = static_cast<int>(t.quiver.arrows.size());
  // Module basis (g, i), lexicographic.
  std::vector<std::pair<int, int>> basis;
  std::map<std::pair<int, int>, int> midx;
  for (int x = 0; x < g.order; ++x)
    for (int i = 1; i <= t.ramification[cd.class_of(x)]; ++i) {
      midx[{x, i}] = static_cast<int>(basis.size());
      basis.push_back({x, i});
    }
  const int dv = static_cast<int>(basis.size());

  GroupGradedModule gm;
  gm.group = g;
  gm.left_action = !t.right_handed;
  for (const auto& [x, i] : basis) {
    gm.degree.push_back(x);
    gm.labels.push_back("e[" + g.labels[x] + "](" + std::to_string(i) + ")");
  }
  Vec theta(dv, Rat(0));
  for (const auto& [x, i] : basis)
    if (i == 1 && t.marked_classes[cd.class_of(x)] == 1) theta[midx.at({x, i})] = 1;

  if (!t.right_handed) {
    // e_g^{(i)} = sum_x x ->^{(i)} x g; the action of h lands in grade
    // h g h^{-1} with coefficients read off at source e.
    auto evec = [&](int gg, int i) {
      Vec v(na, Rat(0));
      for (int x = 0; x < g.order; ++x) v[aidx.at({x, g.mul(x, gg), i})] = 1;
      return v;
    };
    for (int h = 0; h < g.order; ++h) {
      Mat m(dv, dv);
      for (int c = 0; c < dv; ++c) {
        auto [gg, i] = basis[c];
        Vec img = t.action[h].apply(evec(gg, i));
        int gp = g.conj(h, gg);
        Vec expect(na, Rat(0));
        for (int j = 1; j <= t.ramification[cd.class_of(gp)]; ++j) {
          Rat lam = img[aidx.at({0, gp, j})];
          if (lam != 0) {
            m(midx.at({gp, j}), c) = lam;
            for (int x = 0; x < g.order; ++x) expect[aidx.at({x, g.mul(x, gp), j})] += lam;
          }
        }
        if (img != expect) fail("action does not preserve the invariant forms");
      }
      gm.action.push_back(m);
    }
    for (int h = 0; h < g.order; ++h)
      if (gm.action[h].apply(theta) != theta) fail("theta is not invariant under the action");
  } else {
    // Basis (g, i) <-> the arrow e ->^{(i)} g; the right action of h lands
    // in grade h^{-1} g h via the canonical left identification.
    for (int h = 0; h < g.order; ++h) {
      Mat m(dv, dv);
      for (int c = 0; c < dv; ++c) {
        auto [gg, i] = basis[c];
        Vec img = t.action[h].column(aidx.at({0, gg, i}));
        int gp = g.conj(g.inv(h), gg);
        for (int j = 1; j <= t.ramification[cd.class_of(gp)]; ++j)
          m(midx.at({gp, j}), c) = img[aidx.at({h, g.mul(gg, h), j})];
      }
      gm.action.push_back(m);
    }
    if (!is_right_invariant_dual(crossed_from_graded(gm), theta))
      fail("theta* is not right-invariant");
  }
  return {gm, theta};
}

TripleFromCrossed crossed_to_triple(const GroupGradedModule& gm,
                                    const std::vector<std::pair<int, Vec>>& class_theta) {
  if (!gm.left_action) fail("crossed_to_triple expects a left G-module (k(G) case)");
  crossed_from_graded(gm);  // validates grading/action compatibility
  const FiniteGroup& g = gm.group;
  auto cd = conjugacy_data(g);
  const int nc = static_cast<int>(cd.classes.size());
  const int dv = static_cast<int>(gm.degree.size());

  std::vector<std::vector<int>> grade(g.order);
  for (int k = 0; k < dv; ++k) grade[gm.degree[k]].push_back(k);
  std::vector<int> ramification(nc, 0), marked(nc, 0);
  for (int c = 0; c < nc; ++c) {
    ramification[c] = static_cast<int>(grade[cd.reps[c]].size());
    for (int x : cd.classes[c])
      if (static_cast<int>(grade[x].size()) != ramification[c])
        fail("grade dimensions are not constant on conjugacy classes");
  }

  std::map<int, Vec> theta_of;  // per group element in barC classes
  for (const auto& [c, th] : class_theta) {
    int ci = cd.class_of(c);
    if (cd.reps[ci] != c) fail("class forms must be given at class representatives");
    if (static_cast<int>(th.size()) != dv) fail("class form has wrong dimension");
    for (int k = 0; k < dv; ++k)
      if (th[k] != 0 && gm.degree[k] != c) fail("class form not supported in its grade");
    for (int h : cd.centralizers[ci])
      if (gm.action[h].apply(th) != th) fail("class form is not centralizer-invariant");
    if (is_zero(th)) continue;
    if (c == 0) fail("the identity class cannot carry a nonzero form");
    marked[ci] = 1;
    for (int x : cd.classes[ci]) {
      int h = 0;
      while (g.conj(h, c) != x) ++h;
      theta_of[x] = gm.action[h].apply(th);
    }
  }

  // Bases per grade with e_x^{(1)} = theta_x on marked classes.
  std::vector<Vec> cols(dv);
  std::map<std::pair<int, int>, int> midx;
  {
    int pos = 0;
    for (int x = 0; x < g.order; ++x) {
      std::vector<Vec> chosen;
      if (theta_of.count(x)) chosen.push_back(theta_of.at(x));
      for (int k : grade[x]) {
        if (static_cast<int>(chosen.size()) == static_cast<int>(grade[x].size())) break;
        std::vector<Vec> trial = chosen;
        trial.push_back(unit_vec(dv, k));
        if (rank(Mat::from_cols(trial, dv)) == static_cast<int>(trial.size()))
          chosen = std::move(trial);
      }
      if (static_cast<int>(chosen.size()) != static_cast<int>(grade[x].size()))
        fail("could not complete the grade basis");
      for (size_t i = 0; i < chosen.size(); ++i) {
        midx[{x, static_cast<int>(i) + 1}] = pos;
        cols[pos++] = chosen[i];
      }
    }
  }
  Mat b = Mat::from_cols(cols, dv);
  Mat basis_change = left_inverse(b);  // e-basis coords <- gm coords

  Quiver q = hopf_quiver(g, ramification, marked);
  auto aidx = arrow_index(q);
  const int na = static_cast<int>(q.arrows.size());
  std::vector<Mat> action;
  for (int h = 0; h < g.order; ++h) {
    Mat m(na, na);
    for (int k = 0; k < na; ++k) {
      const auto& a = q.arrows[k];
      int gg = g.mul(g.inv(a.source), a.target);
      int gp = g.conj(h, gg);
      Vec lam = basis_change.apply(gm.action[h].apply(cols[midx.at({gg, a.colour})]));
      int xs = g.mul(a.source, g.inv(h));
      int ys = g.mul(a.target, g.inv(h));
      for (int j = 1; j <= static_cast<int>(grade[gp].size()); ++j)
        m(aidx.at({xs, ys, j}), k) = lam[midx.at({gp, j})];
    }
    action.push_back(m);
  }
  TripleFromCrossed out;
  out.triple = make_triple(g, ramification, marked, action, false);
  out.basis_change = basis_change;

  // Round trip: the chosen basis change is a crossed isomorphism onto the
  // invariant-forms module and matches theta.
  TripleCrossed back = triple_to_crossed(out.triple);
  auto rep = verify_morphism(basis_change, crossed_from_graded(gm),
                             crossed_from_graded(back.module));
  Vec theta_total(dv, Rat(0));
  for (const auto& [x, th] : theta_of) theta_total = add(theta_total, th);
  if (!rep.all_pass() || basis_change.apply(theta_total) != back.theta)
    throw std::logic_error("quiver: crossed_to_triple round trip failed");
  return out;
}

namespace {

// Shared path-presentation scaffolding: enumeration, labels, transport onto
// A (x) V^n coordinates through the dictionary path |-> start (x) letters.
struct PathScaffold {
  PathData pd;
  std::vector<int> dims;
  std::vector<Mat> transport;
  std::map<std::pair<int, int>, int> midx;  // (g, colour) -> module index
  int dv = 0;
};

PathScaffold path_scaffold(const HopfQuiverTriple& t, int cap) {
  PathScaffold s;
  s.pd = enumerate_paths(t.quiver, cap);
  auto cd = conjugacy_data(t.group);
  for (int x = 0; x < t.group.order; ++x)
    for (int i = 1; i <= t.ramification[cd.class_of(x)]; ++i) s.midx[{x, i}] = s.dv++;
  for (int n = 0; n <= cap; ++n) {
    const auto& paths = s.pd.paths[n];
    int dim = static_cast<int>(paths.size());
    s.dims.push_back(dim);
    Mat tr(t.group.order * ipow(s.dv, n), dim);
    for (int p = 0; p < dim; ++p) {
      int idx = paths[p].start;
      int prev = paths[p].start;
      for (int k : paths[p].arrows) {
        const auto& a = t.quiver.arrows[k];
        idx = idx * s.dv + s.midx.at({t.group.mul(t.group.inv(prev), a.target), a.colour});
        prev = a.target;
      }
      tr(idx, p) = 1;
    }
    s.transport.push_back(tr);
  }
  // Hopf-quiver arrows are sorted by source, so length-1 paths coincide with
  // arrows index for index; degree-1 matrices below rely on that.
  for (int k = 0; k < static_cast<int>(t.quiver.arrows.size()) && cap >= 1; ++k)
    if (s.pd.paths[1][k].arrows[0] != k)
      throw std::logic_error("quiver: arrow/path enumeration mismatch");
  return s;
}

std::vector<std::vector<std::string>> path_labels(const HopfQuiverTriple& t,
                                                  const PathData& pd, int cap) {
  std::vector<std::vector<std::string>> labels(cap + 1);
  for (int n = 0; n <= cap; ++n)
    for (const auto& p : pd.paths[n]) labels[n].push_back(path_label(t.group, t.quiver, p));
  return labels;
}

// Concatenation product in path coordinates (degree 0 = vertex functions).
std::vector<std::vector<Mat>> concat_product(const PathData& pd, int cap) {
  std::vector<std::vector<Mat>> prod(cap + 1);
  for (int p = 0; p <= cap; ++p) {
    prod[p].resize(cap - p + 1);
    for (int q = 0; p + q <= cap; ++q) {
      const auto& lp = pd.paths[p];
      const auto& lq = pd.paths[q];
      const auto& ln = pd.paths[p + q];
      Mat m(static_cast<int>(ln.size()), static_cast<int>(lp.size() * lq.size()));
      for (int ip = 0; ip < static_cast<int>(lp.size()); ++ip)
        for (int iq = 0; iq < static_cast<int>(lq.size()); ++iq) {
          if (lp[ip].target != lq[iq].start) continue;
          int idx = ip;
          for (size_t j = 0; j < lq[iq].arrows.size(); ++j)
            idx = pd.ext[p + static_cast<int>(j) + 1].at({idx, lq[iq].arrows[j]});
          m(idx, ip * static_cast<int>(lq.size()) + iq) = 1;
        }
      prod[p][q] = m;
    }
  }
  return prod;
}

}  // namespace

PathSuperHopf path_super_hopf(const HopfQuiverTriple& t, int cap) {
  if (t.right_handed) fail("path_super_hopf expects a left-handed triple");
  const FiniteGroup& g = t.group;
  TripleCrossed tc = triple_to_crossed(t);
  auto v = crossed_from_graded(tc.module);
  auto a = function_algebra(g);
  GradedSuperHopf omega = bosonise(a, tensor_hopf(v, cap));

  PathScaffold s = path_scaffold(t, cap);
  auto aidx = arrow_index(t.quiver);
  const int na = static_cast<int>(t.quiver.arrows.size());

  PathPresentation pp;
  pp.dims = s.dims;
  pp.labels = path_labels(t, s.pd, cap);
  pp.transport = s.transport;
  pp.product = concat_product(s.pd, cap);

  // Coproduct: degree 0 is k(G); degree 1 is Delta_L + Delta_R on arrows;
  // higher degrees by multiplicative extension over the last letter with the
  // super sign (u (x) v)(s (x) t) = (-1)^{|v||s|} us (x) vt.
  pp.coproduct.assign(cap + 1, {});
  {
    Mat d00(g.order * g.order, g.order);
    for (int x = 0; x < g.order; ++x)
      for (int h = 0; h < g.order; ++h) d00(g.mul(x, g.inv(h)) * g.order + h, x) = 1;
    pp.coproduct[0] = {d00};
  }
  if (cap >= 1) {
    const int d1 = pp.dims[1];
    // Degree-1 paths are in arrow-index order by construction.
    Mat dl(g.order * d1, d1), dr(d1 * g.order, d1);
    for (int k = 0; k < na; ++k) {
      const auto& ar = t.quiver.arrows[k];
      for (int h = 0; h < g.order; ++h) {
        int img = aidx.at({g.mul(g.inv(h), ar.source), g.mul(g.inv(h), ar.target), ar.colour});
        dl(h * d1 + img, k) = 1;  // Delta_L = sum_h delta_h (x) h^{-1} arrow
        Vec hv = t.action[h].column(k);  // Delta_R = sum_h h * arrow (x) delta_h
        for (int j = 0; j < na; ++j)
          if (hv[j] != 0) dr(j * g.order + h, k) += hv[j];
      }
    }
    pp.coproduct[1] = {dl, dr};
  }
  for (int n = 2; n <= cap; ++n) {
    pp.coproduct[n].resize(n + 1);
    for (int r = 0; r <= n; ++r)
      pp.coproduct[n][r] = Mat(pp.dims[r] * pp.dims[n - r], pp.dims[n]);
    for (int p = 0; p < pp.dims[n]; ++p) {
      const auto& path = s.pd.paths[n][p];
      int last = path.arrows.back();
      const auto& la = t.quiver.arrows[last];
      // index of the degree n-1 prefix
      int prev = -1;
      {
        int idx = path.start;
        for (size_t k = 0; k + 1 < path.arrows.size(); ++k)
          idx = s.pd.ext[static_cast<int>(k) + 1].at({idx, path.arrows[k]});
        prev = idx;
      }
      for (int r = 0; r <= n; ++r) {
        Mat& out = pp.coproduct[n][r];
        if (r <= n - 1) {
          // (u (x) v)(delta_h (x) h^{-1}.arrow): h = target(u), no sign.
          const Mat& src = pp.coproduct[n - 1][r];
          for (int u = 0; u < pp.dims[r]; ++u) {
            int h = s.pd.paths[r][u].target;
            int ak = aidx.at(
                {g.mul(g.inv(h), la.source), g.mul(g.inv(h), la.target), la.colour});
            for (int w = 0; w < pp.dims[n - 1 - r]; ++w) {
              const Rat& c = src(u * pp.dims[n - 1 - r] + w, prev);
              if (c == 0) continue;
              if (s.pd.paths[n - 1 - r][w].target != t.quiver.arrows[ak].source)
                throw std::logic_error("quiver: path coproduct lost composability");
              int wn = s.pd.ext[n - r].at({w, ak});
              out(u * pp.dims[n - r] + wn, p) += c;
            }
          }
        }
        if (r >= 1) {
          // (u (x) v)(h*arrow (x) delta_h): h = target(v), sign (-1)^{n-r}.
          const Mat& src = pp.coproduct[n - 1][r - 1];
          Rat sign = ((n - r) % 2 == 0) ? Rat(1) : Rat(-1);
          for (int w = 0; w < pp.dims[n - r]; ++w) {
            int h = s.pd.paths[n - r][w].target;
            Vec hv = t.action[h].column(last);
            for (int u = 0; u < pp.dims[r - 1]; ++u) {
              const Rat& c = src(u * pp.dims[n - r] + w, prev);
              if (c == 0) continue;
              for (int j = 0; j < na; ++j) {
                if (hv[j] == 0) continue;
                if (t.quiver.arrows[j].source != s.pd.paths[r - 1][u].target)
                  throw std::logic_error("quiver: path coproduct lost composability");
                int un = s.pd.ext[r].at({u, j});
                out(un * pp.dims[n - r] + w, p) += sign * c * hv[j];
              }
            }
          }
        }
      }
    }
  }

  // Transport is a graded super-bialgebra isomorphism.
  for (int p = 0; p <= cap; ++p)
    for (int q = 0; p + q <= cap; ++q)
      if (pp.transport[p + q] * pp.product[p][q] !=
          mul_kron(omega.product[p][q], pp.transport[p], pp.transport[q]))
        throw std::logic_error("quiver: path product transport failed at (" +
                               std::to_string(p) + "," + std::to_string(q) + ")");
  for (int n = 0; n <= cap; ++n)
    for (int r = 0; r <= n; ++r)
      if (kron_mul(pp.transport[r], pp.transport[n - r], pp.coproduct[n][r]) !=
          omega.coproduct[n][r] * pp.transport[n])
        throw std::logic_error("quiver: path coproduct transport failed at (" +
                               std::to_string(n) + "," + std::to_string(r) + ")");
  return {omega, pp};
}

OmegaThetaPath omega_theta_path(const HopfQuiverTriple& t, int cap,
                                const std::optional<Vec>& theta_star_coeffs) {
  if (t.right_handed) fail("omega_theta_path expects a left-handed triple");
  PathSuperHopf free = path_super_hopf(t, cap);
  TripleCrossed tc = triple_to_crossed(t);
  auto v = crossed_from_graded(tc.module);
  auto a = function_algebra(t.group);
  const int dv = v.dim;

  OmegaThetaPath out;
  out.paths = free.paths;
  if (is_zero(tc.theta)) {
    // Empty barC: theta = 0, no quotient, d = 0.
    out.omega = bosonise(a, tensor_hopf(v, cap), Mat::zero(dv, a->dim), {});
  } else {
    // omega(delta_x) = theta < delta_x = grade-x component of theta.
    Mat om(dv, a->dim - 1);
    for (int x = 1; x < t.group.order; ++x)
      for (int k = 0; k < dv; ++k)
        if (tc.module.degree[k] == x) om(k, x - 1) = tc.theta[k];
    FirstOrderCalculus c = first_order(a, v, om);
    c.theta = tc.theta;
    out.omega = inner_exterior(c, Flavor::universal_theta, cap);
  }

  if (theta_star_coeffs) {
    auto cd = conjugacy_data(t.group);
    const int re = t.ramification[cd.class_of(0)];
    if (static_cast<int>(theta_star_coeffs->size()) != re)
      fail("theta* needs one coefficient per colour at the identity");
    // Module indices at grade e come first (basis is lexicographic in g).
    // lambda_{ij}(x): x acts on Lambda^1_e by e^{(i)} -> sum_j lambda_{ij} e^{(j)}.
    Mat i1(a->dim - 1, dv);
    for (int i = 0; i < re; ++i)
      for (int x = 1; x < t.group.order; ++x) {
        Rat val = -(*theta_star_coeffs)[i];
        for (int j = 0; j < re; ++j) val += tc.module.action[x](j, i) * (*theta_star_coeffs)[j];
        i1(x - 1, i) = val;
      }
    if (is_zero(tc.theta)) {
      Codifferential cod = first_order_codiff(a, v, i1);
      GradedSuperHopf ext = extend_codiff_tensor(cod, cap);
      ext.d.clear();
      for (int n = 0; n < cap; ++n) ext.d.push_back(Mat::zero(ext.dims[n + 1], ext.dims[n]));
      ext.omega_tilde = Mat::zero(dv, a->dim);
      out.omega = ext;
    } else {
      out.omega = augment_universal(out.omega, i1);
    }
  }

  for (int n = 0; n <= cap; ++n)
    out.quotient.push_back(kron(Mat::identity(a->dim), out.omega.lambda.proj[n]) *
                           out.paths.transport[n]);
  return out;
}

RightHandedCodiff right_handed_codiff(const FiniteGroup& g, const std::vector<int>& ramification,
                                      const std::vector<int>& marked_classes,
                                      const std::vector<Mat>& action, int cap) {
  RightHandedCodiff out;
  out.triple = make_triple(g, ramification, marked_classes, action, true);
  const HopfQuiverTriple& t = out.triple;
  TripleCrossed tc = triple_to_crossed(t);
  auto v = crossed_from_graded(tc.module);
  auto h = group_algebra(g);
  const int dv = v.dim;

  // Coinner first-order codifferential i(eta) = <theta*, eta>(|eta| - 1).
  Mat i1(h->dim - 1, dv);
  for (int k = 0; k < dv; ++k)
    if (tc.theta[k] != 0) i1(tc.module.degree[k] - 1, k) = tc.theta[k];
  out.cod = first_order_codiff(h, v, i1);
  out.cod.theta_star = tc.theta;

  out.sub = coinner_subshuffle(h, v, tc.theta, std::nullopt, cap);
  out.shuffle = bosonise(h, shuffle_hopf(v, cap));

  PathScaffold s = path_scaffold(t, cap);
  PathPresentation pp;
  pp.dims = s.dims;
  pp.labels = path_labels(t, s.pd, cap);
  pp.transport = s.transport;

  // Deconcatenation coproduct, directly in path coordinates.
  pp.coproduct.assign(cap + 1, {});
  for (int n = 0; n <= cap; ++n) {
    pp.coproduct[n].resize(n + 1);
    for (int r = 0; r <= n; ++r) {
      Mat m(pp.dims[r] * pp.dims[n - r], pp.dims[n]);
      for (int p = 0; p < pp.dims[n]; ++p) {
        const auto& path = s.pd.paths[n][p];
        int u = path.start;  // path index of the length-r prefix
        for (int k = 0; k < r; ++k) u = s.pd.ext[k + 1].at({u, path.arrows[k]});
        int w = (r == 0) ? path.start : t.quiver.arrows[path.arrows[r - 1]].target;
        for (int k = r; k < n; ++k) w = s.pd.ext[k - r + 1].at({w, path.arrows[k]});
        m(u * pp.dims[n - r] + w, p) = 1;
      }
      pp.coproduct[n][r] = m;
    }
  }
  for (int n = 0; n <= cap; ++n)
    for (int r = 0; r <= n; ++r)
      if (kron_mul(pp.transport[r], pp.transport[n - r], pp.coproduct[n][r]) !=
          out.shuffle.coproduct[n][r] * pp.transport[n])
        throw std::logic_error("quiver: deconcatenation transport failed at (" +
                               std::to_string(n) + "," + std::to_string(r) + ")");

  // Quantum shuffle product, transported through the (permutation) maps.
  pp.product.assign(cap + 1, {});
  for (int p = 0; p <= cap; ++p) {
    pp.product[p].resize(cap - p + 1);
    for (int q = 0; p + q <= cap; ++q)
      pp.product[p][q] = pp.transport[p + q].transpose() *
                         mul_kron(out.shuffle.product[p][q], pp.transport[p], pp.transport[q]);
  }

  // Left multiplication by a group element is the canonical path shift.
  auto aidx = arrow_index(t.quiver);
  for (int q = 0; q <= cap; ++q) {
    Mat expect(pp.dims[q], g.order * pp.dims[q]);
    for (int x = 0; x < g.order; ++x)
      for (int ip = 0; ip < pp.dims[q]; ++ip) {
        const auto& path = s.pd.paths[q][ip];
        int idx = g.mul(x, path.start);
        for (size_t j = 0; j < path.arrows.size(); ++j) {
          const auto& a = t.quiver.arrows[path.arrows[j]];
          idx = s.pd.ext[static_cast<int>(j) + 1].at(
              {idx, aidx.at({g.mul(x, a.source), g.mul(x, a.target), a.colour})});
        }
        expect(idx, x * pp.dims[q] + ip) = 1;
      }
    if (pp.product[0][q] != expect)
      throw std::logic_error("quiver: left shift product failed at degree " + std::to_string(q));
  }

  // Degree (1,1): alpha.beta = [alpha.s(beta)][t(alpha).beta]
  //                            - [s(alpha).beta][alpha.t(beta)].
  if (cap >= 2) {
    const int na = static_cast<int>(t.quiver.arrows.size());
    Mat f(pp.dims[2], pp.dims[1] * pp.dims[1]);
    for (int ka = 0; ka < na; ++ka) {
      const auto& al = t.quiver.arrows[ka];
      for (int kb = 0; kb < na; ++kb) {
        const auto& be = t.quiver.arrows[kb];
        int colidx = ka * pp.dims[1] + kb;
        Vec r1 = t.action[be.source].column(ka);  // alpha . s(beta)
        int leg1 = aidx.at({g.mul(al.target, be.source), g.mul(al.target, be.target),
                            be.colour});  // t(alpha) . beta
        for (int j = 0; j < na; ++j)
          if (r1[j] != 0) f(s.pd.ext[2].at({j, leg1}), colidx) += r1[j];
        int leg2 = aidx.at({g.mul(al.source, be.source), g.mul(al.source, be.target),
                            be.colour});  // s(alpha) . beta
        Vec r2 = t.action[be.target].column(ka);  // alpha . t(beta)
        for (int j = 0; j < na; ++j)
          if (r2[j] != 0) f(s.pd.ext[2].at({leg2, j}), colidx) -= r2[j];
      }
    }
    if (f != pp.product[1][1])
      throw std::logic_error("quiver: quantum shuffle arrow product failed");
  }

  out.paths = pp;
  return out;
}

}  // namespace hq
