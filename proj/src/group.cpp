#include "hq/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace hq {

namespace {

constexpr int kMaxOrder = 24;

void validate(const FiniteGroup& g) {
  int n = g.order;
  if (n <= 0) throw std::invalid_argument("group: order must be positive");
  if (n > kMaxOrder) throw std::invalid_argument("group: order above cap 24");
  if (static_cast<int>(g.table.size()) != n) throw std::invalid_argument("group: bad table");
  for (const auto& row : g.table) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group: bad table row");
    for (int x : row)
      if (x < 0 || x >= n) throw std::invalid_argument("group: entry out of range");
  }
  for (int x = 0; x < n; ++x)
    if (g.table[0][x] != x || g.table[x][0] != x)
      throw std::invalid_argument("group: element 0 is not an identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          throw std::invalid_argument("group: not associative");
  for (int a = 0; a < n; ++a) {
    int inv = g.inverse[a];
    if (inv < 0 || g.table[a][inv] != 0 || g.table[inv][a] != 0)
      throw std::invalid_argument("group: missing inverse");
  }
}

std::vector<int> find_inverses(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) inv[a] = b;
  return inv;
}

}  // namespace

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup cyclic_group(int n) {
  FiniteGroup g;
  g.order = n;
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  g.inverse = find_inverses(g.table);
  for (int a = 0; a < n; ++a) g.labels.push_back(a == 0 ? "e" : "g" + std::to_string(a));
  validate(g);
  return g;
}

FiniteGroup dihedral_group(int n) {
  // Elements (i, s): rotation r^i times reflection t^s; (i,s)*(j,t) uses
  // t r^j = r^{-j} t. Index = i + n*s.
  if (n < 1) throw std::invalid_argument("dihedral: n >= 1");
  int N = 2 * n;
  FiniteGroup g;
  g.order = N;
  g.table.assign(N, std::vector<int>(N));
  auto idx = [n](int i, int s) { return ((i % n + n) % n) + n * s; };
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < n; ++j)
        for (int t = 0; t < 2; ++t)
          g.table[idx(i, s)][idx(j, t)] = idx(s ? i - j : i + j, s ^ t);
  g.inverse = find_inverses(g.table);
  for (int k = 0; k < N; ++k)
    g.labels.push_back((k < n ? "r" : "t r") + std::to_string(k % n));
  g.labels[0] = "e";
  validate(g);
  return g;
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("symmetric: 1 <= n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // Identity is the first permutation in lexicographic order already.
  int N = static_cast<int>(perms.size());
  auto find = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  FiniteGroup g;
  g.order = N;
  g.table.assign(N, std::vector<int>(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      std::vector<int> q(n);
      for (int i = 0; i < n; ++i) q[i] = perms[a][perms[b][i]];  // (a*b)(i) = a(b(i))
      g.table[a][b] = find(q);
    }
  g.inverse = find_inverses(g.table);
  for (int a = 0; a < N; ++a) {
    std::string s = "(";
    for (int i = 0; i < n; ++i) s += std::to_string(perms[a][i] + 1);
    g.labels.push_back(s + ")");
  }
  validate(g);
  return g;
}

FiniteGroup explicit_group(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("group: order 0");
  // Locate the identity and relabel so it becomes element 0.
  int e = -1;
  for (int x = 0; x < n && e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < n; ++y)
      if (y >= static_cast<int>(table[x].size()) || table[x][y] != y || table[y][x] != y)
        ok = false;
    if (ok) e = x;
  }
  if (e < 0) throw std::invalid_argument("group: no identity element");
  std::vector<int> perm(n);  // old index -> new index
  for (int x = 0; x < n; ++x) perm[x] = x == e ? 0 : (x < e ? x + 1 : x);
  FiniteGroup g;
  g.order = n;
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = table[a][b];
      if (x < 0 || x >= n) throw std::invalid_argument("group: entry out of range");
      g.table[perm[a]][perm[b]] = perm[x];
    }
  g.inverse = find_inverses(g.table);
  for (int x = 0; x < n; ++x) g.labels.push_back(x == 0 ? "e" : "x" + std::to_string(x));
  validate(g);
  return g;
}

ConjugacyData conjugacy_data(const FiniteGroup& g) {
  ConjugacyData cd;
  std::vector<bool> seen(g.order, false);
  for (int x = 0; x < g.order; ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int h = 0; h < g.order; ++h) {
      int y = g.conj(h, x);
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    cd.classes.push_back(cls);
    cd.reps.push_back(cls.front());
    std::vector<int> cent;
    for (int h = 0; h < g.order; ++h)
      if (g.mul(h, cls.front()) == g.mul(cls.front(), h)) cent.push_back(h);
    cd.centralizers.push_back(cent);
  }
  return cd;
}

int ConjugacyData::class_of(int g) const {
  for (size_t i = 0; i < classes.size(); ++i)
    for (int x : classes[i])
      if (x == g) return static_cast<int>(i);
  return -1;
}

}  // namespace hq
