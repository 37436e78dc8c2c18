#pragma once
// Finite groups as validated multiplication tables. Element 0 is always the
// identity; constructors re-normalize explicit tables if needed.
#include <string>
#include <vector>

namespace hq {

struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[g][h] = g*h
  std::vector<int> inverse;
  std::vector<std::string> labels;

  int mul(int g, int h) const { return table[g][h]; }
  int inv(int g) const { return inverse[g]; }
  int conj(int h, int g) const { return mul(mul(h, g), inv(h)); }  // h g h^-1
  bool is_abelian() const;
};

struct ConjugacyData {
  std::vector<std::vector<int>> classes;     // each sorted; class of identity first
  std::vector<int> reps;                     // minimal element per class
  std::vector<std::vector<int>> centralizers;  // centralizer of each rep
  int class_of(int g) const;
};

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);   // order 2n
FiniteGroup symmetric_group(int n);  // n <= 4
// Validates associativity/identity/inverses; relabels so identity is 0.
FiniteGroup explicit_group(const std::vector<std::vector<int>>& table);

ConjugacyData conjugacy_data(const FiniteGroup& g);

}  // namespace hq
