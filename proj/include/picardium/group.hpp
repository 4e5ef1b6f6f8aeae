#pragma once

// Finite groups as validated multiplication tables (identity at index 0),
// and subgroup embeddings with their own intrinsic tables.

#include <string>
#include <vector>

namespace picardium {

struct FiniteGroup {
  std::string name;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a*b
  std::vector<int> inv;

  int order() const { return static_cast<int>(mul.size()); }
  int op(int a, int b) const { return mul[static_cast<size_t>(a)][static_cast<size_t>(b)]; }

  int element_order(int g) const;
  int exponent() const;
  bool is_abelian() const;

  // validates identity/inverses/associativity/Latin-square; throws on failure
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name);
  static FiniteGroup cyclic(int n);
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
};

struct SubgroupEmbedding {
  FiniteGroup sub;         // intrinsic table of the subgroup
  FiniteGroup ambient;
  std::vector<int> embed;  // sub element index -> ambient element index

  int ambient_of(int h) const { return embed[static_cast<size_t>(h)]; }

  // validates closure under product and inverse; throws on failure
  static SubgroupEmbedding from_subset(const FiniteGroup& G, std::vector<int> elements);
  static SubgroupEmbedding full(const FiniteGroup& G);
  static SubgroupEmbedding trivial(const FiniteGroup& G);
};

}  // namespace picardium
