#include <picardium/group.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace picardium {

int FiniteGroup::element_order(int g) const {
  int x = g, n = 1;
  while (x != 0) {
    x = op(x, g);
    ++n;
  }
  return n;
}

int FiniteGroup::exponent() const {
  long e = 1;
  for (int g = 0; g < order(); ++g) e = std::lcm(e, static_cast<long>(element_order(g)));
  return static_cast<int>(e);
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("group table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (table[0][static_cast<size_t>(a)] != a || table[static_cast<size_t>(a)][0] != a)
      throw std::invalid_argument("element 0 is not a two-sided identity");
  // Latin square (cancellativity)
  for (int a = 0; a < n; ++a) {
    std::set<int> row(table[static_cast<size_t>(a)].begin(), table[static_cast<size_t>(a)].end());
    std::set<int> col;
    for (int b = 0; b < n; ++b) col.insert(table[static_cast<size_t>(b)][static_cast<size_t>(a)]);
    if (static_cast<int>(row.size()) != n || static_cast<int>(col.size()) != n)
      throw std::invalid_argument("group table is not a Latin square");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[static_cast<size_t>(table[static_cast<size_t>(a)][static_cast<size_t>(b)])][static_cast<size_t>(c)] !=
            table[static_cast<size_t>(a)][static_cast<size_t>(table[static_cast<size_t>(b)][static_cast<size_t>(c)])])
          throw std::invalid_argument("group table is not associative at (" + std::to_string(a) +
                                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
  FiniteGroup g;
  g.name = std::move(name);
  g.mul = std::move(table);
  g.inv.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] == 0) g.inv[static_cast<size_t>(a)] = b;
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  return from_table(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  int na = a.order(), nb = b.order(), n = na * nb;
  auto enc = [nb](int x, int y) { return x * nb + y; };
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          t[static_cast<size_t>(enc(x1, y1))][static_cast<size_t>(enc(x2, y2))] =
              enc(a.op(x1, x2), b.op(y1, y2));
  return from_table(std::move(t), a.name + "x" + b.name);
}

SubgroupEmbedding SubgroupEmbedding::from_subset(const FiniteGroup& G, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements[0] != 0)
    throw std::invalid_argument("subgroup must contain the identity (index 0)");
  std::vector<int> pos(static_cast<size_t>(G.order()), -1);
  for (size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 0 || elements[i] >= G.order())
      throw std::invalid_argument("subgroup element out of range");
    pos[static_cast<size_t>(elements[i])] = static_cast<int>(i);
  }
  int m = static_cast<int>(elements.size());
  std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i) {
    if (pos[static_cast<size_t>(G.inv[static_cast<size_t>(elements[static_cast<size_t>(i)])])] < 0)
      throw std::invalid_argument("subset is not closed under inverse");
    for (int j = 0; j < m; ++j) {
      int p = G.op(elements[static_cast<size_t>(i)], elements[static_cast<size_t>(j)]);
      if (pos[static_cast<size_t>(p)] < 0) throw std::invalid_argument("subset is not closed under product");
      t[static_cast<size_t>(i)][static_cast<size_t>(j)] = pos[static_cast<size_t>(p)];
    }
  }
  SubgroupEmbedding e;
  e.sub = FiniteGroup::from_table(std::move(t), G.name + "-sub" + std::to_string(m));
  e.ambient = G;
  e.embed = std::move(elements);
  return e;
}

SubgroupEmbedding SubgroupEmbedding::full(const FiniteGroup& G) {
  std::vector<int> all(static_cast<size_t>(G.order()));
  for (int i = 0; i < G.order(); ++i) all[static_cast<size_t>(i)] = i;
  return from_subset(G, std::move(all));
}

SubgroupEmbedding SubgroupEmbedding::trivial(const FiniteGroup& G) { return from_subset(G, {0}); }

}  // namespace picardium
