#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <picardium/trivialise.hpp>

using namespace picardium;

namespace {

FiniteGroup V4() { return FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)); }

long hom_count(const FiniteGroup& G, long N) {
  // |Hom(G, Z/N)| = number of normalized 1-cocycles
  std::vector<std::vector<long>> rows;
  int m = G.order();
  for (int g = 1; g < m; ++g)
    for (int h = 1; h < m; ++h) {
      std::vector<long> r(static_cast<size_t>(m - 1), 0);
      r[static_cast<size_t>(h - 1)] += 1;
      r[static_cast<size_t>(g - 1)] += 1;
      int gh = G.op(g, h);
      if (gh != 0) r[static_cast<size_t>(gh - 1)] -= 1;
      rows.push_back(std::move(r));
    }
  ModSolutions s = solve_mod(rows, std::vector<long>(rows.size(), 0), N);
  return static_cast<long>(s.count().get_si());
}

}  // namespace

TEST_CASE("group constructors validate their tables") {
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  CHECK(z6.order() == 6);
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.element_order(2) == 3);
  CHECK(z6.exponent() == 6);
  CHECK(z6.is_abelian());
  FiniteGroup v4 = V4();
  CHECK(v4.exponent() == 2);
  CHECK_THROWS(FiniteGroup::from_table({{0, 1}, {1, 1}}, "bad"));
  CHECK_THROWS(FiniteGroup::from_table({{1, 0}, {0, 1}}, "bad-identity"));
  // subgroup {0,2} of Z4 has intrinsic table Z2
  SubgroupEmbedding h = SubgroupEmbedding::from_subset(FiniteGroup::cyclic(4), {0, 2});
  CHECK(h.sub.order() == 2);
  CHECK(h.ambient_of(1) == 2);
  CHECK_THROWS(SubgroupEmbedding::from_subset(FiniteGroup::cyclic(4), {0, 1}));
}

TEST_CASE("coboundary of the sign cochain on Z/2 is trivial") {
  // omega(g,h) = zeta_2^{g h}; alternating-sum exponent at (1,1,1) is
  // 1 - 0 + 0 - 1 = 0, so d(omega) = 1 identically
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  Cochain w = Cochain::zero(z2, 2, 2);
  w.set({1, 1}, 1);
  CHECK(w.is_normalized());
  Cochain dw = coboundary(w);
  CHECK(dw.at({1, 1, 1}) == 0);
  CHECK(dw.is_zero());
}

TEST_CASE("standard cyclic cocycles are normalized 3-cocycles") {
  for (long n = 2; n <= 6; ++n)
    for (long k = 0; k < n; ++k) {
      Cochain psi = standard_cyclic_cocycle(n, k);
      CHECK(psi.N == n * n);
      CHECK(is_normalized_cocycle(psi));
    }
  // frozen value: psi_1 on Z/4 at (2,2,2) is zeta_16^8 = -1
  Cochain psi = standard_cyclic_cocycle(4, 1);
  CHECK(psi.at({2, 2, 2}) == 8);
  CHECK(psi.value({2, 2, 2}) == -Cyc::one());
  // psi_2 on Z/4 restricted to {0,2} is trivial
  Cochain psi2 = standard_cyclic_cocycle(4, 2);
  SubgroupEmbedding h = SubgroupEmbedding::from_subset(FiniteGroup::cyclic(4), {0, 2});
  CHECK(restrict_cochain(psi2, h).is_zero());
  CHECK_FALSE(restrict_cochain(psi, h).is_zero());
}

TEST_CASE("coboundaries are cocycles (random sweep)") {
  for (const FiniteGroup& G : {FiniteGroup::cyclic(4), V4(), FiniteGroup::cyclic(3)}) {
    long N = 6;
    Cochain w = Cochain::zero(G, 2, N);
    long seed = 7;
    for (int g = 1; g < G.order(); ++g)
      for (int h = 1; h < G.order(); ++h) {
        seed = (seed * 31 + 17) % 101;
        w.set({g, h}, seed % N);
      }
    CHECK(is_normalized_cocycle(coboundary(w)));
  }
}

TEST_CASE("Smith normal form reproduces pinned invariants") {
  // [[2,4],[6,8]]: det -8, gcd 2 -> invariants (2, 4)
  SNF s = smith_normal_form({{2, 4}, {6, 8}});
  REQUIRE(s.diag.size() == 2);
  CHECK(s.diag[0] == 2);
  CHECK(s.diag[1] == 4);
  // U*A*V = D check
  IntMat A{{2, 4}, {6, 8}};
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) {
      mpz_class acc = 0;
      for (size_t k = 0; k < 2; ++k)
        for (size_t l = 0; l < 2; ++l) acc += s.U[i][k] * A[k][l] * s.V[l][j];
      CHECK(acc == (i == j ? s.diag[i] : mpz_class(0)));
    }
}

TEST_CASE("solve_mod enumerates exactly the brute-force solution set") {
  // 2x + 4y = 6 (mod 8), 3x + y = 1 (mod 8)
  std::vector<std::vector<long>> A{{2, 4}, {3, 1}};
  std::vector<long> b{6, 1};
  ModSolutions s = solve_mod(A, b, 8);
  std::set<std::vector<long>> brute;
  for (long x = 0; x < 8; ++x)
    for (long y = 0; y < 8; ++y)
      if ((2 * x + 4 * y) % 8 == 6 && (3 * x + y) % 8 == 1) brute.insert({x, y});
  std::set<std::vector<long>> got;
  if (s.solvable) {
    std::vector<long> t(s.gens.size(), 0);
    long total = static_cast<long>(s.count().get_si());
    for (long i = 0; i < total; ++i) {
      got.insert(s.at(t));
      for (long j = static_cast<long>(t.size()) - 1; j >= 0; --j) {
        if (++t[static_cast<size_t>(j)] < s.gen_orders[static_cast<size_t>(j)]) break;
        t[static_cast<size_t>(j)] = 0;
      }
    }
  }
  CHECK(got == brute);
  // and an unsolvable one
  CHECK_FALSE(solve_mod({{2}}, {1}, 4).solvable);
}

TEST_CASE("cohomology groups match known values") {
  CHECK(cohomology_group(FiniteGroup::cyclic(2), 3, 4) == std::vector<long>{2});
  CHECK(cohomology_group(FiniteGroup::cyclic(4), 2, 16) == std::vector<long>{4});
  CHECK(cohomology_group(FiniteGroup::cyclic(3), 2, 9) == std::vector<long>{3});
  CHECK(cohomology_group(FiniteGroup::cyclic(4), 3, 4) == std::vector<long>{4});
  CHECK(cohomology_group(V4(), 2, 2) == std::vector<long>({2, 2, 2}));
}

TEST_CASE("trivialise: cyclic subgroup sweep with exhaustive cross-checks") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  SubgroupEmbedding h2 = SubgroupEmbedding::from_subset(z4, {0, 2});

  SUBCASE("psi_1 restricted to Z/2 in Z/4 is not trivialisable") {
    Trivialisation t = trivialise(standard_cyclic_cocycle(4, 1), h2);
    CHECK_FALSE(t.solvable);
    CHECK(t.stabilized);
  }
  SUBCASE("psi_2 restricted to Z/2 in Z/4 is trivialisable") {
    Trivialisation t = trivialise(standard_cyclic_cocycle(4, 2), h2);
    CHECK(t.solvable);
    CHECK(t.stabilized);
    CHECK(t.Nprime == 16);
    for (const Cochain& w : t.solutions) {
      CHECK(w.is_normalized());
      CHECK(cochain_ratio(coboundary(w), restrict_cochain(standard_cyclic_cocycle(4, 2), h2).lifted(16)).is_zero());
    }
    // on Z/2 every normalized 2-cochain is a cocycle: 16 solutions
    CHECK(t.solution_count == 16);
  }
  SUBCASE("trivial psi on full Z/3: brute-force count") {
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    Trivialisation t = trivialise(Cochain::zero(z3, 3, 1), SubgroupEmbedding::full(z3));
    CHECK(t.solvable);
    CHECK(t.Nprime == 9);
    long brute = 0;
    Cochain w = Cochain::zero(z3, 2, 9);
    for (long a = 0; a < 9; ++a)
      for (long b = 0; b < 9; ++b)
        for (long c = 0; c < 9; ++c)
          for (long d = 0; d < 9; ++d) {
            w.set({1, 1}, a);
            w.set({1, 2}, b);
            w.set({2, 1}, c);
            w.set({2, 2}, d);
            if (coboundary(w).is_zero()) ++brute;
          }
    CHECK(t.solution_count == brute);
    // |Z^2| = |B^2| * |H^2|
    long B2 = 9 * 9 / hom_count(z3, 9);
    CHECK(brute == B2 * 3);
  }
  SUBCASE("trivial psi on full Z/4: count via |B^2| * |H^2|") {
    Trivialisation t = trivialise(Cochain::zero(z4, 3, 1), SubgroupEmbedding::full(z4), false);
    CHECK(t.solvable);
    CHECK(t.Nprime == 16);
    long B2 = 16 * 16 * 16 / hom_count(z4, 16);
    CHECK(t.solution_count == B2 * 4);  // H^2(Z/4, Z/16) = Z/4
  }
}

TEST_CASE("trivialisation classes") {
  SUBCASE("Z/2: all trivialisations of the trivial cocycle are cohomologous") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    Trivialisation t = trivialise(Cochain::zero(z2, 3, 1), SubgroupEmbedding::full(z2));
    CHECK(t.solution_count == 4);
    auto classes = trivialisation_classes(t.solutions, t.Nsecond);
    CHECK(classes.size() == 1);
  }
  SUBCASE("Z/3: one class") {
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    Trivialisation t = trivialise(Cochain::zero(z3, 3, 1), SubgroupEmbedding::full(z3));
    auto classes = trivialisation_classes(t.solutions, t.Nsecond);
    CHECK(classes.size() == 1);
  }
  SUBCASE("V4: two classes, stable under order doubling") {
    FiniteGroup v4 = V4();
    Trivialisation t = trivialise(Cochain::zero(v4, 3, 1), SubgroupEmbedding::full(v4));
    auto classes = trivialisation_classes(t.solutions, t.Nsecond);
    CHECK(classes.size() == 2);
    // class representatives stay inequivalent at the doubled order
    CHECK_FALSE(cochains_cohomologous(t.solutions[classes[0][0]], t.solutions[classes[1][0]],
                                      2 * t.Nsecond));
  }
}
