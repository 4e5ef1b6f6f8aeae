#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <picardium/pointed.hpp>

#include <random>

using namespace picardium;

namespace {

GradedCat scc_cat(long n, long k) {
  return GradedCat(CategoryContext(FiniteGroup::cyclic(static_cast<int>(n)), standard_cyclic_cocycle(n, k)));
}

GradedObject rand_obj(std::mt19937_64& rng, int gorder, long maxmult = 2) {
  GradedObject x;
  for (int g = 0; g < gorder; ++g) {
    long m = static_cast<long>(rng() % static_cast<unsigned long>(maxmult + 1));
    if (m > 0) x.mult[g] = m;
  }
  if (x.mult.empty()) x.mult[0] = 1;
  return x;
}

GradedMorphism rand_mor(std::mt19937_64& rng, GradedCat& c, const GradedObject& x, const GradedObject& y) {
  GradedMorphism f = GradedMorphism::zero(x, y);
  for (auto& [g, blk] : f.blocks)
    for (Cyc& v : blk.a) v = Cyc(static_cast<long>(rng() % 7) - 3);
  return f;
}

}  // namespace

TEST_CASE("pentagon and triangle for twisted associators") {
  std::mt19937_64 rng(42);
  for (auto [n, k] : {std::pair<long, long>{4, 1}, {4, 2}, {3, 1}, {2, 1}}) {
    GradedCat c = scc_cat(n, k);
    for (int trial = 0; trial < 3; ++trial) {
      GradedObject W = rand_obj(rng, static_cast<int>(n)), X = rand_obj(rng, static_cast<int>(n)),
                   Y = rand_obj(rng, static_cast<int>(n)), Z = rand_obj(rng, static_cast<int>(n));
      auto lhs = pipe(c, {c.tensor(c.assoc(W, X, Y), c.id(Z)),
                          c.assoc(W, c.tensor_obj(X, Y), Z),
                          c.tensor(c.id(W), c.assoc(X, Y, Z))});
      auto rhs = pipe(c, {c.assoc(c.tensor_obj(W, X), Y, Z), c.assoc(W, X, c.tensor_obj(Y, Z))});
      CHECK(c.eq(lhs, rhs));
      // triangle (strict unitors): associator with middle unit is identity
      CHECK(c.eq(c.assoc(X, c.unit(), Y), c.id(c.tensor_obj(X, Y))));
      // naturality of the associator
      GradedObject X2 = rand_obj(rng, static_cast<int>(n));
      auto f = rand_mor(rng, c, X, X2);
      auto nat1 = c.compose(c.assoc(X2, Y, Z), c.tensor(c.tensor(f, c.id(Y)), c.id(Z)));
      auto nat2 = c.compose(c.tensor(f, c.id(c.tensor_obj(Y, Z))), c.assoc(X, Y, Z));
      CHECK(c.eq(nat1, nat2));
    }
  }
}

TEST_CASE("tensor is a bifunctor") {
  std::mt19937_64 rng(7);
  GradedCat c = scc_cat(4, 1);
  GradedObject X = rand_obj(rng, 4), Y = rand_obj(rng, 4), Z = rand_obj(rng, 4), W = rand_obj(rng, 4);
  auto f1 = rand_mor(rng, c, X, Y), f2 = rand_mor(rng, c, Y, Z);
  auto g1 = rand_mor(rng, c, Z, W), g2 = rand_mor(rng, c, W, X);
  CHECK(c.eq(c.tensor(c.compose(f2, f1), c.compose(g2, g1)),
             c.compose(c.tensor(f2, g2), c.tensor(f1, g1))));
  CHECK(c.eq(c.tensor(c.id(X), c.id(Y)), c.id(c.tensor_obj(X, Y))));
}

TEST_CASE("snake identities for both duality pairs") {
  std::mt19937_64 rng(99);
  for (auto [n, k] : {std::pair<long, long>{4, 1}, {4, 3}, {3, 2}}) {
    GradedCat c = scc_cat(n, k);
    for (int trial = 0; trial < 3; ++trial) {
      GradedObject X = rand_obj(rng, static_cast<int>(n));
      GradedObject Xs = c.dual(X);
      auto z1 = pipe(c, {c.lunit_inv(X), c.tensor(c.coev(X), c.id(X)), c.assoc(X, Xs, X),
                         c.tensor(c.id(X), c.ev(X)), c.runit(X)});
      CHECK(c.eq(z1, c.id(X)));
      auto z2 = pipe(c, {c.runit_inv(Xs), c.tensor(c.id(Xs), c.coev(X)), c.assoc_inv(Xs, X, Xs),
                         c.tensor(c.ev(X), c.id(Xs)), c.lunit(Xs)});
      CHECK(c.eq(z2, c.id(Xs)));
      auto z3 = pipe(c, {c.runit_inv(X), c.tensor(c.id(X), c.coev2(X)), c.assoc_inv(X, Xs, X),
                         c.tensor(c.ev2(X), c.id(X)), c.lunit(X)});
      CHECK(c.eq(z3, c.id(X)));
      auto z4 = pipe(c, {c.lunit_inv(Xs), c.tensor(c.coev2(X), c.id(Xs)), c.assoc(Xs, X, Xs),
                         c.tensor(c.id(Xs), c.ev2(X)), c.runit(Xs)});
      CHECK(c.eq(z4, c.id(Xs)));
    }
  }
}

TEST_CASE("categorical dimensions of the simples") {
  // dim_l(L_g) = psi(g, g^-1, g); for the standard cyclic cocycle this is
  // zeta_n^{k g}
  for (long n : {2L, 3L, 4L, 6L})
    for (long k = 0; k < n; ++k) {
      GradedCat c = scc_cat(n, k);
      for (int g = 0; g < n; ++g) {
        Cyc dl = dim_left(c, GradedObject::simple(g));
        Cyc dr = dim_right(c, GradedObject::simple(g));
        CHECK(dl == Cyc::root(n, k * g));
        CHECK(dr == dl.inverse());
        CHECK(dl == c.ctx.psi_val(g, c.ctx.G.inv[static_cast<size_t>(g)], g));
      }
    }
  // admissible set of psi_2 on Z/4 is {0, 2}
  GradedCat c42 = scc_cat(4, 2);
  CHECK(picard_data(c42).admissible == std::vector<int>({0, 2}));
  GradedCat c41 = scc_cat(4, 1);
  CHECK(picard_data(c41).admissible == std::vector<int>({0}));
}

TEST_CASE("trace pairing and dual functoriality") {
  std::mt19937_64 rng(123);
  GradedCat c = scc_cat(4, 1);
  for (int trial = 0; trial < 5; ++trial) {
    GradedObject X = rand_obj(rng, 4);
    auto f = rand_mor(rng, c, X, X);
    CHECK(trace_left(c, f) == trace_right(c, dual_mor(c, f)));
    CHECK(trace_right(c, f) == trace_left(c, codual_mor(c, f)));
    CHECK(c.eq(dual_mor(c, c.id(X)), c.id(c.dual(X))));
    GradedObject Y = rand_obj(rng, 4), Z = rand_obj(rng, 4);
    auto g = rand_mor(rng, c, X, Y), h = rand_mor(rng, c, Y, Z);
    CHECK(c.eq(dual_mor(c, c.compose(h, g)), c.compose(dual_mor(c, g), dual_mor(c, h))));
    // the tensor-dual iso is invertible
    CHECK(invert_mor(c, dual_tensor_iso(c, X, Y)).has_value());
  }
}

TEST_CASE("direct sums and idempotent splitting") {
  GradedCat c = scc_cat(4, 1);
  std::vector<GradedObject> parts{GradedObject::simple(0), GradedObject::simple(2), GradedObject::simple(2)};
  auto s = c.direct_sum(parts);
  CHECK(s.total.mult_at(2) == 2);
  for (size_t i = 0; i < parts.size(); ++i) {
    CHECK(c.eq(c.compose(s.proj[i], s.inj[i]), c.id(parts[i])));
    for (size_t j = 0; j < parts.size(); ++j)
      if (i != j) CHECK(c.is_zero_mor(c.compose(s.proj[j], s.inj[i])));
  }
  // split the projector onto the first two summands
  auto P = c.add(c.compose(s.inj[0], s.proj[0]), c.compose(s.inj[1], s.proj[1]));
  auto sp = c.split(P);
  CHECK(sp.im.total_dim() == 2);
  CHECK(c.eq(c.compose(sp.r, sp.e), c.id(sp.im)));
  CHECK(c.eq(c.compose(sp.e, sp.r), P));
  // a non-idempotent is rejected
  auto bad = c.scale(Cyc(2), c.id(s.total));
  CHECK_THROWS(c.split(bad));
}

TEST_CASE("graded pointed family reproduces the restricted cocycle") {
  GradedCat c = scc_cat(4, 2);
  SubgroupEmbedding h = SubgroupEmbedding::from_subset(c.ctx.G, {0, 2});
  auto fam = graded_family(c, h);
  Cochain lam = family_cocycle(c, fam, 16);
  Cochain expect = restrict_cochain(c.ctx.psi, h);
  CHECK(cochain_ratio(lam, expect).is_zero());
  // full group family on psi_1
  GradedCat c2 = scc_cat(3, 1);
  auto fam2 = graded_family(c2, SubgroupEmbedding::full(c2.ctx.G));
  Cochain lam2 = family_cocycle(c2, fam2, 9);
  CHECK(cochain_ratio(lam2, c2.ctx.psi).is_zero());
}

TEST_CASE("hom bases, coordinates, ratios") {
  GradedCat c = scc_cat(4, 1);
  GradedObject X;
  X.mult[1] = 2;
  X.mult[3] = 1;
  auto basis = c.hom_basis(X, X);
  CHECK(basis.size() == 5);  // 2x2 block at grade 1 plus 1x1 at grade 3
  auto f = c.scale(Cyc::root(4, 1), c.id(X));
  auto r = mor_ratio(c, f, c.id(X));
  REQUIRE(r.has_value());
  CHECK(*r == Cyc::root(4, 1));
  CHECK_FALSE(mor_ratio(c, basis[0], c.id(X)).has_value());
  auto inv = invert_mor(c, f);
  REQUIRE(inv.has_value());
  CHECK(c.eq(c.compose(*inv, f), c.id(X)));
}
