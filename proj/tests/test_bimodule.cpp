#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <picardium/bimodule.hpp>
#include <picardium/pointed.hpp>
#include <picardium/trivialise.hpp>

using namespace picardium;

namespace {

GradedCat scc_cat(long n, long k) {
  return GradedCat(CategoryContext(FiniteGroup::cyclic(static_cast<int>(n)), standard_cyclic_cocycle(n, k)));
}

struct Desk {
  GradedCat c;
  PointedFamily<GradedCat> fam;
  QAlgebra<GradedCat> q;
  Desk()
      : c(scc_cat(4, 2)),
        fam(),
        q() {
    SubgroupEmbedding h = SubgroupEmbedding::from_subset(c.ctx.G, {0, 2});
    auto triv = trivialise(c.ctx.psi, h);
    fam = graded_family(c, h);
    q = build_Q(c, fam, triv.solutions[0]);
  }
};

// the trivial algebra on the tensor unit of any category
template <class C>
AlgebraOb<C> unit_algebra(C& c) {
  AlgebraOb<C> a;
  a.A = c.unit();
  a.m = c.lunit(c.unit());
  a.eta = c.id(c.unit());
  a.delta = c.lunit_inv(c.unit());
  a.eps = c.id(c.unit());
  return a;
}

template <class B>
void check_monoidal_skeleton(B& bc, const std::vector<typename B::Obj>& objs) {
  for (auto& x : objs) {
    REQUIRE(bc.is_object(x));
    // unit constraints
    CHECK(bc.eq(bc.compose(bc.lunit(x), bc.lunit_inv(x)), bc.id(x)));
    CHECK(bc.eq(bc.compose(bc.lunit_inv(x), bc.lunit(x)), bc.id(bc.tensor_obj(bc.unit(), x))));
    CHECK(bc.eq(bc.compose(bc.runit(x), bc.runit_inv(x)), bc.id(x)));
    CHECK(bc.eq(bc.compose(bc.runit_inv(x), bc.runit(x)), bc.id(bc.tensor_obj(x, bc.unit()))));
    CHECK(bc.is_morphism(bc.lunit(x)));
    CHECK(bc.is_morphism(bc.runit(x)));
  }
  for (auto& x : objs)
    for (auto& y : objs) {
      // the tensor projector is idempotent and its parts are intertwiners
      auto P = bc.tensor_projector(x, y);
      CHECK(bc.base.eq(bc.base.compose(P, P), P));
      auto& t = bc.tensor_parts(x, y);
      CHECK(bc.base.eq(bc.base.compose(t.r0, t.e0), bc.base.id(t.ob->carrier)));
      CHECK(bc.base.eq(bc.base.compose(t.e0, t.r0), P));
      REQUIRE(bc.is_object(t.ob));
      CHECK(bc.is_morphism(bc.tensor(bc.id(x), bc.id(y))));
      CHECK(bc.eq(bc.tensor(bc.id(x), bc.id(y)), bc.id(t.ob)));
    }
  // associator: invertible, pentagon, triangle
  auto& x = objs[0];
  auto& y = objs[objs.size() > 1 ? 1 : 0];
  auto& z = objs[objs.size() > 2 ? 2 : 0];
  auto a = bc.assoc(x, y, z);
  auto ai = bc.assoc_inv(x, y, z);
  CHECK(bc.eq(bc.compose(ai, a), bc.id(bc.tensor_obj(bc.tensor_obj(x, y), z))));
  CHECK(bc.eq(bc.compose(a, ai), bc.id(bc.tensor_obj(x, bc.tensor_obj(y, z)))));
  CHECK(bc.is_morphism(a));
  auto lhs = pipe(bc, {bc.tensor(bc.assoc(x, y, z), bc.id(x)),
                       bc.assoc(x, bc.tensor_obj(y, z), x),
                       bc.tensor(bc.id(x), bc.assoc(y, z, x))});
  auto rhs = pipe(bc, {bc.assoc(bc.tensor_obj(x, y), z, x), bc.assoc(x, y, bc.tensor_obj(z, x))});
  CHECK(bc.eq(lhs, rhs));
  auto tri1 = bc.compose(bc.tensor(bc.id(x), bc.lunit(y)), bc.assoc(x, bc.unit(), y));
  auto tri2 = bc.tensor(bc.runit(x), bc.id(y));
  CHECK(bc.eq(tri1, tri2));
}

template <class B>
void check_duality(B& bc, const typename B::Obj& x) {
  auto xs = bc.dual(x);
  REQUIRE(bc.is_object(xs));
  CHECK(bc.is_morphism(bc.ev(x)));
  CHECK(bc.is_morphism(bc.coev(x)));
  CHECK(bc.is_morphism(bc.ev2(x)));
  CHECK(bc.is_morphism(bc.coev2(x)));
  auto z1 = pipe(bc, {bc.lunit_inv(x), bc.tensor(bc.coev(x), bc.id(x)), bc.assoc(x, xs, x),
                      bc.tensor(bc.id(x), bc.ev(x)), bc.runit(x)});
  CHECK(bc.eq(z1, bc.id(x)));
  auto z2 = pipe(bc, {bc.runit_inv(xs), bc.tensor(bc.id(xs), bc.coev(x)), bc.assoc_inv(xs, x, xs),
                      bc.tensor(bc.ev(x), bc.id(xs)), bc.lunit(xs)});
  CHECK(bc.eq(z2, bc.id(xs)));
  auto z3 = pipe(bc, {bc.runit_inv(x), bc.tensor(bc.id(x), bc.coev2(x)), bc.assoc_inv(x, xs, x),
                      bc.tensor(bc.ev2(x), bc.id(x)), bc.lunit(x)});
  CHECK(bc.eq(z3, bc.id(x)));
  auto z4 = pipe(bc, {bc.lunit_inv(xs), bc.tensor(bc.coev2(x), bc.id(xs)), bc.assoc(xs, x, xs),
                      bc.tensor(bc.id(xs), bc.ev2(x)), bc.runit(xs)});
  CHECK(bc.eq(z4, bc.id(xs)));
}

}  // namespace

TEST_CASE("bimodules over the twisted group algebra form a monoidal category with duality") {
  Desk d;
  BimodCat<GradedCat> bc(d.c, d.q.alg);
  CHECK(bc.beta == Cyc::one());
  auto free1 = free_bimodule(bc, GradedObject::simple(1));
  std::vector<BimodCat<GradedCat>::Obj> objs{bc.unit(), free1};
  check_monoidal_skeleton(bc, objs);
  check_duality(bc, bc.unit());
  check_duality(bc, free1);
}

TEST_CASE("bimodules over a non-normalised endomorphism algebra") {
  Desk d;
  auto endo = build_endomorphism_algebra(d.c, d.q.alg.A);
  BimodCat<GradedCat> bc(d.c, endo);
  CHECK(bc.beta == Cyc(2));  // = dim Q, forces the projector normalisation
  // the twisted modules X_h = (Q (x) L_h) (x) Q* are honest bimodules
  std::vector<BimodCat<GradedCat>::Obj> objs{bc.unit()};
  for (size_t h = 0; h < d.fam.L.size(); ++h) {
    auto Lh = d.fam.L[h];
    auto carrier = d.c.tensor_obj(d.c.tensor_obj(d.q.alg.A, Lh), d.c.dual(d.q.alg.A));
    objs.push_back(bc.make_obj(carrier, xh_left_action(d.c, d.q, Lh), xh_right_action(d.c, d.q, Lh)));
  }
  check_monoidal_skeleton(bc, objs);
  for (auto& x : objs) check_duality(bc, x);
}

TEST_CASE("bimodule hom spaces are intertwiner subspaces") {
  Desk d;
  auto endo = build_endomorphism_algebra(d.c, d.q.alg.A);
  BimodCat<GradedCat> bc(d.c, endo);
  // the endomorphism algebra of an absolutely simple algebra is 1-dimensional
  auto hb = bc.hom_basis(bc.unit(), bc.unit());
  REQUIRE(hb.size() == 1);
  CHECK(bc.is_morphism(hb[0]));
  CHECK_NOTHROW(bc.scalar_of(hb[0]));
  // X_0 is isomorphic to the unit bimodule: one-dimensional hom space both ways
  auto L0 = d.fam.L[0];
  auto carrier = d.c.tensor_obj(d.c.tensor_obj(d.q.alg.A, L0), d.c.dual(d.q.alg.A));
  auto X0 = bc.make_obj(carrier, xh_left_action(d.c, d.q, L0), xh_right_action(d.c, d.q, L0));
  CHECK(bc.hom_basis(X0, bc.unit()).size() == 1);
  CHECK(bc.hom_basis(bc.unit(), X0).size() == 1);
  REQUIRE(find_isomorphism(bc, X0, bc.unit()).has_value());
}

TEST_CASE("direct sums and idempotent splitting of bimodules") {
  Desk d;
  BimodCat<GradedCat> bc(d.c, d.q.alg);
  auto x = free_bimodule(bc, GradedObject::simple(1));
  auto s = bc.direct_sum({x, bc.unit()});
  REQUIRE(bc.is_object(s.total));
  for (size_t i = 0; i < 2; ++i) {
    CHECK(bc.is_morphism(s.inj[i]));
    CHECK(bc.is_morphism(s.proj[i]));
    CHECK(bc.eq(bc.compose(s.proj[i], s.inj[i]),
                bc.id(i == 0 ? x : bc.unit())));
  }
  auto P = bc.compose(s.inj[1], s.proj[1]);
  auto sp = bc.split(P);
  REQUIRE(bc.is_object(sp.im));
  CHECK(bc.eq(bc.compose(sp.r, sp.e), bc.id(sp.im)));
  CHECK(bc.eq(bc.compose(sp.e, sp.r), P));
  CHECK(bc.is_morphism(sp.e));
  REQUIRE(find_isomorphism(bc, sp.im, bc.unit()).has_value());
}

TEST_CASE("the bimodule construction nests") {
  Desk d;
  BimodCat<GradedCat> bc(d.c, d.q.alg);
  using B2 = BimodCat<BimodCat<GradedCat>>;
  B2 bc2(bc, unit_algebra(bc));
  CHECK(bc2.beta == Cyc::one());
  auto u = bc2.unit();
  REQUIRE(bc2.is_object(u));
  CHECK(bc2.eq(bc2.compose(bc2.lunit(u), bc2.lunit_inv(u)), bc2.id(u)));
  check_duality(bc2, u);
  CHECK(bc2.hom_basis(u, u).size() == 1);
}
