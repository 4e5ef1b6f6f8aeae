#pragma once

// Frobenius algebra objects in a monoidal category, structural checkers
// (associativity/units/coassociativity/counits/Frobenius/special/symmetric),
// endomorphism algebras X(x)X*, and the convolution calculus on Hom(1, A)
// with inner automorphisms.

#include <picardium/category.hpp>

#include <optional>
#include <string>
#include <vector>

namespace picardium {

template <class C>
struct AlgebraOb {
  typename C::Obj A;
  typename C::Mor m;      // A(x)A -> A
  typename C::Mor eta;    // 1 -> A
  typename C::Mor delta;  // A -> A(x)A
  typename C::Mor eps;    // A -> 1
};

struct AlgebraReport {
  bool associative = false, unital = false;
  bool coassociative = false, counital = false;
  bool frobenius = false;
  bool special = false;     // m o delta is a nonzero multiple of id
  bool symmetric = false;   // the two Frobenius pairings agree
  bool has_beta_A = false, has_beta_1 = false;
  Cyc beta_A, beta_1;       // m o delta = beta_A id, eps o eta = beta_1 id_1
  Cyc dim_l;                // left categorical dimension of the carrier
  bool dim_consistent = false;  // beta_A * beta_1 == dim_l when both exist

  bool is_algebra() const { return associative && unital; }
  bool is_frobenius() const { return is_algebra() && coassociative && counital && frobenius; }
};

template <class C>
bool check_associative(C& c, const AlgebraOb<C>& a) {
  auto lhs = c.compose(a.m, c.tensor(a.m, c.id(a.A)));
  auto rhs = pipe(c, {c.assoc(a.A, a.A, a.A), c.tensor(c.id(a.A), a.m), a.m});
  return c.eq(lhs, rhs);
}

template <class C>
bool check_unital(C& c, const AlgebraOb<C>& a) {
  auto l = pipe(c, {c.lunit_inv(a.A), c.tensor(a.eta, c.id(a.A)), a.m});
  auto r = pipe(c, {c.runit_inv(a.A), c.tensor(c.id(a.A), a.eta), a.m});
  return c.eq(l, c.id(a.A)) && c.eq(r, c.id(a.A));
}

template <class C>
bool check_coassociative(C& c, const AlgebraOb<C>& a) {
  auto lhs = c.compose(c.tensor(a.delta, c.id(a.A)), a.delta);
  auto rhs = pipe(c, {a.delta, c.tensor(c.id(a.A), a.delta), c.assoc_inv(a.A, a.A, a.A)});
  return c.eq(lhs, rhs);
}

template <class C>
bool check_counital(C& c, const AlgebraOb<C>& a) {
  auto l = pipe(c, {a.delta, c.tensor(a.eps, c.id(a.A)), c.lunit(a.A)});
  auto r = pipe(c, {a.delta, c.tensor(c.id(a.A), a.eps), c.runit(a.A)});
  return c.eq(l, c.id(a.A)) && c.eq(r, c.id(a.A));
}

template <class C>
bool check_frobenius_property(C& c, const AlgebraOb<C>& a) {
  auto mid = c.compose(a.delta, a.m);  // A(x)A -> A(x)A
  auto lhs = pipe(c, {c.tensor(c.id(a.A), a.delta), c.assoc_inv(a.A, a.A, a.A), c.tensor(a.m, c.id(a.A))});
  auto rhs = pipe(c, {c.tensor(a.delta, c.id(a.A)), c.assoc(a.A, a.A, a.A), c.tensor(c.id(a.A), a.m)});
  return c.eq(lhs, mid) && c.eq(rhs, mid);
}

// the two pairings A -> A*: Phi1 from (eps o m) with coev, Phi2 with coev2
template <class C>
typename C::Mor frobenius_pairing_1(C& c, const AlgebraOb<C>& a) {
  auto As = c.dual(a.A);
  auto em = c.compose(a.eps, a.m);
  return pipe(c, {c.runit_inv(a.A),
                  c.tensor(c.id(a.A), c.coev(a.A)),
                  c.assoc_inv(a.A, a.A, As),
                  c.tensor(em, c.id(As)),
                  c.lunit(As)});
}
template <class C>
typename C::Mor frobenius_pairing_2(C& c, const AlgebraOb<C>& a) {
  auto As = c.dual(a.A);
  auto em = c.compose(a.eps, a.m);
  return pipe(c, {c.lunit_inv(a.A),
                  c.tensor(c.coev2(a.A), c.id(a.A)),
                  c.assoc(As, a.A, a.A),
                  c.tensor(c.id(As), em),
                  c.runit(As)});
}

template <class C>
AlgebraReport check_algebra(C& c, const AlgebraOb<C>& a) {
  AlgebraReport rep;
  rep.associative = check_associative(c, a);
  rep.unital = check_unital(c, a);
  rep.coassociative = check_coassociative(c, a);
  rep.counital = check_counital(c, a);
  rep.frobenius = check_frobenius_property(c, a);
  if (auto r = mor_ratio(c, c.compose(a.m, a.delta), c.id(a.A))) {
    rep.has_beta_A = true;
    rep.beta_A = *r;
    rep.special = !r->is_zero();
  }
  {
    Cyc b1 = c.scalar_of(c.compose(a.eps, a.eta));
    rep.has_beta_1 = true;
    rep.beta_1 = b1;
  }
  rep.symmetric = c.eq(frobenius_pairing_1(c, a), frobenius_pairing_2(c, a));
  rep.dim_l = dim_left(c, a.A);
  if (rep.has_beta_A && rep.has_beta_1) rep.dim_consistent = (rep.beta_A * rep.beta_1 == rep.dim_l);
  return rep;
}

// internal endomorphism algebra X(x)X* (Frobenius, beta_A = dim_l X, beta_1 = dim_r X)
template <class C>
AlgebraOb<C> build_endomorphism_algebra(C& c, const typename C::Obj& X) {
  auto Xs = c.dual(X);
  auto A = c.tensor_obj(X, Xs);
  AlgebraOb<C> a;
  a.A = A;
  a.m = pipe(c, {c.assoc(X, Xs, A),
                 c.tensor(c.id(X), c.assoc_inv(Xs, X, Xs)),
                 c.tensor(c.id(X), c.tensor(c.ev(X), c.id(Xs))),
                 c.tensor(c.id(X), c.lunit(Xs))});
  a.eta = c.coev(X);
  a.delta = pipe(c, {c.tensor(c.id(X), c.lunit_inv(Xs)),
                     c.tensor(c.id(X), c.tensor(c.coev2(X), c.id(Xs))),
                     c.tensor(c.id(X), c.assoc(Xs, X, Xs)),
                     c.assoc_inv(X, Xs, c.tensor_obj(X, Xs))});
  a.eps = c.ev2(X);
  return a;
}

// convolution product on Hom(1, A)
template <class C>
typename C::Mor convolve(C& c, const AlgebraOb<C>& a, const typename C::Mor& f, const typename C::Mor& g) {
  return pipe(c, {c.lunit_inv(c.unit()), c.tensor(f, g), a.m});
}

// convolution inverse, solved linearly; verified two-sided
template <class C>
std::optional<typename C::Mor> convolution_inverse(C& c, const AlgebraOb<C>& a, const typename C::Mor& f) {
  std::vector<typename C::Mor> basis = c.hom_basis(c.unit(), a.A);
  if (basis.empty()) return std::nullopt;
  std::vector<Cyc> target = c.mor_coords(a.eta);
  Mat A(target.size(), basis.size());
  for (size_t j = 0; j < basis.size(); ++j) {
    std::vector<Cyc> col = c.mor_coords(convolve(c, a, f, basis[j]));
    for (size_t i = 0; i < col.size(); ++i) A.at(i, j) = col[i];
  }
  auto sol = solve_linear(A, target);
  if (!sol) return std::nullopt;
  typename C::Mor g = c.zero(c.unit(), a.A);
  for (size_t j = 0; j < basis.size(); ++j)
    if (!(*sol)[j].is_zero()) g = c.add(g, c.scale((*sol)[j], basis[j]));
  if (!c.eq(convolve(c, a, g, f), a.eta)) return std::nullopt;
  return g;
}

// inner automorphism a |-> f a f^{-1}
template <class C>
typename C::Mor inner_automorphism(C& c, const AlgebraOb<C>& a, const typename C::Mor& f,
                                   const typename C::Mor& finv) {
  return pipe(c, {c.lunit_inv(a.A), c.tensor(f, c.id(a.A)), a.m,
                  c.runit_inv(a.A), c.tensor(c.id(a.A), finv), a.m});
}

template <class C>
bool is_algebra_hom(C& c, const AlgebraOb<C>& a, const AlgebraOb<C>& b, const typename C::Mor& phi) {
  return c.eq(c.compose(phi, a.m), c.compose(b.m, c.tensor(phi, phi))) &&
         c.eq(c.compose(phi, a.eta), b.eta);
}

template <class C>
bool is_coalgebra_hom(C& c, const AlgebraOb<C>& a, const AlgebraOb<C>& b, const typename C::Mor& phi) {
  return c.eq(c.compose(b.delta, phi), c.compose(c.tensor(phi, phi), a.delta)) &&
         c.eq(c.compose(b.eps, phi), a.eps);
}

template <class C>
bool is_frobenius_hom(C& c, const AlgebraOb<C>& a, const AlgebraOb<C>& b, const typename C::Mor& phi) {
  return is_algebra_hom(c, a, b, phi) && is_coalgebra_hom(c, a, b, phi);
}

}  // namespace picardium
