#pragma once
// Fixed algebra of a finite group of Frobenius algebra automorphisms: the
// group average is a split idempotent whose image carries an induced
// Frobenius structure.  The construction verifies the projector-omission
// identities that make the induced structure well behaved, and reports which
// properties of the ambient algebra descend to the fixed algebra.

#include <stdexcept>
#include <string>
#include <vector>

#include "picardium/algebra.hpp"
#include "picardium/category.hpp"
#include "picardium/morita.hpp"

namespace picardium {

template <class C>
struct FixedAlgebra {
  typename C::Mor P;        // the group average, an idempotent on A
  AlgebraOb<C> alg;         // induced structure on the image of P
  typename C::Mor e;        // image -> A, an algebra morphism
  typename C::Mor r;        // A -> image, a coalgebra morphism
  AlgebraReport report;     // structural checks on the induced algebra
  bool omission_ok = false; // the projector can be dropped next to e and r
  bool e_algebra_hom = false;
  bool r_coalgebra_hom = false;
  bool ambient_symmetric = false;
  bool absolutely_simple = false;  // End of the regular bimodule is one-dimensional
  Cyc loop;                        // eps_P o m_P o delta_P o eta_P, equals dim when special
  // "special", "special (absolutely simple, nonzero dimension)", or
  // "not implied (fixed algebra is not absolutely simple)"
  std::string specialness;
};

// check that the given endomorphisms of A form a group of Frobenius algebra
// automorphisms (throws std::invalid_argument otherwise), then build the
// fixed algebra on the image of their average
template <class C>
FixedAlgebra<C> fixed_algebra(C& c, const AlgebraOb<C>& a,
                              const std::vector<typename C::Mor>& autos) {
  if (autos.empty()) throw std::invalid_argument("NotAGroup: empty automorphism set");
  auto idA = c.id(a.A);
  auto contains = [&](const typename C::Mor& f) {
    for (const auto& g : autos)
      if (c.eq(f, g)) return true;
    return false;
  };
  if (!contains(idA)) throw std::invalid_argument("NotAGroup: the identity is missing");
  for (const auto& f : autos) {
    if (!is_algebra_hom(c, a, a, f))
      throw std::invalid_argument("NotCoalgebraAutomorphism: not an algebra morphism");
    if (!is_coalgebra_hom(c, a, a, f))
      throw std::invalid_argument("NotCoalgebraAutomorphism: not a coalgebra morphism");
    if (!invert_mor(c, f))
      throw std::invalid_argument("NotCoalgebraAutomorphism: not invertible");
    for (const auto& g : autos)
      if (!contains(c.compose(g, f)))
        throw std::invalid_argument("NotAGroup: not closed under composition");
  }

  FixedAlgebra<C> out;
  typename C::Mor P = c.zero(a.A, a.A);
  for (const auto& f : autos) P = c.add(P, f);
  Cyc inv_n = Cyc::one() / Cyc(static_cast<long>(autos.size()));
  P = c.scale(inv_n, P);
  if (!c.eq(c.compose(P, P), P))
    throw std::invalid_argument("NotAGroup: the average is not idempotent");
  out.P = P;

  auto sp = c.split(P);
  out.e = sp.e;
  out.r = sp.r;
  out.alg.A = sp.im;
  out.alg.m = pipe(c, {c.tensor(sp.e, sp.e), a.m, sp.r});
  out.alg.eta = c.compose(sp.r, a.eta);
  out.alg.delta = pipe(c, {sp.e, a.delta, c.tensor(sp.r, sp.r)});
  out.alg.eps = c.compose(a.eps, sp.e);

  // the average commutes with multiplication against fixed inputs, so it can
  // be omitted on either leg of the induced product, and dually for the
  // coproduct; these identities drive every later computation
  auto ee = c.tensor(sp.e, sp.e);
  bool ok = true;
  ok = ok && c.eq(pipe(c, {c.tensor(sp.e, P), a.m, sp.r}), pipe(c, {c.tensor(sp.e, idA), a.m, sp.r}));
  ok = ok && c.eq(pipe(c, {c.tensor(P, sp.e), a.m, sp.r}), pipe(c, {c.tensor(idA, sp.e), a.m, sp.r}));
  ok = ok && c.eq(pipe(c, {ee, a.m, P}), pipe(c, {ee, a.m}));
  auto rr = c.tensor(sp.r, sp.r);
  ok = ok && c.eq(pipe(c, {sp.e, a.delta, c.tensor(sp.r, P)}),
                  pipe(c, {sp.e, a.delta, c.tensor(sp.r, idA)}));
  ok = ok && c.eq(pipe(c, {sp.e, a.delta, c.tensor(P, sp.r)}),
                  pipe(c, {sp.e, a.delta, c.tensor(idA, sp.r)}));
  ok = ok && c.eq(pipe(c, {P, a.delta, rr}), pipe(c, {a.delta, rr}));
  out.omission_ok = ok;

  out.e_algebra_hom = is_algebra_hom(c, out.alg, a, sp.e);
  out.r_coalgebra_hom = is_coalgebra_hom(c, a, out.alg, sp.r);

  out.report = check_algebra(c, out.alg);
  out.ambient_symmetric = c.eq(frobenius_pairing_1(c, a), frobenius_pairing_2(c, a));

  auto homs = bimodule_hom_basis(c, out.alg, out.alg, regular_bimodule(out.alg),
                                 regular_bimodule(out.alg));
  out.absolutely_simple = (homs.size() == 1);
  out.loop = c.scalar_of(pipe(c, {out.alg.eta, out.alg.delta, out.alg.m, out.alg.eps}));
  if (out.report.special)
    out.specialness = out.absolutely_simple && !out.loop.is_zero()
                          ? "special (absolutely simple, nonzero dimension)"
                          : "special";
  else if (!out.absolutely_simple)
    out.specialness = "not implied (fixed algebra is not absolutely simple)";
  else
    out.specialness = out.loop.is_zero() ? "not implied (dimension vanishes)" : "failed";
  return out;
}

}  // namespace picardium
