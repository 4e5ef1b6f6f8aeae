#pragma once

// Bimodules between two algebras, tensor products over a middle symmetric
// special Frobenius algebra via idempotent splitting, Morita contexts with
// their coherence diagrams, and the induced equivalence on bimodule
// categories.  Everything is generic in the ambient category C.

#include <picardium/bimodule.hpp>

#include <optional>
#include <stdexcept>

namespace picardium {

// the tensor unit as a (trivial) symmetric special Frobenius algebra
template <class C>
AlgebraOb<C> trivial_algebra(C& c) {
  AlgebraOb<C> a;
  a.A = c.unit();
  a.m = c.lunit(c.unit());
  a.eta = c.id(c.unit());
  a.delta = c.lunit_inv(c.unit());
  a.eps = c.id(c.unit());
  return a;
}

// a bimodule between two possibly different algebras; la and ra are the
// carriers of the left and right algebra (needed because a skeletal tensor
// object cannot be decomposed into its factors)
template <class C>
struct Bimod2 {
  typename C::Obj carrier;
  typename C::Mor rho;     // la (x) X -> X
  typename C::Mor varrho;  // X (x) ra -> X
  typename C::Obj la, ra;
};

// the algebra as a bimodule over itself
template <class C>
Bimod2<C> regular_bimodule(const AlgebraOb<C>& a) {
  return {a.A, a.m, a.m, a.A, a.A};
}

template <class C>
bool is_left_module(C& c, const AlgebraOb<C>& A, const typename C::Obj& X, const typename C::Mor& rho) {
  bool assoc = c.eq(c.compose(rho, c.tensor(A.m, c.id(X))),
                    pipe(c, {c.assoc(A.A, A.A, X), c.tensor(c.id(A.A), rho), rho}));
  bool unit = c.eq(pipe(c, {c.lunit_inv(X), c.tensor(A.eta, c.id(X)), rho}), c.id(X));
  return assoc && unit;
}

template <class C>
bool is_right_module(C& c, const AlgebraOb<C>& B, const typename C::Obj& X, const typename C::Mor& varrho) {
  bool assoc = c.eq(pipe(c, {c.assoc(X, B.A, B.A), c.tensor(c.id(X), B.m), varrho}),
                    c.compose(varrho, c.tensor(varrho, c.id(B.A))));
  bool unit = c.eq(pipe(c, {c.runit_inv(X), c.tensor(c.id(X), B.eta), varrho}), c.id(X));
  return assoc && unit;
}

template <class C>
bool is_bimodule(C& c, const AlgebraOb<C>& A, const AlgebraOb<C>& B, const Bimod2<C>& X) {
  bool tagged = c.obj_eq(X.la, A.A) && c.obj_eq(X.ra, B.A);
  bool comm = c.eq(c.compose(X.varrho, c.tensor(X.rho, c.id(B.A))),
                   pipe(c, {c.assoc(A.A, X.carrier, B.A), c.tensor(c.id(A.A), X.varrho), X.rho}));
  return tagged && is_left_module(c, A, X.carrier, X.rho) &&
         is_right_module(c, B, X.carrier, X.varrho) && comm;
}

template <class C>
bool is_bimodule_map(C& c, const AlgebraOb<C>& A, const AlgebraOb<C>& B, const Bimod2<C>& X,
                     const Bimod2<C>& Y, const typename C::Mor& f) {
  bool left = c.eq(c.compose(f, X.rho), c.compose(Y.rho, c.tensor(c.id(A.A), f)));
  bool right = c.eq(c.compose(f, X.varrho), c.compose(Y.varrho, c.tensor(f, c.id(B.A))));
  return left && right;
}

// a special Frobenius algebra together with its normalised coproduct
template <class C>
struct SpecialNormal {
  AlgebraOb<C> alg;
  typename C::Mor delta_n;  // m o delta_n = id
  Cyc beta;
};

template <class C>
SpecialNormal<C> normalize_special(C& c, const AlgebraOb<C>& a) {
  auto r = mor_ratio(c, c.compose(a.m, a.delta), c.id(a.A));
  if (!r || r->is_zero())
    throw std::invalid_argument("normalize_special: m o delta is not a nonzero multiple of id");
  return {a, c.scale(r->inverse(), a.delta), *r};
}

template <class C>
struct TensorOver {
  Bimod2<C> ob;        // image with the outer actions
  typename C::Mor e0;  // carrier(ob) -> X (x) Y
  typename C::Mor r0;  // X (x) Y -> carrier(ob)
};

// tensor product over the middle algebra B: X a (?, B)-bimodule, Y a (B, ?)-
// bimodule; outer actions are inherited from X.rho and Y.varrho
// the idempotent on X (x) Y whose image is the tensor product over B
template <class C>
typename C::Mor tensor_over_projector(C& c, const SpecialNormal<C>& B, const Bimod2<C>& X,
                                      const Bimod2<C>& Y) {
  if (!c.obj_eq(X.ra, B.alg.A) || !c.obj_eq(Y.la, B.alg.A))
    throw std::invalid_argument("tensor_over: middle algebra does not match the bimodule tags");
  auto& Bob = B.alg.A;
  auto de = c.compose(B.delta_n, B.alg.eta);
  return pipe(c, {c.tensor(c.id(X.carrier), c.lunit_inv(Y.carrier)),
                  c.tensor(c.id(X.carrier), c.tensor(de, c.id(Y.carrier))),
                  c.tensor(c.id(X.carrier), c.assoc(Bob, Bob, Y.carrier)),
                  c.assoc_inv(X.carrier, Bob, c.tensor_obj(Bob, Y.carrier)),
                  c.tensor(X.varrho, Y.rho)});
}

template <class C>
TensorOver<C> tensor_over(C& c, const SpecialNormal<C>& B, const Bimod2<C>& X, const Bimod2<C>& Y) {
  auto P = tensor_over_projector(c, B, X, Y);
  auto sp = c.split(P);
  TensorOver<C> t;
  t.e0 = sp.e;
  t.r0 = sp.r;
  t.ob.carrier = sp.im;
  t.ob.la = X.la;
  t.ob.ra = Y.ra;
  t.ob.rho = pipe(c, {c.tensor(c.id(X.la), sp.e), c.assoc_inv(X.la, X.carrier, Y.carrier),
                      c.tensor(X.rho, c.id(Y.carrier)), sp.r});
  t.ob.varrho = pipe(c, {c.tensor(sp.e, c.id(Y.ra)), c.assoc(X.carrier, Y.carrier, Y.ra),
                         c.tensor(c.id(X.carrier), Y.varrho), sp.r});
  return t;
}

// defect of the coequaliser property: r0 o (varrho_X (x) id - (id (x) rho_Y) o assoc)
template <class C>
typename C::Mor cokernel_defect(C& c, const SpecialNormal<C>& B, const Bimod2<C>& X,
                                const Bimod2<C>& Y, const TensorOver<C>& t) {
  auto& Bob = B.alg.A;
  auto lhs = c.tensor(X.varrho, c.id(Y.carrier));
  auto rhs = pipe(c, {c.assoc(X.carrier, Bob, Y.carrier), c.tensor(c.id(X.carrier), Y.rho)});
  return c.compose(t.r0, c.add(lhs, c.scale(Cyc(-1L), rhs)));
}

// morphism between tensor products over the same middle algebra
template <class C>
typename C::Mor tensor_over_mor(C& c, const TensorOver<C>& src, const TensorOver<C>& dst,
                                const typename C::Mor& f, const typename C::Mor& g) {
  return pipe(c, {src.e0, c.tensor(f, g), dst.r0});
}

// associator (X (x)_B Y) (x)_A Z -> X (x)_B (Y (x)_A Z), given the four splittings
template <class C>
typename C::Mor over_assoc(C& c, const TensorOver<C>& txy, const TensorOver<C>& tl,
                           const TensorOver<C>& tyz, const TensorOver<C>& tr,
                           const typename C::Obj& X, const typename C::Obj& Y,
                           const typename C::Obj& Z) {
  return pipe(c, {tl.e0, c.tensor(txy.e0, c.id(Z)), c.assoc(X, Y, Z),
                  c.tensor(c.id(X), tyz.r0), tr.r0});
}

template <class C>
struct MoritaContext {
  AlgebraOb<C> A, B;
  Bimod2<C> P;         // A-B-bimodule
  Bimod2<C> Q;         // B-A-bimodule
  typename C::Mor f;   // carrier(P (x)_B Q) -> A
  typename C::Mor g;   // carrier(Q (x)_A P) -> B
};

template <class C>
MoritaContext<C> swap_context(const MoritaContext<C>& mc) {
  return {mc.B, mc.A, mc.Q, mc.P, mc.g, mc.f};
}

struct MoritaReport {
  bool p_bimodule = false, q_bimodule = false;
  bool f_bimodule_map = false, g_bimodule_map = false;
  bool f_iso = false, g_iso = false;
  bool diagram_p = false, diagram_q = false;
  bool ok() const {
    return p_bimodule && q_bimodule && f_bimodule_map && g_bimodule_map && f_iso && g_iso &&
           diagram_p && diagram_q;
  }
};

namespace detail {
// one coherence diagram: both routes (P (x)_B Q) (x)_A P -> P agree
template <class C>
bool morita_diagram(C& c, const SpecialNormal<C>& An, const SpecialNormal<C>& Bn,
                    const Bimod2<C>& P, const Bimod2<C>& Q, const typename C::Mor& f,
                    const typename C::Mor& g) {
  auto regA = regular_bimodule(An.alg);
  auto regB = regular_bimodule(Bn.alg);
  auto tPQ = tensor_over(c, Bn, P, Q);      // A-A
  auto tD = tensor_over(c, An, tPQ.ob, P);  // domain
  auto tAP = tensor_over(c, An, regA, P);
  auto path_a = pipe(c, {tD.e0, c.tensor(f, c.id(P.carrier)), tAP.r0, tAP.e0, P.rho});
  auto tQP = tensor_over(c, An, Q, P);      // B-B
  auto tE = tensor_over(c, Bn, P, tQP.ob);
  auto alpha = over_assoc(c, tPQ, tD, tQP, tE, P.carrier, Q.carrier, P.carrier);
  auto tPB = tensor_over(c, Bn, P, regB);
  auto path_b = pipe(c, {alpha, tE.e0, c.tensor(c.id(P.carrier), g), tPB.r0, tPB.e0, P.varrho});
  return c.eq(path_a, path_b);
}
}  // namespace detail

template <class C>
MoritaReport verify_morita_context(C& c, const MoritaContext<C>& mc) {
  MoritaReport rep;
  auto An = normalize_special(c, mc.A);
  auto Bn = normalize_special(c, mc.B);
  rep.p_bimodule = is_bimodule(c, mc.A, mc.B, mc.P);
  rep.q_bimodule = is_bimodule(c, mc.B, mc.A, mc.Q);
  auto tPQ = tensor_over(c, Bn, mc.P, mc.Q);
  auto tQP = tensor_over(c, An, mc.Q, mc.P);
  rep.f_bimodule_map = is_bimodule_map(c, mc.A, mc.A, tPQ.ob, regular_bimodule(mc.A), mc.f);
  rep.g_bimodule_map = is_bimodule_map(c, mc.B, mc.B, tQP.ob, regular_bimodule(mc.B), mc.g);
  rep.f_iso = invert_mor(c, mc.f).has_value();
  rep.g_iso = invert_mor(c, mc.g).has_value();
  rep.diagram_p = detail::morita_diagram(c, An, Bn, mc.P, mc.Q, mc.f, mc.g);
  rep.diagram_q = detail::morita_diagram(c, Bn, An, mc.Q, mc.P, mc.g, mc.f);
  return rep;
}

// the Morita context between the tensor unit and X (x) X*, realised by the
// right dual and the object itself
template <class C>
MoritaContext<C> unit_endo_context(C& c, const typename C::Obj& U) {
  MoritaContext<C> mc;
  mc.A = trivial_algebra(c);
  mc.B = build_endomorphism_algebra(c, U);
  auto Us = c.dual(U);
  mc.P = {Us, c.lunit(Us),
          pipe(c, {c.assoc_inv(Us, U, Us), c.tensor(c.ev(U), c.id(Us)), c.lunit(Us)}),
          c.unit(), mc.B.A};
  mc.Q = {U, pipe(c, {c.assoc(U, Us, U), c.tensor(c.id(U), c.ev(U)), c.runit(U)}),
          c.runit(U), mc.B.A, c.unit()};
  auto An = normalize_special(c, mc.A);
  auto Bn = normalize_special(c, mc.B);
  auto tPQ = tensor_over(c, Bn, mc.P, mc.Q);
  mc.f = pipe(c, {tPQ.e0, c.ev(U)});
  auto tQP = tensor_over(c, An, mc.Q, mc.P);
  mc.g = tQP.e0;
  // f is only determined up to a scalar; calibrate it on the first coherence
  // diagram, which is linear in f
  {
    auto regA = regular_bimodule(mc.A);
    auto regB = regular_bimodule(mc.B);
    auto tD = tensor_over(c, An, tPQ.ob, mc.P);
    auto tAP = tensor_over(c, An, regA, mc.P);
    auto path_a = pipe(c, {tD.e0, c.tensor(mc.f, c.id(Us)), tAP.r0, tAP.e0, mc.P.rho});
    auto tE = tensor_over(c, Bn, mc.P, tQP.ob);
    auto alpha = over_assoc(c, tPQ, tD, tQP, tE, Us, U, Us);
    auto tPB = tensor_over(c, Bn, mc.P, regB);
    auto path_b = pipe(c, {alpha, tE.e0, c.tensor(c.id(Us), mc.g), tPB.r0, tPB.e0, mc.P.varrho});
    auto r = mor_ratio(c, path_b, path_a);
    if (!r || r->is_zero()) throw std::runtime_error("unit_endo_context: coherence calibration failed");
    mc.f = c.scale(*r, mc.f);
  }
  return mc;
}

// the induced map on bimodule categories: X an A-bimodule goes to the
// B-bimodule (Q (x)_A X) (x)_A P, left-nested
template <class C>
Bimod2<C> morita_apply(C& c, const MoritaContext<C>& mc, const Bimod2<C>& X) {
  auto An = normalize_special(c, mc.A);
  auto t1 = tensor_over(c, An, mc.Q, X);
  auto t2 = tensor_over(c, An, t1.ob, mc.P);
  return t2.ob;
}

// basis of the space of bimodule morphisms X -> Y, solved exactly as the
// nullspace of the two intertwiner conditions over the base hom space
template <class C>
std::vector<typename C::Mor> bimodule_hom_basis(C& c, const AlgebraOb<C>& A, const AlgebraOb<C>& B,
                                                const Bimod2<C>& X, const Bimod2<C>& Y) {
  std::vector<typename C::Mor> bb = c.hom_basis(X.carrier, Y.carrier);
  std::vector<typename C::Mor> out;
  if (bb.empty()) return out;
  std::vector<std::vector<Cyc>> cols(bb.size());
  size_t nrows = 0;
  for (size_t j = 0; j < bb.size(); ++j) {
    auto lv = c.mor_coords(c.add(c.compose(bb[j], X.rho),
                                 c.scale(Cyc(-1L), c.compose(Y.rho, c.tensor(c.id(A.A), bb[j])))));
    auto rv = c.mor_coords(c.add(c.compose(bb[j], X.varrho),
                                 c.scale(Cyc(-1L), c.compose(Y.varrho, c.tensor(bb[j], c.id(B.A))))));
    cols[j] = std::move(lv);
    cols[j].insert(cols[j].end(), rv.begin(), rv.end());
    nrows = cols[j].size();
  }
  Mat M(nrows, bb.size());
  for (size_t j = 0; j < bb.size(); ++j)
    for (size_t i = 0; i < nrows; ++i) M.at(i, j) = cols[j][i];
  Mat K = nullspace(M);
  for (size_t k = 0; k < K.cols; ++k) {
    typename C::Mor f = c.zero(X.carrier, Y.carrier);
    for (size_t j = 0; j < bb.size(); ++j)
      if (!K.at(j, k).is_zero()) f = c.add(f, c.scale(K.at(j, k), bb[j]));
    out.push_back(std::move(f));
  }
  return out;
}

// search for a bimodule isomorphism between two bimodules with equal tags
template <class C>
std::optional<typename C::Mor> bimodule_isomorphism(C& c, const AlgebraOb<C>& A,
                                                    const AlgebraOb<C>& B, const Bimod2<C>& X,
                                                    const Bimod2<C>& Y) {
  std::vector<typename C::Mor> cand = bimodule_hom_basis(c, A, B, X, Y);
  if (cand.empty()) return std::nullopt;
  // deterministic search: single elements, then power combinations
  for (auto& f : cand)
    if (invert_mor(c, f)) return f;
  size_t tries = cand.size() * 4 + 2;
  for (size_t t = 2; t < tries + 2; ++t) {
    typename C::Mor f = c.zero(X.carrier, Y.carrier);
    Cyc lam(static_cast<long>(t));
    Cyc pow = Cyc::one();
    for (auto& b : cand) {
      f = c.add(f, c.scale(pow, b));
      pow = pow * lam;
    }
    if (invert_mor(c, f)) return f;
  }
  return std::nullopt;
}

}  // namespace picardium
