#pragma once

// Pointed families: a finite group H of (pairwise non-isomorphic) invertible
// objects L_h with chosen multiplication isos b_{g,h}: L_g(x)L_h -> L_{gh},
// normalized so that b_{1,h} and b_{g,1} are the unitors.  On top of such a
// family: the twisted group algebra Q(H, omega), the automorphism family
// alpha_h of its endomorphism algebra, and recovery of omega from the alphas.

#include <picardium/algebra.hpp>
#include <picardium/graded.hpp>
#include <picardium/trivialise.hpp>

#include <stdexcept>

namespace picardium {

template <class C>
struct PointedFamily {
  FiniteGroup H;
  std::vector<typename C::Obj> L;                      // L[0] must be the unit
  std::vector<std::vector<typename C::Mor>> b, binv;   // b[g][h] : L_g (x) L_h -> L_{gh}
};

// the graded family of simples over a subgroup: all structure maps are
// identities, psi bookkeeping lives entirely in the associator
inline PointedFamily<GradedCat> graded_family(GradedCat& c, const SubgroupEmbedding& H) {
  PointedFamily<GradedCat> fam;
  fam.H = H.sub;
  int n = H.sub.order();
  for (int h = 0; h < n; ++h) fam.L.push_back(GradedObject::simple(H.ambient_of(h)));
  fam.b.resize(static_cast<size_t>(n));
  fam.binv.resize(static_cast<size_t>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      // L_g (x) L_h and L_{gh} coincide as graded objects
      auto idm = c.id(fam.L[static_cast<size_t>(H.sub.op(g, h))]);
      fam.b[static_cast<size_t>(g)].push_back(idm);
      fam.binv[static_cast<size_t>(g)].push_back(idm);
    }
  return fam;
}

// associativity defect of the family: lambda(g,h,k) with
//   b_{g,hk} o (id (x) b_{h,k}) o assoc = lambda(g,h,k) * b_{gh,k} o (b_{g,h} (x) id)
// returns the exponents at the given root order; throws if a value is not a
// root of unity of that order
template <class C>
Cochain family_cocycle(C& c, const PointedFamily<C>& fam, long order) {
  int n = fam.H.order();
  Cochain psi = Cochain::zero(fam.H, 3, order);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        auto lhs = c.compose(fam.b[static_cast<size_t>(fam.H.op(g, h))][static_cast<size_t>(k)],
                             c.tensor(fam.b[static_cast<size_t>(g)][static_cast<size_t>(h)],
                                      c.id(fam.L[static_cast<size_t>(k)])));
        auto rhs = pipe(c, {c.assoc(fam.L[static_cast<size_t>(g)], fam.L[static_cast<size_t>(h)],
                                    fam.L[static_cast<size_t>(k)]),
                            c.tensor(c.id(fam.L[static_cast<size_t>(g)]),
                                     fam.b[static_cast<size_t>(h)][static_cast<size_t>(k)]),
                            fam.b[static_cast<size_t>(g)][static_cast<size_t>(fam.H.op(h, k))]});
        auto r = mor_ratio(c, rhs, lhs);
        if (!r) throw std::runtime_error("family_cocycle: structure maps are not projectively associative");
        long e = root_exponent(*r, order);
        if (e < 0) throw std::runtime_error("family_cocycle: defect is not a root of unity of the expected order");
        psi.set({g, h, k}, e);
      }
  return psi;
}

template <class C>
struct QAlgebra {
  AlgebraOb<C> alg;
  std::vector<typename C::Mor> e, r;  // inj/proj of the direct sum over L_h
  Cochain omega;
};

// twisted group algebra Q(H, omega) on the direct sum of the family
template <class C>
QAlgebra<C> build_Q(C& c, const PointedFamily<C>& fam, const Cochain& omega) {
  int n = fam.H.order();
  if (omega.degree != 2 || omega.G.mul != fam.H.mul)
    throw std::invalid_argument("build_Q: omega must be a 2-cochain on H");
  auto sum = c.direct_sum(fam.L);
  QAlgebra<C> q;
  q.omega = omega;
  q.e = sum.inj;
  q.r = sum.proj;
  q.alg.A = sum.total;
  auto Q = sum.total;
  q.alg.m = c.zero(c.tensor_obj(Q, Q), Q);
  q.alg.delta = c.zero(Q, c.tensor_obj(Q, Q));
  Cyc invH = Cyc(Rat(1, n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      int gh = fam.H.op(g, h);
      Cyc w = omega.value({g, h});
      auto term = pipe(c, {c.tensor(sum.proj[static_cast<size_t>(g)], sum.proj[static_cast<size_t>(h)]),
                           fam.b[static_cast<size_t>(g)][static_cast<size_t>(h)],
                           sum.inj[static_cast<size_t>(gh)]});
      q.alg.m = c.add(q.alg.m, c.scale(w, term));
      auto coterm = pipe(c, {sum.proj[static_cast<size_t>(gh)],
                             fam.binv[static_cast<size_t>(g)][static_cast<size_t>(h)],
                             c.tensor(sum.inj[static_cast<size_t>(g)], sum.inj[static_cast<size_t>(h)])});
      q.alg.delta = c.add(q.alg.delta, c.scale(invH * w.inverse(), coterm));
    }
  q.alg.eta = sum.inj[0];
  q.alg.eps = c.scale(Cyc(static_cast<long>(n)), sum.proj[0]);
  return q;
}

template <class C>
struct AlphaFamily {
  QAlgebra<C> q;
  AlgebraOb<C> endo;                      // A(H) = Q (x) Q*
  std::vector<typename C::Mor> f, finv;   // f[h] : Q (x) L_h -> Q
  std::vector<typename C::Mor> alpha;     // alpha[h] : A(H) -> A(H)
};

template <class C>
typename C::Mor family_f(C& c, const PointedFamily<C>& fam, const QAlgebra<C>& q, int h) {
  int n = fam.H.order();
  auto Q = q.alg.A;
  auto f = c.zero(c.tensor_obj(Q, fam.L[static_cast<size_t>(h)]), Q);
  for (int g = 0; g < n; ++g) {
    int gh = fam.H.op(g, h);
    auto term = pipe(c, {c.tensor(q.r[static_cast<size_t>(g)], c.id(fam.L[static_cast<size_t>(h)])),
                         fam.b[static_cast<size_t>(g)][static_cast<size_t>(h)],
                         q.e[static_cast<size_t>(gh)]});
    f = c.add(f, c.scale(q.omega.value({g, h}), term));
  }
  return f;
}

template <class C>
typename C::Mor family_f_inv(C& c, const PointedFamily<C>& fam, const QAlgebra<C>& q, int h) {
  int n = fam.H.order();
  auto Q = q.alg.A;
  auto f = c.zero(Q, c.tensor_obj(Q, fam.L[static_cast<size_t>(h)]));
  for (int g = 0; g < n; ++g) {
    int gh = fam.H.op(g, h);
    auto term = pipe(c, {q.r[static_cast<size_t>(gh)],
                         fam.binv[static_cast<size_t>(g)][static_cast<size_t>(h)],
                         c.tensor(q.e[static_cast<size_t>(g)], c.id(fam.L[static_cast<size_t>(h)]))});
    f = c.add(f, c.scale(q.omega.value({g, h}).inverse(), term));
  }
  return f;
}

// alpha_h = (id_Q (x) ev2_{L_h} (x) id_{Q*}) o (f_h^{-1} (x) gamma o f_h^dual)
template <class C>
typename C::Mor family_alpha(C& c, const PointedFamily<C>& fam, const QAlgebra<C>& q, int h) {
  auto Q = q.alg.A;
  auto Lh = fam.L[static_cast<size_t>(h)];
  auto Qs = c.dual(Q);
  auto Lhs = c.dual(Lh);
  auto fh = family_f(c, fam, q, h);
  auto fhinv = family_f_inv(c, fam, q, h);
  auto gamma = dual_tensor_iso(c, Q, Lh);  // (Q(x)L_h)* -> L_h*(x)Q*
  auto fdual = c.compose(gamma, dual_mor(c, fh));  // Q* -> L_h*(x)Q*
  return pipe(c, {c.tensor(fhinv, fdual),
                  c.assoc(Q, Lh, c.tensor_obj(Lhs, Qs)),
                  c.tensor(c.id(Q), c.assoc_inv(Lh, Lhs, Qs)),
                  c.tensor(c.id(Q), c.tensor(c.ev2(Lh), c.id(Qs))),
                  c.tensor(c.id(Q), c.lunit(Qs))});
}

template <class C>
AlphaFamily<C> alpha_family(C& c, const PointedFamily<C>& fam, const Cochain& omega) {
  AlphaFamily<C> out;
  out.q = build_Q(c, fam, omega);
  out.endo = build_endomorphism_algebra(c, out.q.alg.A);
  for (int h = 0; h < fam.H.order(); ++h) {
    out.f.push_back(family_f(c, fam, out.q, h));
    out.finv.push_back(family_f_inv(c, fam, out.q, h));
    out.alpha.push_back(family_alpha(c, fam, out.q, h));
  }
  return out;
}

// the intertwiner (Q(x)L_h)(x)Q* -> A(H) induced by a candidate f: Q(x)L_h -> Q
template <class C>
typename C::Mor intertwiner_F(C& c, const QAlgebra<C>& q, const typename C::Obj& Lh,
                              const typename C::Mor& f) {
  auto Q = q.alg.A;
  auto Qs = c.dual(Q);
  auto Lhs = c.dual(Lh);
  auto gamma = dual_tensor_iso(c, Q, Lh);
  auto fdual = c.compose(gamma, dual_mor(c, f));  // Q* -> L_h*(x)Q*
  return pipe(c, {c.assoc(Q, Lh, Qs),
                  c.tensor(c.id(Q), c.tensor(c.id(Lh), fdual)),
                  c.tensor(c.id(Q), c.assoc_inv(Lh, Lhs, Qs)),
                  c.tensor(c.id(Q), c.tensor(c.ev2(Lh), c.id(Qs))),
                  c.tensor(c.id(Q), c.lunit(Qs))});
}

// left/right A(H)-actions on X_h = (Q (x) L_h) (x) Q*
template <class C>
typename C::Mor xh_left_action(C& c, const QAlgebra<C>& q, const typename C::Obj& Lh) {
  auto Q = q.alg.A;
  auto Qs = c.dual(Q);
  auto A = c.tensor_obj(Q, Qs);
  auto QL = c.tensor_obj(Q, Lh);
  // rho_Q : A (x) Q -> Q  (Q is a left module over its endomorphism algebra)
  auto rhoQ = pipe(c, {c.assoc(Q, Qs, Q),
                       c.tensor(c.id(Q), c.ev(Q)),
                       c.runit(Q)});
  return pipe(c, {c.assoc_inv(A, QL, Qs),
                  c.tensor(c.assoc_inv(A, Q, Lh), c.id(Qs)),
                  c.tensor(c.tensor(rhoQ, c.id(Lh)), c.id(Qs))});
}

template <class C>
typename C::Mor xh_right_action(C& c, const QAlgebra<C>& q, const typename C::Obj& Lh) {
  auto Q = q.alg.A;
  auto Qs = c.dual(Q);
  auto A = c.tensor_obj(Q, Qs);
  auto QL = c.tensor_obj(Q, Lh);
  // varrho_{Q*} : Q* (x) A -> Q*
  auto varrhoQs = pipe(c, {c.assoc_inv(Qs, Q, Qs),
                           c.tensor(c.ev(Q), c.id(Qs)),
                           c.lunit(Qs)});
  return pipe(c, {c.assoc(QL, Qs, A),
                  c.tensor(c.id(QL), varrhoQs)});
}

struct OmegaRecovery {
  bool unique = false;
  bool invertible = false;
  Cochain omega;
  std::string error;
};

// recover the normalized 2-cochain omega from an alpha family on A(H):
// solve linearly for f_h with F(f_h) intertwining X_h -> (A with right action
// twisted by alpha_h), normalized by r_1-compatibility, then read off
// omega(g, h) against the family structure maps
template <class C>
OmegaRecovery extract_omega(C& c, const PointedFamily<C>& fam, const QAlgebra<C>& q,
                            const std::vector<typename C::Mor>& alpha, long omega_order) {
  int n = fam.H.order();
  auto Q = q.alg.A;
  auto Qs = c.dual(Q);
  auto A = c.tensor_obj(Q, Qs);
  AlgebraOb<C> endo = build_endomorphism_algebra(c, Q);
  OmegaRecovery out;
  out.omega = Cochain::zero(fam.H, 2, omega_order);
  for (int h = 0; h < n; ++h) {
    auto Lh = fam.L[static_cast<size_t>(h)];
    auto QL = c.tensor_obj(Q, Lh);
    auto Xh = c.tensor_obj(QL, Qs);
    auto rhoX = xh_left_action(c, q, Lh);
    auto varrhoX = xh_right_action(c, q, Lh);
    // twisted right action on A: m o (id (x) alpha_h)
    auto varrhoA = c.compose(endo.m, c.tensor(c.id(A), alpha[static_cast<size_t>(h)]));
    // unknown f = sum_g x_g B_g
    std::vector<typename C::Mor> B;
    for (int g = 0; g < n; ++g)
      B.push_back(pipe(c, {c.tensor(q.r[static_cast<size_t>(g)], c.id(Lh)),
                           fam.b[static_cast<size_t>(g)][static_cast<size_t>(h)],
                           q.e[static_cast<size_t>(fam.H.op(g, h))]}));
    // linear conditions on F(f): intertwines both actions; plus normalization
    std::vector<Cyc> rhs;
    std::vector<std::vector<Cyc>> cols(static_cast<size_t>(n));
    auto push_linear = [&](const std::vector<typename C::Mor>& per_basis,
                           const std::vector<Cyc>& target) {
      for (int g = 0; g < n; ++g) {
        std::vector<Cyc> cc = c.mor_coords(per_basis[static_cast<size_t>(g)]);
        cols[static_cast<size_t>(g)].insert(cols[static_cast<size_t>(g)].end(), cc.begin(), cc.end());
      }
      rhs.insert(rhs.end(), target.begin(), target.end());
    };
    {
      std::vector<typename C::Mor> lcond, rcond, norm;
      for (int g = 0; g < n; ++g) {
        auto F = intertwiner_F(c, q, Lh, B[static_cast<size_t>(g)]);
        lcond.push_back(c.add(c.compose(F, rhoX),
                              c.scale(Cyc(-1L), c.compose(endo.m, c.tensor(c.id(A), F)))));
        rcond.push_back(c.add(c.compose(F, varrhoX),
                              c.scale(Cyc(-1L), c.compose(varrhoA, c.tensor(F, c.id(A))))));
        norm.push_back(pipe(c, {c.lunit_inv(Lh), c.tensor(q.e[0], c.id(Lh)),
                                B[static_cast<size_t>(g)], q.r[static_cast<size_t>(h)]}));
      }
      std::vector<Cyc> zl = c.mor_coords(lcond[0]);
      push_linear(lcond, std::vector<Cyc>(zl.size(), Cyc::zero()));
      std::vector<Cyc> zr = c.mor_coords(rcond[0]);
      push_linear(rcond, std::vector<Cyc>(zr.size(), Cyc::zero()));
      push_linear(norm, c.mor_coords(c.id(Lh)));
    }
    Mat M(rhs.size(), static_cast<size_t>(n));
    for (int g = 0; g < n; ++g)
      for (size_t i = 0; i < rhs.size(); ++i) M.at(i, static_cast<size_t>(g)) = cols[static_cast<size_t>(g)][i];
    auto sol = solve_linear(M, rhs);
    if (!sol) {
      out.error = "no intertwining f for h=" + std::to_string(h);
      return out;
    }
    // uniqueness: homogeneous system has trivial nullspace
    if (nullspace(M).cols != 0) {
      out.error = "NoUniqueIsomorphism: intertwiner for h=" + std::to_string(h) + " is not unique";
      return out;
    }
    auto f = c.zero(QL, Q);
    for (int g = 0; g < n; ++g)
      if (!(*sol)[static_cast<size_t>(g)].is_zero())
        f = c.add(f, c.scale((*sol)[static_cast<size_t>(g)], B[static_cast<size_t>(g)]));
    if (!invert_mor(c, f)) {
      out.error = "recovered f is not invertible for h=" + std::to_string(h);
      return out;
    }
    for (int g = 0; g < n; ++g) {
      // omega(g,h) * b_{g,h} = r_{gh} o f o (e_g (x) id)
      auto got = pipe(c, {c.tensor(q.e[static_cast<size_t>(g)], c.id(Lh)), f,
                          q.r[static_cast<size_t>(fam.H.op(g, h))]});
      auto ratio = mor_ratio(c, got, fam.b[static_cast<size_t>(g)][static_cast<size_t>(h)]);
      if (!ratio) {
        out.error = "structure ratio missing at (" + std::to_string(g) + "," + std::to_string(h) + ")";
        return out;
      }
      long e = root_exponent(*ratio, omega_order);
      if (e < 0) {
        out.error = "omega value is not a mu_" + std::to_string(omega_order) + " root";
        return out;
      }
      out.omega.set({g, h}, e);
    }
  }
  out.unique = true;
  out.invertible = true;
  return out;
}

// per-element categorical dimensions and the admissible set {dim_l = dim_r = 1}
struct PicardData {
  std::vector<Cyc> dim_l, dim_r;
  std::vector<int> admissible;  // ambient element indices
};

inline PicardData picard_data(GradedCat& c) {
  PicardData d;
  for (int g = 0; g < c.ctx.G.order(); ++g) {
    GradedObject L = GradedObject::simple(g);
    d.dim_l.push_back(dim_left(c, L));
    d.dim_r.push_back(dim_right(c, L));
    if (d.dim_l.back() == Cyc::one() && d.dim_r.back() == Cyc::one()) d.admissible.push_back(g);
  }
  return d;
}

}  // namespace picardium
