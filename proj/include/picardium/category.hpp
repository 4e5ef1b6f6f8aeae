#pragma once

// Generic constructions over a sovereign monoidal category interface.
// A category type C provides: Obj, Mor, unit(), obj_eq, id, zero, compose,
// add, scale, eq, tensor_obj, tensor, assoc(_inv), (l/r)unit(_inv),
// dual, ev, coev, ev2, coev2, hom_basis, mor_coords, scalar_of,
// direct_sum, split, mor_src, mor_dst.
// Everything here is written once and instantiated for the graded category
// and for bimodule categories (including nested ones).

#include <picardium/linalg.hpp>

#include <optional>
#include <vector>

namespace picardium {

// compose in application order: pipe(c, {f1, f2, f3}) = f3 o f2 o f1
template <class C>
typename C::Mor pipe(C& c, const std::vector<typename C::Mor>& fs) {
  typename C::Mor acc = fs.front();
  for (size_t i = 1; i < fs.size(); ++i) acc = c.compose(fs[i], acc);
  return acc;
}

// f: X -> Y gives f^dual: Y* -> X* via the (coev, ev) duality
template <class C>
typename C::Mor dual_mor(C& c, const typename C::Mor& f) {
  auto X = c.mor_src(f), Y = c.mor_dst(f);
  auto Xs = c.dual(X), Ys = c.dual(Y);
  return pipe(c, {c.runit_inv(Ys),
                  c.tensor(c.id(Ys), c.coev(X)),
                  c.assoc_inv(Ys, X, Xs),
                  c.tensor(c.tensor(c.id(Ys), f), c.id(Xs)),
                  c.tensor(c.ev(Y), c.id(Xs)),
                  c.lunit(Xs)});
}

// the same map computed with the (coev2, ev2) duality
template <class C>
typename C::Mor codual_mor(C& c, const typename C::Mor& f) {
  auto X = c.mor_src(f), Y = c.mor_dst(f);
  auto Xs = c.dual(X), Ys = c.dual(Y);
  return pipe(c, {c.lunit_inv(Ys),
                  c.tensor(c.coev2(X), c.id(Ys)),
                  c.assoc(Xs, X, Ys),
                  c.tensor(c.id(Xs), c.tensor(f, c.id(Ys))),
                  c.tensor(c.id(Xs), c.ev2(Y)),
                  c.runit(Xs)});
}

template <class C>
Cyc trace_left(C& c, const typename C::Mor& f) {
  auto X = c.mor_src(f);
  auto Xs = c.dual(X);
  return c.scalar_of(pipe(c, {c.coev2(X), c.tensor(c.id(Xs), f), c.ev(X)}));
}

template <class C>
Cyc trace_right(C& c, const typename C::Mor& f) {
  auto X = c.mor_src(f);
  auto Xs = c.dual(X);
  return c.scalar_of(pipe(c, {c.coev(X), c.tensor(f, c.id(Xs)), c.ev2(X)}));
}

template <class C>
Cyc dim_left(C& c, const typename C::Obj& X) {
  return trace_left(c, c.id(X));
}
template <class C>
Cyc dim_right(C& c, const typename C::Obj& X) {
  return trace_right(c, c.id(X));
}

// canonical iso (X(x)Y)* -> Y*(x)X*
template <class C>
typename C::Mor dual_tensor_iso(C& c, const typename C::Obj& X, const typename C::Obj& Y) {
  auto XY = c.tensor_obj(X, Y);
  auto Z = c.dual(XY);
  auto Xs = c.dual(X), Ys = c.dual(Y);
  typename C::Mor theta = pipe(c, {c.assoc(Z, X, Y), c.ev(XY)});  // (Z(x)X)(x)Y -> 1
  auto ZX = c.tensor_obj(Z, X);
  typename C::Mor zeta = pipe(c, {c.runit_inv(ZX),
                                  c.tensor(c.id(ZX), c.coev(Y)),
                                  c.assoc_inv(ZX, Y, Ys),
                                  c.tensor(theta, c.id(Ys)),
                                  c.lunit(Ys)});  // Z(x)X -> Y*
  return pipe(c, {c.runit_inv(Z),
                  c.tensor(c.id(Z), c.coev(X)),
                  c.assoc_inv(Z, X, Xs),
                  c.tensor(zeta, c.id(Xs))});
}

// scalar r with f = r * g, if it exists (g nonzero)
template <class C>
std::optional<Cyc> mor_ratio(C& c, const typename C::Mor& f, const typename C::Mor& g) {
  std::vector<Cyc> fc = c.mor_coords(f), gc = c.mor_coords(g);
  if (fc.size() != gc.size()) return std::nullopt;
  for (size_t i = 0; i < gc.size(); ++i) {
    if (gc[i].is_zero()) continue;
    Cyc r = fc[i] / gc[i];
    if (c.eq(f, c.scale(r, g))) return r;
    return std::nullopt;
  }
  return std::nullopt;
}

// two-sided inverse of f, solved linearly in Hom(Y, X)
template <class C>
std::optional<typename C::Mor> invert_mor(C& c, const typename C::Mor& f) {
  auto X = c.mor_src(f), Y = c.mor_dst(f);
  std::vector<typename C::Mor> basis = c.hom_basis(Y, X);
  if (basis.empty()) return std::nullopt;
  std::vector<Cyc> target;
  {
    std::vector<Cyc> idY = c.mor_coords(c.id(Y));
    std::vector<Cyc> idX = c.mor_coords(c.id(X));
    target = idY;
    target.insert(target.end(), idX.begin(), idX.end());
  }
  Mat A(target.size(), basis.size());
  for (size_t j = 0; j < basis.size(); ++j) {
    std::vector<Cyc> col = c.mor_coords(c.compose(f, basis[j]));
    std::vector<Cyc> col2 = c.mor_coords(c.compose(basis[j], f));
    col.insert(col.end(), col2.begin(), col2.end());
    for (size_t i = 0; i < col.size(); ++i) A.at(i, j) = col[i];
  }
  std::vector<Cyc> b(target.begin(), target.end());
  auto sol = solve_linear(A, b);
  if (!sol) return std::nullopt;
  typename C::Mor g = c.zero(Y, X);
  for (size_t j = 0; j < basis.size(); ++j)
    if (!(*sol)[j].is_zero()) g = c.add(g, c.scale((*sol)[j], basis[j]));
  return g;
}

// deterministic search for an isomorphism X -> Y (nullopt if none exists)
template <class C>
std::optional<typename C::Mor> find_isomorphism(C& c, const typename C::Obj& X, const typename C::Obj& Y) {
  std::vector<typename C::Mor> basis = c.hom_basis(X, Y);
  if (basis.empty()) {
    if (c.obj_eq(X, Y)) return c.id(X);  // zero objects
    return std::nullopt;
  }
  size_t dim = c.mor_coords(basis[0]).size();
  // an invertible combination exists iff a polynomial of bounded degree in
  // lambda is nonzero; testing enough sample points decides it
  size_t tries = basis.size() * dim + 2;
  for (size_t t = 0; t < tries; ++t) {
    typename C::Mor cand = c.zero(X, Y);
    Cyc lam(static_cast<long>(t + 1));
    Cyc coef = Cyc::one();
    for (const auto& u : basis) {
      cand = c.add(cand, c.scale(coef, u));
      coef *= lam;
    }
    if (invert_mor(c, cand)) return cand;
  }
  // also try the basis elements themselves (covers degenerate cases)
  for (const auto& u : basis)
    if (invert_mor(c, u)) return u;
  return std::nullopt;
}

}  // namespace picardium
