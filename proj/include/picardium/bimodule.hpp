#pragma once

// The monoidal category of A-A bimodules inside a base category C, for A a
// symmetric special Frobenius algebra.  Tensor products over A are cut out of
// base tensor products by the standard idempotent (the coproduct-insertion
// projector), associators and unit/duality data are built from the base ones,
// and hom spaces are computed as intertwiner subspaces.  The construction is
// generic in C and can be nested.

#include <picardium/algebra.hpp>

#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace picardium {

template <class C>
struct BimodData {
  typename C::Obj carrier;
  typename C::Mor rho;     // A (x) X -> X,  left action
  typename C::Mor varrho;  // X (x) A -> X,  right action
};

template <class C>
class BimodCat {
 public:
  using Obj = std::shared_ptr<const BimodData<C>>;
  struct Mor {
    Obj src, dst;
    typename C::Mor f;  // underlying morphism between the carriers
  };

  C& base;
  AlgebraOb<C> A;
  Cyc beta;  // m o delta = beta id on the algebra as handed in

  BimodCat(C& b, AlgebraOb<C> alg) : base(b), A(std::move(alg)) {
    auto r = mor_ratio(base, base.compose(A.m, A.delta), base.id(A.A));
    if (!r || r->is_zero())
      throw std::invalid_argument("BimodCat: algebra is not special (m o delta not a nonzero multiple of id)");
    beta = *r;
    // normalise the Frobenius structure so that m o delta = id; every
    // projector and duality formula below assumes this
    delta_ = base.scale(beta.inverse(), A.delta);
    eps_ = base.scale(beta, A.eps);
    unit_ = make_obj(A.A, A.m, A.m);
  }

  Obj make_obj(typename C::Obj carrier, typename C::Mor rho, typename C::Mor varrho) const {
    auto d = std::make_shared<BimodData<C>>();
    d->carrier = std::move(carrier);
    d->rho = std::move(rho);
    d->varrho = std::move(varrho);
    return d;
  }

  Obj unit() const { return unit_; }

  bool obj_eq(const Obj& x, const Obj& y) const {
    if (x == y) return true;
    return base.obj_eq(x->carrier, y->carrier) && base.eq(x->rho, y->rho) &&
           base.eq(x->varrho, y->varrho);
  }
  Obj mor_src(const Mor& f) const { return f.src; }
  Obj mor_dst(const Mor& f) const { return f.dst; }

  Mor id(const Obj& x) const { return {x, x, base.id(x->carrier)}; }
  Mor zero(const Obj& s, const Obj& d) const { return {s, d, base.zero(s->carrier, d->carrier)}; }

  Mor compose(const Mor& f, const Mor& g) const {  // f after g
    if (!obj_eq(g.dst, f.src)) throw std::invalid_argument("BimodCat::compose: type mismatch");
    return {g.src, f.dst, base.compose(f.f, g.f)};
  }
  Mor add(const Mor& f, const Mor& g) const {
    if (!obj_eq(f.src, g.src) || !obj_eq(f.dst, g.dst))
      throw std::invalid_argument("BimodCat::add: type mismatch");
    return {f.src, f.dst, base.add(f.f, g.f)};
  }
  Mor scale(const Cyc& c, const Mor& f) const { return {f.src, f.dst, base.scale(c, f.f)}; }
  bool eq(const Mor& f, const Mor& g) const {
    return obj_eq(f.src, g.src) && obj_eq(f.dst, g.dst) && base.eq(f.f, g.f);
  }
  bool is_zero_mor(const Mor& f) const { return base.is_zero_mor(f.f); }

  // ----- structural validation -------------------------------------------

  bool is_object(const Obj& x) {
    auto& X = x->carrier;
    auto& Aob = A.A;
    bool lassoc = base.eq(base.compose(x->rho, base.tensor(A.m, base.id(X))),
                          pipe(base, {base.assoc(Aob, Aob, X), base.tensor(base.id(Aob), x->rho), x->rho}));
    bool lunit = base.eq(pipe(base, {base.lunit_inv(X), base.tensor(A.eta, base.id(X)), x->rho}), base.id(X));
    bool rassoc = base.eq(pipe(base, {base.assoc(X, Aob, Aob), base.tensor(base.id(X), A.m), x->varrho}),
                          base.compose(x->varrho, base.tensor(x->varrho, base.id(Aob))));
    bool runit = base.eq(pipe(base, {base.runit_inv(X), base.tensor(base.id(X), A.eta), x->varrho}), base.id(X));
    bool comm = base.eq(base.compose(x->varrho, base.tensor(x->rho, base.id(Aob))),
                        pipe(base, {base.assoc(Aob, X, Aob), base.tensor(base.id(Aob), x->varrho), x->rho}));
    return lassoc && lunit && rassoc && runit && comm;
  }

  bool is_morphism(const Mor& m) {
    auto& Aob = A.A;
    bool left = base.eq(base.compose(m.f, m.src->rho),
                        base.compose(m.dst->rho, base.tensor(base.id(Aob), m.f)));
    bool right = base.eq(base.compose(m.f, m.src->varrho),
                         base.compose(m.dst->varrho, base.tensor(m.f, base.id(Aob))));
    return left && right;
  }

  // ----- tensor product over A -------------------------------------------

  struct TensorParts {
    Obj ob;
    typename C::Mor e0;  // carrier(ob) -> X (x) Y
    typename C::Mor r0;  // X (x) Y -> carrier(ob),  e0 o r0 = projector
    Obj kx, ky;          // owning copies of the key objects, so that their
                         // addresses cannot be recycled while the cache lives
  };

  // projector on X (x) Y whose image is the tensor product over A
  typename C::Mor tensor_projector(const Obj& x, const Obj& y) {
    auto& X = x->carrier;
    auto& Y = y->carrier;
    auto& Aob = A.A;
    auto de = base.compose(delta_, A.eta);  // 1 -> A (x) A
    return pipe(base, {base.tensor(base.id(X), base.lunit_inv(Y)),
                       base.tensor(base.id(X), base.tensor(de, base.id(Y))),
                       base.tensor(base.id(X), base.assoc(Aob, Aob, Y)),
                       base.assoc_inv(X, Aob, base.tensor_obj(Aob, Y)),
                       base.tensor(x->varrho, y->rho)});
  }

  const TensorParts& tensor_parts(const Obj& x, const Obj& y) {
    auto key = std::make_pair(static_cast<const void*>(x.get()), static_cast<const void*>(y.get()));
    auto it = tensor_cache_.find(key);
    if (it != tensor_cache_.end()) return it->second;
    auto& X = x->carrier;
    auto& Y = y->carrier;
    auto& Aob = A.A;
    auto P = tensor_projector(x, y);
    auto sp = base.split(P);
    auto rho = pipe(base, {base.tensor(base.id(Aob), sp.e), base.assoc_inv(Aob, X, Y),
                           base.tensor(x->rho, base.id(Y)), sp.r});
    auto varrho = pipe(base, {base.tensor(sp.e, base.id(Aob)), base.assoc(X, Y, Aob),
                              base.tensor(base.id(X), y->varrho), sp.r});
    TensorParts tp{make_obj(sp.im, std::move(rho), std::move(varrho)), sp.e, sp.r, x, y};
    return tensor_cache_.emplace(key, std::move(tp)).first->second;
  }

  Obj tensor_obj(const Obj& x, const Obj& y) { return tensor_parts(x, y).ob; }

  Mor tensor(const Mor& f, const Mor& g) {
    auto& s = tensor_parts(f.src, g.src);
    auto& d = tensor_parts(f.dst, g.dst);
    return {s.ob, d.ob, pipe(base, {s.e0, base.tensor(f.f, g.f), d.r0})};
  }

  Mor assoc(const Obj& x, const Obj& y, const Obj& z) {
    auto& yz = tensor_parts(y, z);
    auto& xy = tensor_parts(x, y);
    auto& l = tensor_parts(xy.ob, z);
    auto& r = tensor_parts(x, yz.ob);
    auto f = pipe(base, {l.e0, base.tensor(xy.e0, base.id(z->carrier)),
                         base.assoc(x->carrier, y->carrier, z->carrier),
                         base.tensor(base.id(x->carrier), yz.r0), r.r0});
    return {l.ob, r.ob, std::move(f)};
  }
  Mor assoc_inv(const Obj& x, const Obj& y, const Obj& z) {
    auto& yz = tensor_parts(y, z);
    auto& xy = tensor_parts(x, y);
    auto& l = tensor_parts(xy.ob, z);
    auto& r = tensor_parts(x, yz.ob);
    auto f = pipe(base, {r.e0, base.tensor(base.id(x->carrier), yz.e0),
                         base.assoc_inv(x->carrier, y->carrier, z->carrier),
                         base.tensor(xy.r0, base.id(z->carrier)), l.r0});
    return {r.ob, l.ob, std::move(f)};
  }

  // ----- unit constraints --------------------------------------------------

  // right coaction X -> X (x) A and left coaction X -> A (x) X induced by
  // the (normalised) Frobenius structure
  typename C::Mor coaction_r(const Obj& x) {
    auto& X = x->carrier;
    auto& Aob = A.A;
    auto de = base.compose(delta_, A.eta);
    return pipe(base, {base.runit_inv(X), base.tensor(base.id(X), de),
                       base.assoc_inv(X, Aob, Aob), base.tensor(x->varrho, base.id(Aob))});
  }
  typename C::Mor coaction_l(const Obj& x) {
    auto& X = x->carrier;
    auto& Aob = A.A;
    auto de = base.compose(delta_, A.eta);
    return pipe(base, {base.lunit_inv(X), base.tensor(de, base.id(X)),
                       base.assoc(Aob, Aob, X), base.tensor(base.id(Aob), x->rho)});
  }

  Mor lunit(const Obj& x) {
    auto& t = tensor_parts(unit_, x);
    return {t.ob, x, base.compose(x->rho, t.e0)};
  }
  Mor lunit_inv(const Obj& x) {
    auto& t = tensor_parts(unit_, x);
    return {x, t.ob, base.compose(t.r0, coaction_l(x))};
  }
  Mor runit(const Obj& x) {
    auto& t = tensor_parts(x, unit_);
    return {t.ob, x, base.compose(x->varrho, t.e0)};
  }
  Mor runit_inv(const Obj& x) {
    auto& t = tensor_parts(x, unit_);
    return {x, t.ob, base.compose(t.r0, coaction_r(x))};
  }

  // ----- duality ------------------------------------------------------------

  Obj dual(const Obj& x) {
    auto it = dual_cache_.find(x.get());
    if (it != dual_cache_.end()) return it->second.second;
    auto& X = x->carrier;
    auto Xs = base.dual(X);
    auto& Aob = A.A;
    // left action on X* transposes the right action of X (second duality pair)
    auto rho = pipe(base, {base.lunit_inv(base.tensor_obj(Aob, Xs)),
                           base.tensor(base.coev2(X), base.id(base.tensor_obj(Aob, Xs))),
                           base.assoc(Xs, X, base.tensor_obj(Aob, Xs)),
                           base.tensor(base.id(Xs), base.assoc_inv(X, Aob, Xs)),
                           base.tensor(base.id(Xs), base.tensor(x->varrho, base.id(Xs))),
                           base.tensor(base.id(Xs), base.ev2(X)),
                           base.runit(Xs)});
    // right action on X* transposes the left action of X (first duality pair)
    auto varrho = pipe(base, {base.runit_inv(base.tensor_obj(Xs, Aob)),
                              base.tensor(base.id(base.tensor_obj(Xs, Aob)), base.coev(X)),
                              base.assoc(Xs, Aob, base.tensor_obj(X, Xs)),
                              base.tensor(base.id(Xs), base.assoc_inv(Aob, X, Xs)),
                              base.tensor(base.id(Xs), base.tensor(x->rho, base.id(Xs))),
                              base.assoc_inv(Xs, X, Xs),
                              base.tensor(base.ev(X), base.id(Xs)),
                              base.lunit(Xs)});
    Obj d = make_obj(Xs, std::move(rho), std::move(varrho));
    dual_cache_.emplace(x.get(), std::make_pair(x, d));  // keep x alive: the
                                                         // key address must not be recycled
    return d;
  }

  // ev : X* (x)_A X -> A
  Mor ev(const Obj& x) {
    Obj xs = dual(x);
    auto& t = tensor_parts(xs, x);
    auto& Aob = A.A;
    auto f = pipe(base, {t.e0, base.tensor(base.id(xs->carrier), coaction_r(x)),
                         base.assoc_inv(xs->carrier, x->carrier, Aob),
                         base.tensor(base.ev(x->carrier), base.id(Aob)),
                         base.lunit(Aob)});
    return {t.ob, unit_, std::move(f)};
  }
  // coev : A -> X (x)_A X*
  Mor coev(const Obj& x) {
    Obj xs = dual(x);
    auto& t = tensor_parts(x, xs);
    auto& Aob = A.A;
    auto f = pipe(base, {base.runit_inv(Aob), base.tensor(base.id(Aob), base.coev(x->carrier)),
                         base.assoc_inv(Aob, x->carrier, xs->carrier),
                         base.tensor(x->rho, base.id(xs->carrier)), t.r0});
    return {unit_, t.ob, std::move(f)};
  }
  // ev2 : X (x)_A X* -> A
  Mor ev2(const Obj& x) {
    Obj xs = dual(x);
    auto& t = tensor_parts(x, xs);
    auto& Aob = A.A;
    auto f = pipe(base, {t.e0, base.tensor(coaction_l(x), base.id(xs->carrier)),
                         base.assoc(Aob, x->carrier, xs->carrier),
                         base.tensor(base.id(Aob), base.ev2(x->carrier)),
                         base.runit(Aob)});
    return {t.ob, unit_, std::move(f)};
  }
  // coev2 : A -> X* (x)_A X
  Mor coev2(const Obj& x) {
    Obj xs = dual(x);
    auto& t = tensor_parts(xs, x);
    auto& Aob = A.A;
    auto f = pipe(base, {base.lunit_inv(Aob), base.tensor(base.coev2(x->carrier), base.id(Aob)),
                         base.assoc(xs->carrier, x->carrier, Aob),
                         base.tensor(base.id(xs->carrier), x->varrho), t.r0});
    return {unit_, t.ob, std::move(f)};
  }

  // ----- hom spaces, sums, splittings --------------------------------------

  std::vector<Mor> hom_basis(const Obj& x, const Obj& y) {
    std::vector<typename C::Mor> bb = base.hom_basis(x->carrier, y->carrier);
    std::vector<Mor> out;
    if (bb.empty()) return out;
    auto& Aob = A.A;
    // rows: coordinates of both intertwiner defects per base basis vector
    std::vector<std::vector<Cyc>> cols(bb.size());
    size_t nrows = 0;
    for (size_t j = 0; j < bb.size(); ++j) {
      auto lv = base.mor_coords(base.add(
          base.compose(bb[j], x->rho),
          base.scale(Cyc(-1L), base.compose(y->rho, base.tensor(base.id(Aob), bb[j])))));
      auto rv = base.mor_coords(base.add(
          base.compose(bb[j], x->varrho),
          base.scale(Cyc(-1L), base.compose(y->varrho, base.tensor(bb[j], base.id(Aob))))));
      cols[j] = std::move(lv);
      cols[j].insert(cols[j].end(), rv.begin(), rv.end());
      nrows = cols[j].size();
    }
    Mat M(nrows, bb.size());
    for (size_t j = 0; j < bb.size(); ++j)
      for (size_t i = 0; i < nrows; ++i) M.at(i, j) = cols[j][i];
    Mat K = nullspace(M);
    for (size_t k = 0; k < K.cols; ++k) {
      typename C::Mor f = base.zero(x->carrier, y->carrier);
      for (size_t j = 0; j < bb.size(); ++j)
        if (!K.at(j, k).is_zero()) f = base.add(f, base.scale(K.at(j, k), bb[j]));
      out.push_back({x, y, std::move(f)});
    }
    return out;
  }

  std::vector<Cyc> mor_coords(const Mor& f) const { return base.mor_coords(f.f); }

  Cyc scalar_of(const Mor& f) const {
    if (!obj_eq(f.src, unit_) || !obj_eq(f.dst, unit_))
      throw std::invalid_argument("BimodCat::scalar_of: not an endomorphism of the unit");
    if (base.is_zero_mor(f.f)) return Cyc::zero();
    std::vector<Cyc> fc = base.mor_coords(f.f), ic = base.mor_coords(base.id(A.A));
    Cyc lam;
    for (size_t i = 0; i < fc.size(); ++i)
      if (!ic[i].is_zero()) {
        lam = fc[i] / ic[i];
        break;
      }
    for (size_t i = 0; i < fc.size(); ++i)
      if (!(fc[i] == lam * ic[i]))
        throw std::invalid_argument("BimodCat::scalar_of: not a multiple of the identity");
    return lam;
  }

  struct Sum {
    Obj total;
    std::vector<Mor> inj, proj;
  };
  Sum direct_sum(const std::vector<Obj>& parts) {
    std::vector<typename C::Obj> carriers;
    for (auto& p : parts) carriers.push_back(p->carrier);
    auto bs = base.direct_sum(carriers);
    auto& Aob = A.A;
    auto rho = base.zero(base.tensor_obj(Aob, bs.total), bs.total);
    auto varrho = base.zero(base.tensor_obj(bs.total, Aob), bs.total);
    for (size_t i = 0; i < parts.size(); ++i) {
      rho = base.add(rho, pipe(base, {base.tensor(base.id(Aob), bs.proj[i]), parts[i]->rho, bs.inj[i]}));
      varrho = base.add(varrho, pipe(base, {base.tensor(bs.proj[i], base.id(Aob)), parts[i]->varrho, bs.inj[i]}));
    }
    Sum s;
    s.total = make_obj(bs.total, std::move(rho), std::move(varrho));
    for (size_t i = 0; i < parts.size(); ++i) {
      s.inj.push_back({parts[i], s.total, bs.inj[i]});
      s.proj.push_back({s.total, parts[i], bs.proj[i]});
    }
    return s;
  }

  struct Split {
    Obj im;
    Mor e;  // im -> X
    Mor r;  // X -> im
  };
  Split split(const Mor& P) {
    if (!obj_eq(P.src, P.dst)) throw std::invalid_argument("BimodCat::split: not an endomorphism");
    auto sp = base.split(P.f);
    auto& Aob = A.A;
    const Obj& x = P.src;
    auto rho = pipe(base, {base.tensor(base.id(Aob), sp.e), x->rho, sp.r});
    auto varrho = pipe(base, {base.tensor(sp.e, base.id(Aob)), x->varrho, sp.r});
    Split out;
    out.im = make_obj(sp.im, std::move(rho), std::move(varrho));
    out.e = {out.im, x, sp.e};
    out.r = {x, out.im, sp.r};
    return out;
  }

 private:
  typename C::Mor delta_, eps_;
  Obj unit_;
  std::map<std::pair<const void*, const void*>, TensorParts> tensor_cache_;
  std::map<const void*, std::pair<Obj, Obj>> dual_cache_;
};

// the free bimodule A (x) V (x) A on a base object V
template <class C>
typename BimodCat<C>::Obj free_bimodule(BimodCat<C>& bc, const typename C::Obj& V) {
  C& c = bc.base;
  auto& Aob = bc.A.A;
  auto AV = c.tensor_obj(Aob, V);
  auto X = c.tensor_obj(AV, Aob);
  auto rho = pipe(c, {c.assoc_inv(Aob, AV, Aob),
                      c.tensor(c.assoc_inv(Aob, Aob, V), c.id(Aob)),
                      c.tensor(c.tensor(bc.A.m, c.id(V)), c.id(Aob))});
  auto varrho = pipe(c, {c.assoc(AV, Aob, Aob), c.tensor(c.id(AV), bc.A.m)});
  return bc.make_obj(X, std::move(rho), std::move(varrho));
}

}  // namespace picardium
