#pragma once
// End-to-end verification pipelines.  Each pipeline assembles the
// constructions from the other headers into a list of named certificates,
// every one of which is an exact identity of morphisms.  Pipelines throw
// named errors when their preconditions fail and otherwise always return a
// full report.

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "picardium/algebra.hpp"
#include "picardium/bimodule.hpp"
#include "picardium/fixed.hpp"
#include "picardium/graded.hpp"
#include "picardium/morita.hpp"
#include "picardium/pointed.hpp"
#include "picardium/rz.hpp"
#include "picardium/transport.hpp"
#include "picardium/trivialise.hpp"

namespace picardium {

struct NotAdmissible : std::runtime_error {
  explicit NotAdmissible(const std::string& w) : std::runtime_error("NotAdmissible: " + w) {}
};
struct RepsNotClosed : std::runtime_error {
  explicit RepsNotClosed(const std::string& w) : std::runtime_error("RepsNotClosed: " + w) {}
};
struct BaseAlgebraUnqualified : std::runtime_error {
  explicit BaseAlgebraUnqualified(const std::string& w)
      : std::runtime_error("BaseAlgebraUnqualified: " + w) {}
};

struct Cert {
  std::string claim;
  bool passed = false;
  std::string witness;  // free-form note: a scalar, a convention, a count
};

struct VerifyReport {
  std::string pipeline;
  std::vector<Cert> certs;
  void add(std::string claim, bool passed, std::string witness = "") {
    certs.push_back({std::move(claim), passed, std::move(witness)});
  }
  bool ok() const {
    if (certs.empty()) return false;
    for (const auto& c : certs)
      if (!c.passed) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// shared pieces

// the embedding of the twisted group algebra into its endomorphism algebra
// and its retraction; s o i = id and i o s is the averaging projector of the
// automorphism family
template <class C>
struct EmbeddingPair {
  typename C::Mor i;  // Q -> Q (x) Q*
  typename C::Mor s;  // Q (x) Q* -> Q
};

template <class C>
EmbeddingPair<C> q_endo_embedding(C& c, const QAlgebra<C>& q) {
  auto Q = q.alg.A;
  auto Qs = c.dual(Q);
  EmbeddingPair<C> out;
  out.i = pipe(c, {c.runit_inv(Q), c.tensor(c.id(Q), c.coev(Q)), c.assoc_inv(Q, Q, Qs),
                   c.tensor(q.alg.m, c.id(Qs))});
  out.s = pipe(c, {c.tensor(q.alg.delta, c.id(Qs)), c.assoc(Q, Q, Qs),
                   c.tensor(c.id(Q), c.ev2(Q)), c.runit(Q)});
  return out;
}

// certificates that the fixed algebra of the automorphism family on the
// endomorphism algebra is the twisted group algebra itself
template <class C>
void fixed_is_q_certs(C& c, const AlphaFamily<C>& af, VerifyReport& rep) {
  auto& q = af.q;
  auto& A = af.endo;
  auto pair = q_endo_embedding(c, q);
  rep.add("retraction of the embedding is the identity on the twisted group algebra",
          c.eq(c.compose(pair.s, pair.i), c.id(q.alg.A)));
  typename C::Mor P = c.zero(A.A, A.A);
  for (const auto& al : af.alpha) P = c.add(P, al);
  P = c.scale(Cyc::one() / Cyc(static_cast<long>(af.alpha.size())), P);
  rep.add("embedding then retraction is the averaging projector of the family",
          c.eq(c.compose(pair.i, pair.s), P));
  rep.add("embedding is an algebra morphism into the endomorphism algebra",
          is_algebra_hom(c, q.alg, A, pair.i));
  auto fx = fixed_algebra(c, A, af.alpha);
  rep.add("projector-omission identities of the fixed algebra", fx.omission_ok);
  rep.add("fixed algebra is Frobenius", fx.report.is_frobenius());
  rep.add("fixed algebra is symmetric (inherited)", fx.report.symmetric && fx.ambient_symmetric);
  rep.add("fixed algebra specialness",
          fx.report.special && fx.absolutely_simple && !fx.loop.is_zero(), fx.specialness);
  auto itil = c.compose(fx.r, pair.i);
  auto itilinv = c.compose(pair.s, fx.e);
  rep.add("embedding descends to an isomorphism onto the fixed algebra",
          c.eq(c.compose(itil, itilinv), c.id(fx.alg.A)) &&
              c.eq(c.compose(itilinv, itil), c.id(q.alg.A)));
  rep.add("the isomorphism matches the full Frobenius structure (unit scalar 1)",
          is_frobenius_hom(c, q.alg, fx.alg, itil));
}

namespace detail {

// certify that the equivalence induced by the Morita context sends the
// twist class of alpha[h] to the simple object of grade emb(h)
inline bool section_lands_on(GradedCat& c, const MoritaContext<GradedCat>& mc,
                             const GradedCat::Mor& alpha_h, const GradedObject& target) {
  auto sw = swap_context(mc);
  auto applied = morita_apply(c, sw, twist_class(c, mc.B, alpha_h));
  return find_isomorphism(c, applied.carrier, target).has_value();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// pipeline: recovery of the subgroup from the twist classes

inline VerifyReport verify_prop_recover_H(GradedCat& c, const SubgroupEmbedding& emb,
                                          const Cochain& omega) {
  VerifyReport rep;
  rep.pipeline = "recover-subgroup";
  auto fam = graded_family(c, emb);
  auto af = alpha_family(c, fam, omega);
  auto& q = af.q;
  auto Q = q.alg.A;
  Cyc dimQ = dim_left(c, Q);
  if (dimQ.is_zero()) throw NotAdmissible("the twisted group algebra has dimension zero");
  rep.add("twisted group algebra has nonzero dimension", true);
  rep.add("twisted group algebra is special symmetric Frobenius",
          check_algebra(c, q.alg).is_frobenius());
  auto mc = unit_endo_context(c, Q);
  rep.add("Morita context between the unit and the endomorphism algebra",
          verify_morita_context(c, mc).ok());
  auto Qs = c.dual(Q);
  int n = emb.sub.order();
  for (int h = 0; h < n; ++h) {
    auto Lh = fam.L[static_cast<size_t>(h)];
    auto carrier = c.tensor_obj(c.tensor_obj(Q, Lh), Qs);
    Bimod2<GradedCat> Xh{carrier, xh_left_action(c, q, Lh), xh_right_action(c, q, Lh),
                         af.endo.A, af.endo.A};
    auto tw = twist_class(c, af.endo, af.alpha[static_cast<size_t>(h)]);
    auto F = intertwiner_F(c, q, Lh, af.f[static_cast<size_t>(h)]);
    bool ok = is_bimodule_map(c, af.endo, af.endo, Xh, tw, F) && invert_mor(c, F).has_value();
    rep.add("twist class of member " + std::to_string(h) +
                " is the conjugated invertible bimodule (explicit intertwiner)",
            ok);
    rep.add("equivalence sends the twist class of member " + std::to_string(h) +
                " to the matching simple object",
            detail::section_lands_on(c, mc, af.alpha[static_cast<size_t>(h)],
                                     GradedObject::simple(emb.ambient_of(h))));
  }
  // non-membership: for grades outside the subgroup the candidate carrier is
  // not isomorphic to the endomorphism algebra, not even as an object
  for (int g = 0; g < c.ctx.G.order(); ++g) {
    bool in_sub = false;
    for (int h = 0; h < n; ++h)
      if (emb.ambient_of(h) == g) in_sub = true;
    if (in_sub) continue;
    auto carrier = c.tensor_obj(c.tensor_obj(Q, GradedObject::simple(g)), Qs);
    rep.add("grade " + std::to_string(g) + " outside the subgroup gives a non-isomorphic carrier",
            !find_isomorphism(c, carrier, af.endo.A).has_value());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// pipeline: bijection between trivialisations and automorphism families

struct BijectionOptions {
  size_t max_families = 16;   // enumerate all solutions up to this many,
                              // otherwise one representative per class
  int section_limit = 2;      // run the equivalence check when |H| is at most this
};

inline VerifyReport verify_thm_bijection(GradedCat& c, const SubgroupEmbedding& emb,
                                         const BijectionOptions& opt = {}) {
  VerifyReport rep;
  rep.pipeline = "trivialisation-bijection";
  auto pd = picard_data(c);
  for (int h = 0; h < emb.sub.order(); ++h) {
    int g = emb.ambient_of(h);
    bool adm = false;
    for (int x : pd.admissible)
      if (x == g) adm = true;
    if (!adm)
      throw NotAdmissible("subgroup member of grade " + std::to_string(g) +
                          " has categorical dimension different from 1");
  }
  auto triv = trivialise(c.ctx.psi, emb);
  if (!triv.solvable) throw NotAdmissible("the associator does not trivialise on the subgroup");
  rep.add("subgroup is admissible: unit dimensions and a trivialisation exist", true,
          std::to_string(triv.solution_count) + " solutions");
  auto classes = trivialisation_classes(triv.solutions, triv.Nsecond);
  rep.add("equivalence classes of trivialisations enumerated", !classes.empty(),
          std::to_string(classes.size()) + " classes");
  auto fam = graded_family(c, emb);
  // which solutions get the full treatment
  std::vector<size_t> chosen;
  if (triv.solutions.size() <= opt.max_families) {
    for (size_t i = 0; i < triv.solutions.size(); ++i) chosen.push_back(i);
  } else {
    for (const auto& cl : classes) chosen.push_back(cl.front());
  }
  std::vector<size_t> reps_of_classes;
  for (const auto& cl : classes) reps_of_classes.push_back(cl.front());
  std::vector<Cochain> recovered_reps;
  size_t pass_fwd = 0, pass_bwd = 0;
  bool all_fwd = true, all_bwd = true, section_ok = true;
  bool run_section = emb.sub.order() <= opt.section_limit;
  for (size_t idx : chosen) {
    const Cochain& omega = triv.solutions[idx];
    auto af = alpha_family(c, fam, omega);
    auto rec = extract_omega(c, fam, af.q, af.alpha, triv.Nprime);
    bool fwd = rec.unique && rec.invertible && cochain_ratio(rec.omega, omega).is_zero();
    all_fwd = all_fwd && fwd;
    if (fwd) ++pass_fwd;
    bool is_class_rep = false;
    for (size_t r : reps_of_classes)
      if (r == idx) is_class_rep = true;
    if (is_class_rep) {
      if (fwd) recovered_reps.push_back(rec.omega);
      // independent reverse round-trip: rebuild the family from the
      // recovered cochain and compare morphism by morphism
      auto af2 = alpha_family(c, fam, rec.omega);
      bool bwd = af2.alpha.size() == af.alpha.size();
      for (size_t k = 0; bwd && k < af.alpha.size(); ++k)
        bwd = c.eq(af2.alpha[k], af.alpha[k]);
      all_bwd = all_bwd && bwd;
      if (bwd) ++pass_bwd;
      if (run_section) {
        auto mc = unit_endo_context(c, af.q.alg.A);
        for (int h = 0; h < emb.sub.order(); ++h)
          section_ok = section_ok &&
                       detail::section_lands_on(c, mc, af.alpha[static_cast<size_t>(h)],
                                                GradedObject::simple(emb.ambient_of(h)));
      }
    }
  }
  rep.add("recovering the cochain from the family returns the input",
          all_fwd, std::to_string(pass_fwd) + "/" + std::to_string(chosen.size()));
  rep.add("rebuilding the family from the recovered cochain returns the input",
          all_bwd, std::to_string(pass_bwd) + "/" + std::to_string(reps_of_classes.size()));
  if (run_section)
    rep.add("equivalence sends each twist class to its subgroup member", section_ok);
  if (recovered_reps.size() >= 2) {
    bool distinct = true;
    for (size_t i = 0; i < recovered_reps.size(); ++i)
      for (size_t j = i + 1; j < recovered_reps.size(); ++j)
        if (cochains_cohomologous(recovered_reps[i], recovered_reps[j], triv.Nsecond))
          distinct = false;
    rep.add("inequivalent classes stay inequivalent after the round trip", distinct,
            std::to_string(recovered_reps.size()) + " classes compared");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// pipeline: the fixed algebra of the automorphism family is the twisted
// group algebra

inline VerifyReport verify_thm_fixed_is_Q(GradedCat& c, const SubgroupEmbedding& emb,
                                          const Cochain& omega) {
  VerifyReport rep;
  rep.pipeline = "fixed-algebra-identification";
  auto fam = graded_family(c, emb);
  auto af = alpha_family(c, fam, omega);
  fixed_is_q_certs(c, af, rep);
  return rep;
}

// ---------------------------------------------------------------------------
// pipeline: the lift of the subgroup through a Morita equivalence

// build a pointed family from caller-supplied invertible bimodule
// representatives; structure maps are found deterministically and
// normalized so that tensoring with the unit gives the unitors
template <class C>
PointedFamily<BimodCat<C>> pointed_family_from_reps(
    BimodCat<C>& bc, const FiniteGroup& H, const std::vector<typename BimodCat<C>::Obj>& L) {
  using BC = BimodCat<C>;
  if (static_cast<int>(L.size()) != H.order())
    throw RepsNotClosed("expected one representative per group element");
  if (!bc.obj_eq(L[0], bc.unit()))
    throw RepsNotClosed("the representative of the identity must be the unit bimodule");
  PointedFamily<BC> fam;
  fam.H = H;
  fam.L = L;
  int n = H.order();
  fam.b.resize(static_cast<size_t>(n));
  fam.binv.resize(static_cast<size_t>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      typename BC::Mor b = bc.zero(L[0], L[0]);
      if (g == 0)
        b = bc.lunit(L[static_cast<size_t>(h)]);
      else if (h == 0)
        b = bc.runit(L[static_cast<size_t>(g)]);
      else {
        auto src = bc.tensor_obj(L[static_cast<size_t>(g)], L[static_cast<size_t>(h)]);
        auto iso = find_isomorphism(bc, src, L[static_cast<size_t>(H.op(g, h))]);
        if (!iso)
          throw RepsNotClosed("no isomorphism from the tensor of representatives " +
                              std::to_string(g) + ", " + std::to_string(h) +
                              " to the representative of their product");
        b = *iso;
      }
      auto binv = invert_mor(bc, b);
      if (!binv) throw RepsNotClosed("structure map is not invertible");
      fam.b[static_cast<size_t>(g)].push_back(b);
      fam.binv[static_cast<size_t>(g)].push_back(*binv);
    }
  return fam;
}

template <class C>
VerifyReport verify_main_theorem(C& c, const AlgebraOb<C>& a, const FiniteGroup& H,
                                 const std::vector<Bimod2<C>>& reps, const Cochain& omega) {
  VerifyReport rep;
  rep.pipeline = "picard-lift";
  std::string why;
  if (!base_algebra_qualifies(c, a, &why)) throw BaseAlgebraUnqualified(why);
  rep.add("base algebra is symmetric normalised special, haploid, absolutely simple", true);
  BimodCat<C> bc(c, a);
  std::vector<typename BimodCat<C>::Obj> L;
  for (const auto& r : reps) L.push_back(bc.make_obj(r.carrier, r.rho, r.varrho));
  for (const auto& x : L)
    if (!bc.is_object(x)) throw RepsNotClosed("a representative fails the bimodule axioms");
  auto fam = pointed_family_from_reps(bc, H, L);
  rep.add("representatives form a pointed family with invertible structure maps", true);
  for (const auto& x : L)
    if (!(dim_left(bc, x) == Cyc::one()))
      throw NotAdmissible("a representative has categorical dimension different from 1");
  long order = std::lcm(omega.N, static_cast<long>(H.order()) * H.order());
  auto lambda = family_cocycle(bc, fam, order);
  if (!cochain_ratio(lambda, coboundary(omega)).is_zero())
    throw NotAdmissible("the supplied cochain does not trivialise the associator of the family");
  rep.add("subgroup admissible inside the bimodule category: dimensions 1, cochain trivialises",
          true);
  auto af = alpha_family(bc, fam, omega);
  auto& q_in = af.q;
  rep.add("twisted group algebra inside the bimodule category is special symmetric Frobenius",
          check_algebra(bc, q_in.alg).is_frobenius());
  // transport down to the ambient category
  auto Qdot = transport_algebra(c, bc, q_in.alg);
  auto qrep = check_algebra(c, Qdot);
  rep.add("transported twisted group algebra is special symmetric Frobenius in the base",
          qrep.is_frobenius() && qrep.special && qrep.symmetric);
  auto Aprime = transport_algebra(c, bc, af.endo);
  auto arep = check_algebra(c, Aprime);
  rep.add("transported endomorphism algebra is special Frobenius in the base",
          arep.is_frobenius() && arep.special);
  {
    auto Bn = normalize_special(bc, q_in.alg);
    auto reg = regular_bimodule(q_in.alg);
    rep.add("transported tensor product agrees with the direct one",
            transport_tensor_check(c, bc, Bn, reg, reg).ok());
  }
  auto mc_bc = unit_endo_context(bc, q_in.alg.A);
  auto mc = transport_context(c, bc, mc_bc);
  rep.add("transported Morita context passes all coherence checks",
          verify_morita_context(c, mc).ok());
  std::vector<typename C::Mor> ad;
  for (const auto& al : af.alpha) ad.push_back(al.f);
  bool homs = true;
  for (const auto& al : ad) homs = homs && is_algebra_hom(c, Aprime, Aprime, al);
  rep.add("transported automorphism family consists of algebra automorphisms", homs);
  // injectivity: distinct members give non-isomorphic twist classes
  bool inj = true;
  for (size_t i = 0; i < ad.size(); ++i)
    for (size_t j = i + 1; j < ad.size(); ++j)
      if (bimodule_isomorphism(c, Aprime, Aprime, twist_class(c, Aprime, ad[i]),
                               twist_class(c, Aprime, ad[j])))
        inj = false;
  rep.add("the lift is injective: distinct members give non-isomorphic twist classes", inj);
  // section identity: the transported equivalence returns each representative
  auto sw = swap_context(mc);
  for (int h = 0; h < H.order(); ++h) {
    auto applied = morita_apply(c, sw, twist_class(c, Aprime, ad[static_cast<size_t>(h)]));
    rep.add("equivalence returns representative " + std::to_string(h),
            bimodule_isomorphism(c, a, a, applied, reps[static_cast<size_t>(h)]).has_value());
  }
  // the fixed algebra of the transported family is the transported twisted
  // group algebra
  auto fx = fixed_algebra(c, Aprime, ad);
  auto pair = q_endo_embedding(bc, q_in);
  auto itil = c.compose(fx.r, pair.i.f);
  auto itilinv = c.compose(pair.s.f, fx.e);
  rep.add("fixed algebra of the transported family is Frobenius",
          fx.report.is_frobenius() && fx.omission_ok);
  rep.add("embedding descends to an isomorphism onto the fixed algebra",
          c.eq(c.compose(itil, itilinv), c.id(fx.alg.A)) &&
              c.eq(c.compose(itilinv, itil), c.id(Qdot.A)));
  rep.add("fixed algebra matches the transported twisted group algebra structure",
          is_frobenius_hom(c, Qdot, fx.alg, itil));
  return rep;
}

// ---------------------------------------------------------------------------
// pipeline: bimodule calculus sanity suite

// the grade-preserving flip X (x) Y -> Y (x) X; a morphism of graded vector
// spaces whenever the grading group is abelian
inline GradedMorphism graded_flip(const GradedCat& c, const GradedObject& X,
                                  const GradedObject& Y) {
  auto f = c.zero(c.tensor_obj(X, Y), c.tensor_obj(Y, X));
  for (auto& [k, blk] : f.blocks) {
    auto bs = pair_basis(c.ctx.G, X, Y, k);
    auto bd = pair_basis(c.ctx.G, Y, X, k);
    for (size_t col = 0; col < bs.size(); ++col)
      for (size_t row = 0; row < bd.size(); ++row)
        if (bd[row][0] == bs[col][2] && bd[row][1] == bs[col][3] && bd[row][2] == bs[col][0] &&
            bd[row][3] == bs[col][1])
          blk.at(row, col) = Cyc::one();
  }
  return f;
}

// rank-one twists A (x) L_g of the base algebra, with the right action moved
// through the grade-preserving flip; each candidate is validated as a
// bimodule before being returned (RepsNotClosed otherwise)
inline std::vector<Bimod2<GradedCat>> picard_twist_reps(GradedCat& c,
                                                        const AlgebraOb<GradedCat>& a,
                                                        const SubgroupEmbedding& emb) {
  std::vector<Bimod2<GradedCat>> out;
  for (int h = 0; h < emb.sub.order(); ++h) {
    auto L = GradedObject::simple(emb.ambient_of(h));
    auto carrier = c.tensor_obj(a.A, L);
    auto rho = pipe(c, {c.assoc_inv(a.A, a.A, L), c.tensor(a.m, c.id(L))});
    auto varrho = pipe(c, {c.assoc(a.A, L, a.A), c.tensor(c.id(a.A), graded_flip(c, L, a.A)),
                           c.assoc_inv(a.A, a.A, L), c.tensor(a.m, c.id(L))});
    Bimod2<GradedCat> x{carrier, rho, varrho, a.A, a.A};
    if (!is_bimodule(c, a, a, x))
      throw RepsNotClosed("the twist at grade " + std::to_string(emb.ambient_of(h)) +
                          " is not a bimodule (the flip construction needs an abelian grading "
                          "group and trivial associator)");
    out.push_back(std::move(x));
  }
  return out;
}

template <class C>
VerifyReport appendix_suite_over(C& c, const AlgebraOb<C>& a) {
  VerifyReport rep;
  rep.pipeline = "bimodule-calculus";
  auto arep = check_algebra(c, a);
  if (!arep.is_frobenius() || !arep.special)
    throw NotAdmissible("the suite needs a special Frobenius algebra to tensor over");
  BimodCat<C> bc(c, a);
  auto U = bc.unit();
  auto Us = bc.dual(U);
  std::vector<typename BimodCat<C>::Obj> objs{U, Us, bc.tensor_obj(U, Us), bc.tensor_obj(Us, U)};
  bool idem = true;
  for (const auto& x : objs)
    for (const auto& y : objs) {
      auto P = bc.tensor_projector(x, y);
      idem = idem && c.eq(c.compose(P, P), P);
    }
  rep.add("tensor-over projectors are idempotent on all object pairs", idem,
          std::to_string(objs.size() * objs.size()) + " pairs");
  bool pent = true;
  std::vector<typename BimodCat<C>::Obj> gens{U, Us};
  for (const auto& W : gens)
    for (const auto& X : gens)
      for (const auto& Y : gens)
        for (const auto& Z : gens) {
          auto lhs = bc.compose(bc.assoc(W, X, bc.tensor_obj(Y, Z)),
                                bc.assoc(bc.tensor_obj(W, X), Y, Z));
          auto rhs = pipe(bc, {bc.tensor(bc.assoc(W, X, Y), bc.id(Z)),
                               bc.assoc(W, bc.tensor_obj(X, Y), Z),
                               bc.tensor(bc.id(W), bc.assoc(X, Y, Z))});
          pent = pent && bc.eq(lhs, rhs);
        }
  rep.add("pentagon for the associator over the algebra", pent, "16 quadruples");
  bool units = true, snakes = true, dims = true;
  auto dimA = dim_right(c, a.A);
  for (const auto& x : objs) {
    units = units && bc.eq(bc.compose(bc.lunit(x), bc.lunit_inv(x)), bc.id(x)) &&
            bc.eq(bc.compose(bc.lunit_inv(x), bc.lunit(x)), bc.id(bc.tensor_obj(bc.unit(), x))) &&
            bc.eq(bc.compose(bc.runit(x), bc.runit_inv(x)), bc.id(x)) &&
            bc.eq(bc.compose(bc.runit_inv(x), bc.runit(x)), bc.id(bc.tensor_obj(x, bc.unit())));
    auto xs = bc.dual(x);
    auto s1 = pipe(bc, {bc.lunit_inv(x), bc.tensor(bc.coev(x), bc.id(x)),
                        bc.assoc(x, xs, x), bc.tensor(bc.id(x), bc.ev(x)), bc.runit(x)});
    auto s2 = pipe(bc, {bc.runit_inv(x), bc.tensor(bc.id(x), bc.coev2(x)),
                        bc.assoc_inv(x, xs, x), bc.tensor(bc.ev2(x), bc.id(x)), bc.lunit(x)});
    snakes = snakes && bc.eq(s1, bc.id(x)) && bc.eq(s2, bc.id(x));
    dims = dims && dim_right(c, x->carrier) == dimA * dim_right(bc, x);
  }
  rep.add("unit constraints are two-sided inverses", units);
  rep.add("snake identities for bimodule duals", snakes);
  rep.add("underlying right dimension factors through the algebra", dims,
          "dim_r(M) = dim_r(A) * dim_r over A");
  return rep;
}

inline VerifyReport appendix_suite(GradedCat& c, const SubgroupEmbedding& emb,
                                   const Cochain& omega) {
  auto fam = graded_family(c, emb);
  auto q = build_Q(c, fam, omega);
  return appendix_suite_over(c, q.alg);
}

}  // namespace picardium
