#pragma once
// Twisted bimodules over an algebra and the exactness checks for the map
// sending an algebra automorphism to the regular bimodule with its right
// action twisted by that automorphism: inner automorphisms land on the
// trivial class, a trivial class yields a convolution-invertible witness
// realising the automorphism as an inner one, and the map turns composition
// of automorphisms into tensor product over the algebra.

#include <optional>
#include <string>
#include <vector>

#include "picardium/algebra.hpp"
#include "picardium/category.hpp"
#include "picardium/morita.hpp"

namespace picardium {

// the regular carrier with left action twisted by alpha and right action
// twisted by beta
template <class C>
Bimod2<C> twisted_bimodule(C& c, const AlgebraOb<C>& a, const typename C::Mor& alpha,
                           const typename C::Mor& beta) {
  return {a.A, c.compose(a.m, c.tensor(alpha, c.id(a.A))),
          c.compose(a.m, c.tensor(c.id(a.A), beta)), a.A, a.A};
}

// the class map: an automorphism goes to the right-twisted regular bimodule
template <class C>
Bimod2<C> twist_class(C& c, const AlgebraOb<C>& a, const typename C::Mor& alpha) {
  return twisted_bimodule(c, a, c.id(a.A), alpha);
}

struct TwistEntry {
  bool is_automorphism = false;   // algebra and coalgebra automorphism
  bool bimodule_ok = false;       // the twist is a genuine bimodule
  bool invertible_class = false;  // the twist has a tensor-inverse bimodule
  bool trivial_class = false;     // isomorphic to the regular bimodule
  bool witness_found = false;     // witness recovered from the isomorphism
  bool witness_invertible = false;
  bool witness_matches = false;   // conjugation by the witness reproduces alpha
  std::string orientation;        // which conjugation convention matched
  bool ok(bool expect_trivial) const {
    bool base = is_automorphism && bimodule_ok && invertible_class;
    if (!expect_trivial) return base;
    return base && trivial_class && witness_found && witness_invertible && witness_matches;
  }
};

struct TwistPairEntry {
  bool composite_matches = false;  // tensor of the twists is isomorphic to a twist
  std::string order;               // which composition order realises the tensor
};

struct TwistReport {
  std::vector<TwistEntry> entries;
  std::vector<TwistPairEntry> pairs;
  bool inner_all_trivial = true;   // every entry flagged inner had trivial class
  bool all_ok = true;
};

// conjugation of a unit-to-A morphism by an automorphism, used to transport
// witnesses; kept local to the checks below
namespace detail {
template <class C>
bool twist_matches(C& c, const AlgebraOb<C>& a, const typename C::Mor& phi,
                   const typename C::Mor& alpha, TwistEntry& ent) {
  // phi : A -> A_alpha bimodule isomorphism; its value on the unit is a
  // convolution-invertible element conjugating alpha to the identity.  The
  // module properties give a·f = f·alpha(a), so alpha is conjugation by the
  // inverse of the witness; the opposite convention is also tried and the
  // one that matched is recorded
  auto f = c.compose(phi, a.eta);
  auto finv = convolution_inverse(c, a, f);
  ent.witness_invertible = finv.has_value();
  if (!finv) return false;
  if (c.eq(alpha, inner_automorphism(c, a, *finv, f))) {
    ent.orientation = "conjugation by the inverse witness";
    return true;
  }
  if (c.eq(alpha, inner_automorphism(c, a, f, *finv))) {
    ent.orientation = "conjugation by the witness";
    return true;
  }
  return false;
}
}  // namespace detail

// check one automorphism: structural properties of its twist, invertibility
// of the class, and (when the class is trivial) recovery of an inner witness
template <class C>
TwistEntry check_twist(C& c, const AlgebraOb<C>& a, const typename C::Mor& alpha) {
  TwistEntry ent;
  ent.is_automorphism = is_frobenius_hom(c, a, a, alpha) && invert_mor(c, alpha).has_value();
  auto X = twist_class(c, a, alpha);
  ent.bimodule_ok = is_bimodule(c, a, a, X);
  // tensor-inverse: twisting by the inverse automorphism
  auto ainv = invert_mor(c, alpha);
  if (ainv) {
    auto An = normalize_special(c, a);
    auto Y = twist_class(c, a, *ainv);
    auto t = tensor_over(c, An, X, Y);
    ent.invertible_class =
        bimodule_isomorphism(c, a, a, t.ob, regular_bimodule(a)).has_value();
  }
  auto phi = bimodule_isomorphism(c, a, a, regular_bimodule(a), X);
  ent.trivial_class = phi.has_value();
  if (phi) {
    ent.witness_found = true;
    ent.witness_matches = detail::twist_matches(c, a, *phi, alpha, ent);
  }
  return ent;
}

// check one pair: the tensor of the two twists over the algebra is
// isomorphic to the twist of a composite, and record which order
template <class C>
TwistPairEntry check_twist_pair(C& c, const AlgebraOb<C>& a, const typename C::Mor& alpha,
                                const typename C::Mor& beta) {
  TwistPairEntry ent;
  auto An = normalize_special(c, a);
  auto t = tensor_over(c, An, twist_class(c, a, alpha), twist_class(c, a, beta));
  auto ab = twist_class(c, a, c.compose(alpha, beta));
  if (bimodule_isomorphism(c, a, a, t.ob, ab)) {
    ent.composite_matches = true;
    ent.order = "alpha then beta";
    return ent;
  }
  auto ba = twist_class(c, a, c.compose(beta, alpha));
  if (bimodule_isomorphism(c, a, a, t.ob, ba)) {
    ent.composite_matches = true;
    ent.order = "beta then alpha";
  }
  return ent;
}

// run the full battery on a sample of automorphisms; entries paired with a
// flag saying whether the automorphism is known to be inner (and must then
// have trivial class)
template <class C>
TwistReport twist_sequence_check(C& c, const AlgebraOb<C>& a,
                                 const std::vector<std::pair<typename C::Mor, bool>>& sample) {
  TwistReport rep;
  for (const auto& [alpha, inner] : sample) {
    TwistEntry ent = check_twist(c, a, alpha);
    if (inner && !ent.trivial_class) rep.inner_all_trivial = false;
    rep.all_ok = rep.all_ok && ent.ok(inner);
    rep.entries.push_back(ent);
  }
  for (size_t i = 0; i < sample.size(); ++i)
    for (size_t j = i; j < sample.size(); ++j) {
      TwistPairEntry pe = check_twist_pair(c, a, sample[i].first, sample[j].first);
      rep.all_ok = rep.all_ok && pe.composite_matches;
      rep.pairs.push_back(pe);
    }
  return rep;
}

}  // namespace picardium
