#include "picardium/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "picardium/catalog.hpp"
#include "picardium/report.hpp"
#include "picardium/sha256.hpp"
#include "picardium/toml.hpp"
#include "picardium/verify.hpp"

namespace picardium {

namespace {

struct Inputs {
  RunManifest manifest;

  std::string slurp(const std::string& role, const std::string& path) {
    std::string text = read_file(path);
    manifest.inputs.emplace_back(role, sha256_hex(text));
    return text;
  }
  TomlTable toml(const std::string& role, const std::string& path) {
    return parse_toml(slurp(role, path));
  }
  Json json(const std::string& role, const std::string& path) {
    try {
      return Json::parse(slurp(role, path));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
};

void emit(const Json& report, const std::string& out_path) {
  if (out_path.empty())
    std::cout << report.dump(2) << "\n";
  else
    write_json_file(out_path, report);
}

Json finish(const RunManifest& m, const VerifyReport& rep) {
  Json j;
  j["manifest"] = manifest_to_json(m);
  Json body = certs_to_json(rep);
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

GradedCat make_cat(const ContextFile& ctx) {
  try {
    return GradedCat(CategoryContext(ctx.G, ctx.psi));
  } catch (const std::exception& e) {
    throw SchemaError(std::string("invalid context: ") + e.what());
  }
}

std::vector<int> decode_tuple(size_t idx, int degree, int n) {
  std::vector<int> args(static_cast<size_t>(degree));
  for (int j = degree - 1; j >= 0; --j) {
    args[static_cast<size_t>(j)] = static_cast<int>(idx % static_cast<size_t>(n));
    idx /= static_cast<size_t>(n);
  }
  return args;
}

std::string tuple_str(const std::vector<int>& args) {
  std::string s = "(";
  for (size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + std::to_string(args[i]);
  return s + ")";
}

// the content key of a trivialisation instance: group table, psi exponents,
// subgroup elements
std::string trivialise_key(const ContextFile& ctx, const SubgroupEmbedding& emb) {
  Json k;
  k["mul"] = ctx.G.mul;
  k["psi_order"] = ctx.psi.N;
  k["psi"] = ctx.psi.val;
  k["elements"] = emb.embed;
  return sha256_hex("trivialise|" + canonical_dump(k));
}

Json trivialisation_json(const Trivialisation& triv) {
  Json j;
  j["solvable"] = triv.solvable;
  j["Nprime"] = triv.Nprime;
  j["Nsecond"] = triv.Nsecond;
  j["stabilized"] = triv.stabilized;
  j["solution_count"] = triv.solution_count;
  Json sols = Json::array();
  for (const auto& s : triv.solutions) sols.push_back(s.val);
  j["solutions"] = std::move(sols);
  auto classes = trivialisation_classes(triv.solutions, triv.Nsecond);
  j["class_count"] = classes.size();
  Json reps = Json::array();
  for (const auto& cl : classes) reps.push_back(triv.solutions[cl.front()].val);
  j["class_representatives"] = std::move(reps);
  return j;
}

Cochain cochain_from_exponents(const FiniteGroup& G, int degree, long order,
                               const std::vector<long>& val) {
  Cochain c = Cochain::zero(G, degree, order);
  if (val.size() != c.val.size()) throw SchemaError("cached cochain has the wrong arity");
  for (size_t i = 0; i < val.size(); ++i) c.val[i] = ((val[i] % order) + order) % order;
  return c;
}

// trivialisation with catalog lookaside; `cached` reports a hit
Trivialisation cached_trivialise(const ContextFile& ctx, const SubgroupEmbedding& emb,
                                 bool& cached) {
  Catalog cat = Catalog::open();
  std::string key = trivialise_key(ctx, emb);
  if (auto hit = cat.lookup(key)) {
    const Json& j = *hit;
    try {
      Trivialisation t;
      t.solvable = j.at("solvable").get<bool>();
      t.Nprime = j.at("Nprime").get<long>();
      t.Nsecond = j.at("Nsecond").get<long>();
      t.stabilized = j.at("stabilized").get<bool>();
      t.solution_count = j.at("solution_count").get<long>();
      for (const auto& v : j.at("solutions"))
        t.solutions.push_back(
            cochain_from_exponents(emb.sub, 2, t.Nprime, v.get<std::vector<long>>()));
      cached = true;
      return t;
    } catch (const std::exception&) {
      // fall through to recompute on a damaged entry
    }
  }
  cached = false;
  Trivialisation t = trivialise(ctx.psi, emb);
  Json entry = trivialisation_json(t);
  entry["summary"] = "trivialise |H|=" + std::to_string(emb.sub.order()) + " on " +
                     (ctx.G.name.empty() ? "group of order " + std::to_string(ctx.G.order())
                                         : ctx.G.name) +
                     (t.solvable ? ": solvable" : ": not solvable");
  cat.store(key, entry);
  return t;
}

// a 2-cochain on the subgroup: explicit file, or the first enumerated
// trivialisation when the file is omitted
Cochain resolve_omega(Inputs& in, const std::string& omega_path, const ContextFile& ctx,
                      const SubgroupEmbedding& emb, bool& cached) {
  if (!omega_path.empty()) {
    cached = false;
    return cochain_from_toml(in.toml("omega", omega_path), emb.sub, 2);
  }
  Trivialisation triv = cached_trivialise(ctx, emb, cached);
  if (!triv.solvable || triv.solutions.empty())
    throw NotAdmissible("no --omega given and the associator does not trivialise on the subgroup");
  return triv.solutions.front();
}

int emit_and_status(const RunManifest& m, const VerifyReport& rep, const std::string& out,
                    Json extra = Json::object()) {
  Json j = finish(m, rep);
  for (auto& [k, v] : extra.items()) j[k] = v;
  emit(j, out);
  return rep.ok() ? 0 : 1;
}

// ----- subcommand bodies ------------------------------------------------------

int cmd_check_cocycle(const std::string& file, const std::string& out) {
  Inputs in;
  in.manifest.command = "check-cocycle";
  TomlTable t = in.toml("cochain", file);
  FiniteGroup G = group_from_toml(t);
  int degree = t.has("degree") ? static_cast<int>(t.get("degree").as_int()) : 3;
  Cochain psi = cochain_from_toml(t, G, degree);
  in.manifest.orders.emplace_back("N", psi.N);
  VerifyReport rep;
  rep.pipeline = "cocycle-check";
  rep.add("cochain is normalized", psi.is_normalized());
  Cochain d = coboundary(psi);
  bool closed = d.is_zero();
  std::string witness;
  if (!closed) {
    for (size_t i = 0; i < d.val.size(); ++i)
      if (d.val[i] != 0) {
        auto args = decode_tuple(i, d.degree, G.order());
        witness = "d at " + tuple_str(args) + " equals zeta_" + std::to_string(d.N) + "^" +
                  std::to_string(d.val[i]) + ", expected 1";
        break;
      }
  }
  rep.add("coboundary vanishes (cocycle condition)", closed, witness);
  return emit_and_status(in.manifest, rep, out);
}

int cmd_trivialise(const std::string& psi_file, const std::string& sub_file,
                   const std::string& out) {
  Inputs in;
  in.manifest.command = "trivialise";
  ContextFile ctx = context_from_toml(in.toml("psi", psi_file));
  SubgroupEmbedding emb = subgroup_from_toml(in.toml("subgroup", sub_file), ctx.G);
  bool cached = false;
  Trivialisation triv = cached_trivialise(ctx, emb, cached);
  in.manifest.orders.emplace_back("N", ctx.psi.N);
  in.manifest.orders.emplace_back("Nprime", triv.Nprime);
  in.manifest.orders.emplace_back("Nsecond", triv.Nsecond);
  VerifyReport rep;
  rep.pipeline = "trivialise";
  rep.add("restriction of the associator admits a trivialisation", triv.solvable,
          std::to_string(triv.solution_count) + " solutions");
  rep.add("solution count stabilizes under order doubling", triv.stabilized);
  Json extra;
  extra["cached"] = cached;
  extra["result"] = trivialisation_json(triv);
  return emit_and_status(in.manifest, rep, out, std::move(extra));
}

int cmd_build_q(const std::string& ctx_file, const std::string& sub_file,
                const std::string& omega_file, const std::string& out) {
  Inputs in;
  in.manifest.command = "build-q";
  ContextFile ctx = context_from_toml(in.toml("ctx", ctx_file));
  SubgroupEmbedding emb = subgroup_from_toml(in.toml("subgroup", sub_file), ctx.G);
  bool cached = false;
  Cochain omega = resolve_omega(in, omega_file, ctx, emb, cached);
  GradedCat c = make_cat(ctx);
  auto fam = graded_family(c, emb);
  auto q = build_Q(c, fam, omega);
  auto arep = check_algebra(c, q.alg);
  in.manifest.orders.emplace_back("N", ctx.psi.N);
  in.manifest.orders.emplace_back("omega_order", omega.N);
  VerifyReport rep;
  rep.pipeline = "twisted-group-algebra";
  rep.add("algebra axioms (associative, unital)", arep.associative && arep.unital);
  rep.add("coalgebra axioms (coassociative, counital)", arep.coassociative && arep.counital);
  rep.add("Frobenius compatibility", arep.frobenius);
  rep.add("specialness with unit scalars", arep.special);
  Json extra;
  extra["cached"] = cached;
  extra["algebra"] = algebra_to_json(q.alg);
  extra["algebra_report"] = algebra_report_to_json(arep);
  return emit_and_status(in.manifest, rep, out, std::move(extra));
}

int cmd_check_algebra(const std::string& ctx_file, const std::string& alg_file,
                      const std::string& out) {
  Inputs in;
  in.manifest.command = "check-algebra";
  ContextFile ctx = context_from_toml(in.toml("ctx", ctx_file));
  Json aj = in.json("algebra", alg_file);
  if (aj.contains("algebra")) aj = aj["algebra"];  // accept build-q reports directly
  AlgebraOb<GradedCat> a = algebra_from_json(aj);
  GradedCat c = make_cat(ctx);
  auto arep = check_algebra(c, a);
  in.manifest.orders.emplace_back("N", ctx.psi.N);
  VerifyReport rep;
  rep.pipeline = "algebra-check";
  rep.add("associative", arep.associative);
  rep.add("unital", arep.unital);
  rep.add("coassociative", arep.coassociative);
  rep.add("counital", arep.counital);
  rep.add("Frobenius compatibility", arep.frobenius);
  Json extra;
  extra["algebra_report"] = algebra_report_to_json(arep);
  return emit_and_status(in.manifest, rep, out, std::move(extra));
}

int cmd_fixed_algebra(const std::string& ctx_file, const std::string& sub_file,
                      const std::string& omega_file, const std::string& out) {
  Inputs in;
  in.manifest.command = "fixed-algebra";
  ContextFile ctx = context_from_toml(in.toml("ctx", ctx_file));
  SubgroupEmbedding emb = subgroup_from_toml(in.toml("subgroup", sub_file), ctx.G);
  bool cached = false;
  Cochain omega = resolve_omega(in, omega_file, ctx, emb, cached);
  GradedCat c = make_cat(ctx);
  auto fam = graded_family(c, emb);
  auto af = alpha_family(c, fam, omega);
  auto fx = fixed_algebra(c, af.endo, af.alpha);
  in.manifest.orders.emplace_back("N", ctx.psi.N);
  in.manifest.orders.emplace_back("omega_order", omega.N);
  VerifyReport rep;
  rep.pipeline = "fixed-algebra";
  rep.add("family automorphisms average to an idempotent with induced algebra structure",
          fx.report.associative && fx.report.unital);
  rep.add("induced structure is Frobenius", fx.report.is_frobenius());
  rep.add("projector-omission identities", fx.omission_ok);
  rep.add("specialness", fx.report.special, fx.specialness);
  Json extra;
  extra["cached"] = cached;
  extra["fixed_algebra"] = algebra_to_json(fx.alg);
  extra["algebra_report"] = algebra_report_to_json(fx.report);
  extra["loop_scalar"] = cyc_to_json(fx.loop);
  extra["absolutely_simple"] = fx.absolutely_simple;
  return emit_and_status(in.manifest, rep, out, std::move(extra));
}

int cmd_dims(const std::string& ctx_file, const std::string& obj_file, const std::string& out) {
  Inputs in;
  in.manifest.command = "dims";
  ContextFile ctx = context_from_toml(in.toml("ctx", ctx_file));
  GradedObject x = object_from_json(in.json("object", obj_file));
  for (const auto& [g, m] : x.mult)
    if (g >= ctx.G.order()) throw SchemaError("object grade outside the context group");
  GradedCat c = make_cat(ctx);
  in.manifest.orders.emplace_back("N", ctx.psi.N);
  VerifyReport rep;
  rep.pipeline = "dims";
  rep.add("dimensions computed", true);
  Json extra;
  extra["object"] = object_to_json(x);
  extra["dim_l"] = cyc_to_json(dim_left(c, x));
  extra["dim_r"] = cyc_to_json(dim_right(c, x));
  return emit_and_status(in.manifest, rep, out, std::move(extra));
}

int cmd_verify(const std::string& theorem, const std::string& ctx_file,
               const std::string& sub_file, const std::string& omega_file,
               const std::string& alg_file, const std::string& out) {
  Inputs in;
  in.manifest.command = "verify " + theorem;
  ContextFile ctx = context_from_toml(in.toml("ctx", ctx_file));
  GradedCat c = make_cat(ctx);
  in.manifest.orders.emplace_back("N", ctx.psi.N);
  auto need_subgroup = [&]() -> SubgroupEmbedding {
    if (sub_file.empty()) throw SchemaError("--theorem " + theorem + " needs --subgroup");
    return subgroup_from_toml(in.toml("subgroup", sub_file), ctx.G);
  };
  bool cached = false;
  VerifyReport rep;
  if (theorem == "prop45") {
    auto emb = need_subgroup();
    Cochain omega = resolve_omega(in, omega_file, ctx, emb, cached);
    rep = verify_prop_recover_H(c, emb, omega);
  } else if (theorem == "thm413") {
    auto emb = need_subgroup();
    rep = verify_thm_bijection(c, emb);
  } else if (theorem == "thm414") {
    auto emb = need_subgroup();
    Cochain omega = resolve_omega(in, omega_file, ctx, emb, cached);
    rep = verify_thm_fixed_is_Q(c, emb, omega);
  } else if (theorem == "thm56") {
    if (alg_file.empty()) throw SchemaError("--theorem thm56 needs --algebra");
    Json aj = in.json("algebra", alg_file);
    if (aj.contains("algebra")) aj = aj["algebra"];
    AlgebraOb<GradedCat> a = algebra_from_json(aj);
    auto emb = need_subgroup();
    auto reps = picard_twist_reps(c, a, emb);
    Cochain omega = Cochain::zero(emb.sub, 2, 1);
    if (!omega_file.empty()) {
      omega = cochain_from_toml(in.toml("omega", omega_file), emb.sub, 2);
    } else {
      // solve for a cochain that trivialises the family cocycle
      BimodCat<GradedCat> bc(c, a);
      std::vector<BimodCat<GradedCat>::Obj> L;
      for (const auto& r : reps) L.push_back(bc.make_obj(r.carrier, r.rho, r.varrho));
      auto fam = pointed_family_from_reps(bc, emb.sub, L);
      long order = static_cast<long>(emb.sub.order()) * emb.sub.order();
      auto lambda = family_cocycle(bc, fam, order);
      auto sol = trivialise(lambda, SubgroupEmbedding::full(emb.sub));
      if (!sol.solvable)
        throw NotAdmissible("the family cocycle of the representatives does not trivialise");
      omega = sol.solutions.front();
    }
    in.manifest.orders.emplace_back("omega_order", omega.N);
    rep = verify_main_theorem(c, a, emb.sub, reps, omega);
  } else if (theorem == "appendix") {
    auto emb = need_subgroup();
    Cochain omega = resolve_omega(in, omega_file, ctx, emb, cached);
    rep = appendix_suite(c, emb, omega);
  } else {
    throw SchemaError("unknown theorem '" + theorem +
                      "' (expected prop45|thm413|thm414|thm56|appendix)");
  }
  Json extra;
  extra["cached"] = cached;
  return emit_and_status(in.manifest, rep, out, std::move(extra));
}

int cmd_catalog(const std::string& action, const std::string& out) {
  Catalog cat = Catalog::open();
  Json j;
  j["command"] = "catalog " + action;
  j["location"] = cat.dir();
  if (action == "list") {
    Json entries = Json::array();
    for (const auto& e : cat.list()) {
      Json rec;
      rec["key"] = e.key;
      rec["summary"] = e.summary;
      entries.push_back(std::move(rec));
    }
    j["entries"] = std::move(entries);
  } else if (action == "gc") {
    j["dropped"] = cat.gc();
  } else {
    throw SchemaError("unknown catalog action '" + action + "' (expected list|gc)");
  }
  emit(j, out);
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  CLI::App app{"exact verification of twisted group algebras and their Morita lifts"};
  app.require_subcommand(1);

  std::string file, psi_file, sub_file, ctx_file, omega_file, alg_file, obj_file, out, theorem;

  auto* cc = app.add_subcommand("check-cocycle", "check the cocycle condition of a cochain file");
  cc->add_option("file", file, "cochain TOML with inline group")->required();
  cc->add_option("--out", out, "report path (stdout when omitted)");

  auto* tr = app.add_subcommand("trivialise", "solve d(omega) = psi restricted to a subgroup");
  tr->add_option("--psi", psi_file, "context TOML (group + 3-cocycle)")->required();
  tr->add_option("--subgroup", sub_file, "subgroup TOML (elements = [...])")->required();
  tr->add_option("--out", out);

  auto* bq = app.add_subcommand("build-q", "construct the twisted group algebra");
  bq->add_option("--ctx", ctx_file)->required();
  bq->add_option("--subgroup", sub_file)->required();
  bq->add_option("--omega", omega_file, "2-cochain TOML (defaults to the first trivialisation)");
  bq->add_option("--out", out);

  auto* ca = app.add_subcommand("check-algebra", "check algebra/Frobenius axioms of an algebra file");
  ca->add_option("file", alg_file, "algebra JSON (or a build-q report)")->required();
  ca->add_option("--ctx", ctx_file)->required();
  ca->add_option("--out", out);

  auto* fa = app.add_subcommand("fixed-algebra",
                                "fixed algebra of the automorphism family on the endomorphism algebra");
  fa->add_option("--ctx", ctx_file)->required();
  fa->add_option("--subgroup", sub_file)->required();
  fa->add_option("--omega", omega_file);
  fa->add_option("--out", out);

  auto* dm = app.add_subcommand("dims", "categorical dimensions of a graded object");
  dm->add_option("--ctx", ctx_file)->required();
  dm->add_option("--object", obj_file, "object JSON { \"mult\": { \"g\": m } }")->required();
  dm->add_option("--out", out);

  auto* vf = app.add_subcommand("verify", "run a named verification pipeline");
  vf->add_option("--theorem", theorem, "prop45|thm413|thm414|thm56|appendix")->required();
  vf->add_option("--ctx", ctx_file)->required();
  vf->add_option("--subgroup", sub_file);
  vf->add_option("--omega", omega_file);
  vf->add_option("--algebra", alg_file);
  vf->add_option("--out", out);

  auto* cl = app.add_subcommand("catalog", "inspect or clear the instance catalog");
  std::string action;
  cl->add_option("action", action, "list|gc")->required();
  cl->add_option("--out", out);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cc->parsed()) return cmd_check_cocycle(file, out);
    if (tr->parsed()) return cmd_trivialise(psi_file, sub_file, out);
    if (bq->parsed()) return cmd_build_q(ctx_file, sub_file, omega_file, out);
    if (ca->parsed()) return cmd_check_algebra(ctx_file, alg_file, out);
    if (fa->parsed()) return cmd_fixed_algebra(ctx_file, sub_file, omega_file, out);
    if (dm->parsed()) return cmd_dims(ctx_file, obj_file, out);
    if (vf->parsed()) return cmd_verify(theorem, ctx_file, sub_file, omega_file, alg_file, out);
    if (cl->parsed()) return cmd_catalog(action, out);
  } catch (const std::exception& e) {
    Json err;
    err["error"] = e.what();
    emit(err, out);
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace picardium
