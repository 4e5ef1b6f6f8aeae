#include "picardium/report.hpp"

#include <fstream>

namespace picardium {

namespace {

std::vector<int> parse_tuple_key(const std::string& key, int degree, int order_bound) {
  std::vector<int> args;
  std::string cur;
  for (char ch : key) {
    if (ch == ',') {
      args.push_back(std::stoi(cur));
      cur.clear();
    } else if (ch == ' ') {
      continue;
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) args.push_back(std::stoi(cur));
  if (static_cast<int>(args.size()) != degree)
    throw SchemaError("values key '" + key + "' must list exactly " + std::to_string(degree) +
                      " element indices");
  for (int a : args)
    if (a < 0 || a >= order_bound)
      throw SchemaError("values key '" + key + "' references element " + std::to_string(a) +
                        " outside the group");
  return args;
}

}  // namespace

// ----- scalars ---------------------------------------------------------------

Json cyc_to_json(const Cyc& x) {
  Json j;
  j["N"] = x.order();
  Json coeffs = Json::array();
  for (const Rat& r : x.coords()) coeffs.push_back(r.get_str());
  j["coeffs"] = std::move(coeffs);
  return j;
}

Cyc cyc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("N") || !j.contains("coeffs"))
    throw SchemaError("scalar must be an object with fields N, coeffs");
  long N = j["N"].get<long>();
  if (N < 1) throw SchemaError("scalar order must be positive");
  Cyc out = Cyc::zero(N);
  const auto& coeffs = j["coeffs"];
  if (!coeffs.is_array()) throw SchemaError("scalar coeffs must be an array");
  size_t i = 0;
  for (const auto& c : coeffs) {
    Rat r;
    try {
      r = Rat(c.get<std::string>());
      r.canonicalize();
    } catch (const std::exception&) {
      throw SchemaError("scalar coefficient is not a rational p/q string");
    }
    out = out + Cyc(r, N) * Cyc::root(N, static_cast<long>(i));
    ++i;
  }
  return out;
}

// ----- objects and morphisms -------------------------------------------------

Json object_to_json(const GradedObject& x) {
  Json mult = Json::object();
  for (const auto& [g, m] : x.mult) mult[std::to_string(g)] = m;
  Json j;
  j["mult"] = std::move(mult);
  return j;
}

GradedObject object_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("mult")) throw SchemaError("object must have a mult field");
  GradedObject x;
  for (const auto& [key, val] : j["mult"].items()) {
    int g = 0;
    try {
      g = std::stoi(key);
    } catch (const std::exception&) {
      throw SchemaError("object grade '" + key + "' is not an integer");
    }
    long m = val.get<long>();
    if (g < 0) throw SchemaError("object grade must be nonnegative");
    if (m < 0) throw SchemaError("object multiplicity must be nonnegative");
    if (m > 0) x.mult[g] = m;
  }
  return x;
}

Json morphism_to_json(const GradedMorphism& f) {
  Json j;
  j["src"] = object_to_json(f.src);
  j["dst"] = object_to_json(f.dst);
  Json blocks = Json::object();
  for (const auto& [g, mat] : f.blocks) {
    Json rows = Json::array();
    for (size_t r = 0; r < mat.rows; ++r) {
      Json row = Json::array();
      for (size_t c = 0; c < mat.cols; ++c) row.push_back(cyc_to_json(mat.at(r, c)));
      rows.push_back(std::move(row));
    }
    blocks[std::to_string(g)] = std::move(rows);
  }
  j["blocks"] = std::move(blocks);
  return j;
}

GradedMorphism morphism_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("src") || !j.contains("dst"))
    throw SchemaError("morphism must have src and dst objects");
  GradedObject src = object_from_json(j["src"]);
  GradedObject dst = object_from_json(j["dst"]);
  GradedMorphism f = GradedMorphism::zero(src, dst);
  if (j.contains("blocks")) {
    for (const auto& [key, rows] : j["blocks"].items()) {
      int g = std::stoi(key);
      auto it = f.blocks.find(g);
      if (it == f.blocks.end())
        throw SchemaError("morphism block at grade " + key + " has no matching multiplicities");
      Mat& mat = it->second;
      if (!rows.is_array() || rows.size() != mat.rows)
        throw SchemaError("morphism block at grade " + key + " has the wrong number of rows");
      for (size_t r = 0; r < mat.rows; ++r) {
        const auto& row = rows[r];
        if (!row.is_array() || row.size() != mat.cols)
          throw SchemaError("morphism block at grade " + key + " has the wrong number of columns");
        for (size_t c = 0; c < mat.cols; ++c) mat.at(r, c) = cyc_from_json(row[c]);
      }
    }
  }
  return f;
}

Json algebra_to_json(const AlgebraOb<GradedCat>& a) {
  Json j;
  j["carrier"] = object_to_json(a.A);
  j["m"] = morphism_to_json(a.m);
  j["eta"] = morphism_to_json(a.eta);
  j["delta"] = morphism_to_json(a.delta);
  j["eps"] = morphism_to_json(a.eps);
  return j;
}

AlgebraOb<GradedCat> algebra_from_json(const Json& j) {
  for (const char* field : {"carrier", "m", "eta", "delta", "eps"})
    if (!j.contains(field)) throw SchemaError(std::string("algebra file is missing '") + field + "'");
  AlgebraOb<GradedCat> a;
  a.A = object_from_json(j["carrier"]);
  a.m = morphism_from_json(j["m"]);
  a.eta = morphism_from_json(j["eta"]);
  a.delta = morphism_from_json(j["delta"]);
  a.eps = morphism_from_json(j["eps"]);
  if (a.m.dst != a.A || a.eta.dst != a.A || a.delta.src != a.A || a.eps.src != a.A)
    throw SchemaError("algebra structure morphisms do not match the carrier");
  return a;
}

Json cochain_to_json(const Cochain& c) {
  Json j;
  j["degree"] = c.degree;
  j["order"] = c.N;
  j["exponents"] = c.val;
  return j;
}

Json algebra_report_to_json(const AlgebraReport& r) {
  Json j;
  j["associative"] = r.associative;
  j["unital"] = r.unital;
  j["coassociative"] = r.coassociative;
  j["counital"] = r.counital;
  j["frobenius"] = r.frobenius;
  j["special"] = r.special;
  j["symmetric"] = r.symmetric;
  if (r.has_beta_A) j["beta_A"] = cyc_to_json(r.beta_A);
  if (r.has_beta_1) j["beta_1"] = cyc_to_json(r.beta_1);
  j["dim_l"] = cyc_to_json(r.dim_l);
  j["dim_consistent"] = r.dim_consistent;
  return j;
}

Json certs_to_json(const VerifyReport& r) {
  Json records = Json::array();
  size_t i = 0;
  for (const auto& c : r.certs) {
    Json rec;
    rec["anchor"] = r.pipeline + ":" + std::to_string(i++);
    rec["claim"] = c.claim;
    rec["status"] = c.passed ? "pass" : "fail";
    if (!c.witness.empty()) rec["witness"] = c.witness;
    records.push_back(std::move(rec));
  }
  Json j;
  j["pipeline"] = r.pipeline;
  j["records"] = std::move(records);
  j["passed"] = r.ok();
  return j;
}

// ----- input loaders ----------------------------------------------------------

FiniteGroup group_from_toml(const TomlTable& t) {
  long size = t.get("size").as_int();
  if (size < 1 || size > 64) throw SchemaError("group size must be between 1 and 64");
  const auto& rows = t.get("mul").as_array();
  if (static_cast<long>(rows.size()) != size)
    throw SchemaError("mul must have exactly 'size' rows");
  std::vector<std::vector<int>> table;
  for (const auto& row : rows) {
    const auto& cells = row.as_array();
    if (static_cast<long>(cells.size()) != size)
      throw SchemaError("mul rows must have exactly 'size' entries");
    std::vector<int> r;
    for (const auto& cell : cells) {
      long v = cell.as_int();
      if (v < 0 || v >= size) throw SchemaError("mul entry out of range");
      r.push_back(static_cast<int>(v));
    }
    table.push_back(std::move(r));
  }
  std::string name = t.has("name") ? t.get("name").as_str() : "";
  try {
    return FiniteGroup::from_table(std::move(table), std::move(name));
  } catch (const std::exception& e) {
    throw SchemaError(std::string("invalid group table: ") + e.what());
  }
}

Cochain cochain_from_toml(const TomlTable& t, const FiniteGroup& G, int expected_degree) {
  int degree = t.has("degree") ? static_cast<int>(t.get("degree").as_int()) : expected_degree;
  if (degree != expected_degree)
    throw SchemaError("cochain degree must be " + std::to_string(expected_degree));
  long order = t.has("order") ? t.get("order").as_int() : 1;
  if (order < 1) throw SchemaError("cochain order must be positive");
  Cochain c = Cochain::zero(G, degree, order);
  auto it = t.sections.find("values");
  if (it != t.sections.end()) {
    for (const auto& [key, val] : it->second) {
      auto args = parse_tuple_key(key, degree, G.order());
      long e = val.as_int();
      c.set(args, ((e % order) + order) % order);
    }
  }
  if (!c.is_normalized()) throw SchemaError("cochain must be normalized (vanish on the identity)");
  return c;
}

ContextFile context_from_toml(const TomlTable& t) {
  ContextFile out;
  if (t.has("cyclic")) {
    long n = t.get("cyclic").as_int();
    if (n < 1 || n > 64) throw SchemaError("cyclic group order must be between 1 and 64");
    long k = t.has("cocycle_k") ? t.get("cocycle_k").as_int() : 0;
    if (k < 0 || k >= n) throw SchemaError("cocycle_k must lie in [0, n)");
    out.G = FiniteGroup::cyclic(static_cast<int>(n));
    out.psi = (k == 0) ? Cochain::zero(out.G, 3, 1) : standard_cyclic_cocycle(n, k);
    out.psi.G = out.G;
    return out;
  }
  out.G = group_from_toml(t);
  if (t.sections.count("values") || t.has("order"))
    out.psi = cochain_from_toml(t, out.G, 3);
  else
    out.psi = Cochain::zero(out.G, 3, 1);
  if (!is_normalized_cocycle(out.psi))
    throw SchemaError("the context cochain is not a normalized 3-cocycle");
  return out;
}

SubgroupEmbedding subgroup_from_toml(const TomlTable& t, const FiniteGroup& ambient) {
  const auto& arr = t.get("elements").as_array();
  std::vector<int> elements;
  for (const auto& v : arr) {
    long g = v.as_int();
    if (g < 0 || g >= ambient.order()) throw SchemaError("subgroup element out of range");
    elements.push_back(static_cast<int>(g));
  }
  try {
    return SubgroupEmbedding::from_subset(ambient, std::move(elements));
  } catch (const std::exception& e) {
    throw SchemaError(std::string("invalid subgroup: ") + e.what());
  }
}

// ----- manifest ----------------------------------------------------------------

Json manifest_to_json(const RunManifest& m) {
  Json j;
  j["tool"] = "picardium 0.1.0";
  j["command"] = m.command;
  Json inputs = Json::object();
  for (const auto& [role, digest] : m.inputs) inputs[role] = digest;
  j["inputs"] = std::move(inputs);
  Json orders = Json::object();
  for (const auto& [name, value] : m.orders) orders[name] = value;
  j["orders"] = std::move(orders);
  Json conv;
  conv["bracketing"] = "left-nested";
  conv["composition"] = "compose(f, g) applies g first";
  conv["duality"] = "evaluations are 1 on simples; coevaluations carry the associator factors";
  conv["inner_witness"] = "conjugation by the inverse witness unless reported otherwise";
  j["conventions"] = std::move(conv);
  return j;
}

std::string canonical_dump(const Json& j) { return j.dump(); }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace picardium
