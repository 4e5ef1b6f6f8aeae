#pragma once
// JSON (de)serialization of the domain types, loaders for the TOML input
// files, and the run manifest that stamps every report.  Reports use ordered
// JSON with fixed insertion order so identical runs are byte-identical.

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "picardium/algebra.hpp"
#include "picardium/graded.hpp"
#include "picardium/toml.hpp"
#include "picardium/trivialise.hpp"
#include "picardium/verify.hpp"

namespace picardium {

using Json = nlohmann::ordered_json;

// ----- scalars and category data -------------------------------------------

Json cyc_to_json(const Cyc& x);             // { "N": int, "coeffs": ["p/q", ...] }
Cyc cyc_from_json(const Json& j);
Json object_to_json(const GradedObject& x); // { "mult": { "<g>": int } }
GradedObject object_from_json(const Json& j);
Json morphism_to_json(const GradedMorphism& f);  // src/dst + per-grade dense blocks
GradedMorphism morphism_from_json(const Json& j);
Json algebra_to_json(const AlgebraOb<GradedCat>& a);
AlgebraOb<GradedCat> algebra_from_json(const Json& j);
Json cochain_to_json(const Cochain& c);
Json algebra_report_to_json(const AlgebraReport& r);
Json certs_to_json(const VerifyReport& r);

// ----- input file loaders ---------------------------------------------------

struct ContextFile {
  FiniteGroup G;
  Cochain psi;  // normalized 3-cocycle
};

FiniteGroup group_from_toml(const TomlTable& t);
// degree/order/[values] on the given group; missing tuples read as exponent 0
Cochain cochain_from_toml(const TomlTable& t, const FiniteGroup& G, int expected_degree);
ContextFile context_from_toml(const TomlTable& t);
// `elements = [ ... ]` as ambient indices
SubgroupEmbedding subgroup_from_toml(const TomlTable& t, const FiniteGroup& ambient);

// ----- run manifest ---------------------------------------------------------

struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // (role, sha256 of file bytes)
  std::vector<std::pair<std::string, long>> orders;         // (name, value)
};

Json manifest_to_json(const RunManifest& m);

// canonical serialized form used for content hashing
std::string canonical_dump(const Json& j);
void write_json_file(const std::string& path, const Json& j);

}  // namespace picardium
