#include "gkc/extension/ingest.hpp"

#include <fstream>
#include <sstream>

#include "gkc/error.hpp"

namespace gkc {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& what) { fail(ErrorKind::SchemaViolation, what); }

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) schema(where + ": missing key '" + key + "'");
  return j.at(key);
}

std::uint64_t as_uint(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema(where + ": expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

std::vector<Integer> as_integers(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where + ": expected an array of integers");
  std::vector<Integer> out;
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      out.emplace_back(std::to_string(x.get<long long>()));
    } else if (x.is_string()) {
      Integer v;
      if (v.set_str(x.get<std::string>(), 10) != 0) schema(where + ": bad integer string");
      out.push_back(v);
    } else {
      schema(where + ": expected an array of integers");
    }
  }
  return out;
}

Subset as_subset(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where + ": expected an array of element indices");
  Subset out;
  for (const auto& x : j) out.push_back(as_uint(x, where));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) schema(where + ": repeated element");
  return out;
}

}  // namespace

GroupPtr group_from_json(const json& j) {
  const std::string kind = need(j, "kind", "group").is_string() ? j.at("kind").get<std::string>() : "";
  GroupSpec spec;
  if (kind == "abelian") {
    spec.kind = GroupKind::Abelian;
    for (const auto& d : need(j, "data", "group")) spec.invariants.push_back(as_uint(d, "group.data"));
  } else if (kind == "dihedral") {
    spec.kind = GroupKind::Dihedral;
    spec.n = as_uint(need(j, "data", "group"), "group.data");
  } else if (kind == "quaternion8") {
    spec.kind = GroupKind::Quaternion8;
  } else if (kind == "units_mod") {
    return units_mod(as_uint(need(j, "data", "group"), "group.data"));
  } else if (kind == "table") {
    spec.kind = GroupKind::Raw;
    const json& t = need(j, "data", "group");
    if (!t.is_array()) schema("group.data: expected a table");
    for (const auto& row : t) {
      if (!row.is_array()) schema("group.data: expected a table");
      std::vector<Elem> r;
      for (const auto& x : row) r.push_back(as_uint(x, "group.data"));
      spec.table.push_back(std::move(r));
    }
  } else {
    schema("group.kind must be abelian, dihedral, quaternion8, units_mod or table");
  }
  try {
    return build_group(spec);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidTable) fail(ErrorKind::InvariantViolation, "group laws: " + e.detail());
    throw;
  }
}

json group_to_json(const FiniteGroup& G) {
  switch (G.kind()) {
    case GroupKind::Abelian: return {{"kind", "abelian"}, {"data", G.invariants()}};
    case GroupKind::Dihedral: return {{"kind", "dihedral"}, {"data", G.dihedral_n()}};
    case GroupKind::Quaternion8: return {{"kind", "quaternion8"}};
    case GroupKind::Raw: break;
  }
  json table = json::array();
  for (Elem a = 0; a < G.order(); ++a) {
    json row = json::array();
    for (Elem b = 0; b < G.order(); ++b) row.push_back(G.mul(a, b));
    table.push_back(std::move(row));
  }
  return {{"kind", "table"}, {"data", std::move(table)}};
}

ExtensionDescriptor ingest_extension(const json& doc) {
  if (!doc.is_object()) schema("descriptor must be a JSON object");
  if (doc.contains("schema") && doc.at("schema") != kDescriptorSchema)
    schema("unsupported schema " + doc.at("schema").dump());
  ExtensionDescriptor ext;
  ext.label = doc.value("label", std::string("ingested"));
  ext.p = as_uint(need(doc, "p", "descriptor"), "p");
  ext.group = group_from_json(need(doc, "group", "descriptor"));
  ext.tau = as_uint(need(doc, "tau", "descriptor"), "tau");
  if (ext.tau >= ext.group->order()) fail(ErrorKind::InvariantViolation, "tau not an element of G");

  if (doc.contains("base_poly")) {
    IntPoly f = IntPoly::from_monic_tail(as_integers(doc.at("base_poly"), "base_poly"));
    const std::string how = doc.value("base_irreducibility", std::string("checked"));
    if (how == "asserted") {
      ext.base = make_field_known_irreducible(f, "asserted by descriptor", true);
      ext.assertions.push_back("base polynomial irreducible");
    } else if (how == "checked") {
      ext.base = make_field(f);
    } else {
      schema("base_irreducibility must be 'checked' or 'asserted'");
    }
    ext.base_degree = static_cast<unsigned>(ext.base->degree());
  } else {
    ext.base_degree = static_cast<unsigned>(as_uint(need(doc, "base_degree", "descriptor"), "base_degree"));
  }

  const json& primes = need(doc, "primes", "descriptor");
  if (!primes.is_array()) schema("primes: expected an array");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const json& pj = primes[i];
    const std::string where = "primes[" + std::to_string(i) + "]";
    PrimeRecord v;
    v.label = pj.value("label", "v" + std::to_string(i + 1));
    v.e_base = static_cast<unsigned>(as_uint(need(pj, "e_base", where), where + ".e_base"));
    v.f_base = static_cast<unsigned>(as_uint(need(pj, "f_base", where), where + ".f_base"));
    v.decomposition = as_subset(need(pj, "decomposition_subgroup", where), where + ".decomposition_subgroup");
    v.provenance = Provenance::Ingested;
    if (pj.contains("tower_depth")) v.tower_depth = static_cast<unsigned>(as_uint(pj.at("tower_depth"), where));
    if (pj.contains("e")) v.e = static_cast<unsigned>(as_uint(pj.at("e"), where + ".e"));
    if (pj.contains("f")) v.f = static_cast<unsigned>(as_uint(pj.at("f"), where + ".f"));
    if (pj.contains("g")) v.g = static_cast<unsigned>(as_uint(pj.at("g"), where + ".g"));
    for (Elem x : v.decomposition)
      if (x >= ext.group->order()) fail(ErrorKind::InvariantViolation, "decomposition subgroup (" + v.label + "): element out of range");
    ext.primes.push_back(std::move(v));
  }

  if (doc.contains("assertions")) {
    if (!doc.at("assertions").is_array()) schema("assertions: expected an array of strings");
    for (const auto& a : doc.at("assertions")) {
      if (!a.is_string()) schema("assertions: expected an array of strings");
      ext.assertions.push_back(a.get<std::string>());
    }
  }
  if (doc.contains("absolute_galois")) {
    const json& aj = doc.at("absolute_galois");
    AbsoluteGalois abs;
    abs.group = group_from_json(need(aj, "group", "absolute_galois"));
    abs.tau = as_uint(need(aj, "tau", "absolute_galois"), "absolute_galois.tau");
    if (abs.tau >= abs.group->order() || !abs.group->is_central_involution(abs.tau))
      fail(ErrorKind::InvariantViolation, "absolute_galois: tau not central");
    abs.real_abelian_twist = aj.value("real_abelian_twist", false);
    abs.description = aj.value("description", std::string("ingested"));
    abs.verified = false;
    ext.absolute = abs;
  }
  validate(ext);
  return ext;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::SchemaViolation, path.string() + ": " + e.what());
  }
}

ExtensionDescriptor ingest_extension_file(const std::filesystem::path& path) {
  try {
    return ingest_extension(read_json_file(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SchemaViolation || e.kind() == ErrorKind::InvariantViolation)
      fail(e.kind(), path.string() + ": " + e.detail());
    throw;
  }
}

json to_json(const ExtensionDescriptor& ext) {
  json j;
  j["schema"] = kDescriptorSchema;
  j["label"] = ext.label;
  if (ext.base) {
    json tail = json::array();
    for (const auto& c : ext.base->defining_poly().monic_tail()) {
      if (c.fits_slong_p()) tail.push_back(c.get_si());
      else tail.push_back(c.get_str());
    }
    j["base_poly"] = std::move(tail);
    if (ext.base->irreducibility_asserted()) j["base_irreducibility"] = "asserted";
  } else {
    j["base_degree"] = ext.base_degree;
  }
  j["p"] = ext.p;
  j["group"] = group_to_json(*ext.group);
  j["tau"] = ext.tau;
  json primes = json::array();
  for (const auto& v : ext.primes) {
    json pj;
    pj["label"] = v.label;
    pj["e_base"] = v.e_base;
    pj["f_base"] = v.f_base;
    pj["decomposition_subgroup"] = v.decomposition;
    if (v.e) pj["e"] = *v.e;
    if (v.f) pj["f"] = *v.f;
    if (v.g) pj["g"] = *v.g;
    if (v.tower_depth) pj["tower_depth"] = v.tower_depth;
    primes.push_back(std::move(pj));
  }
  j["primes"] = std::move(primes);
  j["assertions"] = ext.assertions;
  if (ext.absolute) {
    j["absolute_galois"] = {{"group", group_to_json(*ext.absolute->group)},
                            {"tau", ext.absolute->tau},
                            {"real_abelian_twist", ext.absolute->real_abelian_twist},
                            {"description", ext.absolute->description}};
  }
  return j;
}

}  // namespace gkc
