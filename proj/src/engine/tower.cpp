#include "gkc/engine/tower.hpp"

#include "gkc/error.hpp"
#include "gkc/extension/ingest.hpp"

namespace gkc {

namespace {

void require_p_power(const Integer& x, std::uint64_t p, const std::string& what) {
  if (x <= 0 || p_adic_power(x, p) < 0) fail(ErrorKind::NonPPower, what + " = " + x.get_str() + " is not a power of " + std::to_string(p));
}

void check_layer(const TowerLayer& L, std::uint64_t p, unsigned n) {
  const std::string at = " (layer " + std::to_string(n) + ")";
  require_p_power(L.a_full, p, "|A'|" + at);
  require_p_power(L.a_plus, p, "|A'+|" + at);
  require_p_power(L.ram_ratio, p, "ram_ratio" + at);
  require_p_power(L.norm_index_plus, p, "norm_index_plus" + at);
  require_p_power(L.norm_index_full, p, "norm_index_full" + at);
  if (L.minus_invariants) require_p_power(*L.minus_invariants, p, "minus_invariants" + at);
}

bool is_p_power(const Rational& q, std::uint64_t p) {
  return q.get_den() == 1 && q > 0 && p_adic_power(q.get_num(), p) >= 0;
}

Integer as_integer(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  Integer v;
  if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0)
    fail(ErrorKind::SchemaViolation, where + ": expected an integer");
  return v;
}

nlohmann::json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

}  // namespace

ChevalleyResult chevalley_eval(const TowerData& tower, unsigned n) {
  auto base = tower.layers.find(0);
  if (base == tower.layers.end()) fail(ErrorKind::MissingLayer, "layer 0 of " + tower.label);
  auto it = tower.layers.find(n);
  if (it == tower.layers.end()) fail(ErrorKind::MissingLayer, "layer " + std::to_string(n) + " of " + tower.label);
  check_layer(base->second, tower.p, 0);
  check_layer(it->second, tower.p, n);
  const TowerLayer& L0 = base->second;
  const TowerLayer& L = it->second;
  ChevalleyResult out;
  out.n = n;
  out.rhs = Rational(L0.a_full) / Rational(L0.a_plus) * Rational(L.ram_ratio) * Rational(L.norm_index_plus) /
            Rational(L.norm_index_full);
  out.consistent = is_p_power(out.rhs, tower.p);
  if (L.minus_invariants && Rational(*L.minus_invariants) != out.rhs) out.consistent = false;
  return out;
}

StabilizationVerdict gkc_minus_stabilization(const TowerData& tower) {
  StabilizationVerdict v;
  std::map<unsigned, Integer> orders;
  for (const auto& [n, layer] : tower.layers) {
    (void)layer;
    ChevalleyResult c = chevalley_eval(tower, n);
    if (!c.consistent) {
      v.detail = "layer " + std::to_string(n) + " gives an inconsistent minus-part order " + c.rhs.get_str();
      return v;
    }
    orders[n] = c.rhs.get_num();
  }
  if (orders.size() < 2) {
    v.detail = "fewer than two layers";
    return v;
  }
  bool consecutive_pair = false;
  bool increasing = true;
  for (auto it = orders.begin(); std::next(it) != orders.end(); ++it) {
    auto nx = std::next(it);
    if (nx->first != it->first + 1) {
      increasing = false;
      continue;
    }
    consecutive_pair = true;
    if (nx->second == it->second) {
      v.kind = StabilizationVerdict::Kind::Stable;
      v.n0 = it->first;
      v.bound = it->second;
      v.detail = "orders agree at layers " + std::to_string(it->first) + " and " + std::to_string(nx->first);
      return v;
    }
    if (nx->second < it->second) increasing = false;
  }
  if (consecutive_pair && increasing) {
    v.kind = StabilizationVerdict::Kind::NotStable;
    v.detail = "minus-part orders strictly increase through layer " + std::to_string(orders.rbegin()->first);
  } else {
    v.detail = "no two consecutive layers agree";
  }
  return v;
}

TowerData tower_from_json(const nlohmann::json& doc) {
  auto need = [&](const nlohmann::json& j, const char* key, const std::string& where) -> const nlohmann::json& {
    if (!j.is_object() || !j.contains(key)) fail(ErrorKind::SchemaViolation, where + ": missing key '" + key + "'");
    return j.at(key);
  };
  if (doc.contains("schema") && doc.at("schema") != kTowerSchema)
    fail(ErrorKind::SchemaViolation, "unsupported schema " + doc.at("schema").dump());
  TowerData t;
  t.label = doc.value("label", std::string("tower"));
  t.provenance = doc.value("provenance", std::string());
  const auto& pj = need(doc, "p", "tower");
  const auto& rj = need(doc, "r", "tower");
  if (!pj.is_number_unsigned() || !rj.is_number_unsigned()) fail(ErrorKind::SchemaViolation, "tower: p and r must be nonnegative integers");
  t.p = pj.get<std::uint64_t>();
  t.r = rj.get<std::uint64_t>();
  const auto& layers = need(doc, "layers", "tower");
  if (!layers.is_array()) fail(ErrorKind::SchemaViolation, "tower.layers: expected an array");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto& lj = layers[i];
    const std::string where = "tower.layers[" + std::to_string(i) + "]";
    const auto& nj = need(lj, "n", where);
    if (!nj.is_number_unsigned()) fail(ErrorKind::SchemaViolation, where + ".n: expected a nonnegative integer");
    TowerLayer L;
    L.a_full = as_integer(need(lj, "a_full", where), where + ".a_full");
    L.a_plus = as_integer(need(lj, "a_plus", where), where + ".a_plus");
    L.ram_ratio = as_integer(need(lj, "ram_ratio", where), where + ".ram_ratio");
    L.norm_index_plus = as_integer(need(lj, "norm_index_plus", where), where + ".norm_index_plus");
    L.norm_index_full = as_integer(need(lj, "norm_index_full", where), where + ".norm_index_full");
    if (lj.contains("minus_invariants")) L.minus_invariants = as_integer(lj.at("minus_invariants"), where);
    if (!t.layers.emplace(nj.get<unsigned>(), L).second) fail(ErrorKind::SchemaViolation, where + ": repeated layer");
  }
  return t;
}

TowerData read_tower_file(const std::filesystem::path& path) {
  try {
    return tower_from_json(read_json_file(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SchemaViolation) fail(e.kind(), path.string() + ": " + e.detail());
    throw;
  }
}

nlohmann::json to_json(const TowerData& t) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& [n, L] : t.layers) {
    nlohmann::json lj = {{"n", n},
                         {"a_full", integer_json(L.a_full)},
                         {"a_plus", integer_json(L.a_plus)},
                         {"ram_ratio", integer_json(L.ram_ratio)},
                         {"norm_index_plus", integer_json(L.norm_index_plus)},
                         {"norm_index_full", integer_json(L.norm_index_full)}};
    if (L.minus_invariants) lj["minus_invariants"] = integer_json(*L.minus_invariants);
    layers.push_back(std::move(lj));
  }
  return {{"schema", kTowerSchema}, {"label", t.label}, {"p", t.p}, {"r", t.r}, {"provenance", t.provenance}, {"layers", layers}};
}

}  // namespace gkc
