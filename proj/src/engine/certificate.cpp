#include "gkc/engine/certificate.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>

#include "gkc/error.hpp"

namespace gkc {

std::string_view to_string(Conclusion c) {
  switch (c) {
    case Conclusion::GkcMinus: return "GKC-(K)";
    case Conclusion::GkcChi: return "GKC(K/R,chi)";
    case Conclusion::GvcChi: return "GVC(K/R,chi)";
    case Conclusion::RankBound: return "RankBound";
    case Conclusion::Leopoldt: return "LeopoldtCriterion";
  }
  return "?";
}

Conclusion conclusion_from_string(std::string_view s) {
  for (auto c : {Conclusion::GkcMinus, Conclusion::GkcChi, Conclusion::GvcChi, Conclusion::RankBound, Conclusion::Leopoldt})
    if (to_string(c) == s) return c;
  fail(ErrorKind::SchemaViolation, "unknown conclusion '" + std::string(s) + "'");
}

bool is_rule_key(std::string_view key) { return std::find(kRuleKeys.begin(), kRuleKeys.end(), key) != kRuleKeys.end(); }

bool Certificate::conditional() const {
  return std::any_of(hypotheses.begin(), hypotheses.end(),
                     [](const Hypothesis& h) { return h.status == HypothesisStatus::Asserted; });
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    fail(ErrorKind::Internal, "SHA-256 failed");
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

namespace {

nlohmann::ordered_json body(const Certificate& c) {
  nlohmann::ordered_json j;
  j["conclusion"] = std::string(to_string(c.conclusion));
  j["field"] = c.field;
  j["character"] = c.character;
  j["value"] = c.value ? nlohmann::ordered_json(*c.value) : nlohmann::ordered_json(nullptr);
  j["rule"] = c.rule;
  nlohmann::ordered_json hyps = nlohmann::ordered_json::array();
  for (const auto& h : c.hypotheses)
    hyps.push_back({{"statement", h.statement},
                    {"status", h.status == HypothesisStatus::Verified ? "Verified" : "Asserted"},
                    {"evidence", h.evidence}});
  j["hypotheses"] = std::move(hyps);
  j["depends_on"] = c.depends_on;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.data) data[k] = v;
  j["data"] = std::move(data);
  j["inputs_digest"] = c.inputs_digest;
  return j;
}

}  // namespace

std::string Certificate::digest() const { return sha256_hex(body(*this).dump()); }

std::string Certificate::summary() const {
  std::string s(to_string(conclusion));
  if (!character.empty()) s += "[" + character + "]";
  if (value) s += "=" + std::to_string(*value);
  s += " via " + rule;
  if (conditional()) s += " (conditional)";
  return s;
}

nlohmann::ordered_json to_json(const Certificate& c) {
  nlohmann::ordered_json j = body(c);
  j["conditional"] = c.conditional();
  j["digest"] = c.digest();
  return j;
}

Certificate certificate_from_json(const nlohmann::ordered_json& j) {
  auto str = [&](const char* key) {
    if (!j.contains(key) || !j.at(key).is_string()) fail(ErrorKind::SchemaViolation, std::string("certificate.") + key);
    return j.at(key).get<std::string>();
  };
  Certificate c;
  c.conclusion = conclusion_from_string(str("conclusion"));
  c.field = str("field");
  c.character = str("character");
  if (!j.contains("value")) fail(ErrorKind::SchemaViolation, "certificate.value");
  if (!j.at("value").is_null()) c.value = j.at("value").get<long long>();
  c.rule = str("rule");
  if (!is_rule_key(c.rule)) fail(ErrorKind::InvariantViolation, "unknown rule key '" + c.rule + "'");
  if (!j.contains("hypotheses") || !j.at("hypotheses").is_array()) fail(ErrorKind::SchemaViolation, "certificate.hypotheses");
  for (const auto& h : j.at("hypotheses")) {
    Hypothesis hyp;
    hyp.statement = h.value("statement", "");
    const std::string status = h.value("status", "");
    if (status != "Verified" && status != "Asserted") fail(ErrorKind::SchemaViolation, "hypothesis status");
    hyp.status = status == "Verified" ? HypothesisStatus::Verified : HypothesisStatus::Asserted;
    hyp.evidence = h.value("evidence", "");
    c.hypotheses.push_back(std::move(hyp));
  }
  const auto deps = j.value("depends_on", nlohmann::ordered_json::array());
  for (const auto& d : deps) c.depends_on.push_back(d.get<std::string>());
  const auto data = j.value("data", nlohmann::ordered_json::object());
  for (const auto& [k, v] : data.items()) c.data[k] = v.get<std::string>();
  c.inputs_digest = str("inputs_digest");
  if (j.contains("digest") && j.at("digest") != c.digest())
    fail(ErrorKind::InvariantViolation, "certificate digest mismatch");
  return c;
}

}  // namespace gkc
