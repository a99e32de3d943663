#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gkc {

enum class HypothesisStatus { Verified, Asserted };

struct Hypothesis {
  std::string statement;
  HypothesisStatus status = HypothesisStatus::Verified;
  std::string evidence;
  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

enum class Conclusion { GkcMinus, GkcChi, GvcChi, RankBound, Leopoldt };

std::string_view to_string(Conclusion c);
Conclusion conclusion_from_string(std::string_view s);

/// The fixed rule base. Each key names the statement a certificate rests on.
inline constexpr std::array<std::string_view, 12> kRuleKeys = {
    "no-split-primes",              // GKC- when no prime of K+ over p splits in K
    "undecomposed-subfield",        // reduction to a CM subfield k with p undecomposed in K/k
    "leopoldt-totally-split",       // Leopoldt plus p totally split in K/Q
    "klingen-criterion",            // Leopoldt from chi(1) + chi(tau) <= 2
    "klingen-real-abelian-compositum",  // the same for K L with L real abelian
    "rank-bound",                   // rank of (A')^-_Gamma at most r - s
    "abelian-split-prime",          // abelian K/R, one totally split prime, the rest unsplit in K/K+
    "unique-involution-criterion",  // unsplit condition from prime counts and a cyclic 2-Sylow
    "subfield-lift",                // GVC over intermediate totally real fields
    "dihedral-counting",            // existential GKC(K/R, chi) for D_n, n = 2 mod 4
    "gkc-gvc-equivalence",          // GKC(K/R, chi) iff GVC(K/R, chi) given K cap R_inf = R
    "chevalley-stabilization",      // GKC- from stabilized minus-part invariants
};

bool is_rule_key(std::string_view key);

struct Certificate {
  Conclusion conclusion = Conclusion::GkcMinus;
  std::string field;      // K (or the field the statement is about)
  std::string character;  // "" for field-level statements
  std::optional<long long> value;  // RankBound value, or r_{S,chi} for GVC
  std::string rule;
  std::vector<Hypothesis> hypotheses;
  std::vector<std::string> depends_on;  // digests
  std::map<std::string, std::string> data;
  std::string inputs_digest;

  bool conditional() const;
  /// SHA-256 of the canonical serialization without the digest itself.
  std::string digest() const;
  std::string summary() const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Stable field order; includes "digest" and "conditional".
nlohmann::ordered_json to_json(const Certificate& c);
/// Throws SchemaViolation, or InvariantViolation when the stored digest or
/// rule key does not check out.
Certificate certificate_from_json(const nlohmann::ordered_json& j);

std::string sha256_hex(std::string_view bytes);

}  // namespace gkc
