#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkc/engine/certificate.hpp"
#include "gkc/engine/tower.hpp"
#include "gkc/extension/descriptor.hpp"
#include "gkc/groups/character.hpp"

namespace gkc {

/// chi(1) + chi(tau) <= 2 for every irreducible chi of G. Self-checked
/// against abelianness of G/<tau>; a disagreement is an Internal error.
/// Throws TauNotCentralInvolution.
bool klingen_criterion(const GroupPtr& G, Elem tau);

/// rank (A')^-_Gamma <= r - s for abelian K/R with a totally split prime v
/// having R_v = Q_p. Throws HypothesisFailed("a" or "b").
Certificate rank_bound(const ExtensionDescriptor& ext, const std::string& inputs_digest = "");

/// k = K^U with p undecomposed in K/k, for the subfield reduction.
struct SubfieldReduction {
  Subset U;
  std::string label = "k";
  /// An unconditional stored certificate of GKC-(k) discharges the hypothesis.
  std::optional<Certificate> gkc_minus_of_k;
};

struct CertifyOptions {
  /// Row of character_table(G) to restrict character-level output to.
  std::optional<std::size_t> character;
  bool assume_leopoldt = false;
  /// K cap R_inf = R taken as an assumption when p divides |G|.
  bool assume_tower_disjointness = false;
  std::optional<SubfieldReduction> subfield;
  /// Gal(K/R~) for GVC over an intermediate totally real field R~.
  std::optional<Subset> lift_subgroup;
  std::optional<TowerData> tower;
};

nlohmann::json to_json(const CertifyOptions& o);

struct CertifyResult {
  std::vector<Certificate> certificates;
  std::vector<std::string> diagnostics;
};

std::string inputs_digest(const ExtensionDescriptor& ext, const CertifyOptions& options);

/// Applies every rule of the rule base. Throws PIsTwo; no applicable rule
/// yields an empty certificate list with diagnostics.
CertifyResult certify(const ExtensionDescriptor& ext, const CertifyOptions& options = {});

std::string character_label(const std::vector<Character>& table, const Character& chi);

}  // namespace gkc
