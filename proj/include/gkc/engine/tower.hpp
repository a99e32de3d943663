#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "gkc/algebra/integer.hpp"

namespace gkc {

inline constexpr const char* kTowerSchema = "gkc-tower/1";

/// Externally computed data for layer n of the cyclotomic Z_p-tower of K.
struct TowerLayer {
  Integer a_full = 1;           // |A_n'|
  Integer a_plus = 1;           // |(A_n')^+|
  Integer ram_ratio = 1;        // e(K_n/K) / e(K_n^+/K^+)
  Integer norm_index_plus = 1;  // [E'_{K+} : N_n(K_n^+) cap E'_{K+}]
  Integer norm_index_full = 1;  // [E'_K : N_n(K_n) cap E'_K]
  /// Independently computed |((A_n')^-)^{Gamma_n}|, when available.
  std::optional<Integer> minus_invariants;
};

struct TowerData {
  std::string label;
  std::uint64_t p = 3;
  std::uint64_t r = 0;
  std::map<unsigned, TowerLayer> layers;
  std::string provenance;
};

struct ChevalleyResult {
  unsigned n = 0;
  Rational rhs;  // predicted |((A_n')^-)^{Gamma_n}|
  bool consistent = false;
};

/// rhs = |A_0'|/|(A_0')^+| * ram_ratio_n * norm_index_plus_n / norm_index_full_n.
/// Throws MissingLayer, NonPPower (an entry that is not a power of p).
ChevalleyResult chevalley_eval(const TowerData& tower, unsigned n);

struct StabilizationVerdict {
  enum class Kind { Stable, NotStable, Inconclusive };
  Kind kind = Kind::Inconclusive;
  unsigned n0 = 0;  // Stable: first n with equal orders at n and n + 1
  Integer bound;    // Stable: the stabilized minus-part order
  std::string detail;
};

StabilizationVerdict gkc_minus_stabilization(const TowerData& tower);

TowerData tower_from_json(const nlohmann::json& doc);
TowerData read_tower_file(const std::filesystem::path& path);
nlohmann::json to_json(const TowerData& tower);

}  // namespace gkc
