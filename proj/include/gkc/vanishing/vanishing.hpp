#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkc/extension/descriptor.hpp"
#include "gkc/groups/character.hpp"

namespace gkc {

/// Supplied T-order of f_{A',chi}: a known value, GKC(K/R,chi) assumed (0),
/// or unknown.
struct TOrderInput {
  enum class Kind { Known, GkcAssumed, Unknown };
  Kind kind = Kind::Unknown;
  std::uint64_t value = 0;

  static TOrderInput known(std::uint64_t k) { return {Kind::Known, k}; }
  static TOrderInput gkc_assumed() { return {Kind::GkcAssumed, 0}; }
  static TOrderInput unknown() { return {}; }
};

struct VanishingReport {
  Character chi;
  std::uint64_t r_S = 0;
  /// dim V_chi^{G_w} per prime of R over p, in descriptor order.
  std::vector<std::pair<std::string, unsigned>> contributions;
  std::optional<std::uint64_t> ord_f_Aprime;
  std::optional<std::uint64_t> ord_f_A;  // also ord_T f_{X,chi}
  std::optional<std::uint64_t> predicted_Lp_order;
  bool gkc_assumed = false;
  bool gkc_fails = false;
};

/// epsilon_chi B_v = (Lambda/omega_n)^multiplicity; the T-order contribution
/// is the multiplicity for every n since omega_n has a simple zero at T = 0.
struct BvComponent {
  std::string prime;
  unsigned chi_multiplicity = 0;
  unsigned tower_depth = 0;
  /// Degree of omega_n in T, p^n (descriptive only).
  std::uint64_t omega_degree = 1;
  unsigned t_order_contribution = 0;
};

/// r_{S,chi} = sum over v | p of dim V_chi^{G_w}; archimedean places give 0
/// for odd chi. Throws EvenCharacter.
VanishingReport tate_order(const ExtensionDescriptor& ext, const Character& chi);

BvComponent bv_component(const ExtensionDescriptor& ext, const Character& chi, std::size_t prime_index,
                         unsigned tower_depth = 0);

/// tate_order plus the T-order ledger: ord f_A = ord f_A' + chi(1) r_S and
/// predicted ord_{s=0} L_p = ord f_X / chi(1). Throws NonDivisibleOrder.
VanishingReport t_order_ledger(const ExtensionDescriptor& ext, const Character& chi, TOrderInput ord_f_Aprime);

/// Common r_{S,chi~} over the odd characters of H = Gal(K/R~): [G:H] |S_p(R)|.
/// Requires G abelian and every G_w inside H, and is checked against
/// tate_order on the restricted descriptor for each odd chi~. Throws
/// NotAbelian, PrimesNotSplitInSubfield, InconsistentLift.
std::uint64_t lifted_order(const ExtensionDescriptor& ext, const Subset& H);

}  // namespace gkc
