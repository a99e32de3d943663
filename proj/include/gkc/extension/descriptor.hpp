#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkc/fields/number_field.hpp"
#include "gkc/groups/finite_group.hpp"

namespace gkc {

enum class Provenance { Computed, Ingested };

/// Data for one prime v of R above p.
struct PrimeRecord {
  std::string label;
  unsigned e_base = 1;  // e(v/p)
  unsigned f_base = 1;  // f(v/p)
  /// Decomposition group G_w of a prime w | v (fixed representative of its
  /// conjugacy class), sorted.
  Subset decomposition;
  Provenance provenance = Provenance::Computed;
  /// Layer depth n(v) from tower data; descriptive only.
  unsigned tower_depth = 0;
  /// Optional local data of K/R at v: ramification, residue degree, number of primes.
  std::optional<unsigned> e, f, g;

  bool base_is_Qp() const { return e_base == 1 && f_base == 1; }
  bool totally_split() const { return decomposition.size() == 1; }
};

/// Gal(M/Q) for a CM field M Galois over Q that K is built from, when known.
/// real_abelian_twist means K = M L with L real abelian over Q.
struct AbsoluteGalois {
  GroupPtr group;
  Elem tau = 0;
  bool real_abelian_twist = false;
  bool verified = false;  // computed from the construction rather than ingested
  std::string description;
  std::string evidence;
};

/// K/R Galois CM with group G and complex conjugation tau. K itself is only
/// carried implicitly through (G, tau, decomposition data).
struct ExtensionDescriptor {
  std::string label;
  /// R, when a defining polynomial is available.
  std::optional<NumberField> base;
  unsigned base_degree = 1;
  GroupPtr group;
  Elem tau = 0;
  std::uint64_t p = 0;
  std::vector<PrimeRecord> primes;
  std::vector<std::string> assertions;
  std::optional<AbsoluteGalois> absolute;
  /// Outcome of the linear disjointness check for composita ("", "verified", "asserted").
  std::string disjointness;
  /// Real quadratic square classes composing R (compositum builds only).
  std::vector<Integer> real_square_classes;

  unsigned degree_over_Q() const { return static_cast<unsigned>(group->order()) * base_degree; }
};

/// Checks every descriptor invariant; throws InvariantViolation naming the
/// failed one ("base not totally real", "tau not central", ...).
void validate(const ExtensionDescriptor& ext);

struct PrimeSummary {
  std::size_t t = 0;                         // primes of R over p
  std::vector<std::size_t> split_Qp;         // totally split in K/R with R_v = Q_p
  std::vector<std::size_t> tau_in_decomp;    // primes of K+ over v unsplit in K
  std::uint64_t r = 0;                       // primes of K+ over p split in K
  std::uint64_t s = 0;                       // |G| / 2
};

PrimeSummary classify_primes(const ExtensionDescriptor& ext);

enum class Disjointness { Guaranteed, Unknown };
/// Guaranteed iff p does not divide |G| (sufficient for K cap R_inf = R).
Disjointness check_tower_disjointness(const ExtensionDescriptor& ext);

/// True when p is totally split in K/Q: every v has R_v = Q_p, all primes of
/// R over p are listed, and every G_w is trivial.
bool totally_split_over_Q(const ExtensionDescriptor& ext);

/// K / K^H for a subgroup H of G containing tau, with H re-indexed as a raw
/// table group. Base polynomial data is dropped.
ExtensionDescriptor restrict_to_subgroup(const ExtensionDescriptor& ext, const Subset& H);

}  // namespace gkc
