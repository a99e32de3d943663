#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gkc {

using Elem = std::size_t;
using Subset = std::vector<Elem>;  // sorted element indices

enum class GroupKind { Abelian, Dihedral, Quaternion8, Raw };

/// Input to build_group: abelian invariants, dihedral n (order 2n), Q8, or
/// an explicit multiplication table (table[a][b] = a*b).
struct GroupSpec {
  GroupKind kind = GroupKind::Raw;
  std::vector<std::uint64_t> invariants;  // Abelian
  std::uint64_t n = 0;                    // Dihedral
  std::vector<std::vector<Elem>> table;   // Raw
};

/// Finite group by full multiplication table with conjugacy classes.
///
/// Element encodings for the closed-form families:
///   abelian [d1..dk]: mixed radix, x = x1 + d1*(x2 + d2*(...)), identity 0
///   dihedral n:       a^k -> k, a^k b -> n + k (b a = a^-1 b)
///   quaternion8:      1, -1, i, -i, j, -j, k, -k -> 0..7
class FiniteGroup {
 public:
  std::size_t order() const { return n_; }
  Elem identity() const { return e_; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  Elem power(Elem a, long k) const;

  GroupKind kind() const { return kind_; }
  const std::vector<std::uint64_t>& invariants() const { return invariants_; }
  std::uint64_t dihedral_n() const { return dn_; }
  const std::string& name() const { return name_; }

  const std::vector<Subset>& classes() const { return classes_; }
  std::size_t class_of(Elem x) const { return class_of_[x]; }
  std::size_t num_classes() const { return classes_.size(); }
  /// Class of x^-1 for each class.
  std::size_t inverse_class(std::size_t c) const { return inv_class_[c]; }

  std::uint64_t element_order(Elem x) const { return elem_order_[x]; }
  std::uint64_t exponent() const { return exponent_; }
  bool is_abelian() const;
  bool is_central(Elem x) const;
  bool is_central_involution(Elem x) const;
  Subset center() const;
  std::vector<Elem> central_involutions() const;

  bool is_subgroup(const Subset& H) const;
  /// Subgroup generated by the given elements.
  Subset generated(const std::vector<Elem>& gens) const;
  Subset conjugate(const Subset& H, Elem g) const;
  bool conjugate_subgroups(const Subset& A, const Subset& B) const;
  /// G/N abelian for a normal subgroup N (all commutators lie in N).
  bool quotient_is_abelian(const Subset& N) const;
  bool is_normal(const Subset& N) const;

  std::string element_label(Elem x) const;

 private:
  friend class GroupBuilder;
  void finalize();

  std::size_t n_ = 0;
  Elem e_ = 0;
  std::vector<Elem> mul_, inv_;
  GroupKind kind_ = GroupKind::Raw;
  std::vector<std::uint64_t> invariants_;
  std::uint64_t dn_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Subset> classes_;
  std::vector<std::size_t> class_of_, inv_class_;
  std::vector<std::uint64_t> elem_order_;
  std::uint64_t exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Validates the group laws and computes conjugacy classes. Throws InvalidTable.
GroupPtr build_group(const GroupSpec& spec);
GroupPtr abelian_group(const std::vector<std::uint64_t>& invariants);
GroupPtr dihedral_group(std::uint64_t n);
GroupPtr quaternion_group();
GroupPtr table_group(const std::vector<std::vector<Elem>>& table, std::string name = "raw");
/// Index of (g, h) is g * |H| + h.
GroupPtr direct_product(const FiniteGroup& G, const FiniteGroup& H);
/// Closure of permutations of {0..k-1}, composed right to left. Elements
/// are sorted lexicographically, so the identity is element 0.
GroupPtr permutation_group(const std::vector<std::vector<int>>& generators, std::string name = "perm");
/// (Z/m)^x as a raw table on the units sorted ascending (element 0 is 1).
GroupPtr units_mod(std::uint64_t m);
/// Residues for units_mod(m) elements, ascending.
std::vector<std::uint64_t> unit_residues(std::uint64_t m);

}  // namespace gkc
