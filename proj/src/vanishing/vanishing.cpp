#include "gkc/vanishing/vanishing.hpp"

#include <algorithm>

#include "gkc/error.hpp"

namespace gkc {

namespace {

void require_odd(const ExtensionDescriptor& ext, const Character& chi) {
  if (chi.group.get() != ext.group.get() && chi.group->order() != ext.group->order())
    fail(ErrorKind::InvalidArgument, "character of a different group");
  if (parity(chi, ext.tau) != Parity::Odd)
    fail(ErrorKind::EvenCharacter, "Tate's vanishing formula is stated for odd characters only");
}

}  // namespace

VanishingReport tate_order(const ExtensionDescriptor& ext, const Character& chi) {
  require_odd(ext, chi);
  VanishingReport rep;
  rep.chi = chi;
  for (const auto& v : ext.primes) {
    unsigned d = fixed_dim(chi, v.decomposition);
    rep.contributions.emplace_back(v.label, d);
    rep.r_S += d;
  }
  return rep;
}

BvComponent bv_component(const ExtensionDescriptor& ext, const Character& chi, std::size_t prime_index,
                         unsigned tower_depth) {
  require_odd(ext, chi);
  if (prime_index >= ext.primes.size()) fail(ErrorKind::InvalidArgument, "prime index out of range");
  const auto& v = ext.primes[prime_index];
  BvComponent out;
  out.prime = v.label;
  out.chi_multiplicity = chi.degree() * fixed_dim(chi, v.decomposition);
  out.tower_depth = tower_depth;
  out.omega_degree = 1;
  for (unsigned i = 0; i < tower_depth; ++i) out.omega_degree *= ext.p;
  out.t_order_contribution = out.chi_multiplicity;
  return out;
}

VanishingReport t_order_ledger(const ExtensionDescriptor& ext, const Character& chi, TOrderInput input) {
  VanishingReport rep = tate_order(ext, chi);
  const std::uint64_t deg = chi.degree();
  switch (input.kind) {
    case TOrderInput::Kind::Unknown: return rep;
    case TOrderInput::Kind::GkcAssumed:
      rep.gkc_assumed = true;
      rep.ord_f_Aprime = 0;
      break;
    case TOrderInput::Kind::Known:
      if (input.value % deg != 0)
        fail(ErrorKind::NonDivisibleOrder, "ord_T f_A' = " + std::to_string(input.value) +
                                               " is not divisible by chi(1) = " + std::to_string(deg));
      rep.ord_f_Aprime = input.value;
      rep.gkc_fails = input.value > 0;
      break;
  }
  rep.ord_f_A = *rep.ord_f_Aprime + deg * rep.r_S;
  rep.predicted_Lp_order = *rep.ord_f_A / deg;
  return rep;
}

std::uint64_t lifted_order(const ExtensionDescriptor& ext, const Subset& Hin) {
  const FiniteGroup& G = *ext.group;
  if (!G.is_abelian()) fail(ErrorKind::NotAbelian, "order lifting needs K/R abelian");
  Subset H(Hin);
  std::sort(H.begin(), H.end());
  if (!G.is_subgroup(H)) fail(ErrorKind::NotASubgroup, "Gal(K/R~)");
  for (const auto& v : ext.primes)
    for (Elem x : v.decomposition)
      if (!std::binary_search(H.begin(), H.end(), x))
        fail(ErrorKind::PrimesNotSplitInSubfield, v.label + " does not split completely in R~");
  const std::uint64_t value = (G.order() / H.size()) * ext.primes.size();
  ExtensionDescriptor res = restrict_to_subgroup(ext, H);
  for (const auto& chi : odd_characters(character_table(res.group), res.tau)) {
    const std::uint64_t r = tate_order(res, chi).r_S;
    if (r != value)
      fail(ErrorKind::InconsistentLift, "r_S = " + std::to_string(r) + " for an odd character of Gal(K/R~), expected " +
                                            std::to_string(value) + " (a decomposition group is not in its kernel)");
  }
  return value;
}

}  // namespace gkc
