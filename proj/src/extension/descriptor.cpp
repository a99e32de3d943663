#include "gkc/extension/descriptor.hpp"

#include <algorithm>
#include <map>

#include "gkc/error.hpp"

namespace gkc {

void validate(const ExtensionDescriptor& ext) {
  auto violation = [](const std::string& what) { fail(ErrorKind::InvariantViolation, what); };
  if (!ext.group) violation("missing group");
  const FiniteGroup& G = *ext.group;
  if (ext.base) {
    if (!ext.base->totally_real()) violation("base not totally real");
    if (static_cast<unsigned>(ext.base->degree()) != ext.base_degree) violation("base degree");
  }
  if (ext.tau >= G.order() || !G.is_central(ext.tau) || G.element_order(ext.tau) != 2) {
    if (ext.tau < G.order() && G.element_order(ext.tau) == 2) violation("tau not central");
    violation("tau not a central involution");
  }
  if (!is_prime(ext.p)) violation("working prime is not prime");
  unsigned local_sum = 0;
  for (const auto& v : ext.primes) {
    if (!G.is_subgroup(v.decomposition)) violation("decomposition subgroup (" + v.label + ")");
    if (v.e_base == 0 || v.f_base == 0) violation("local base degree (" + v.label + ")");
    local_sum += v.e_base * v.f_base;
    const std::size_t gw = v.decomposition.size();
    if (v.e || v.f || v.g) {
      if (!(v.e && v.f && v.g)) violation("local-global degree (" + v.label + "): e, f, g must be given together");
      if (static_cast<std::size_t>(*v.e) * *v.f * *v.g != G.order()) violation("local-global degree (" + v.label + ")");
      if (static_cast<std::size_t>(*v.e) * *v.f != gw) violation("local-global degree (" + v.label + "): e*f != |G_w|");
    }
    if (G.order() % gw != 0) violation("local-global degree (" + v.label + ")");
  }
  if (ext.primes.empty()) violation("no primes over p");
  if (local_sum != ext.base_degree) violation("base degree: sum of e*f over primes differs from [R:Q]");
}

PrimeSummary classify_primes(const ExtensionDescriptor& ext) {
  const FiniteGroup& G = *ext.group;
  PrimeSummary out;
  out.t = ext.primes.size();
  out.s = G.order() / 2;
  for (std::size_t i = 0; i < ext.primes.size(); ++i) {
    const auto& v = ext.primes[i];
    bool tau_in = std::binary_search(v.decomposition.begin(), v.decomposition.end(), ext.tau);
    if (v.totally_split() && v.base_is_Qp()) out.split_Qp.push_back(i);
    if (tau_in) {
      out.tau_in_decomp.push_back(i);
    } else {
      // [G:G_w] primes of K over v, paired by tau into primes of K+.
      out.r += G.order() / (2 * v.decomposition.size());
    }
  }
  return out;
}

Disjointness check_tower_disjointness(const ExtensionDescriptor& ext) {
  return ext.group->order() % ext.p == 0 ? Disjointness::Unknown : Disjointness::Guaranteed;
}

bool totally_split_over_Q(const ExtensionDescriptor& ext) {
  if (ext.primes.size() != ext.base_degree) return false;
  for (const auto& v : ext.primes)
    if (!v.base_is_Qp() || !v.totally_split()) return false;
  return true;
}

ExtensionDescriptor restrict_to_subgroup(const ExtensionDescriptor& ext, const Subset& Hin) {
  const FiniteGroup& G = *ext.group;
  Subset H(Hin);
  std::sort(H.begin(), H.end());
  if (!G.is_subgroup(H)) fail(ErrorKind::NotASubgroup, "restriction subgroup");
  if (!std::binary_search(H.begin(), H.end(), ext.tau))
    fail(ErrorKind::InvalidArgument, "the fixed field of H must be totally real, so tau must lie in H");
  std::map<Elem, Elem> index;
  for (Elem i = 0; i < H.size(); ++i) index[H[i]] = i;
  std::vector<std::vector<Elem>> table(H.size(), std::vector<Elem>(H.size()));
  for (Elem i = 0; i < H.size(); ++i)
    for (Elem j = 0; j < H.size(); ++j) table[i][j] = index.at(G.mul(H[i], H[j]));

  ExtensionDescriptor out;
  out.label = ext.label + "|restricted";
  out.group = table_group(table, G.name() + "|H" + std::to_string(H.size()));
  out.tau = index.at(ext.tau);
  out.p = ext.p;
  out.assertions = ext.assertions;
  out.base_degree = ext.base_degree * static_cast<unsigned>(G.order() / H.size());
  for (const auto& v : ext.primes) {
    // Primes of K^H over v correspond to double cosets H g G_w; the prime
    // below g(w) has decomposition group H cap g G_w g^-1 inside H.
    std::vector<bool> seen(G.order(), false);
    std::size_t k = 0;
    for (Elem g = 0; g < G.order(); ++g) {
      if (seen[g]) continue;
      for (Elem h : H)
        for (Elem x : v.decomposition) seen[G.mul(G.mul(h, g), x)] = true;
      Subset conj = G.conjugate(v.decomposition, g);
      Subset dec;
      for (Elem x : conj)
        if (index.count(x)) dec.push_back(index.at(x));
      std::sort(dec.begin(), dec.end());
      PrimeRecord w = v;
      w.label = v.label + "." + std::to_string(++k);
      // The local degree of K^H over R_v is recorded in f_base; its split
      // into ramification and inertia is not tracked.
      w.f_base = v.f_base * static_cast<unsigned>(conj.size() / dec.size());
      w.decomposition = std::move(dec);
      w.e.reset();
      w.f.reset();
      w.g.reset();
      out.primes.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace gkc
