#pragma once
// Random descriptors over the small-group catalog for the property suites.

#include <random>

#include "gkc/extension/descriptor.hpp"
#include "group_catalog.hpp"

namespace gen {

struct DescriptorGen {
  std::mt19937_64 rng;
  std::vector<gkc::GroupPtr> groups;  // catalog groups owning a central involution

  explicit DescriptorGen(std::uint64_t seed) : rng(seed) {
    for (auto& e : catalog::groups_up_to_24())
      if (!e.group->central_involutions().empty()) groups.push_back(e.group);
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

  gkc::Subset random_subgroup(const gkc::FiniteGroup& G) {
    std::vector<gkc::Elem> gens;
    const std::size_t k = pick(3);  // 0, 1 or 2 generators
    for (std::size_t i = 0; i < k; ++i) gens.push_back(pick(G.order()));
    return G.generated(gens);
  }

  gkc::ExtensionDescriptor operator()() {
    gkc::ExtensionDescriptor ext;
    ext.group = groups[pick(groups.size())];
    const auto taus = ext.group->central_involutions();
    ext.tau = taus[pick(taus.size())];
    ext.p = std::vector<std::uint64_t>{3, 5, 7, 11, 13}[pick(5)];
    ext.label = "random " + ext.group->name();
    const std::size_t t = 1 + pick(3);
    ext.base_degree = 0;
    for (std::size_t i = 0; i < t; ++i) {
      gkc::PrimeRecord v;
      v.label = "v" + std::to_string(i + 1);
      v.e_base = 1 + static_cast<unsigned>(pick(2));
      v.f_base = pick(3) == 0 ? 2 : 1;
      v.decomposition = random_subgroup(*ext.group);
      ext.base_degree += v.e_base * v.f_base;
      ext.primes.push_back(std::move(v));
    }
    return ext;
  }
};

}  // namespace gen
