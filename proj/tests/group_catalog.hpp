#pragma once
// Groups of order <= 24 used by the exhaustive suites. Nonabelian groups
// outside the closed-form families are generated as permutation groups or by
// explicit tables, so they exercise the Dixon route.

#include <string>
#include <vector>

#include "gkc/groups/finite_group.hpp"

namespace catalog {

using gkc::Elem;
using gkc::GroupPtr;

/// Dicyclic group of order 4n: a^(2n) = 1, x^2 = a^n, x a x^-1 = a^-1.
inline GroupPtr dicyclic(std::size_t n) {
  const std::size_t N = 4 * n, m = 2 * n;
  std::vector<std::vector<Elem>> t(N, std::vector<Elem>(N));
  for (Elem u = 0; u < N; ++u)
    for (Elem v = 0; v < N; ++v) {
      std::size_t i = u % m, s = u / m, j = v % m, w = v / m;
      std::size_t k = (s ? i + m - j : i + j) + (s && w ? n : 0);
      t[u][v] = ((s + w) % 2) * m + k % m;
    }
  return gkc::table_group(t, "Dic" + std::to_string(n));
}

/// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
inline GroupPtr sl23() {
  std::vector<std::pair<int, int>> vecs;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) vecs.emplace_back(x, y);
  auto perm = [&](int a, int b, int c, int d) {
    std::vector<int> p;
    for (auto [x, y] : vecs) {
      std::pair<int, int> img{(a * x + b * y) % 3, (c * x + d * y) % 3};
      for (std::size_t k = 0; k < vecs.size(); ++k)
        if (vecs[k] == img) p.push_back(static_cast<int>(k));
    }
    return p;
  };
  return gkc::permutation_group({perm(1, 1, 0, 1), perm(0, 2, 1, 0)}, "SL(2,3)");
}

struct Entry {
  std::string name;
  GroupPtr group;
};

inline std::vector<Entry> groups_up_to_24() {
  std::vector<Entry> out;
  auto add = [&](GroupPtr g) { out.push_back({g->name(), std::move(g)}); };
  for (std::vector<std::uint64_t> inv :
       std::vector<std::vector<std::uint64_t>>{{1}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2},
                                               {9}, {3, 3}, {10}, {11}, {12}, {2, 6}, {13}, {14}, {15}, {16},
                                               {2, 8}, {4, 4}, {2, 2, 4}, {2, 2, 2, 2}, {17}, {18}, {3, 6}, {19},
                                               {20}, {2, 10}, {21}, {22}, {23}, {24}, {2, 12}, {2, 2, 6}})
    add(gkc::abelian_group(inv));
  for (std::uint64_t n = 2; n <= 12; ++n) add(gkc::dihedral_group(n));
  add(gkc::quaternion_group());
  add(gkc::permutation_group({{1, 2, 0}, {1, 0, 2}}, "S3"));
  add(gkc::permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4"));
  add(gkc::permutation_group({{1, 2, 3, 0}, {1, 0, 2, 3}}, "S4"));
  add(gkc::permutation_group({{1, 2, 3, 4, 5, 6, 0}, {0, 2, 4, 6, 1, 3, 5}}, "C7:C3"));
  add(gkc::permutation_group({{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}}, "F20"));
  add(sl23());
  add(dicyclic(3));
  add(dicyclic(4));
  add(dicyclic(5));
  add(dicyclic(6));
  add(gkc::direct_product(*gkc::quaternion_group(), *gkc::abelian_group({2})));
  add(gkc::direct_product(*gkc::dihedral_group(4), *gkc::abelian_group({2})));
  add(gkc::direct_product(*gkc::quaternion_group(), *gkc::abelian_group({3})));
  add(gkc::direct_product(*gkc::dihedral_group(3), *gkc::abelian_group({3})));
  add(gkc::direct_product(*gkc::dihedral_group(3), *gkc::abelian_group({4})));
  add(gkc::direct_product(*gkc::dihedral_group(6), *gkc::abelian_group({2})));
  add(gkc::direct_product(*gkc::permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4"), *gkc::abelian_group({2})));
  add(gkc::direct_product(*dicyclic(3), *gkc::abelian_group({2})));
  for (std::uint64_t m : {5, 7, 8, 9, 12, 15, 16, 20, 21, 24, 28, 35, 36})
    add(gkc::units_mod(m));
  return out;
}

}  // namespace catalog
