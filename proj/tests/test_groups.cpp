#include "doctest.h"

#include <map>
#include <random>

#include "gkc/error.hpp"
#include "gkc/groups/character.hpp"
#include "group_catalog.hpp"

using namespace gkc;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

// Number of classes by Burnside's lemma on the conjugation action.
std::size_t class_count_oracle(const FiniteGroup& G) {
  std::size_t fixed = 0;
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem x = 0; x < G.order(); ++x)
      if (G.mul(g, x) == G.mul(x, g)) ++fixed;
  return fixed / G.order();
}

std::size_t centralizer_order(const FiniteGroup& G, Elem x) {
  std::size_t c = 0;
  for (Elem g = 0; g < G.order(); ++g)
    if (G.mul(g, x) == G.mul(x, g)) ++c;
  return c;
}

std::vector<Subset> all_cyclic_subgroups(const FiniteGroup& G) {
  std::vector<Subset> out;
  for (Elem x = 0; x < G.order(); ++x) {
    auto H = G.generated({x});
    if (std::find(out.begin(), out.end(), H) == out.end()) out.push_back(H);
  }
  return out;
}

}  // namespace

TEST_CASE("build_group examples") {
  auto c2 = build_group({GroupKind::Abelian, {2}, 0, {}});
  CHECK(c2->order() == 2);
  CHECK(c2->num_classes() == 2);
  auto d6 = build_group({GroupKind::Dihedral, {}, 6, {}});
  CHECK(d6->order() == 12);
  CHECK(d6->num_classes() == 6);
  auto q8 = build_group({GroupKind::Quaternion8, {}, 0, {}});
  CHECK(q8->order() == 8);
  CHECK(q8->num_classes() == 5);
  CHECK(q8->central_involutions() == std::vector<Elem>{1});

  GroupSpec bad{GroupKind::Raw, {}, 0, {{0, 1}, {0, 1}}};
  CHECK(kind_of([&] { build_group(bad); }) == ErrorKind::InvalidTable);
  GroupSpec nonassoc{GroupKind::Raw, {}, 0, {{0, 1, 2}, {1, 0, 1}, {2, 2, 0}}};
  CHECK(kind_of([&] { build_group(nonassoc); }) == ErrorKind::InvalidTable);
}

TEST_CASE("conjugacy classes partition and match Burnside count") {
  for (const auto& [name, G] : catalog::groups_up_to_24()) {
    CAPTURE(name);
    CHECK(G->num_classes() == class_count_oracle(*G));
    std::size_t total = 0;
    for (const auto& cls : G->classes()) {
      total += cls.size();
      for (Elem g = 0; g < G->order(); ++g) CHECK(G->class_of(G->conj(g, cls[0])) == G->class_of(cls[0]));
      CHECK(G->order() % cls.size() == 0);
    }
    CHECK(total == G->order());
    CHECK(G->classes()[0] == Subset{G->identity()});
  }
}

TEST_CASE("character tables: orthogonality and degrees for |G| <= 24") {
  for (const auto& [name, G] : catalog::groups_up_to_24()) {
    CAPTURE(name);
    auto rows = character_table(G);
    REQUIRE(rows.size() == G->num_classes());
    CHECK(rows[0].is_trivial());
    long sumsq = 0;
    for (const auto& a : rows) {
      sumsq += static_cast<long>(a.degree() * a.degree());
      CHECK(G->order() % a.degree() == 0);
      for (const auto& b : rows) CHECK(inner_product(a, b) == (a == b ? 1 : 0));
    }
    CHECK(sumsq == static_cast<long>(G->order()));
    // Column orthogonality: sum_chi chi(g) conj(chi(h)) = |C(g)| [g ~ h].
    for (std::size_t c = 0; c < G->num_classes(); ++c)
      for (std::size_t d = 0; d < G->num_classes(); ++d) {
        CycNumber acc(G->exponent());
        for (const auto& chi : rows) acc += chi.values[c] * chi.values[d].conj();
        long expect = c == d ? static_cast<long>(centralizer_order(*G, G->classes()[c][0])) : 0;
        CHECK(acc == CycNumber::rational(expect));
      }
  }
}

TEST_CASE("closed forms agree with the Dixon route") {
  for (const auto& [name, G] : catalog::groups_up_to_24()) {
    if (G->kind() == GroupKind::Raw) continue;
    CAPTURE(name);
    CHECK(character_table(G) == dixon_character_table(G));
  }
}

TEST_CASE("character table examples") {
  auto c2 = abelian_group({2});
  auto t = character_table(c2);
  REQUIRE(t.size() == 2);
  CHECK(t[0].values == std::vector<CycNumber>{CycNumber::rational(1, 2), CycNumber::rational(1, 2)});
  CHECK(t[1].values == std::vector<CycNumber>{CycNumber::rational(1, 2), CycNumber::rational(-1, 2)});

  auto q8 = quaternion_group();
  auto tq = character_table(q8);
  REQUIRE(tq.size() == 5);
  for (int i = 0; i < 4; ++i) CHECK(tq[static_cast<std::size_t>(i)].degree() == 1);
  CHECK(tq[4].degree() == 2);
  CHECK(tq[4].at(1) == CycNumber::rational(-2));

  auto d6 = dihedral_group(6);
  auto td = character_table(d6);
  int ones = 0, twos = 0;
  for (const auto& chi : td) (chi.degree() == 1 ? ones : twos)++;
  CHECK(ones == 4);
  CHECK(twos == 2);

  CHECK(kind_of([] { character_table(abelian_group({65})); }) == ErrorKind::ScaleExceeded);
  CHECK(character_table(abelian_group({64})).size() == 64);
  CHECK(character_table(units_mod(85)).size() == 64);
}

TEST_CASE("dihedral odd-character counts") {
  for (std::uint64_t n : {2, 6, 10, 14, 18, 22, 26, 30}) {
    CAPTURE(n);
    auto G = dihedral_group(n);
    Elem tau = n / 2;  // a^(n/2)
    REQUIRE(G->is_central_involution(tau));
    auto odd = odd_characters(character_table(G), tau);
    std::size_t deg1 = 0, deg2 = 0, sum = 0;
    for (const auto& chi : odd) {
      (chi.degree() == 1 ? deg1 : deg2)++;
      sum += chi.degree();
    }
    CHECK(deg2 == (n - 2) / 4);
    CHECK(deg1 == 2);
    CHECK(sum == n / 2 + 1);
  }
}

TEST_CASE("parity") {
  auto q8 = quaternion_group();
  auto tq = character_table(q8);
  CHECK(parity(tq[0], 1) == Parity::Even);
  CHECK(parity(tq[4], 1) == Parity::Odd);
  CHECK(odd_characters(tq, 1).size() == 1);
  CHECK(kind_of([&] { parity(tq[0], 2); }) == ErrorKind::TauNotCentralInvolution);

  auto d6 = dihedral_group(6);
  for (const auto& chi : character_table(d6)) {
    // The 2-dimensional character with chi(a) = zeta_6 + zeta_6^-1 = 1.
    if (chi.degree() == 2 && chi.at(1) == CycNumber::rational(1)) {
      CHECK(chi.at(3) == CycNumber::rational(-2));
      CHECK(parity(chi, 3) == Parity::Odd);
    }
  }
  CHECK(kind_of([&] { parity(character_table(d6)[0], 6); }) == ErrorKind::TauNotCentralInvolution);
}

TEST_CASE("fixed_dim and induction examples") {
  auto d6 = dihedral_group(6);
  auto td = character_table(d6);
  Subset trivial{0}, all, b{0, 6};
  for (Elem x = 0; x < 12; ++x) all.push_back(x);
  for (const auto& chi : td) {
    CHECK(fixed_dim(chi, trivial) == chi.degree());
    CHECK(fixed_dim(chi, all) == (chi.is_trivial() ? 1u : 0u));
    if (chi.degree() == 2) CHECK(fixed_dim(chi, b) == 1);
    CHECK(inner_product(induced_trivial(d6, b), chi) == fixed_dim(chi, b));
  }
  CHECK(induced_trivial(d6, b).degree() == 6);
  CHECK(kind_of([&] { fixed_dim(td[0], Subset{0, 1}); }) == ErrorKind::NotASubgroup);

  auto c2 = abelian_group({2});
  auto reg = induced_trivial(c2, Subset{0});
  CHECK(reg.values == std::vector<CycNumber>{CycNumber::rational(2), CycNumber::rational(0)});
}

TEST_CASE("Frobenius reciprocity on random triples") {
  auto groups = catalog::groups_up_to_24();
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& G = groups[rng() % groups.size()].group;
    auto subs = all_cyclic_subgroups(*G);
    // Also two-generator subgroups.
    Subset H = G->generated({static_cast<Elem>(rng() % G->order()), static_cast<Elem>(rng() % G->order())});
    if (rng() % 2) H = subs[rng() % subs.size()];
    auto table = character_table(G);
    const auto& chi = table[rng() % table.size()];
    CHECK(inner_product(induced_trivial(G, H), chi) == fixed_dim(chi, H));
    // General induction: <Ind psi, chi>_G = <psi, chi|_H>_H for psi = chi|_H itself.
    auto res = restrict_to(chi, H);
    auto ind = induced_character(G, H, res);
    CycNumber acc(G->exponent());
    for (std::size_t i = 0; i < H.size(); ++i) acc += res[i] * res[i].conj();
    CHECK(inner_product(ind, chi) == acc.to_rational() / Rational(static_cast<long>(H.size())));
  }
}

TEST_CASE("idempotents") {
  auto c2 = abelian_group({2});
  auto t = character_table(c2);
  auto e0 = idempotent(t[0]), e1 = idempotent(t[1]);
  CHECK(e0.coeffs == std::vector<CycNumber>{CycNumber::rational(Rational(1, 2)), CycNumber::rational(Rational(1, 2))});
  CHECK(e1.coeffs == std::vector<CycNumber>{CycNumber::rational(Rational(1, 2)), CycNumber::rational(Rational(-1, 2))});

  auto d6 = dihedral_group(6);
  for (const auto& chi : character_table(d6)) {
    auto e = idempotent(chi);
    CHECK(multiply(e, e) == e);
  }
  for (const auto& [name, G] : catalog::groups_up_to_24()) {
    if (G->order() > 16) continue;
    CAPTURE(name);
    auto tab = character_table(G);
    std::vector<Idempotent> es;
    for (const auto& chi : tab) es.push_back(idempotent(chi));
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = 0; j < es.size(); ++j) {
        auto prod = multiply(es[i], es[j]);
        if (i == j)
          CHECK(prod == es[i]);
        else
          CHECK(is_zero(prod));
      }
  }
}
