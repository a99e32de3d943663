#include <doctest.h>

#include <algorithm>
#include <random>

#include "descriptor_gen.hpp"
#include "gkc/error.hpp"
#include "gkc/extension/compositum.hpp"
#include "gkc/engine/rules.hpp"

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

Integer ipow(std::uint64_t p, unsigned long k) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, k);
  return out;
}

TowerLayer layer(std::uint64_t p, unsigned a, unsigned ap, unsigned ram, unsigned nip, unsigned nif) {
  return {ipow(p, a), ipow(p, ap), ipow(p, ram), ipow(p, nip), ipow(p, nif), std::nullopt};
}

// Tower whose minus-part orders are p^{k_n} for the given exponents.
TowerData minus_orders(std::uint64_t p, const std::vector<unsigned>& ks, std::uint64_t r = 1) {
  TowerData t;
  t.label = "synthetic";
  t.p = p;
  t.r = r;
  t.layers[0] = layer(p, ks[0], 0, 0, 0, 0);
  for (unsigned n = 1; n < ks.size(); ++n) {
    // ks[0] + r n + nip - nif = ks[n]
    const long nif = static_cast<long>(ks[0] + r * n) - static_cast<long>(ks[n]);
    t.layers[n] = nif >= 0 ? layer(p, ks[0], 0, static_cast<unsigned>(r * n), 0, static_cast<unsigned>(nif))
                           : layer(p, ks[0], 0, static_cast<unsigned>(r * n), static_cast<unsigned>(-nif), 0);
  }
  return t;
}

ExtensionDescriptor simple(GroupPtr G, Elem tau, std::vector<Subset> decs, std::uint64_t p = 5) {
  ExtensionDescriptor ext;
  ext.label = "K";
  ext.group = std::move(G);
  ext.tau = tau;
  ext.p = p;
  for (std::size_t i = 0; i < decs.size(); ++i) {
    PrimeRecord v{"v" + std::to_string(i + 1), 1, 1, decs[i]};
    v.e = 1;
    v.f = static_cast<unsigned>(decs[i].size());
    v.g = static_cast<unsigned>(ext.group->order() / decs[i].size());
    ext.primes.push_back(v);
  }
  ext.base_degree = static_cast<unsigned>(decs.size());
  validate(ext);
  return ext;
}

std::vector<const Certificate*> by_rule(const CertifyResult& res, std::string_view rule) {
  std::vector<const Certificate*> out;
  for (const auto& c : res.certificates)
    if (c.rule == rule) out.push_back(&c);
  return out;
}

bool has_hypothesis(const Certificate& c, std::string_view prefix) {
  return std::any_of(c.hypotheses.begin(), c.hypotheses.end(),
                     [&](const Hypothesis& h) { return h.statement.rfind(prefix, 0) == 0; });
}

}  // namespace

TEST_CASE("chevalley_eval examples") {
  TowerData t;
  t.label = "example";
  t.p = 3;
  t.r = 1;
  t.layers[0] = {3, 1, 1, 1, 1, std::nullopt};
  t.layers[1] = {9, 3, 3, 1, 3, std::nullopt};
  auto c = chevalley_eval(t, 1);
  CHECK(c.rhs == 3);
  CHECK(c.consistent);
  CHECK(kind_of([&] { chevalley_eval(t, 2); }) == ErrorKind::MissingLayer);
  t.layers[2] = {9, 3, 6, 1, 3, std::nullopt};
  CHECK(kind_of([&] { chevalley_eval(t, 2); }) == ErrorKind::NonPPower);
  t.layers[2] = {9, 3, 9, 1, 3, Integer(27)};
  CHECK(!chevalley_eval(t, 2).consistent);  // rhs 9 against an ingested 27
  t.layers[2].minus_invariants = Integer(9);
  CHECK(chevalley_eval(t, 2).consistent);
  t.layers[3] = {1, 1, 1, 1, 81, std::nullopt};
  CHECK(!chevalley_eval(t, 3).consistent);  // 3 / 81 is not an integer
  TowerData no_base;
  no_base.layers[1] = t.layers[1];
  CHECK(kind_of([&] { chevalley_eval(no_base, 1); }) == ErrorKind::MissingLayer);
}

TEST_CASE("chevalley boundary tower") {
  for (std::uint64_t p : {3u, 5u, 7u, 11u})
    for (std::uint64_t r = 0; r <= 4; ++r)
      for (unsigned n = 0; n <= 6; ++n) {
        TowerData t;
        t.p = p;
        t.r = r;
        t.layers[0] = {1, 1, 1, 1, 1, std::nullopt};
        t.layers[n] = {1, 1, ipow(p, r * n), 1, 1, std::nullopt};
        CHECK(chevalley_eval(t, n).rhs == Rational(ipow(p, r * n)));
      }
}

TEST_CASE("chevalley_eval against exponent arithmetic") {
  std::mt19937_64 rng(kArtifactSeed);
  auto draw = [&](unsigned hi) { return std::uniform_int_distribution<unsigned>(0, hi)(rng); };
  const std::uint64_t primes[] = {3, 5, 7, 13, 101};
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t p = primes[draw(4)];
    const unsigned r = draw(5), n = 1 + draw(8);
    const unsigned a0 = draw(20), b0 = std::min(a0, draw(20)), nip = draw(15), nif = draw(40);
    TowerData t;
    t.p = p;
    t.r = r;
    t.layers[0] = layer(p, a0, b0, 0, 0, 0);
    t.layers[n] = layer(p, draw(30), draw(10), r * n, nip, nif);
    const long e = static_cast<long>(a0) - b0 + r * n + nip - nif;
    Rational expected = e >= 0 ? Rational(ipow(p, e)) : Rational(Integer(1), ipow(p, -e));
    auto c = chevalley_eval(t, n);
    CHECK(c.rhs == expected);
    CHECK(c.consistent == (e >= 0));
    // Scaling one input by p scales the output by p.
    t.layers[n].norm_index_plus *= p;
    CHECK(chevalley_eval(t, n).rhs == expected * Rational(p));
  }
}

TEST_CASE("stabilization verdicts") {
  auto stable = gkc_minus_stabilization(minus_orders(3, {1, 2, 3, 3}));
  CHECK(stable.kind == StabilizationVerdict::Kind::Stable);
  CHECK(stable.n0 == 2);
  CHECK(stable.bound == 27);
  auto rising = gkc_minus_stabilization(minus_orders(5, {0, 1, 2, 3}));
  CHECK(rising.kind == StabilizationVerdict::Kind::NotStable);
  TowerData one = minus_orders(3, {2});
  CHECK(gkc_minus_stabilization(one).kind == StabilizationVerdict::Kind::Inconclusive);
  // Norm indices kept flat while r n grows violates the required bound.
  TowerData flat;
  flat.p = 7;
  flat.r = 2;
  for (unsigned n = 0; n <= 5; ++n) flat.layers[n] = layer(7, 1, 0, 2 * n, 0, 1);
  flat.layers[0] = layer(7, 1, 0, 0, 0, 0);
  CHECK(gkc_minus_stabilization(flat).kind == StabilizationVerdict::Kind::NotStable);
  auto gap = minus_orders(3, {1, 2, 3, 3});
  gap.layers.erase(2);
  CHECK(gkc_minus_stabilization(gap).kind == StabilizationVerdict::Kind::Inconclusive);
  auto down = minus_orders(3, {3, 2, 4});
  CHECK(gkc_minus_stabilization(down).kind == StabilizationVerdict::Kind::Inconclusive);
}

TEST_CASE("tower json round trip") {
  auto t = minus_orders(3, {1, 2, 3, 3});
  t.layers[1].minus_invariants = Integer(9);
  t.provenance = "synthetic";
  auto j = to_json(t);
  CHECK(to_json(tower_from_json(j)) == j);
  j["layers"][0].erase("a_plus");
  CHECK(kind_of([&] { tower_from_json(j); }) == ErrorKind::SchemaViolation);
  CHECK(kind_of([] { read_tower_file("/nonexistent/tower.json"); }) == ErrorKind::Io);
}

TEST_CASE("klingen criterion examples") {
  CHECK(klingen_criterion(quaternion_group(), 1));
  CHECK(klingen_criterion(dihedral_group(4), 2));
  CHECK(!klingen_criterion(dihedral_group(6), 3));
  CHECK(klingen_criterion(abelian_group({2, 4}), 1));
  CHECK(kind_of([] { klingen_criterion(dihedral_group(4), 4); }) == ErrorKind::TauNotCentralInvolution);
  CHECK(kind_of([] { klingen_criterion(dihedral_group(4), 1); }) == ErrorKind::TauNotCentralInvolution);
}

TEST_CASE("klingen criterion is abelianness of G/<tau> on the catalog") {
  std::size_t pairs = 0;
  for (const auto& e : catalog::groups_up_to_24()) {
    if (e.group->order() > 24) continue;
    for (Elem tau : e.group->central_involutions()) {
      const bool expected = e.group->quotient_is_abelian(e.group->generated({tau}));
      CAPTURE(e.name);
      CHECK(klingen_criterion(e.group, tau) == expected);
      ++pairs;
    }
  }
  CHECK(pairs > 50);
}

TEST_CASE("rank_bound examples") {
  auto quad = build_compositum_over_Q({CompositumComponent::quadratic(-7)}, 11);
  CHECK(*rank_bound(quad).value == 0);
  auto C6 = simple(abelian_group({6}), 3, {{0}, {0, 3}});
  CHECK(*rank_bound(C6).value == 0);
  auto two_split = simple(abelian_group({6}), 3, {{0}, {0}});
  CHECK(*rank_bound(two_split).value == 3);
  CHECK(kind_of([] { rank_bound(simple(abelian_group({6}), 3, {{0, 2, 4}})); }) == ErrorKind::HypothesisFailed);
  CHECK(kind_of([] { rank_bound(simple(quaternion_group(), 1, {{0}})); }) == ErrorKind::HypothesisFailed);
  for (std::uint64_t n : {2u, 6u, 10u, 14u, 18u}) {
    auto G = dihedral_group(n);
    auto ext = simple(G, n / 2, {{0}, G->generated({n / 2, n})}, 3);
    auto sub = restrict_to_subgroup(ext, G->generated({1}));
    auto c = rank_bound(sub);
    CHECK(c.data.at("r") == std::to_string(n));
    CHECK(*c.value == static_cast<long long>(n / 2));
  }
}

TEST_CASE("certify: Q8 with real quadratics") {
  auto ext = build_compositum_over_Q({CompositumComponent::supplied(q8_piece()), CompositumComponent::quadratic(17)}, 47);
  auto res = certify(ext);
  REQUIRE(by_rule(res, "klingen-criterion").size() == 1);
  REQUIRE(by_rule(res, "klingen-real-abelian-compositum").size() == 1);
  REQUIRE(by_rule(res, "leopoldt-totally-split").size() == 1);
  auto gvc = by_rule(res, "gkc-gvc-equivalence");
  REQUIRE(gvc.size() == 1);  // Q8 has one odd character
  CHECK(*gvc[0]->value == 4);
  CHECK(gvc[0]->character.find("deg 2") != std::string::npos);
  const auto& leo = *by_rule(res, "klingen-real-abelian-compositum")[0];
  const auto& prop = *by_rule(res, "leopoldt-totally-split")[0];
  CHECK(leo.depends_on == std::vector<std::string>{by_rule(res, "klingen-criterion")[0]->digest()});
  CHECK(prop.depends_on == std::vector<std::string>{leo.digest()});
  CHECK(gvc[0]->depends_on == std::vector<std::string>{prop.digest()});
  bool disjoint_verified = false;
  for (const auto& h : gvc[0]->hypotheses)
    if (h.statement == "K cap R_inf = R") disjoint_verified = h.status == HypothesisStatus::Verified;
  CHECK(disjoint_verified);
  // Galois structure and quadratic subfields of M are checked, so nothing is assumed.
  CHECK(!gvc[0]->conditional());
  for (const auto* rule : {"klingen-criterion", "klingen-real-abelian-compositum", "leopoldt-totally-split"})
    CHECK(!by_rule(res, rule)[0]->conditional());
}

TEST_CASE("certify: abelian composita are unconditional") {
  auto ext = build_compositum_over_Q({CompositumComponent::cyclotomic(5), CompositumComponent::quadratic(13)}, 1301);
  REQUIRE(totally_split_over_Q(ext));
  auto res = certify(ext);
  auto gvc = by_rule(res, "gkc-gvc-equivalence");
  CHECK(gvc.size() == 2);
  for (const auto* c : gvc) {
    CHECK(!c->conditional());
    CHECK(*c->value == 2);
  }
}

TEST_CASE("certify: no split primes") {
  auto ext = build_compositum_over_Q({CompositumComponent::quadratic(-1)}, 7);
  auto res = certify(ext);
  auto c = by_rule(res, "no-split-primes");
  REQUIRE(c.size() == 1);
  CHECK(c[0]->conclusion == Conclusion::GkcMinus);
  CHECK(!c[0]->conditional());
  auto gvc = by_rule(res, "gkc-gvc-equivalence");
  REQUIRE(gvc.size() == 1);
  CHECK(*gvc[0]->value == 0);
}

TEST_CASE("certify: dihedral counting") {
  for (std::uint64_t n : {2u, 6u, 10u, 14u, 18u, 22u, 26u, 30u}) {
    auto G = dihedral_group(n);
    auto ext = simple(G, n / 2, {{0}, G->generated({n / 2, n})}, 7);
    auto res = certify(ext);
    auto c = by_rule(res, "dihedral-counting");
    REQUIRE(c.size() == 1);
    CHECK(c[0]->conclusion == Conclusion::GkcChi);
    CHECK(c[0]->character == "some odd chi");
    const long long sum = std::stoll(c[0]->data.at("sum_odd_degrees"));
    const long long bound = std::stoll(c[0]->data.at("r_minus_s"));
    CHECK(sum == static_cast<long long>(n / 2 + 1));
    CHECK(bound == static_cast<long long>(n / 2));
    CHECK(sum - bound == 1);
    CHECK(c[0]->data.at("odd_degree_2") == std::to_string((n - 2) / 4));
    CHECK(c[0]->data.at("odd_degree_1") == "2");
  }
  // n = 4 mod 4 is outside the rule.
  auto D4 = dihedral_group(4);
  CHECK(by_rule(certify(simple(D4, 2, {{0}})), "dihedral-counting").empty());
}

TEST_CASE("certify: abelian split prime and the prime-count criterion") {
  auto odd_counts = simple(abelian_group({6}), 3, {{0}, {0, 3}});
  auto res = certify(odd_counts);
  CHECK(by_rule(res, "rank-bound").size() == 1);
  CHECK(by_rule(res, "abelian-split-prime").size() == 1);
  CHECK(by_rule(res, "unique-involution-criterion").size() == 1);
  CHECK(by_rule(res, "gkc-gvc-equivalence").size() == 3);

  auto cyclic_sylow = simple(abelian_group({4}), 2, {{0}, {0, 2}});
  auto res2 = certify(cyclic_sylow);
  auto u = by_rule(res2, "unique-involution-criterion");
  REQUIRE(u.size() == 1);
  CHECK(has_hypothesis(*u[0], "those numbers are prime to 2^k = 4"));

  auto noncyclic = simple(abelian_group({2, 2}), 1, {{0}, {0, 1}});
  auto res3 = certify(noncyclic);
  CHECK(by_rule(res3, "abelian-split-prime").size() == 1);
  CHECK(by_rule(res3, "unique-involution-criterion").empty());
}

TEST_CASE("certify: subfield reduction, lift and tower") {
  auto V4 = abelian_group({2, 2});
  auto ext = simple(V4, 1, {{0, 2}});
  CertifyOptions opt;
  opt.subfield = SubfieldReduction{{0, 2}, "k", std::nullopt};
  auto res = certify(ext, opt);
  auto c = by_rule(res, "undecomposed-subfield");
  REQUIRE(c.size() == 1);
  CHECK(c[0]->conditional());
  // A stored unconditional certificate for k discharges the hypothesis.
  auto k_ext = build_compositum_over_Q({CompositumComponent::quadratic(-1)}, 7);
  opt.subfield->gkc_minus_of_k = *by_rule(certify(k_ext), "no-split-primes")[0];
  auto res_k = certify(ext, opt);
  CHECK(!by_rule(res_k, "undecomposed-subfield")[0]->conditional());
  opt.subfield = SubfieldReduction{{0, 1}, "k", std::nullopt};
  CHECK(by_rule(certify(ext, opt), "undecomposed-subfield").empty());

  auto C6 = simple(abelian_group({6}), 3, {{0}});
  CertifyOptions lift;
  lift.lift_subgroup = Subset{0, 3};
  auto lifted = by_rule(certify(C6, lift), "subfield-lift");
  REQUIRE(lifted.size() == 1);
  CHECK(*lifted[0]->value == 3);
  CHECK(lifted[0]->data.at("lifted_order") == "3");

  auto quad = build_compositum_over_Q({CompositumComponent::quadratic(-1)}, 13);
  CertifyOptions tower;
  tower.tower = minus_orders(13, {1, 2, 2});
  tower.tower->provenance = "synthetic";
  auto cs = by_rule(certify(quad, tower), "chevalley-stabilization");
  REQUIRE(cs.size() == 1);
  CHECK(cs[0]->conditional());
  CHECK(*cs[0]->value == 169);
  tower.tower->r = 2;
  auto mismatched = certify(quad, tower);
  CHECK(by_rule(mismatched, "chevalley-stabilization").empty());
  CHECK(!mismatched.diagnostics.empty());
}

TEST_CASE("certify: errors and empty results") {
  auto quad = build_compositum_over_Q({CompositumComponent::quadratic(-1)}, 13);
  quad.p = 2;
  CHECK(kind_of([&] { certify(quad); }) == ErrorKind::PIsTwo);
  // Nonabelian, no split prime with R_v = Q_p, split primes of K+ present.
  auto none = simple(quaternion_group(), 1, {{0}});
  none.primes[0].f_base = 2;
  none.base_degree = 2;
  auto res = certify(none);
  CHECK(res.certificates.empty());
  CHECK(std::find(res.diagnostics.begin(), res.diagnostics.end(), "no applicable rule") != res.diagnostics.end());
  // p | |G| without an assertion: GKC- but no GVC.
  auto C6 = simple(abelian_group({6}), 3, {{0}}, 3);
  auto r3 = certify(C6);
  CHECK(!by_rule(r3, "abelian-split-prime").empty());
  CHECK(by_rule(r3, "gkc-gvc-equivalence").empty());
  CertifyOptions assume;
  assume.assume_tower_disjointness = true;
  auto r3a = by_rule(certify(C6, assume), "gkc-gvc-equivalence");
  REQUIRE(r3a.size() == 3);
  CHECK(r3a[0]->conditional());
}

TEST_CASE("certificate audit on random descriptors") {
  gen::DescriptorGen g(kArtifactSeed + 9);
  std::size_t gvc = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto ext = g();
    CertifyOptions opt;
    opt.assume_tower_disjointness = trial % 2 == 0;
    opt.assume_leopoldt = trial % 3 == 0;
    auto res = certify(ext, opt);
    for (const auto& c : res.certificates) {
      CHECK(is_rule_key(c.rule));
      const bool asserted = std::any_of(c.hypotheses.begin(), c.hypotheses.end(),
                                        [](const Hypothesis& h) { return h.status == HypothesisStatus::Asserted; });
      CHECK(c.conditional() == asserted);
      if (c.conclusion == Conclusion::GvcChi) {
        ++gvc;
        CHECK((has_hypothesis(c, "K cap R_inf = R") || has_hypothesis(c, "K cap R~_inf = R~")));
      }
      auto j = to_json(c);
      CHECK(certificate_from_json(j) == c);
      CHECK(to_json(certificate_from_json(j)).dump() == j.dump());
    }
  }
  CHECK(gvc > 0);
}

TEST_CASE("certificate digests detect tampering") {
  auto ext = build_compositum_over_Q({CompositumComponent::quadratic(-1)}, 13);
  auto res = certify(ext);
  REQUIRE(!res.certificates.empty());
  auto j = to_json(res.certificates.front());
  j["hypotheses"][0]["status"] = "Verified";
  j["field"] = "tampered";
  CHECK(kind_of([&] { certificate_from_json(j); }) == ErrorKind::InvariantViolation);
  auto k = to_json(res.certificates.front());
  k["rule"] = "made-up";
  CHECK(kind_of([&] { certificate_from_json(k); }) == ErrorKind::InvariantViolation);
  // Identical inputs give identical digests.
  CHECK(certify(ext).certificates.front().digest() == res.certificates.front().digest());
}
