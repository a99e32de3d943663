#include "gkc/engine/rules.hpp"

#include <algorithm>

#include "gkc/error.hpp"
#include "gkc/extension/ingest.hpp"
#include "gkc/groups/character.hpp"
#include "gkc/vanishing/vanishing.hpp"

namespace gkc {

namespace {

using H = Hypothesis;
constexpr auto kV = HypothesisStatus::Verified;
constexpr auto kA = HypothesisStatus::Asserted;

std::string str(std::uint64_t x) { return std::to_string(x); }

bool contains(const Subset& s, Elem x) { return std::binary_search(s.begin(), s.end(), x); }

// Hypotheses every certificate inherits from the descriptor itself.
std::vector<H> descriptor_hypotheses(const ExtensionDescriptor& ext) {
  std::vector<H> out;
  const bool ingested = std::any_of(ext.primes.begin(), ext.primes.end(),
                                    [](const PrimeRecord& v) { return v.provenance == Provenance::Ingested; });
  if (ingested) out.push_back({"prime decomposition data of K/R is correct", kA, "ingested descriptor"});
  for (const auto& a : ext.assertions) out.push_back({a, kA, "descriptor assertion"});
  out.push_back({"p is odd", kV, "p = " + str(ext.p)});
  return out;
}

// Primes of K+ over p totally ramified in K+_inf: automatic when p is
// unramified in K, since Q_p(mu_{p^inf}) is totally ramified over Q_p.
H standing_ramification(const ExtensionDescriptor& ext) {
  const bool unramified = std::all_of(ext.primes.begin(), ext.primes.end(),
                                      [](const PrimeRecord& v) { return v.e_base == 1 && v.e && *v.e == 1; });
  if (unramified) return {"every prime of K+ over p is totally ramified in K+_inf", kV, "p is unramified in K"};
  return {"every prime of K+ over p is totally ramified in K+_inf", kA, "ramification data incomplete"};
}

H from_certificate(const std::string& statement, const Certificate& c) {
  return {statement, c.conditional() ? kA : kV, (c.conditional() ? "conditional certificate " : "certificate ") + c.digest()};
}

std::optional<std::size_t> split_Qp_prime(const ExtensionDescriptor& ext) {
  for (std::size_t i = 0; i < ext.primes.size(); ++i)
    if (ext.primes[i].totally_split() && ext.primes[i].base_is_Qp()) return i;
  return std::nullopt;
}

bool others_unsplit(const ExtensionDescriptor& ext, std::size_t skip) {
  for (std::size_t i = 0; i < ext.primes.size(); ++i)
    if (i != skip && !contains(ext.primes[i].decomposition, ext.tau)) return false;
  return true;
}

std::uint64_t primes_of_K_over(const ExtensionDescriptor& ext, const PrimeRecord& v) {
  return v.g ? *v.g : ext.group->order() / v.decomposition.size();
}

struct Builder {
  const ExtensionDescriptor& ext;
  std::string digest;
  std::vector<H> common;

  Certificate make(Conclusion c, std::string rule) const {
    Certificate cert;
    cert.conclusion = c;
    cert.field = ext.label;
    cert.rule = std::move(rule);
    cert.hypotheses = common;
    cert.inputs_digest = digest;
    return cert;
  }
};

}  // namespace

std::string character_label(const std::vector<Character>& table, const Character& chi) {
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == chi) return "chi_" + str(i) + " (deg " + str(chi.degree()) + ")";
  return "chi (deg " + str(chi.degree()) + ")";
}

bool klingen_criterion(const GroupPtr& G, Elem tau) {
  if (tau >= G->order() || !G->is_central_involution(tau))
    fail(ErrorKind::TauNotCentralInvolution, "element " + str(tau) + " of " + G->name());
  bool holds = true;
  for (const auto& chi : character_table(G)) {
    Integer sum = Integer(chi.degree()) + chi.at(tau).to_integer();
    if (sum > 2) holds = false;
  }
  const bool abelian_quotient = G->quotient_is_abelian(G->generated({tau}));
  if (holds != abelian_quotient)
    fail(ErrorKind::Internal, "character criterion and abelianness of G/<tau> disagree for " + G->name());
  return holds;
}

Certificate rank_bound(const ExtensionDescriptor& ext, const std::string& digest) {
  auto v1 = split_Qp_prime(ext);
  if (!v1) fail(ErrorKind::HypothesisFailed, "a: no prime of R over p is totally split in K with R_v = Q_p");
  if (!ext.group->is_abelian()) fail(ErrorKind::HypothesisFailed, "b: Gal(K/R) is not abelian");
  const PrimeSummary s = classify_primes(ext);
  Builder b{ext, digest, descriptor_hypotheses(ext)};
  Certificate c = b.make(Conclusion::RankBound, "rank-bound");
  c.hypotheses.push_back({"(a) a prime of R over p is totally split in K and R_v = Q_p", kV, ext.primes[*v1].label});
  c.hypotheses.push_back({"(b) Gal(K/R) is abelian", kV, ext.group->name()});
  c.value = static_cast<long long>(s.r) - static_cast<long long>(s.s);
  c.data = {{"r", str(s.r)}, {"s", str(s.s)}};
  return c;
}

nlohmann::json to_json(const CertifyOptions& o) {
  nlohmann::json j;
  j["character"] = o.character ? nlohmann::json(*o.character) : nlohmann::json(nullptr);
  j["assume_leopoldt"] = o.assume_leopoldt;
  j["assume_tower_disjointness"] = o.assume_tower_disjointness;
  if (o.subfield) {
    j["subfield"] = {{"U", o.subfield->U}, {"label", o.subfield->label}};
    if (o.subfield->gkc_minus_of_k) j["subfield"]["discharged_by"] = o.subfield->gkc_minus_of_k->digest();
  }
  if (o.lift_subgroup) j["lift_subgroup"] = *o.lift_subgroup;
  if (o.tower) j["tower"] = to_json(*o.tower);
  return j;
}

std::string inputs_digest(const ExtensionDescriptor& ext, const CertifyOptions& options) {
  return sha256_hex(to_json(ext).dump() + "|" + to_json(options).dump());
}

CertifyResult certify(const ExtensionDescriptor& ext, const CertifyOptions& opt) {
  if (ext.p == 2) fail(ErrorKind::PIsTwo, "certification requires an odd prime");
  validate(ext);
  const FiniteGroup& G = *ext.group;
  const auto table = character_table(ext.group);
  if (opt.character && *opt.character >= table.size())
    fail(ErrorKind::InvalidArgument, "character index " + str(*opt.character) + " out of range");
  const auto odd = odd_characters(table, ext.tau);
  std::vector<Character> targets;
  for (const auto& chi : odd)
    if (!opt.character || table[*opt.character] == chi) targets.push_back(chi);
  if (opt.character && targets.empty()) fail(ErrorKind::EvenCharacter, "selected character is even");

  CertifyResult out;
  auto& certs = out.certificates;
  auto& diag = out.diagnostics;
  Builder b{ext, inputs_digest(ext, opt), descriptor_hypotheses(ext)};
  const PrimeSummary summary = classify_primes(ext);
  std::vector<std::size_t> gkc_minus;  // indices into certs
  auto push = [&](Certificate c) {
    certs.push_back(std::move(c));
    return certs.size() - 1;
  };

  // Leopoldt from the character criterion, then for composita with a real
  // abelian field.
  std::optional<std::size_t> leopoldt;
  if (ext.absolute) {
    const AbsoluteGalois& abs = *ext.absolute;
    if (klingen_criterion(abs.group, abs.tau)) {
      Certificate c = b.make(Conclusion::Leopoldt, "klingen-criterion");
      c.field = abs.real_abelian_twist ? abs.description : ext.label;
      c.hypotheses.push_back({"the field is imaginary Galois over Q with group " + abs.group->name(),
                              abs.verified ? kV : kA, abs.evidence.empty() ? abs.description : abs.evidence});
      c.hypotheses.push_back({"chi(1) + chi(tau) <= 2 for every irreducible chi", kV, "character table of " + abs.group->name()});
      c.data = {{"group", abs.group->name()}, {"G/<tau> abelian", "true"}};
      leopoldt = push(std::move(c));
      if (abs.real_abelian_twist) {
        Certificate d = b.make(Conclusion::Leopoldt, "klingen-real-abelian-compositum");
        d.hypotheses.push_back(from_certificate("criterion holds for " + abs.description, certs[*leopoldt]));
        const bool multiquadratic = !ext.real_square_classes.empty();
        d.hypotheses.push_back({"K = M L with L real abelian over Q", multiquadratic ? kV : kA,
                                multiquadratic ? "L is multiquadratic" : "ingested"});
        d.depends_on.push_back(certs[*leopoldt].digest());
        leopoldt = push(std::move(d));
      }
    } else {
      diag.push_back("Leopoldt criterion fails for " + abs.description + ": G/<tau> is not abelian");
    }
  }

  if (summary.r == 0) {
    Certificate c = b.make(Conclusion::GkcMinus, "no-split-primes");
    c.hypotheses.push_back(standing_ramification(ext));
    c.hypotheses.push_back({"no prime of K+ over p splits in K", kV, "tau lies in every decomposition group"});
    c.data = {{"r", "0"}};
    gkc_minus.push_back(push(std::move(c)));
  }

  if (opt.subfield) {
    const SubfieldReduction& red = *opt.subfield;
    Subset U(red.U);
    std::sort(U.begin(), U.end());
    bool undecomposed = G.is_subgroup(U);
    if (!undecomposed) diag.push_back("subfield reduction: U is not a subgroup");
    if (undecomposed && contains(U, ext.tau)) {
      diag.push_back("subfield reduction: tau lies in U, so K^U is not CM");
      undecomposed = false;
    }
    if (undecomposed && U.size() == 1) {
      diag.push_back("subfield reduction: U is trivial");
      undecomposed = false;
    }
    for (const auto& v : ext.primes)
      for (Elem g = 0; undecomposed && g < G.order(); ++g) {
        Subset D = G.conjugate(v.decomposition, g);
        if (!std::includes(D.begin(), D.end(), U.begin(), U.end())) {
          diag.push_back("subfield reduction: p decomposes in K/" + red.label + " above " + v.label);
          undecomposed = false;
        }
      }
    if (undecomposed) {
      Certificate c = b.make(Conclusion::GkcMinus, "undecomposed-subfield");
      c.hypotheses.push_back({red.label + " = K^U is a CM subfield", kV, "tau not in U"});
      c.hypotheses.push_back({"p is undecomposed in K/" + red.label, kV, "U lies in every conjugate of every G_w"});
      if (red.gkc_minus_of_k && !red.gkc_minus_of_k->conditional() &&
          red.gkc_minus_of_k->conclusion == Conclusion::GkcMinus) {
        c.hypotheses.push_back(from_certificate("GKC-(" + red.label + ")", *red.gkc_minus_of_k));
        c.depends_on.push_back(red.gkc_minus_of_k->digest());
      } else {
        c.hypotheses.push_back({"GKC-(" + red.label + ")", kA, "no unconditional stored certificate"});
      }
      gkc_minus.push_back(push(std::move(c)));
    }
  }

  if (totally_split_over_Q(ext)) {
    std::optional<H> leo;
    if (leopoldt) leo = from_certificate("Leopoldt's conjecture holds for K", certs[*leopoldt]);
    else if (opt.assume_leopoldt) leo = H{"Leopoldt's conjecture holds for K", kA, "caller assumption"};
    if (leo) {
      Certificate c = b.make(Conclusion::GkcMinus, "leopoldt-totally-split");
      c.hypotheses.push_back(*leo);
      c.hypotheses.push_back({"p is totally split in K/Q", kV,
                              str(ext.primes.size()) + " primes of R with R_v = Q_p, all G_w trivial"});
      if (leopoldt) c.depends_on.push_back(certs[*leopoldt].digest());
      gkc_minus.push_back(push(std::move(c)));
    } else {
      diag.push_back("p is totally split in K/Q but Leopoldt's conjecture is not available");
    }
  }

  const auto v1 = split_Qp_prime(ext);
  if (v1 && G.is_abelian()) {
    const std::size_t rb = push(rank_bound(ext, b.digest));
    if (others_unsplit(ext, *v1)) {
      Certificate c = b.make(Conclusion::GkcMinus, "abelian-split-prime");
      c.hypotheses.push_back({"Gal(K/R) is abelian", kV, G.name()});
      c.hypotheses.push_back({"(a) " + ext.primes[*v1].label + " is totally split in K/R with R_v = Q_p", kV, "G_w trivial"});
      c.hypotheses.push_back({"(b) primes of K+ above the other primes of R over p are unsplit in K", kV, "tau in G_w"});
      c.depends_on.push_back(certs[rb].digest());
      c.data = {{"r", str(summary.r)}, {"s", str(summary.s)}};
      gkc_minus.push_back(push(std::move(c)));

      // Unsplit condition read off from prime counts alone.
      if (ext.primes.size() > 1) {
        std::uint64_t two_k = 1;
        while ((G.order() / two_k) % 2 == 0) two_k *= 2;
        std::size_t involutions = 0;
        for (Elem x = 0; x < G.order(); ++x) involutions += G.element_order(x) == 2;
        bool odd_counts = true, coprime_counts = true;
        for (std::size_t i = 0; i < ext.primes.size(); ++i) {
          if (i == *v1) continue;
          const std::uint64_t g = primes_of_K_over(ext, ext.primes[i]);
          odd_counts = odd_counts && g % 2 == 1;
          coprime_counts = coprime_counts && g % two_k != 0;
        }
        const bool cyclic_sylow = involutions == 1;
        if (odd_counts || (coprime_counts && cyclic_sylow)) {
          Certificate d = b.make(Conclusion::GkcMinus, "unique-involution-criterion");
          d.hypotheses.push_back({"Gal(K/R) is abelian", kV, G.name()});
          d.hypotheses.push_back({"(a) " + ext.primes[*v1].label + " is totally split in K/R with R_v = Q_p", kV, "G_w trivial"});
          if (odd_counts)
            d.hypotheses.push_back({"the numbers of primes of K above the other primes of R over p are odd", kV, "prime counts"});
          else
            d.hypotheses.push_back({"those numbers are prime to 2^k = " + str(two_k) + " and the 2-Sylow subgroup is cyclic", kV,
                                    "prime counts, one involution"});
          d.depends_on.push_back(certs[rb].digest());
          push(std::move(d));
        }
      }
    } else {
      diag.push_back("rank bound " + std::to_string(*certs[rb].value) + " > 0: some other prime has split primes of K+");
    }
  } else if (!v1) {
    diag.push_back("rank bound: no totally split prime with R_v = Q_p");
  } else {
    diag.push_back("rank bound: Gal(K/R) is not abelian");
  }

  // Dihedral counting through the fixed field of the rotations.
  if (G.kind() == GroupKind::Dihedral && G.dihedral_n() % 4 == 2 && v1 && others_unsplit(ext, *v1)) {
    const std::uint64_t n = G.dihedral_n();
    const Subset rotations = G.generated({1});
    ExtensionDescriptor sub = restrict_to_subgroup(ext, rotations);
    sub.label = ext.label + " over the fixed field of <a>";
    Certificate rb = rank_bound(sub, b.digest);
    const std::size_t rbi = push(rb);
    long long sum = 0;
    std::size_t deg1 = 0, deg2 = 0;
    for (const auto& chi : odd) {
      sum += chi.degree();
      (chi.degree() == 1 ? deg1 : deg2) += 1;
    }
    if (sum > *rb.value) {
      Certificate c = b.make(Conclusion::GkcChi, "dihedral-counting");
      c.character = "some odd chi";
      c.hypotheses.push_back({"Gal(K/R) is dihedral D_" + str(n) + " with n = 2 mod 4", kV, G.name()});
      c.hypotheses.push_back({"(a) " + ext.primes[*v1].label + " is totally split in K/R with R_v = Q_p", kV, "G_w trivial"});
      c.hypotheses.push_back({"(b) primes of K+ above the other primes of R over p do not split in K", kV, "tau in G_w"});
      c.hypotheses.push_back({"ord_T f_{A',chi} is divisible by chi(1)", kV, "T-order ledger"});
      c.depends_on.push_back(certs[rbi].digest());
      c.data = {{"r", rb.data.at("r")},
                {"s", rb.data.at("s")},
                {"r_minus_s", std::to_string(*rb.value)},
                {"odd_degree_1", str(deg1)},
                {"odd_degree_2", str(deg2)},
                {"sum_odd_degrees", std::to_string(sum)}};
      push(std::move(c));
    }
  }

  if (opt.tower) {
    const TowerData& t = *opt.tower;
    bool usable = true;
    if (t.p != ext.p) {
      diag.push_back("tower data is for p = " + str(t.p));
      usable = false;
    }
    if (usable && t.r != summary.r) {
      diag.push_back("tower data has r = " + str(t.r) + " but the descriptor gives r = " + str(summary.r));
      usable = false;
    }
    for (const auto& [n, layer] : t.layers) {
      if (!usable) break;
      Integer expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), ext.p, summary.r * n);
      if (layer.ram_ratio != expected) {
        diag.push_back("tower layer " + std::to_string(n) + ": ramification ratio is not p^(r n)");
        usable = false;
      }
    }
    if (usable) {
      StabilizationVerdict v = gkc_minus_stabilization(t);
      if (v.kind == StabilizationVerdict::Kind::Stable) {
        Certificate c = b.make(Conclusion::GkcMinus, "chevalley-stabilization");
        c.hypotheses.push_back(standing_ramification(ext));
        c.hypotheses.push_back({"tower data is correct", kA, t.provenance.empty() ? "ingested" : t.provenance});
        c.hypotheses.push_back({"ramification ratio equals p^(r n) at every layer", kV, "tower data"});
        c.hypotheses.push_back({"|((A_m')^-)^Gamma_m| stays equal for all m >= " + std::to_string(v.n0), kA, v.detail});
        if (v.bound.fits_slong_p()) c.value = v.bound.get_si();
        c.data = {{"bound", v.bound.get_str()}, {"n0", std::to_string(v.n0)}};
        gkc_minus.push_back(push(std::move(c)));
      } else {
        diag.push_back("tower: " + v.detail);
      }
    }
  }

  // GKC- gives GKC(K/R, chi) for every odd chi; Theorem A turns these into GVC.
  if (!gkc_minus.empty()) {
    std::size_t best = gkc_minus.front();
    for (std::size_t i : gkc_minus)
      if (!certs[i].conditional()) {
        best = i;
        break;
      }
    const Certificate base = certs[best];
    std::optional<H> disjoint;
    if (check_tower_disjointness(ext) == Disjointness::Guaranteed)
      disjoint = H{"K cap R_inf = R", kV, "p does not divide [K:R] = " + str(G.order())};
    else if (opt.assume_tower_disjointness)
      disjoint = H{"K cap R_inf = R", kA, "caller assumption, p divides [K:R]"};
    if (!disjoint) {
      diag.push_back("GVC not emitted: p divides [K:R] and K cap R_inf = R was not asserted");
    } else {
      for (const auto& chi : targets) {
        Certificate c = b.make(Conclusion::GvcChi, "gkc-gvc-equivalence");
        c.character = character_label(table, chi);
        c.hypotheses.push_back(from_certificate("GKC(K/R,chi), implied by GKC-(K)", base));
        c.hypotheses.push_back(*disjoint);
        c.hypotheses.push_back({"chi is totally odd", kV, "chi(tau) = -chi(1)"});
        c.depends_on.push_back(base.digest());
        auto rep = t_order_ledger(ext, chi, TOrderInput::gkc_assumed());
        c.value = static_cast<long long>(rep.r_S);
        c.data = {{"r_S", str(rep.r_S)},
                  {"ord_T f_A", str(*rep.ord_f_A)},
                  {"predicted ord L_p", str(*rep.predicted_Lp_order)}};
        push(std::move(c));
      }
      if (opt.lift_subgroup) {
        try {
          ExtensionDescriptor sub = restrict_to_subgroup(ext, *opt.lift_subgroup);
          sub.label = ext.label + " over R~";
          std::optional<std::uint64_t> lifted;
          if (G.is_abelian()) {
            try {
              lifted = lifted_order(ext, *opt.lift_subgroup);
            } catch (const Error& e) {
              diag.push_back(std::string("order lifting: ") + e.what());
            }
          }
          const auto sub_table = character_table(sub.group);
          H sub_disjoint = sub.group->order() % ext.p == 0
                               ? H{"K cap R~_inf = R~", disjoint->status, disjoint->evidence}
                               : H{"K cap R~_inf = R~", kV, "p does not divide [K:R~] = " + str(sub.group->order())};
          for (const auto& chi : odd_characters(sub_table, sub.tau)) {
            Certificate c = b.make(Conclusion::GvcChi, "subfield-lift");
            c.field = sub.label;
            c.character = character_label(sub_table, chi);
            c.hypotheses.push_back(from_certificate("GKC-(K)", base));
            c.hypotheses.push_back({"R~ = K^H is totally real", kV, "tau in H"});
            c.hypotheses.push_back(sub_disjoint);
            c.depends_on.push_back(base.digest());
            const std::uint64_t r = tate_order(sub, chi).r_S;
            c.value = static_cast<long long>(r);
            c.data = {{"r_S", str(r)}, {"[R~:R]", str(G.order() / sub.group->order())}};
            if (lifted) c.data["lifted_order"] = str(*lifted);
            push(std::move(c));
          }
        } catch (const Error& e) {
          diag.push_back(std::string("subfield lift: ") + e.what());
        }
      }
    }
  }

  if (certs.empty()) diag.push_back("no applicable rule");
  return out;
}

}  // namespace gkc
