#include "gkc/harness/search.hpp"

#include <algorithm>
#include <map>

#include "gkc/error.hpp"
#include "gkc/harness/scan.hpp"

namespace gkc {

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Rule keys from the root of the dependency chain down to `leaf`.
std::vector<std::string> chain_of(const Certificate& leaf, const std::vector<Certificate>& all) {
  std::map<std::string, const Certificate*> by_digest;
  for (const auto& c : all) by_digest[c.digest()] = &c;
  std::vector<std::string> chain{leaf.rule};
  const Certificate* cur = &leaf;
  while (!cur->depends_on.empty()) {
    auto it = by_digest.find(cur->depends_on.front());
    if (it == by_digest.end()) break;
    cur = it->second;
    chain.push_back(cur->rule);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

SearchResult search_theoremB(const SearchConfig& config) {
  if (config.pool.empty()) fail(ErrorKind::PoolExhausted, "empty pool");
  if (config.target_r == 0) fail(ErrorKind::InvalidArgument, "target vanishing order must be positive");
  if (config.prime_bound < 3) fail(ErrorKind::InvalidArgument, "prime bound must be at least 3");
  const auto piece = config.piece ? config.piece : q8_piece();

  std::vector<Integer> pool;
  for (const auto& d : config.pool) {
    if (d <= 0) fail(ErrorKind::InvalidArgument, "pool entry " + d.get_str() + " is not a real quadratic field");
    Integer s = squarefree_part(d);
    if (s != 1 && std::find(pool.begin(), pool.end(), s) == pool.end()) pool.push_back(s);
  }
  std::size_t k = 0;
  while ((std::uint64_t{1} << k) < config.target_r) ++k;
  if (pool.size() < k)
    fail(ErrorKind::PoolExhausted, "pool has " + std::to_string(pool.size()) + " usable fields, need " + std::to_string(k));

  SearchResult res;
  struct Candidate {
    std::uint64_t p;
    std::vector<Integer> discs;
    std::vector<Integer> ds;
  };
  std::vector<Candidate> candidates;
  for (const auto& subset : subsets_of_size(pool.size(), k)) {
    std::vector<Integer> ds, discs;
    for (auto i : subset) {
      ds.push_back(pool[i]);
      discs.push_back(quadratic_field_discriminant(pool[i]));
    }
    std::vector<Integer> classes = ds;
    if (piece->square_classes) classes.insert(classes.end(), piece->square_classes->begin(), piece->square_classes->end());
    if (!square_classes_independent(classes)) {
      std::string s;
      for (const auto& d : ds) s += " " + d.get_str();
      res.diagnostics.push_back("skipped {" + s + " }: meets " + piece->name);
      continue;
    }
    std::vector<NumberField> fields{piece->field};
    for (const auto& d : ds) fields.push_back(quadratic_field(d));
    auto scan = scan_split_primes(fields, config.prime_bound, config.threads);
    for (auto& n : scan.diagnostics)
      if (std::find(res.diagnostics.begin(), res.diagnostics.end(), n) == res.diagnostics.end())
        res.diagnostics.push_back(std::move(n));
    for (auto p : scan.primes) candidates.push_back({p, discs, ds});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return std::tie(a.p, a.discs) < std::tie(b.p, b.discs); });
  if (candidates.empty())
    fail(ErrorKind::PoolExhausted, "no prime up to " + std::to_string(config.prime_bound) + " is totally split");
  if (config.max_examples != 0 && candidates.size() > config.max_examples) candidates.resize(config.max_examples);

  for (const auto& c : candidates) {
    std::vector<CompositumComponent> comps{CompositumComponent::supplied(piece)};
    for (const auto& d : c.ds) comps.push_back(CompositumComponent::quadratic(d));
    SearchHit hit;
    hit.p = c.p;
    hit.discriminants = c.discs;
    hit.ext = build_compositum_over_Q(comps, c.p);
    hit.result = certify(hit.ext);
    const Certificate* best = nullptr;
    for (const auto& cert : hit.result.certificates)
      if (cert.conclusion == Conclusion::GvcChi && cert.value && (!best || *cert.value > *best->value)) best = &cert;
    if (!best) fail(ErrorKind::Internal, "no GVC certificate for " + hit.ext.label);
    hit.r_S = *best->value;
    hit.chain = chain_of(*best, hit.result.certificates);
    // p totally split in K: every prime of R over p contributes chi(1).
    const long long expected = 2LL * static_cast<long long>(hit.ext.primes.size());
    if (hit.r_S != expected)
      fail(ErrorKind::InvariantViolation, "r_S = " + std::to_string(hit.r_S) + ", expected 2|S_p(R)| = " + std::to_string(expected));
    res.hits.push_back(std::move(hit));
  }
  return res;
}

}  // namespace gkc
