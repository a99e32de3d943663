#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gkc/engine/rules.hpp"
#include "gkc/extension/compositum.hpp"

namespace gkc {

struct SearchConfig {
  unsigned target_r = 2;
  /// Real quadratic fields Q(sqrt d). Entries whose squarefree part is 1 stand
  /// for Q, so {1} is the trivial pool R = Q.
  std::vector<Integer> pool;
  std::uint64_t prime_bound = 10000;
  std::shared_ptr<const SuppliedPiece> piece;  // null means the Q8 piece
  std::size_t max_examples = 5;                // 0 keeps every hit
  unsigned threads = 0;
};

struct SearchHit {
  std::uint64_t p = 0;
  std::vector<Integer> discriminants;  // of the quadratic fields composing R
  ExtensionDescriptor ext;
  CertifyResult result;
  long long r_S = 0;
  std::vector<std::string> chain;  // rule keys, root first, ending at the GVC certificate
};

struct SearchResult {
  std::vector<SearchHit> hits;  // ordered by (p, discriminants)
  std::vector<std::string> diagnostics;
};

/// K = M R for R a compositum of 2^k >= target_r pool fields, over every p <=
/// bound totally split in K. Each hit carries the certificate chain ending in
/// GVC(K/R, chi) with r_{S,chi} = chi(1) [R:Q]. Throws PoolExhausted when the
/// pool is empty or too small, or no prime qualifies.
SearchResult search_theoremB(const SearchConfig& config);

}  // namespace gkc
