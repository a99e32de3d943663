#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gkc/engine/certificate.hpp"

namespace gkc {

/// Append-only JSON-lines file of certificates keyed by digest. Loading checks
/// every digest; appends skip digests already present, so replays are no-ops.
class CertificateStore {
 public:
  explicit CertificateStore(std::filesystem::path path);

  /// Returns the number of certificates actually written.
  std::size_t append(const std::vector<Certificate>& certs);
  bool contains(const std::string& digest) const;
  std::vector<Certificate> certificates() const;
  /// An unconditional GKC- certificate for `field`, if one is stored.
  std::optional<Certificate> unconditional_gkc_minus(const std::string& field) const;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::vector<Certificate> certs_;
  std::set<std::string> digests_;
};

}  // namespace gkc
