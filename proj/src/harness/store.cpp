#include "gkc/harness/store.hpp"

#include <fstream>

#include "gkc/error.hpp"

namespace gkc {

CertificateStore::CertificateStore(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // a missing store is an empty one
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (line.empty()) continue;
    const std::string where = path_.string() + ":" + std::to_string(n) + ": ";
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::SchemaViolation, where + e.what());
    }
    try {
      Certificate c = certificate_from_json(j);
      if (digests_.insert(c.digest()).second) certs_.push_back(std::move(c));
    } catch (const Error& e) {
      fail(e.kind(), where + e.detail());
    }
  }
}

std::size_t CertificateStore::append(const std::vector<Certificate>& certs) {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<const Certificate*> fresh;
  for (const auto& c : certs)
    if (digests_.insert(c.digest()).second) fresh.push_back(&c);
  if (fresh.empty()) return 0;
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  if (!out) fail(ErrorKind::Io, "cannot append to certificate store " + path_.string());
  for (const auto* c : fresh) {
    out << to_json(*c).dump() << '\n';
    certs_.push_back(*c);
  }
  out.flush();
  if (!out) fail(ErrorKind::Io, "write failed on " + path_.string());
  return fresh.size();
}

bool CertificateStore::contains(const std::string& digest) const {
  std::lock_guard<std::mutex> lock(mu_);
  return digests_.count(digest) != 0;
}

std::vector<Certificate> CertificateStore::certificates() const {
  std::lock_guard<std::mutex> lock(mu_);
  return certs_;
}

std::optional<Certificate> CertificateStore::unconditional_gkc_minus(const std::string& field) const {
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& c : certs_)
    if (c.conclusion == Conclusion::GkcMinus && c.field == field && !c.conditional()) return c;
  return std::nullopt;
}

}  // namespace gkc
