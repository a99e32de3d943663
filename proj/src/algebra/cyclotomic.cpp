#include "gkc/algebra/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "gkc/error.hpp"

namespace gkc {

namespace {

// Reduction data for Q(zeta_m): red[k] = X^k mod Phi_m for 0 <= k < m.
struct CycTable {
  std::uint64_t m = 1;
  std::size_t phi = 1;
  std::vector<std::vector<Integer>> red;
};

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::uint64_t, IntPoly>& poly_cache() {
  static std::map<std::uint64_t, IntPoly> cache;
  return cache;
}

IntPoly compute_cyclotomic(std::uint64_t m) {
  // X^m - 1 divided by every Phi_d for proper divisors d of m.
  IntPoly acc = IntPoly::monomial(1, static_cast<int>(m)) - IntPoly({1});
  for (auto d : divisors(m))
    if (d != m) acc = divexact(acc, cyclotomic_polynomial(d));
  return acc;
}

const CycTable& table(std::uint64_t m) {
  static std::map<std::uint64_t, std::unique_ptr<CycTable>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  const IntPoly& phi_poly = cyclotomic_polynomial(m);
  auto t = std::make_unique<CycTable>();
  t->m = m;
  t->phi = static_cast<std::size_t>(phi_poly.degree());
  std::vector<Integer> cur(t->phi, Integer(0));
  cur[0] = 1;
  for (std::uint64_t k = 0; k < m; ++k) {
    t->red.push_back(cur);
    // Multiply by X and reduce using X^phi = -sum phi_i X^i.
    Integer top = cur.back();
    for (std::size_t i = t->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < t->phi; ++i) cur[i] -= top * phi_poly.coefficients()[i];
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, inserted] = cache.emplace(m, std::move(t));
  (void)inserted;
  return *it->second;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(std::uint64_t m) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "cyclotomic polynomial of conductor 0");
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = poly_cache().find(m);
    if (it != poly_cache().end()) return it->second;
  }
  IntPoly f = m == 1 ? IntPoly({-1, 1}) : compute_cyclotomic(m);
  std::lock_guard<std::mutex> lock(cache_mutex());
  return poly_cache().emplace(m, std::move(f)).first->second;
}

CycNumber::CycNumber(std::uint64_t conductor) : m_(conductor) {
  if (m_ == 0) fail(ErrorKind::InvalidArgument, "conductor 0");
  c_.assign(table(m_).phi, Rational(0));
}

CycNumber::CycNumber(std::uint64_t conductor, const Rational& q) : CycNumber(conductor) { c_[0] = q; }

CycNumber CycNumber::zeta(std::uint64_t m, std::int64_t k) {
  CycNumber z(m);
  auto mm = static_cast<std::int64_t>(m);
  auto e = static_cast<std::size_t>(((k % mm) + mm) % mm);
  const auto& r = table(m).red[e];
  for (std::size_t i = 0; i < z.c_.size(); ++i) z.c_[i] = r[i];
  return z;
}

bool CycNumber::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycNumber::to_rational() const {
  if (!is_rational()) fail(ErrorKind::InvalidArgument, "not a rational number: " + to_string());
  return c_[0];
}

Integer CycNumber::to_integer() const {
  Rational q = to_rational();
  if (q.get_den() != 1) fail(ErrorKind::InvalidArgument, "not an integer: " + to_string());
  return q.get_num();
}

CycNumber CycNumber::embed(std::uint64_t M) const {
  if (M == m_) return *this;
  if (M % m_ != 0) fail(ErrorKind::InvalidArgument, "embedding conductor must be a multiple");
  const CycTable& t = table(M);
  const std::uint64_t step = M / m_;
  CycNumber out(M);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& r = t.red[(i * step) % M];
    for (std::size_t j = 0; j < t.phi; ++j)
      if (r[j] != 0) out.c_[j] += c_[i] * r[j];
  }
  return out;
}

CycNumber CycNumber::galois(std::uint64_t a) const {
  if (gcd_u64(a % m_, m_) != 1 && m_ > 1) fail(ErrorKind::InvalidArgument, "galois exponent not a unit");
  const CycTable& t = table(m_);
  CycNumber out(m_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& r = t.red[(i * (a % m_)) % m_];
    for (std::size_t j = 0; j < t.phi; ++j)
      if (r[j] != 0) out.c_[j] += c_[i] * r[j];
  }
  return out;
}

void CycNumber::bring_to(std::uint64_t M) {
  if (M != m_) *this = embed(M);
}

CycNumber CycNumber::operator-() const {
  CycNumber out(*this);
  for (auto& x : out.c_) x = -x;
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  const std::uint64_t M = lcm_u64(m_, o.m_);
  bring_to(M);
  const CycNumber& b = o.m_ == M ? o : o.embed(M);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  const std::uint64_t M = lcm_u64(m_, o.m_);
  if (o.is_rational()) {
    bring_to(M);
    return *this *= o.c_[0];
  }
  if (is_rational()) {
    Rational q = c_[0];
    *this = o.embed(M);
    return *this *= q;
  }
  bring_to(M);
  CycNumber b = o.embed(M);
  const CycTable& t = table(M);
  std::vector<Rational> acc(M, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) acc[(i + j) % M] += c_[i] * b.c_[j];
  }
  for (auto& x : c_) x = 0;
  for (std::size_t k = 0; k < M; ++k) {
    if (acc[k] == 0) continue;
    const auto& r = t.red[k];
    for (std::size_t j = 0; j < t.phi; ++j)
      if (r[j] != 0) c_[j] += acc[k] * r[j];
  }
  return *this;
}

CycNumber& CycNumber::operator*=(const Rational& q) {
  for (auto& x : c_) x *= q;
  return *this;
}

bool operator==(const CycNumber& a, const CycNumber& b) { return compare(a, b) == 0; }

int compare(const CycNumber& a, const CycNumber& b) {
  const std::uint64_t M = lcm_u64(a.m_, b.m_);
  const CycNumber& x = a.m_ == M ? a : a.embed(M);
  CycNumber yb = b.m_ == M ? CycNumber() : b.embed(M);
  const CycNumber& y = b.m_ == M ? b : yb;
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    int s = cmp(x.c_[i], y.c_[i]);
    if (s != 0) return s < 0 ? -1 : 1;
  }
  return 0;
}

std::string CycNumber::to_string() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& q = c_[i];
    if (q == 0) continue;
    Rational mag = abs(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z";
    if (i > 1) os << "^" << i;
  }
  os << " (m=" << m_ << ")";
  return os.str();
}

}  // namespace gkc
