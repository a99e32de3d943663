#include "gkc/algebra/fp_poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "gkc/error.hpp"

namespace gkc {

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coefficients) : p_(p), c_(std::move(coefficients)) {
  for (auto& x : c_) x %= p_;
  trim();
}

FpPoly FpPoly::from_int_poly(const IntPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  c.reserve(f.coefficients().size());
  for (const auto& a : f.coefficients()) c.push_back(reduce_mod(a, p));
  return FpPoly(p, std::move(c));
}

FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }
FpPoly FpPoly::x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  std::uint64_t inv = invmod(leading(), p_);
  std::vector<std::uint64_t> c(c_);
  for (auto& x : c) x = mulmod(x, inv, p_);
  return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::derivative() const {
  if (c_.size() <= 1) return FpPoly(p_, {});
  std::vector<std::uint64_t> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mulmod(c_[i], i % p_, p_);
  return FpPoly(p_, std::move(d));
}

std::uint64_t FpPoly::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, x, p_) + *it) % p_;
  return acc;
}

IntPoly FpPoly::lift() const {
  std::vector<Integer> c;
  c.reserve(c_.size());
  for (auto x : c_) c.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(c));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = (c[i] + b.c_[i]) % a.p_;
  return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = (c[i] + a.p_ - b.c_[i]) % a.p_;
  return FpPoly(a.p_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_, {});
  const std::uint64_t p = a.p_;
  std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
      // Keep the accumulator bounded for large moduli.
      if (acc[i + j] >> 120) acc[i + j] %= p;
    }
  }
  std::vector<std::uint64_t> c(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<std::uint64_t>(acc[i] % p);
  return FpPoly(p, std::move(c));
}

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.c_ < b.c_;
}

std::string FpPoly::to_string() const {
  return lift().to_string();
}

void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
  if (b.is_zero()) fail(ErrorKind::ZeroPolynomial, "division by zero in F_p[X]");
  const std::uint64_t p = b.modulus();
  if (a.degree() < b.degree()) {
    q = FpPoly(p, {});
    r = a;
    return;
  }
  std::vector<std::uint64_t> rem(a.coefficients());
  const auto& bc = b.coefficients();
  const int db = b.degree();
  std::vector<std::uint64_t> quo(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  const std::uint64_t inv = invmod(b.leading(), p);
  for (int k = a.degree() - db; k >= 0; --k) {
    std::uint64_t c = mulmod(rem[static_cast<std::size_t>(db + k)], inv, p);
    quo[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& x = rem[static_cast<std::size_t>(j + k)];
      x = (x + p - mulmod(c, bc[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  q = FpPoly(p, std::move(quo));
  r = FpPoly(p, std::move(rem));
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) {
  FpPoly q, r;
  divmod(a, b, q, r);
  return r;
}

FpPoly operator/(const FpPoly& a, const FpPoly& b) {
  FpPoly q, r;
  divmod(a, b, q, r);
  return q;
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m) {
  const std::uint64_t p = m.modulus();
  FpPoly result = FpPoly::constant(p, 1) % m;
  if (e == 0) return result;
  FpPoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

FpPoly ModPFactorization::product() const {
  FpPoly acc = FpPoly::constant(p, unit);
  for (const auto& f : factors)
    for (unsigned k = 0; k < f.multiplicity; ++k) acc = acc * f.factor;
  return acc;
}

std::string ModPFactorization::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << ", ";
    os << "(" << factors[i].factor.to_string() << ", " << factors[i].multiplicity << ")";
  }
  os << "} mod " << p;
  return os.str();
}

namespace {

// For f with f' = 0 (so f(X) = g(X^p)), returns g. Coefficients are fixed by
// Frobenius on F_p, so the p-th root is taken coefficientwise on exponents.
FpPoly pth_root(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
  return FpPoly(p, std::move(c));
}

void squarefree_decomposition(const FpPoly& f, unsigned scale, std::vector<std::pair<FpPoly, unsigned>>& out) {
  const std::uint64_t p = f.modulus();
  if (f.degree() <= 0) return;
  FpPoly c = gcd(f, f.derivative());
  FpPoly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    FpPoly y = gcd(w, c);
    FpPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree_decomposition(pth_root(c).monic(), scale * static_cast<unsigned>(p), out);
}

std::vector<std::pair<FpPoly, int>> distinct_degree(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly rest = f;
  FpPoly x = FpPoly::x(p);
  FpPoly h = x % rest;
  const Integer pz(static_cast<unsigned long>(p));
  for (int i = 1; rest.degree() >= 2 * i; ++i) {
    h = powmod(h, pz, rest);
    FpPoly g = gcd(h - x, rest);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), rest.degree());
  return out;
}

void equal_degree(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  const std::uint64_t p = f.modulus();
  const int n = f.degree();
  if (n == d) {
    out.push_back(f.monic());
    return;
  }
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
  const Integer half = (pd - 1) / 2;
  for (;;) {
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n));
    for (auto& x : a) x = rng() % p;
    FpPoly r(p, std::move(a));
    if (r.degree() <= 0) continue;
    FpPoly b;
    if (p == 2) {
      // Trace map F_{2^d} -> F_2 applied modulo f.
      FpPoly t = r, acc = r;
      for (int k = 1; k < d; ++k) {
        t = (t * t) % f;
        acc = acc + t;
      }
      b = acc;
    } else {
      b = powmod(r, half, f) - FpPoly::constant(p, 1);
    }
    FpPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

ModPFactorization factor_mod_p(const FpPoly& f, std::uint64_t seed) {
  const std::uint64_t p = f.modulus();
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p));
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "polynomial vanishes modulo " + std::to_string(p));
  ModPFactorization result;
  result.p = p;
  result.unit = f.leading();
  std::mt19937_64 rng(seed ^ (p * 0x9e3779b97f4a7c15ULL));
  std::vector<std::pair<FpPoly, unsigned>> sqf;
  squarefree_decomposition(f.monic(), 1, sqf);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<FpPoly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) result.factors.push_back({std::move(g), mult});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const ModPFactor& a, const ModPFactor& b) {
              if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
              return a.factor < b.factor;
            });
  return result;
}

ModPFactorization factor_mod_p(const IntPoly& f, std::uint64_t p, std::uint64_t seed) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p));
  return factor_mod_p(FpPoly::from_int_poly(f, p), seed);
}

std::vector<std::uint64_t> roots_mod_p(const IntPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> roots;
  for (const auto& fac : factor_mod_p(f, p).factors)
    if (fac.factor.degree() == 1) roots.push_back((p - fac.factor.coeff(0)) % p);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace gkc
