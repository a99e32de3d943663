#include "gkc/algebra/irreducibility.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <set>
#include <sstream>

#include "gkc/algebra/fp_poly.hpp"
#include "gkc/algebra/real_roots.hpp"
#include "gkc/algebra/resultant.hpp"
#include "gkc/error.hpp"

namespace gkc {

namespace {

constexpr std::size_t kDirectPrimes = 25;
constexpr std::size_t kPatternPrimes = 120;
// Beyond this size the constant term is not factored for the root test.
const Integer kRootEnumerationLimit("1000000000000");

std::string join(const std::vector<std::uint64_t>& ps) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? "," : "") << ps[i];
  return os.str();
}

// Degrees d in [1, n-1] that some product of the given factor degrees reaches.
std::set<int> subset_sums(const std::vector<int>& degrees, int n) {
  std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
  reach[0] = true;
  for (int d : degrees)
    for (int s = n; s >= d; --s)
      if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = true;
  std::set<int> out;
  for (int s = 1; s < n; ++s)
    if (reach[static_cast<std::size_t>(s)]) out.insert(s);
  return out;
}

using ZPoly = std::vector<Integer>;  // coefficients mod some modulus, constant first

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly reduce(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
  return a;
}

ZPoly add(const ZPoly& a, const ZPoly& b, const Integer& m, int sign = 1) {
  ZPoly c(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += sign * b[i];
  return reduce(std::move(c), m);
}

ZPoly mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return reduce(std::move(c), m);
}

// a = q b + r mod m for monic b.
void divrem(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r) {
  r = reduce(a, m);
  const std::size_t db = b.size() - 1;
  if (r.size() <= db) {
    q.clear();
    return;
  }
  q.assign(r.size() - db, Integer(0));
  for (std::size_t k = r.size() - db; k-- > 0;) {
    Integer c = r[db + k];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[k] = c;
    for (std::size_t j = 0; j <= db; ++j) r[j + k] -= c * b[j];
  }
  r.resize(db);
  r = reduce(std::move(r), m);
  q = reduce(std::move(q), m);
}

ZPoly of(const FpPoly& f) { return f.lift().coefficients(); }

// s a + t b = 1 over F_p for coprime a, b.
void xgcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) {
  const std::uint64_t p = a.modulus();
  FpPoly r0 = a, r1 = b, s0 = FpPoly::constant(p, 1), s1 = FpPoly::constant(p, 0), t0 = s1, t1 = s0;
  while (!r1.is_zero()) {
    FpPoly q, r;
    divmod(r0, r1, q, r);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.degree() != 0) fail(ErrorKind::Internal, "Hensel lifting: factors not coprime mod " + std::to_string(p));
  const FpPoly inv = FpPoly::constant(p, invmod(r0.leading(), p));
  s = s0 * inv;
  t = t0 * inv;
}

// One quadratic Hensel step: f = g h, s g + t h = 1 mod m becomes mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m) {
  const Integer M = m * m;
  ZPoly e = add(f, mul(g, h, M), M, -1), q, r;
  divrem(mul(s, e, M), h, M, q, r);
  ZPoly g2 = add(add(g, mul(t, e, M), M), mul(q, g, M), M);
  ZPoly h2 = add(h, r, M);
  ZPoly b = add(add(mul(s, g2, M), mul(t, h2, M), M), ZPoly{Integer(1)}, M, -1), c, d;
  divrem(mul(s, b, M), h2, M, c, d);
  s = add(s, d, M, -1);
  t = add(add(t, mul(t, b, M), M, -1), mul(c, g2, M), M, -1);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts the monic factorization of f mod p to mod p^(2^j) >= bound.
std::vector<ZPoly> lift_factors(const IntPoly& f, const std::vector<FpPoly>& factors, std::uint64_t p, const Integer& bound,
                                Integer& modulus) {
  std::vector<ZPoly> out;
  ZPoly cur = f.coefficients();
  modulus = p;
  while (modulus < bound) modulus *= modulus;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    FpPoly rest = FpPoly::constant(p, 1);
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = rest * factors[j];
    FpPoly s, t;
    xgcd(factors[i], rest, s, t);
    ZPoly g = of(factors[i]), h = of(rest), sz = of(s), tz = of(t);
    for (Integer m = p; m < modulus; m *= m) hensel_step(cur, g, h, sz, tz, m);
    out.push_back(std::move(g));
    cur = std::move(h);
  }
  out.push_back(reduce(cur, modulus));
  return out;
}

// Coefficients in (-m/2, m/2].
IntPoly symmetric(const ZPoly& a, const Integer& m) {
  const Integer half = m / 2;
  ZPoly c = reduce(a, m);
  for (auto& x : c)
    if (x > half) x -= m;
  return IntPoly(std::move(c));
}

// Full recombination over the factorization mod p: either finds a true factor
// or proves none exists.
IrreducibilityCertificate zassenhaus(const IntPoly& f, const ModPFactorization& fac, std::size_t max_factors) {
  const std::size_t r = fac.factors.size();
  if (r > max_factors)
    fail(ErrorKind::IrreducibilityUndecided, f.to_string() + ": " + std::to_string(r) + " factors mod " + std::to_string(fac.p));
  const int n = f.degree();
  // Landau-Mignotte: every coefficient of a factor is at most 2^(n-1) |f|_2.
  Integer norm2 = 0;
  for (const auto& c : f.coefficients()) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer bound = (root + 1) << static_cast<mp_bitcnt_t>(n - 1);
  std::vector<FpPoly> mods;
  for (const auto& x : fac.factors) mods.push_back(x.factor);
  Integer m;
  auto lifted = lift_factors(f, mods, fac.p, 2 * bound + 1, m);

  IrreducibilityCertificate cert;
  cert.primes = {fac.p};
  std::vector<std::size_t> pick;
  bool found = false;
  auto rec = [&](auto&& self, std::size_t from, std::size_t left) -> void {
    if (found) return;
    if (left == 0) {
      ZPoly prod{Integer(1)};
      for (auto i : pick) prod = mul(prod, lifted[i], m);
      IntPoly g = symmetric(prod, m);
      for (const auto& c : g.coefficients())
        if (abs(c) > bound) return;
      IntPoly q, rem;
      pseudo_divide(f, g, q, rem);
      if (rem.is_zero()) {
        found = true;
        cert.irreducible = false;
        cert.reason = "factor " + g.to_string();
      }
      return;
    }
    for (std::size_t i = from; i + left <= r; ++i) {
      pick.push_back(i);
      self(self, i + 1, left - 1);
      pick.pop_back();
    }
  };
  for (std::size_t size = 1; 2 * size <= r && !found; ++size) rec(rec, 0, size);
  if (!found) {
    cert.irreducible = true;
    cert.reason = "no recombination of the " + std::to_string(r) + " factors mod " + std::to_string(fac.p) +
                  " lifted to " + std::to_string(mpz_sizeinbase(m.get_mpz_t(), 2)) + " bits divides";
  }
  return cert;
}

}  // namespace

std::vector<Integer> integer_roots(const IntPoly& f, bool* complete) {
  if (!f.is_monic()) fail(ErrorKind::NotMonic, f.to_string());
  std::vector<Integer> roots;
  if (complete) *complete = true;
  if (f.degree() < 1) return roots;
  Integer a0 = f.coeff(0);
  if (a0 == 0) {
    roots.push_back(0);
    // Strip the X factors and continue on the rest.
    int k = 0;
    while (f.coeff(k) == 0) ++k;
    std::vector<Integer> rest(f.coefficients().begin() + k, f.coefficients().end());
    for (auto& r : integer_roots(IntPoly(rest), complete))
      if (r != 0) roots.push_back(r);
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  Integer m = abs(a0);
  if (m > kRootEnumerationLimit) {
    if (complete) *complete = false;
    return roots;
  }
  for (auto d : divisors(m.get_ui())) {
    Integer z(static_cast<unsigned long>(d));
    if (f.eval(z) == 0) roots.push_back(z);
    if (f.eval(Integer(-z)) == 0) roots.push_back(-z);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

IrreducibilityCertificate decide_irreducibility(const IntPoly& f, std::size_t max_recombination_factors) {
  if (!f.is_monic()) fail(ErrorKind::NotMonic, f.to_string());
  const int n = f.degree();
  if (n < 1) fail(ErrorKind::InvalidArgument, "irreducibility of a constant");
  IrreducibilityCertificate cert;
  if (n == 1) {
    cert.irreducible = true;
    cert.reason = "linear";
    return cert;
  }
  if (!is_squarefree(f)) {
    cert.reason = "repeated factor " + gcd(f, f.derivative()).to_string();
    return cert;
  }
  bool roots_complete = false;
  auto roots = integer_roots(f, &roots_complete);
  if (!roots.empty()) {
    cert.reason = "rational root " + roots.front().get_str();
    return cert;
  }
  if (roots_complete && n <= 3) {
    cert.irreducible = true;
    cert.reason = "no rational root in degree " + std::to_string(n);
    return cert;
  }

  const Integer disc = poly_discriminant(f);
  std::set<int> admissible;
  for (int d = 1; d < n; ++d) admissible.insert(d);
  if (roots_complete) {
    admissible.erase(1);
    admissible.erase(n - 1);
  }
  std::vector<std::uint64_t> used;
  std::optional<ModPFactorization> fewest;
  std::size_t good = 0;
  for (std::uint64_t p = 2; good < kPatternPrimes; ++p) {
    if (!is_prime(p) || mpz_divisible_ui_p(disc.get_mpz_t(), p) != 0) continue;
    ++good;
    auto fac = factor_mod_p(f, p);
    if (good <= kDirectPrimes && fac.factors.size() == 1) {
      cert.irreducible = true;
      cert.reason = "irreducible mod " + std::to_string(p);
      cert.primes = {p};
      return cert;
    }
    if (!fewest || fac.factors.size() < fewest->factors.size()) fewest = fac;
    std::vector<int> degs;
    for (const auto& x : fac.factors) degs.push_back(x.factor.degree());
    auto sums = subset_sums(degs, n);
    std::set<int> next;
    std::set_intersection(admissible.begin(), admissible.end(), sums.begin(), sums.end(),
                          std::inserter(next, next.begin()));
    if (next.size() < admissible.size()) used.push_back(p);
    admissible = std::move(next);
    if (admissible.empty()) {
      cert.irreducible = true;
      cert.reason = "degree patterns mod " + join(used);
      cert.primes = used;
      return cert;
    }
  }
  return zassenhaus(f, *fewest, max_recombination_factors);
}

}  // namespace gkc
