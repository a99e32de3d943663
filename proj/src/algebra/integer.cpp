#include "gkc/algebra/integer.hpp"

#include <algorithm>
#include <numeric>

#include "gkc/error.hpp"

namespace gkc {

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return is_prime(z);
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  if (n == 0) fail(ErrorKind::InvalidArgument, "factor_small(0)");
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [q, e] : factor_small(n)) {
    (void)e;
    phi = phi / q * (q - 1);
  }
  return phi;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [q, e] : factor_small(n)) {
    std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= q;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  Integer z(static_cast<unsigned long>(a)), mod(static_cast<unsigned long>(m)), inv;
  if (mpz_invert(inv.get_mpz_t(), z.get_mpz_t(), mod.get_mpz_t()) == 0)
    fail(ErrorKind::InvalidArgument, "element not invertible modulo " + std::to_string(m));
  return inv.get_ui();
}

std::uint64_t reduce_mod(const Integer& a, std::uint64_t m) {
  Integer r;
  Integer mod(static_cast<unsigned long>(m));
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
  return r.get_ui();
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  if (gcd_u64(a % m, m) != 1)
    fail(ErrorKind::InvalidArgument, "multiplicative_order: gcd(a, m) != 1");
  std::uint64_t order = euler_phi(m);
  for (auto [q, e] : factor_small(order)) {
    for (unsigned k = 0; k < e; ++k) {
      if (powmod(a, order / q, m) == 1)
        order /= q;
      else
        break;
    }
  }
  return order;
}

int kronecker(const Integer& a, const Integer& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "squarefree_part(0)");
  Integer m = abs(n);
  if (!m.fits_ulong_p()) fail(ErrorKind::InvalidArgument, "squarefree_part: integer too large");
  Integer out = 1;
  for (auto [q, e] : factor_small(m.get_ui()))
    if (e % 2 == 1) out *= static_cast<unsigned long>(q);
  return n < 0 ? Integer(-out) : out;
}

Integer quadratic_field_discriminant(const Integer& d) {
  Integer s = squarefree_part(d);
  if (s == 1) fail(ErrorKind::InvalidArgument, "quadratic field of a square");
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), s.get_mpz_t(), 4);
  return r == 1 ? s : Integer(4 * s);
}

long p_adic_power(const Integer& n, std::uint64_t p) {
  if (n <= 0) return -1;
  Integer m = n;
  long k = 0;
  while (m > 1) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) return -1;
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++k;
  }
  return k;
}

unsigned long valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "valuation of zero");
  Integer m = abs(n);
  unsigned long k = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++k;
  }
  return k;
}

}  // namespace gkc
