#pragma once
// Independent reference computations used only by the tests. Nothing here
// shares code paths with the library routines it checks.

#include <cstdint>
#include <random>
#include <vector>

#include "gkc/algebra/int_poly.hpp"

namespace oracle {

using gkc::Integer;
using gkc::IntPoly;
using gkc::Rational;

/// Fraction-free Gaussian elimination (Bareiss).
inline Integer bareiss_det(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Resultant as the determinant of the Sylvester matrix.
inline Integer sylvester_resultant(const IntPoly& a, const IntPoly& b) {
  const int m = a.degree(), n = b.degree();
  const std::size_t N = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Integer>> s(N, std::vector<Integer>(N, Integer(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.coeff(n - j);
  return bareiss_det(s);
}

inline int descartes_bound(const IntPoly& f) {
  int changes = 0, last = 0;
  for (const auto& c : f.coefficients()) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Roots in (0, 1) counted by Descartes' rule with bisection (Uspensky).
/// f squarefree, f(0) != 0, f(1) != 0 assumed at each level; exact roots at
/// rational midpoints are counted explicitly.
inline int roots_unit_interval(const IntPoly& f, int depth = 0) {
  // Map (0,1) to (0,inf): (X+1)^n f(1/(X+1)).
  const int n = f.degree();
  std::vector<Integer> rev(f.coefficients().rbegin(), f.coefficients().rend());
  IntPoly t = IntPoly(rev).shifted(1);
  (void)n;
  int v = descartes_bound(t);
  if (v <= 1) return v;
  if (depth > 200) return -1000;
  // f(X/2) scaled and f((X+1)/2) scaled.
  std::vector<Integer> half(f.coefficients());
  for (std::size_t i = 0; i < half.size(); ++i) half[i] *= Integer(1) << (f.degree() - static_cast<int>(i));
  IntPoly left(half);
  IntPoly right = left.shifted(1);
  int mid = right.coeff(0) == 0 ? 1 : 0;
  IntPoly r2 = right;
  if (mid) {
    std::vector<Integer> c(right.coefficients().begin() + 1, right.coefficients().end());
    r2 = IntPoly(c);
  }
  return roots_unit_interval(left, depth + 1) + mid + roots_unit_interval(r2, depth + 1);
}

/// Real roots of a squarefree integer polynomial via root bound + bisection.
inline int real_root_count(const IntPoly& f) {
  Integer bound = 1;
  for (const auto& c : f.coefficients()) bound = std::max(bound, Integer(abs(c)));
  bound = bound / abs(f.leading()) + 2;
  // roots in (-B, B): substitute X = 2B*Y - B and count in (0,1).
  IntPoly sub;
  IntPoly lin({Integer(-bound), Integer(2 * bound)});
  for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it) sub = sub * lin + IntPoly({*it});
  int count = 0;
  IntPoly g = sub;
  if (g.coeff(0) == 0) {
    ++count;
    std::vector<Integer> c(g.coefficients().begin() + 1, g.coefficients().end());
    g = IntPoly(c);
  }
  return count + roots_unit_interval(g);
}

/// Small deterministic generator helpers.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  IntPoly monic(int degree, long coeff_bound) {
    std::vector<Integer> c;
    for (int i = 0; i < degree; ++i) c.emplace_back(range(-coeff_bound, coeff_bound));
    return IntPoly::from_monic_tail(c);
  }
  IntPoly poly(int degree, long coeff_bound) {
    std::vector<Integer> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(range(-coeff_bound, coeff_bound));
    while (c.back() == 0) c.back() = range(-coeff_bound, coeff_bound);
    return IntPoly(c);
  }
};

}  // namespace oracle
