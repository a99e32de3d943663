// Burnside-Dixon: common eigenvectors of the class matrices over F_q give the
// central characters mod q; eigenvalue multiplicities lift them to Q(zeta_e).

#include <algorithm>
#include <random>

#include "gkc/algebra/integer.hpp"
#include "gkc/error.hpp"
#include "gkc/groups/character.hpp"
#include "table_util.hpp"

namespace gkc {

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

struct Fq {
  std::uint64_t q;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q - b) % q; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % q; }
  std::uint64_t inv(std::uint64_t a) const { return invmod(a, q); }
};

std::uint64_t choose_prime(std::uint64_t e, std::uint64_t order) {
  for (std::uint64_t p = e + 1;; p += e)
    if (p * p > 4 * order && is_prime(p)) return p;
}

std::uint64_t primitive_root(std::uint64_t q) {
  auto fac = factor_small(q - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (auto [r, k] : fac) {
      (void)k;
      if (powmod(g, (q - 1) / r, q) == 1) ok = false;
    }
    if (ok) return g;
  }
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m, const Fq& F) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    std::uint64_t iv = F.inv(m[row][c]);
    for (auto& x : m[row]) x = F.mul(x, iv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      std::uint64_t f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = F.sub(m[r][k], F.mul(f, m[row][k]));
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Basis (as rows) of {x : A x = 0}.
Mat nullspace(Mat A, const Fq& F) {
  const std::size_t n = A.empty() ? 0 : A[0].size();
  auto piv = rref(A, F);
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.sub(0, A[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial (constant term first) via Hessenberg reduction.
Vec charpoly(Mat H, const Fq& F) {
  const std::size_t d = H.size();
  for (std::size_t j = 0; j + 2 < d; ++j) {
    std::size_t i = j + 1;
    while (i < d && H[i][j] == 0) ++i;
    if (i == d) continue;
    if (i != j + 1) {
      std::swap(H[i], H[j + 1]);
      for (auto& row : H) std::swap(row[i], row[j + 1]);
    }
    std::uint64_t iv = F.inv(H[j + 1][j]);
    for (std::size_t k = j + 2; k < d; ++k) {
      std::uint64_t u = F.mul(H[k][j], iv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < d; ++c) H[k][c] = F.sub(H[k][c], F.mul(u, H[j + 1][c]));
      for (std::size_t r = 0; r < d; ++r) H[r][j + 1] = F.add(H[r][j + 1], F.mul(u, H[r][k]));
    }
  }
  std::vector<Vec> p(d + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= d; ++m) {
    // p_m = (X - h_mm) p_{m-1} - sum_i t_i h_{m-i,m} p_{m-i-1}
    Vec cur(m + 1, 0);
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      cur[k + 1] = F.add(cur[k + 1], p[m - 1][k]);
      cur[k] = F.sub(cur[k], F.mul(H[m - 1][m - 1], p[m - 1][k]));
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = F.mul(t, H[m - i][m - i - 1]);
      std::uint64_t f = F.mul(t, H[m - i - 1][m - 1]);
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) cur[k] = F.sub(cur[k], F.mul(f, p[m - i - 1][k]));
    }
    p[m] = std::move(cur);
  }
  return p[d];
}

std::uint64_t eval(const Vec& poly, std::uint64_t x, const Fq& F) {
  std::uint64_t acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

// Splits the subspace spanned by the rows of B (RREF) into eigenspaces of M.
std::vector<Mat> split(const Mat& B, const Mat& M, const Fq& F) {
  const std::size_t d = B.size(), r = M.size();
  Mat Bc(B);
  auto piv = rref(Bc, F);
  // A[t][s]: coordinate t of M b_s in the basis Bc (read at pivot columns).
  Mat A(d, Vec(d, 0));
  for (std::size_t s = 0; s < d; ++s) {
    Vec img(r, 0);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) img[j] = F.add(img[j], F.mul(M[j][k], Bc[s][k]));
    for (std::size_t t = 0; t < d; ++t) A[t][s] = img[piv[t]];
  }
  Vec cp = charpoly(A, F);
  std::vector<Mat> parts;
  std::size_t covered = 0;
  for (std::uint64_t lambda = 0; lambda < F.q; ++lambda) {
    if (eval(cp, lambda, F) != 0) continue;
    Mat Al(A);
    for (std::size_t t = 0; t < d; ++t) Al[t][t] = F.sub(Al[t][t], lambda);
    Mat ker = nullspace(Al, F);
    if (ker.size() == d) return {Bc};
    Mat sub;
    for (const auto& c : ker) {
      Vec v(r, 0);
      for (std::size_t t = 0; t < d; ++t)
        for (std::size_t k = 0; k < r; ++k) v[k] = F.add(v[k], F.mul(c[t], Bc[t][k]));
      sub.push_back(std::move(v));
    }
    rref(sub, F);
    covered += sub.size();
    parts.push_back(std::move(sub));
  }
  if (covered != d) fail(ErrorKind::Internal, "class matrix not diagonalizable mod q");
  return parts;
}

}  // namespace

std::vector<Character> dixon_character_table(const GroupPtr& Gp) {
  const FiniteGroup& G = *Gp;
  if (G.order() > 64) fail(ErrorKind::ScaleExceeded, "character tables are limited to |G| <= 64");
  const std::size_t r = G.num_classes();
  const std::uint64_t order = G.order(), e = G.exponent();
  const Fq F{choose_prime(e, order)};
  const std::uint64_t z = powmod(primitive_root(F.q), (F.q - 1) / e, F.q);

  std::vector<std::uint64_t> h(r);
  for (std::size_t i = 0; i < r; ++i) h[i] = G.classes()[i].size();

  // M_i[j][k] = c_ijk = #{(x, y) in C_i x C_j : xy = z_k} for fixed z_k in C_k.
  std::vector<Mat> M(r, Mat(r, Vec(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<std::uint64_t> cnt(r, 0);
      for (Elem x : G.classes()[i])
        for (Elem y : G.classes()[j]) ++cnt[G.class_of(G.mul(x, y))];
      for (std::size_t k = 0; k < r; ++k) M[i][j][k] = (cnt[k] / h[k]) % F.q;
    }

  Mat full(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) full[i][i] = 1;
  std::vector<Mat> spaces{full};

  // A random combination usually separates everything at once.
  std::mt19937_64 rng(kArtifactSeed ^ order);
  Mat comb(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    std::uint64_t c = rng() % F.q;
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) comb[j][k] = F.add(comb[j][k], F.mul(c, M[i][j][k]));
  }
  auto refine = [&](const Mat& op) {
    std::vector<Mat> next;
    for (const auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& part : split(s, op, F)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  };
  refine(comb);
  for (std::size_t i = 1; i < r && spaces.size() < r; ++i) refine(M[i]);
  if (spaces.size() != r) fail(ErrorKind::Internal, "Dixon splitting did not reach one-dimensional spaces");

  std::vector<Character> rows;
  for (const auto& s : spaces) {
    Vec w = s[0];
    std::uint64_t iv = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, iv);
    // sum_i w_i w_i' / h_i = |G| / chi(1)^2
    std::uint64_t S = 0;
    for (std::size_t i = 0; i < r; ++i) S = F.add(S, F.mul(F.mul(w[i], w[G.inverse_class(i)]), F.inv(h[i] % F.q)));
    std::uint64_t d2 = F.mul(order % F.q, F.inv(S));
    std::uint64_t deg = 0;
    for (std::uint64_t d = 1; d * d <= order; ++d)
      if (d * d % F.q == d2) deg = d;
    if (deg == 0) fail(ErrorKind::Internal, "Dixon: no degree matches");
    Vec chi(r);
    for (std::size_t i = 0; i < r; ++i) chi[i] = F.mul(F.mul(deg, w[i]), F.inv(h[i] % F.q));

    Character out{Gp, {}};
    for (std::size_t i = 0; i < r; ++i) {
      Elem g = G.classes()[i][0];
      const std::uint64_t o = G.element_order(g);
      const std::uint64_t zo = powmod(z, e / o, F.q);
      CycNumber val(e);
      Elem gl = G.identity();
      std::vector<std::uint64_t> powers;  // chi(g^l) mod q
      for (std::uint64_t l = 0; l < o; ++l) {
        powers.push_back(chi[G.class_of(gl)]);
        gl = G.mul(gl, g);
      }
      const std::uint64_t inv_o = F.inv(o % F.q);
      for (std::uint64_t k = 0; k < o; ++k) {
        std::uint64_t acc = 0;
        const std::uint64_t zk = F.inv(powmod(zo, k, F.q));
        std::uint64_t zkl = 1;
        for (std::uint64_t l = 0; l < o; ++l) {
          acc = F.add(acc, F.mul(powers[l], zkl));
          zkl = F.mul(zkl, zk);
        }
        std::uint64_t mult = F.mul(acc, inv_o);
        if (mult > deg) fail(ErrorKind::Internal, "Dixon: eigenvalue multiplicity out of range");
        if (mult) val += CycNumber::zeta(e, static_cast<std::int64_t>(k * (e / o))) * Rational(static_cast<long>(mult));
      }
      out.values.push_back(std::move(val));
    }
    rows.push_back(std::move(out));
  }
  sort_rows(rows);
  verify_table(Gp, rows);
  return rows;
}

}  // namespace gkc
