#include "gkc/algebra/real_roots.hpp"

#include <vector>

#include "gkc/error.hpp"

namespace gkc {

bool is_squarefree(const IntPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree test on zero polynomial");
  return gcd(f, f.derivative()).degree() <= 0;
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree part of zero polynomial");
  IntPoly g = gcd(f, f.derivative());
  if (g.degree() <= 0) return f.primitive_part();
  return divexact(f.primitive_part(), g);
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

unsigned count_real_roots(const IntPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "real roots of zero polynomial");
  if (f.degree() == 0) return 0;
  if (!is_squarefree(f)) fail(ErrorKind::NotSquarefree, f.to_string());

  // Sturm chain with positive rescaling only: lc(b)^k a = q b + r, so
  // -r has the sign of -(a mod b) whenever lc(b)^k > 0.
  std::vector<IntPoly> chain{f, f.derivative()};
  while (chain.back().degree() > 0) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    IntPoly q, r;
    pseudo_divide(a, b, q, r);
    if (r.is_zero()) break;
    int k = a.degree() - b.degree() + 1;
    bool flip = sgn(b.leading()) < 0 && (k % 2 == 1);
    IntPoly next = flip ? r : -r;
    next = next.divexact(next.content());
    chain.push_back(std::move(next));
  }

  std::vector<int> at_pos, at_neg;
  for (const auto& g : chain) {
    int s = sgn(g.leading());
    at_pos.push_back(s);
    at_neg.push_back(g.degree() % 2 == 0 ? s : -s);
  }
  return static_cast<unsigned>(sign_changes(at_neg) - sign_changes(at_pos));
}

}  // namespace gkc
