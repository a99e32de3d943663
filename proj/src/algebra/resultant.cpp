#include "gkc/algebra/resultant.hpp"

#include "gkc/error.hpp"

namespace gkc {

namespace {

Integer power(const Integer& base, long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Integer resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  if (a_in.degree() == 0 && b_in.degree() == 0) return 1;
  if (b_in.degree() == 0) return power(b_in.leading(), a_in.degree());
  if (a_in.degree() == 0) return power(a_in.leading(), b_in.degree());

  IntPoly A = a_in, B = b_in;
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -1;
  }
  Integer ca = A.content(), cb = B.content();
  A = A.divexact(ca);
  B = B.divexact(cb);
  Integer t = power(ca, B.degree()) * power(cb, A.degree());
  Integer g = 1, h = 1;

  for (;;) {
    const int delta = A.degree() - B.degree();
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
    IntPoly q, r;
    pseudo_divide(A, B, q, r);
    A = B;
    if (r.is_zero()) return 0;
    B = r.divexact(g * power(h, delta));
    g = A.leading();
    // h <- g^delta / h^(delta - 1)
    h = delta == 0 ? h : exact_div(power(g, delta), power(h, delta - 1));
    if (B.degree() == 0) break;
  }
  // h <- lc(B)^deg(A) / h^(deg(A) - 1)
  const int da = A.degree();
  Integer hb = exact_div(power(B.leading(), da), power(h, da - 1));
  return s * t * hb;
}

Integer poly_discriminant(const IntPoly& f) {
  if (!f.is_monic()) fail(ErrorKind::NotMonic, f.to_string());
  const long n = f.degree();
  if (n < 1) fail(ErrorKind::InvalidArgument, "discriminant of a constant");
  Integer r = resultant(f, f.derivative());
  return ((n * (n - 1) / 2) % 2 == 0) ? r : Integer(-r);
}

}  // namespace gkc
