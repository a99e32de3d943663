#include "gkc/fields/number_field.hpp"

#include <algorithm>
#include <sstream>

#include "gkc/algebra/cyclotomic.hpp"
#include "gkc/algebra/fp_poly.hpp"
#include "gkc/algebra/irreducibility.hpp"
#include "gkc/algebra/real_roots.hpp"
#include "gkc/algebra/resultant.hpp"
#include "gkc/error.hpp"

namespace gkc {

NumberField make_field_known_irreducible(const IntPoly& f, std::string reason, bool asserted) {
  if (!f.is_monic()) fail(ErrorKind::NotMonic, f.to_string());
  if (f.degree() < 1) fail(ErrorKind::InvalidArgument, "number field of a constant polynomial");
  NumberField F;
  F.f_ = f;
  F.disc_ = poly_discriminant(f);
  if (F.disc_ == 0) fail(ErrorKind::Reducible, "repeated factor in " + f.to_string());
  int r1 = static_cast<int>(count_real_roots(f));
  F.sig_ = {r1, (f.degree() - r1) / 2};
  F.reason_ = std::move(reason);
  F.asserted_ = asserted;
  return F;
}

NumberField make_field(const IntPoly& f) {
  if (!f.is_monic()) fail(ErrorKind::NotMonic, f.to_string());
  auto cert = decide_irreducibility(f);
  if (!cert.irreducible) fail(ErrorKind::Reducible, f.to_string() + ": " + cert.reason);
  return make_field_known_irreducible(f, cert.reason, false);
}

NumberField cyclotomic_field(std::uint64_t m) {
  return make_field_known_irreducible(cyclotomic_polynomial(m), "cyclotomic", false);
}

NumberField quadratic_field(const Integer& d) {
  return make_field(IntPoly({Integer(-d), Integer(0), Integer(1)}));
}

unsigned SplittingType::field_degree() const {
  unsigned n = 0;
  for (auto [e, f] : entries) n += e * f;
  return n;
}

bool SplittingType::totally_split() const {
  for (auto [e, f] : entries)
    if (e != 1 || f != 1) return false;
  return entries.size() == field_degree();
}

bool SplittingType::unramified() const {
  for (auto [e, f] : entries)
    if (e != 1) return false;
  return true;
}

std::string SplittingType::to_string() const {
  std::ostringstream os;
  os << "p=" << p << " {";
  for (std::size_t i = 0; i < entries.size(); ++i)
    os << (i ? "," : "") << "(" << entries[i].first << "," << entries[i].second << ")";
  os << "}";
  return os.str();
}

SplittingType splitting_type(const NumberField& F, std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p));
  const IntPoly& f = F.defining_poly();
  auto fac = factor_mod_p(f, p);
  SplittingType st;
  st.p = p;
  for (const auto& x : fac.factors)
    st.entries.emplace_back(x.multiplicity, static_cast<unsigned>(x.factor.degree()));
  std::sort(st.entries.begin(), st.entries.end());

  const Integer& disc = F.poly_disc();
  const Integer pz(static_cast<unsigned long>(p));
  bool safe = mpz_divisible_p(disc.get_mpz_t(), Integer(pz * pz).get_mpz_t()) == 0;
  if (!safe) {
    // Dedekind: with g = prod g_i, h = prod g_i^(e_i - 1) and
    // F = (f - g h) / p, the prime p is regular iff no g_i with e_i >= 2
    // divides F mod p.
    IntPoly g{1}, h{1};
    for (const auto& x : fac.factors) {
      IntPoly gi = x.factor.lift();
      g = g * gi;
      for (unsigned k = 1; k < x.multiplicity; ++k) h = h * gi;
    }
    IntPoly diff = f - g * h;
    FpPoly Fbar = FpPoly::from_int_poly(diff.divexact(pz), p);
    safe = true;
    for (const auto& x : fac.factors) {
      if (x.multiplicity < 2) continue;
      if ((Fbar % x.factor).is_zero()) safe = false;
    }
  }
  if (!safe)
    fail(ErrorKind::UnsafePrime, std::to_string(p) + " divides the index of Z[theta] for " + f.to_string());
  if (st.field_degree() != static_cast<unsigned>(F.degree()))
    fail(ErrorKind::Internal, "splitting degrees do not sum to the field degree");
  return st;
}

bool is_totally_split(const NumberField& F, std::uint64_t p) { return splitting_type(F, p).totally_split(); }

}  // namespace gkc
