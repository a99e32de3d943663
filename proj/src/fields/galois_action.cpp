#include "gkc/fields/galois_action.hpp"

#include "gkc/algebra/real_roots.hpp"
#include "gkc/error.hpp"

namespace gkc {

namespace {

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

QPoly to_qpoly(const IntPoly& f) {
  QPoly out;
  for (const auto& c : f.coefficients()) out.emplace_back(c);
  return out;
}

QPoly reduce_mod(QPoly a, const IntPoly& f) {
  trim(a);
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const auto& fc = f.coefficients();
  while (a.size() > n) {
    const Rational lead = a.back();
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t j = 0; j < n; ++j) a[shift + j] -= lead * fc[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

QPoly mul_mod(const QPoly& a, const QPoly& b, const IntPoly& f) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return reduce_mod(std::move(c), f);
}

QPoly compose_mod(const QPoly& outer, const QPoly& inner, const IntPoly& f) {
  QPoly acc;
  for (auto it = outer.rbegin(); it != outer.rend(); ++it) {
    acc = mul_mod(acc, inner, f);
    if (acc.empty()) acc.emplace_back(0);
    acc[0] += *it;
    trim(acc);
  }
  return reduce_mod(std::move(acc), f);
}

QPoly parse_qpoly(const std::vector<std::string>& coefficients) {
  QPoly out;
  for (const auto& s : coefficients) {
    Rational q;
    if (q.set_str(s, 10) != 0) fail(ErrorKind::SchemaViolation, "bad rational coefficient '" + s + "'");
    q.canonicalize();
    out.push_back(q);
  }
  trim(out);
  return out;
}

void verify_galois_action(const NumberField& F, const FiniteGroup& G, const std::vector<QPoly>& maps) {
  const IntPoly& f = F.defining_poly();
  auto bad = [&](const std::string& what) { fail(ErrorKind::InvariantViolation, "Galois action on " + f.to_string() + ": " + what); };
  if (F.irreducibility_asserted()) bad("irreducibility is only asserted");
  if (static_cast<std::size_t>(F.degree()) != G.order()) bad("degree differs from |G|");
  if (maps.size() != G.order()) bad("one map per group element is required");
  const QPoly fq = to_qpoly(f);
  std::vector<QPoly> reduced;
  for (std::size_t g = 0; g < maps.size(); ++g) {
    QPoly r = reduce_mod(maps[g], f);
    if (r != maps[g]) bad("map " + std::to_string(g) + " is not reduced mod f");
    if (!compose_mod(fq, r, f).empty()) bad("map " + std::to_string(g) + " does not send theta to a root");
    for (std::size_t h = 0; h < g; ++h)
      if (reduced[h] == r) bad("maps " + std::to_string(h) + " and " + std::to_string(g) + " coincide");
    reduced.push_back(std::move(r));
  }
  if (reduced[0] != QPoly{Rational(0), Rational(1)}) bad("the identity must map theta to theta");
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b = 0; b < G.order(); ++b)
      if (compose_mod(reduced[b], reduced[a], f) != reduced[G.mul(a, b)])
        bad("composition of " + std::to_string(a) + " and " + std::to_string(b) + " is not the group product");
}

bool conjugation_is_negation(const IntPoly& f) {
  // f(X) = m(-X^2); f(iY) = m(Y^2) must have deg f real roots.
  const auto& c = f.coefficients();
  std::vector<Integer> g(c.size(), Integer(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % 2 == 1 && c[i] != 0) return false;
    g[i] = (i % 4 == 2) ? Integer(-c[i]) : c[i];
  }
  IntPoly h(std::move(g));
  if (h.leading() < 0) h = -h;
  if (!is_squarefree(h)) return false;
  return count_real_roots(h) == static_cast<unsigned>(f.degree());
}

bool is_square_root_mod(const QPoly& w, const Integer& d, const IntPoly& f) {
  QPoly sq = mul_mod(w, w, f);
  return sq == reduce_mod(QPoly{Rational(d)}, f);
}

}  // namespace gkc
