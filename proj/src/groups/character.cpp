#include "gkc/groups/character.hpp"

#include <algorithm>

#include "gkc/error.hpp"
#include "table_util.hpp"

namespace gkc {

namespace {

constexpr std::size_t kMaxTableOrder = 64;

CycNumber zeta_in(std::uint64_t n, std::int64_t k, std::uint64_t e) { return CycNumber::zeta(n, k).embed(e); }

std::vector<Character> abelian_table(const GroupPtr& G) {
  const auto& d = G->invariants();
  const std::uint64_t e = G->exponent();
  std::vector<Character> rows;
  const std::size_t n = G->order();
  for (Elem t = 0; t < n; ++t) {
    Character chi{G, {}};
    for (std::size_t c = 0; c < G->num_classes(); ++c) {
      Elem x = G->classes()[c][0], tt = t;
      std::uint64_t expo = 0;
      for (auto di : d) {
        expo += (e / di) * ((tt % di) * (x % di) % di);
        tt /= di;
        x /= di;
      }
      chi.values.push_back(CycNumber::zeta(e, static_cast<std::int64_t>(expo % e)));
    }
    rows.push_back(std::move(chi));
  }
  return rows;
}

std::vector<Character> dihedral_table(const GroupPtr& G) {
  const std::uint64_t n = G->dihedral_n(), e = G->exponent();
  std::vector<Character> rows;
  for (int alpha : {1, -1}) {
    if (alpha == -1 && n % 2 == 1) continue;
    for (int beta : {1, -1}) {
      Character chi{G, {}};
      for (const auto& cls : G->classes()) {
        Elem x = cls[0];
        std::uint64_t i = x % n, s = x / n;
        int v = ((alpha == -1 && i % 2 == 1) ? -1 : 1) * ((beta == -1 && s == 1) ? -1 : 1);
        chi.values.push_back(CycNumber::rational(v, e));
      }
      rows.push_back(std::move(chi));
    }
  }
  for (std::uint64_t h = 1; 2 * h < n; ++h) {
    Character chi{G, {}};
    for (const auto& cls : G->classes()) {
      Elem x = cls[0];
      std::uint64_t i = x % n, s = x / n;
      if (s == 1) {
        chi.values.push_back(CycNumber(e));
      } else {
        auto k = static_cast<std::int64_t>(h * i);
        chi.values.push_back(zeta_in(n, k, e) + zeta_in(n, -k, e));
      }
    }
    rows.push_back(std::move(chi));
  }
  return rows;
}

std::vector<Character> quaternion_table(const GroupPtr& G) {
  std::vector<Character> rows;
  for (int alpha : {1, -1})
    for (int beta : {1, -1}) {
      Character chi{G, {}};
      for (const auto& cls : G->classes()) {
        Elem unit = cls[0] / 2;  // 0:1 1:i 2:j 3:k
        int v = unit == 0 ? 1 : unit == 1 ? alpha : unit == 2 ? beta : alpha * beta;
        chi.values.push_back(CycNumber::rational(v, 4));
      }
      rows.push_back(std::move(chi));
    }
  Character psi{G, {}};
  for (const auto& cls : G->classes()) {
    Elem x = cls[0];
    psi.values.push_back(CycNumber::rational(x == 0 ? 2 : x == 1 ? -2 : 0, 4));
  }
  rows.push_back(std::move(psi));
  return rows;
}

}  // namespace

void sort_rows(std::vector<Character>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const Character& a, const Character& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t c = 0; c < a.values.size(); ++c) {
      int s = compare(a.values[c], b.values[c]);
      if (s != 0) return s > 0;
    }
    return false;
  });
}

void verify_table(const GroupPtr& G, const std::vector<Character>& rows) {
  if (rows.size() != G->num_classes()) fail(ErrorKind::Internal, "character table has the wrong number of rows");
  Integer total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    total += rows[i].degree() * rows[i].degree();
    for (std::size_t j = i; j < rows.size(); ++j)
      if (inner_product(rows[i], rows[j]) != (i == j ? 1 : 0))
        fail(ErrorKind::Internal, "character table fails orthogonality for " + G->name());
  }
  if (total != G->order()) fail(ErrorKind::Internal, "sum of squared degrees differs from |G|");
}

unsigned Character::degree() const {
  Integer d = values.at(0).to_integer();
  if (d <= 0 || !d.fits_uint_p()) fail(ErrorKind::InvalidArgument, "class function has no positive degree");
  return static_cast<unsigned>(d.get_ui());
}

bool Character::is_trivial() const {
  for (const auto& v : values)
    if (v != CycNumber::rational(1)) return false;
  return true;
}

Character Character::contragredient() const {
  Character out{group, {}};
  for (const auto& v : values) out.values.push_back(v.conj());
  return out;
}

Character Character::galois(std::uint64_t a) const {
  Character out{group, {}};
  for (const auto& v : values) out.values.push_back(v.galois(a));
  return out;
}

std::vector<Character> character_table(const GroupPtr& G) {
  if (G->order() > kMaxTableOrder)
    fail(ErrorKind::ScaleExceeded, "character tables are limited to |G| <= 64, got " + std::to_string(G->order()));
  std::vector<Character> rows;
  switch (G->kind()) {
    case GroupKind::Abelian:
      rows = abelian_table(G);
      break;
    case GroupKind::Dihedral:
      rows = dihedral_table(G);
      break;
    case GroupKind::Quaternion8:
      rows = quaternion_table(G);
      break;
    case GroupKind::Raw:
      return dixon_character_table(G);
  }
  sort_rows(rows);
  verify_table(G, rows);
  return rows;
}

Rational inner_product(const Character& a, const Character& b) {
  const auto& G = *a.group;
  CycNumber acc(G.exponent());
  for (std::size_t c = 0; c < G.num_classes(); ++c)
    acc += a.values[c] * b.values[c].conj() * Rational(static_cast<long>(G.classes()[c].size()));
  return acc.to_rational() / Rational(static_cast<long>(G.order()));
}

Parity parity(const Character& chi, Elem tau) {
  if (!chi.group->is_central_involution(tau))
    fail(ErrorKind::TauNotCentralInvolution, "element " + chi.group->element_label(tau));
  CycNumber v = chi.at(tau);
  CycNumber d = CycNumber::rational(chi.degree());
  if (v == d) return Parity::Even;
  if (v == -d) return Parity::Odd;
  fail(ErrorKind::Internal, "central involution acts non-scalarly; character not irreducible");
}

std::vector<Character> odd_characters(const std::vector<Character>& table, Elem tau) {
  std::vector<Character> out;
  for (const auto& chi : table)
    if (parity(chi, tau) == Parity::Odd) out.push_back(chi);
  return out;
}

unsigned fixed_dim(const Character& chi, const Subset& H) {
  if (!chi.group->is_subgroup(H)) fail(ErrorKind::NotASubgroup, "fixed_dim");
  CycNumber acc(chi.group->exponent());
  for (Elem h : H) acc += chi.at(h);
  if (!acc.is_rational()) fail(ErrorKind::NonIntegralDimension, "irrational average " + acc.to_string());
  Rational q = acc.to_rational() / Rational(static_cast<long>(H.size()));
  if (q.get_den() != 1 || q < 0) fail(ErrorKind::NonIntegralDimension, q.get_str());
  return static_cast<unsigned>(q.get_num().get_ui());
}

std::vector<CycNumber> restrict_to(const Character& chi, const Subset& H) {
  std::vector<CycNumber> out;
  for (Elem h : H) out.push_back(chi.at(h));
  return out;
}

Character induced_character(const GroupPtr& G, const Subset& H, const std::vector<CycNumber>& vals) {
  if (!G->is_subgroup(H)) fail(ErrorKind::NotASubgroup, "induced_character");
  if (vals.size() != H.size()) fail(ErrorKind::InvalidArgument, "values must be parallel to H");
  std::vector<long> pos(G->order(), -1);
  for (std::size_t i = 0; i < H.size(); ++i) pos[H[i]] = static_cast<long>(i);
  Character out{G, {}};
  for (const auto& cls : G->classes()) {
    CycNumber acc(G->exponent());
    for (Elem x = 0; x < G->order(); ++x) {
      long k = pos[G->conj(G->inv(x), cls[0])];
      if (k >= 0) acc += vals[static_cast<std::size_t>(k)];
    }
    out.values.push_back(acc * Rational(1, static_cast<long>(H.size())));
  }
  return out;
}

Character induced_trivial(const GroupPtr& G, const Subset& H) {
  return induced_character(G, H, std::vector<CycNumber>(H.size(), CycNumber::rational(1)));
}

Idempotent idempotent(const Character& chi) {
  const auto& G = *chi.group;
  Idempotent e{chi.group, {}};
  Rational scale(static_cast<long>(chi.degree()), static_cast<long>(G.order()));
  for (Elem s = 0; s < G.order(); ++s) e.coeffs.push_back(chi.at(G.inv(s)) * scale);
  return e;
}

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  const auto& G = *a.group;
  GroupAlgebraElement out{a.group, std::vector<CycNumber>(G.order(), CycNumber(G.exponent()))};
  for (Elem g = 0; g < G.order(); ++g) {
    if (a.coeffs[g].is_zero()) continue;
    for (Elem h = 0; h < G.order(); ++h)
      if (!b.coeffs[h].is_zero()) out.coeffs[G.mul(g, h)] += a.coeffs[g] * b.coeffs[h];
  }
  return out;
}

bool is_zero(const GroupAlgebraElement& a) {
  for (const auto& c : a.coeffs)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace gkc
