#include "gkc/groups/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gkc/algebra/integer.hpp"
#include "gkc/error.hpp"

namespace gkc {

class GroupBuilder {
 public:
  static std::shared_ptr<FiniteGroup> make(std::size_t n, std::vector<Elem> mul, GroupKind kind, std::string name) {
    auto G = std::make_shared<FiniteGroup>();
    G->n_ = n;
    G->mul_ = std::move(mul);
    G->kind_ = kind;
    G->name_ = std::move(name);
    return G;
  }
  static void set_labels(FiniteGroup& G, std::vector<std::string> labels) { G.labels_ = std::move(labels); }
  static void set_invariants(FiniteGroup& G, std::vector<std::uint64_t> inv) { G.invariants_ = std::move(inv); }
  static void set_dihedral(FiniteGroup& G, std::uint64_t n) { G.dn_ = n; }
  static void finalize(FiniteGroup& G) { G.finalize(); }
};

void FiniteGroup::finalize() {
  if (n_ == 0) fail(ErrorKind::InvalidTable, "empty group");
  if (mul_.size() != n_ * n_) fail(ErrorKind::InvalidTable, "table is not square");
  for (auto x : mul_)
    if (x >= n_) fail(ErrorKind::InvalidTable, "table entry out of range");
  // Identity.
  bool found = false;
  for (Elem e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      e_ = e;
      found = true;
    }
  }
  if (!found) fail(ErrorKind::InvalidTable, "no identity element");
  // Inverses.
  inv_.assign(n_, n_);
  for (Elem x = 0; x < n_; ++x) {
    for (Elem y = 0; y < n_; ++y)
      if (mul(x, y) == e_ && mul(y, x) == e_) {
        inv_[x] = y;
        break;
      }
    if (inv_[x] == n_) fail(ErrorKind::InvalidTable, "element " + std::to_string(x) + " has no inverse");
  }
  // Latin square rows follow from inverses; associativity checked in full.
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) {
      Elem ab = mul(a, b);
      for (Elem c = 0; c < n_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          fail(ErrorKind::InvalidTable, "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                                            "," + std::to_string(c) + ")");
    }
  // Element orders and exponent.
  elem_order_.assign(n_, 0);
  exponent_ = 1;
  for (Elem x = 0; x < n_; ++x) {
    std::uint64_t k = 1;
    Elem y = x;
    while (y != e_) {
      y = mul(y, x);
      ++k;
    }
    elem_order_[x] = k;
    exponent_ = std::lcm(exponent_, k);
  }
  // Conjugacy classes: identity class first, then by smallest member.
  class_of_.assign(n_, n_);
  classes_.clear();
  std::vector<Elem> seeds{e_};
  for (Elem x = 0; x < n_; ++x)
    if (x != e_) seeds.push_back(x);
  for (Elem x : seeds) {
    if (class_of_[x] != n_) continue;
    std::set<Elem> orbit;
    for (Elem g = 0; g < n_; ++g) orbit.insert(conj(g, x));
    for (Elem y : orbit) class_of_[y] = classes_.size();
    classes_.emplace_back(orbit.begin(), orbit.end());
  }
  inv_class_.resize(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) inv_class_[c] = class_of_[inv_[classes_[c][0]]];
  if (labels_.size() != n_) {
    labels_.clear();
    for (Elem x = 0; x < n_; ++x) labels_.push_back("g" + std::to_string(x));
  }
}

Elem FiniteGroup::power(Elem a, long k) const {
  if (k < 0) return power(inv(a), -k);
  Elem r = e_;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_central(Elem x) const {
  for (Elem g = 0; g < n_; ++g)
    if (mul(g, x) != mul(x, g)) return false;
  return true;
}

bool FiniteGroup::is_central_involution(Elem x) const { return x < n_ && elem_order_[x] == 2 && is_central(x); }

Subset FiniteGroup::center() const {
  Subset z;
  for (Elem x = 0; x < n_; ++x)
    if (is_central(x)) z.push_back(x);
  return z;
}

std::vector<Elem> FiniteGroup::central_involutions() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < n_; ++x)
    if (is_central_involution(x)) out.push_back(x);
  return out;
}

bool FiniteGroup::is_subgroup(const Subset& H) const {
  if (H.empty()) return false;
  std::vector<bool> in(n_, false);
  for (Elem h : H) {
    if (h >= n_) return false;
    in[h] = true;
  }
  if (!in[e_]) return false;
  for (Elem a : H)
    for (Elem b : H)
      if (!in[mul(a, b)]) return false;
  return true;
}

Subset FiniteGroup::generated(const std::vector<Elem>& gens) const {
  std::vector<bool> in(n_, false);
  std::vector<Elem> frontier{e_};
  in[e_] = true;
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem g : gens) {
        Elem y = mul(x, g);
        if (!in[y]) {
          in[y] = true;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  Subset out;
  for (Elem x = 0; x < n_; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

Subset FiniteGroup::conjugate(const Subset& H, Elem g) const {
  Subset out;
  for (Elem h : H) out.push_back(conj(g, h));
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::conjugate_subgroups(const Subset& A, const Subset& B) const {
  if (A.size() != B.size()) return false;
  Subset b(B);
  std::sort(b.begin(), b.end());
  for (Elem g = 0; g < n_; ++g)
    if (conjugate(A, g) == b) return true;
  return false;
}

bool FiniteGroup::is_normal(const Subset& N) const {
  Subset n(N);
  std::sort(n.begin(), n.end());
  for (Elem g = 0; g < n_; ++g)
    if (conjugate(n, g) != n) return false;
  return true;
}

bool FiniteGroup::quotient_is_abelian(const Subset& N) const {
  std::vector<bool> in(n_, false);
  for (Elem x : N) in[x] = true;
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (!in[mul(mul(a, b), inv(mul(b, a)))]) return false;
  return true;
}

std::string FiniteGroup::element_label(Elem x) const { return x < labels_.size() ? labels_[x] : "?"; }

GroupPtr abelian_group(const std::vector<std::uint64_t>& invariants) {
  std::vector<std::uint64_t> d;
  for (auto x : invariants) {
    if (x == 0) fail(ErrorKind::InvalidTable, "abelian invariant 0");
    if (x > 1) d.push_back(x);
  }
  std::size_t n = 1;
  for (auto x : d) n *= x;
  if (n > 4096) fail(ErrorKind::ScaleExceeded, "abelian group order " + std::to_string(n));
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem x = a, y = b, r = 0, stride = 1;
      for (auto di : d) {
        r += ((x % di + y % di) % di) * stride;
        x /= di;
        y /= di;
        stride *= di;
      }
      mul[a * n + b] = r;
    }
    std::string s = "(";
    Elem x = a;
    for (std::size_t i = 0; i < d.size(); ++i) {
      s += (i ? "," : "") + std::to_string(x % d[i]);
      x /= d[i];
    }
    labels[a] = s + ")";
  }
  std::string name = "C";
  for (std::size_t i = 0; i < d.size(); ++i) name += (i ? "xC" : "") + std::to_string(d[i]);
  if (d.empty()) name = "C1";
  auto G = GroupBuilder::make(n, std::move(mul), GroupKind::Abelian, name);
  GroupBuilder::set_invariants(*G, d);
  GroupBuilder::set_labels(*G, std::move(labels));
  GroupBuilder::finalize(*G);
  return G;
}

GroupPtr dihedral_group(std::uint64_t n) {
  if (n < 2) fail(ErrorKind::InvalidTable, "dihedral parameter must be at least 2");
  const std::size_t N = 2 * n;
  std::vector<Elem> mul(N * N);
  std::vector<std::string> labels(N);
  // (a^i b^s)(a^j b^t) = a^(i + (-1)^s j) b^(s+t)
  for (Elem x = 0; x < N; ++x) {
    std::uint64_t i = x % n, s = x / n;
    labels[x] = (i == 0 && s == 0) ? "1" : (i ? "a^" + std::to_string(i) : "") + (s ? "b" : "");
    for (Elem y = 0; y < N; ++y) {
      std::uint64_t j = y % n, t = y / n;
      std::uint64_t k = s ? (i + n - j) % n : (i + j) % n;
      mul[x * N + y] = ((s + t) % 2) * n + k;
    }
  }
  auto G = GroupBuilder::make(N, std::move(mul), GroupKind::Dihedral, "D" + std::to_string(n));
  GroupBuilder::set_dihedral(*G, n);
  GroupBuilder::set_labels(*G, std::move(labels));
  GroupBuilder::finalize(*G);
  return G;
}

GroupPtr quaternion_group() {
  // unit index u in {1,i,j,k} = {0,1,2,3}; element = 2u + (negative ? 1 : 0)
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<Elem> mul(64);
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      int ux = static_cast<int>(x / 2), uy = static_cast<int>(y / 2);
      int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * unit_sign[ux][uy];
      mul[x * 8 + y] = static_cast<Elem>(2 * unit_mul[ux][uy] + (sign < 0 ? 1 : 0));
    }
  auto G = GroupBuilder::make(8, std::move(mul), GroupKind::Quaternion8, "Q8");
  GroupBuilder::set_labels(*G, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
  GroupBuilder::finalize(*G);
  return G;
}

GroupPtr table_group(const std::vector<std::vector<Elem>>& table, std::string name) {
  const std::size_t n = table.size();
  std::vector<Elem> mul;
  mul.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) fail(ErrorKind::InvalidTable, "table is not square");
    mul.insert(mul.end(), row.begin(), row.end());
  }
  auto G = GroupBuilder::make(n, std::move(mul), GroupKind::Raw, std::move(name));
  GroupBuilder::finalize(*G);
  return G;
}

GroupPtr build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::Abelian:
      return abelian_group(spec.invariants);
    case GroupKind::Dihedral:
      return dihedral_group(spec.n);
    case GroupKind::Quaternion8:
      return quaternion_group();
    case GroupKind::Raw:
      return table_group(spec.table);
  }
  fail(ErrorKind::InvalidTable, "unknown group kind");
}

GroupPtr direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  const std::size_t a = G.order(), b = H.order(), n = a * b;
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) {
    labels[x] = "(" + G.element_label(x / b) + "," + H.element_label(x % b) + ")";
    for (Elem y = 0; y < n; ++y) mul[x * n + y] = G.mul(x / b, y / b) * b + H.mul(x % b, y % b);
  }
  auto P = GroupBuilder::make(n, std::move(mul), GroupKind::Raw, G.name() + "x" + H.name());
  GroupBuilder::set_labels(*P, std::move(labels));
  GroupBuilder::finalize(*P);
  return P;
}

GroupPtr permutation_group(const std::vector<std::vector<int>>& generators, std::string name) {
  if (generators.empty()) fail(ErrorKind::InvalidTable, "no generators");
  const std::size_t k = generators[0].size();
  std::vector<int> id(k);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [&](const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> r(k);
    for (std::size_t x = 0; x < k; ++x) r[x] = s[static_cast<std::size_t>(t[x])];
    return r;
  };
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        if (g.size() != k) fail(ErrorKind::InvalidTable, "generators of different degree");
        auto y = compose(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    if (seen.size() > 4096) fail(ErrorKind::ScaleExceeded, "permutation group too large");
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> elems(seen.begin(), seen.end());
  std::map<std::vector<int>, Elem> index;
  for (Elem i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  const std::size_t n = elems.size();
  std::vector<Elem> mul(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) mul[a * n + b] = index.at(compose(elems[a], elems[b]));
  auto G = GroupBuilder::make(n, std::move(mul), GroupKind::Raw, std::move(name));
  GroupBuilder::finalize(*G);
  return G;
}

std::vector<std::uint64_t> unit_residues(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 1; a <= std::max<std::uint64_t>(m, 1); ++a)
    if (gcd_u64(a % m, m) == 1) out.push_back(a % m == 0 ? 0 : a);
  if (m == 1) out = {0};
  return out;
}

GroupPtr units_mod(std::uint64_t m) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "units modulo 0");
  auto res = unit_residues(m);
  std::map<std::uint64_t, Elem> index;
  for (Elem i = 0; i < res.size(); ++i) index[res[i]] = i;
  const std::size_t n = res.size();
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels;
  for (Elem a = 0; a < n; ++a) {
    labels.push_back(std::to_string(res[a]));
    for (Elem b = 0; b < n; ++b) mul[a * n + b] = index.at(m == 1 ? 0 : res[a] * res[b] % m);
  }
  auto G = GroupBuilder::make(n, std::move(mul), GroupKind::Raw, "(Z/" + std::to_string(m) + ")^x");
  GroupBuilder::set_labels(*G, std::move(labels));
  GroupBuilder::finalize(*G);
  return G;
}

}  // namespace gkc
