#include "gkc/extension/compositum.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gkc/error.hpp"
#include "gkc/groups/character.hpp"

namespace gkc {

CompositumComponent CompositumComponent::quadratic(const Integer& d) {
  CompositumComponent c;
  c.kind = Kind::Quadratic;
  c.d = squarefree_part(d);
  if (c.d == 1) fail(ErrorKind::InvalidArgument, "Q(sqrt " + d.get_str() + ") is not quadratic");
  return c;
}

CompositumComponent CompositumComponent::cyclotomic(std::uint64_t m) {
  if (m < 3 || m % 4 == 2) fail(ErrorKind::InvalidArgument, "cyclotomic conductor must be >= 3 and not 2 mod 4");
  CompositumComponent c;
  c.kind = Kind::Cyclotomic;
  c.m = m;
  return c;
}

CompositumComponent CompositumComponent::supplied(std::shared_ptr<const SuppliedPiece> piece) {
  if (!piece || !piece->group) fail(ErrorKind::InvalidArgument, "empty supplied piece");
  CompositumComponent c;
  c.kind = Kind::Supplied;
  c.piece = std::move(piece);
  return c;
}

std::string CompositumComponent::label() const {
  switch (kind) {
    case Kind::Quadratic: return "Q(sqrt " + d.get_str() + ")";
    case Kind::Cyclotomic: return "Q(zeta_" + std::to_string(m) + ")";
    case Kind::Supplied: return piece->name;
  }
  return "?";
}

bool CompositumComponent::is_real() const { return kind == Kind::Quadratic && d > 0; }

std::shared_ptr<const SuppliedPiece> q8_piece() {
  static const std::shared_ptr<const SuppliedPiece> cached = [] {
    auto piece = std::make_shared<SuppliedPiece>();
    piece->name = "M_Q8";
    piece->field = make_field(IntPoly({144, 0, 288, 0, 144, 0, 24, 0, 1}));
    piece->group = quaternion_group();
    piece->tau = 1;
    piece->square_classes = std::vector<Integer>{2, 3};
    // Element order of quaternion_group: 1, -1, i, -i, j, -j, k, -k.
    const std::vector<std::vector<std::string>> maps = {
        {"0", "1"},
        {"0", "-1"},
        {"0", "-1", "0", "5/2", "0", "5/6", "0", "1/24"},
        {"0", "1", "0", "-5/2", "0", "-5/6", "0", "-1/24"},
        {"0", "3", "0", "3/2", "0", "1/12"},
        {"0", "-3", "0", "-3/2", "0", "-1/12"},
        {"0", "10", "0", "17/2", "0", "11/6", "0", "1/12"},
        {"0", "-10", "0", "-17/2", "0", "-11/6", "0", "-1/12"},
    };
    for (const auto& m : maps) piece->automorphisms.push_back(parse_qpoly(m));
    piece->square_roots = {{2, parse_qpoly({"0", "0", "5/2", "0", "5/6", "0", "1/24"})},
                           {3, parse_qpoly({"-6", "0", "-7", "0", "-7/4", "0", "-1/12"})}};
    return std::shared_ptr<const SuppliedPiece>(piece);
  }();
  return cached;
}

PieceCheck check_supplied_piece(const SuppliedPiece& piece) {
  PieceCheck out;
  if (piece.automorphisms.empty()) {
    out.evidence = "no automorphisms supplied";
    return out;
  }
  const IntPoly& f = piece.field.defining_poly();
  verify_galois_action(piece.field, *piece.group, piece.automorphisms);
  if (!conjugation_is_negation(f) || piece.automorphisms.at(piece.tau) != QPoly{Rational(0), Rational(-1)})
    fail(ErrorKind::InvariantViolation, piece.name + ": tau is not complex conjugation");
  out.galois = true;
  out.evidence = "automorphisms of " + piece.name + " checked exactly";
  if (!piece.square_classes) return out;
  // Quadratic subfields correspond to nontrivial homomorphisms G -> {+-1}.
  std::size_t quadratic_subfields = 0;
  for (const auto& chi : character_table(piece.group)) {
    if (chi.degree() != 1) continue;
    bool sign = true, trivial = true;
    for (Elem x = 0; x < piece.group->order(); ++x) {
      const auto v = chi.at(x);
      if (v == CycNumber::rational(-1)) trivial = false;
      else if (v != CycNumber::rational(1)) sign = false;
    }
    if (sign && !trivial) ++quadratic_subfields;
  }
  const auto& classes = *piece.square_classes;
  if (!square_classes_independent(classes) || quadratic_subfields + 1 != (std::size_t{1} << classes.size())) return out;
  for (const auto& d : classes) {
    bool witnessed = false;
    for (const auto& [e, w] : piece.square_roots)
      if (squarefree_part(e) == squarefree_part(d) && is_square_root_mod(w, e, f)) witnessed = true;
    if (!witnessed) return out;
  }
  out.square_classes = true;
  out.evidence += "; square roots of the listed classes checked";
  return out;
}

IntPoly multiquadratic_polynomial(const std::vector<Integer>& ds) {
  IntPoly f = IntPoly::x();
  for (const auto& d : ds) {
    // f(X - sqrt d) f(X + sqrt d) = E^2 - d O^2 with E, O collecting the even
    // and odd powers of sqrt d in the expansion of f(X - Y).
    const int n = f.degree();
    std::vector<IntPoly> Q(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
      std::vector<Integer> c(static_cast<std::size_t>(n - j) + 1, Integer(0));
      Integer binom = 1;  // C(k, j) as k runs from j
      for (int k = j; k <= n; ++k) {
        c[static_cast<std::size_t>(k - j)] = f.coeff(k) * binom;
        binom = binom * (k + 1) / (k + 1 - j);
      }
      IntPoly q(std::move(c));
      Q[static_cast<std::size_t>(j)] = (j % 2) ? -q : q;
    }
    IntPoly E, O;
    Integer dpow = 1;
    for (int j = 0; j <= n; ++j) {
      if (j % 2 == 0) {
        E = E + dpow * Q[static_cast<std::size_t>(j)];
      } else {
        O = O + dpow * Q[static_cast<std::size_t>(j)];
        dpow *= d;
      }
    }
    f = E * E - d * (O * O);
  }
  return f;
}

namespace {

// Square class as a sorted set of "prime factors", -1 included.
std::set<Integer> support(const Integer& d) {
  Integer s = squarefree_part(d);
  std::set<Integer> out;
  if (s < 0) {
    out.insert(-1);
    s = -s;
  }
  Integer q = 2;
  while (s > 1) {
    if (q * q > s) {
      out.insert(s);
      break;
    }
    if (s % q == 0) {
      out.insert(q);
      s /= q;
    } else {
      q += (q == 2) ? 1 : 2;
    }
  }
  return out;
}

std::vector<Integer> cyclotomic_square_classes(std::uint64_t m) {
  std::vector<Integer> out;
  for (auto [q, e] : factor_small(m)) {
    (void)e;
    if (q == 2) continue;
    out.push_back(q % 4 == 1 ? Integer(static_cast<unsigned long>(q)) : -Integer(static_cast<unsigned long>(q)));
  }
  if (m % 4 == 0) out.push_back(-1);
  if (m % 8 == 0) out.push_back(2);
  return out;
}

}  // namespace

bool square_classes_independent(const std::vector<Integer>& classes) {
  // Gaussian elimination over F_2 on exponent vectors indexed by support.
  std::map<Integer, std::size_t> column;
  std::vector<std::set<Integer>> rows;
  for (const auto& c : classes) rows.push_back(support(c));
  std::vector<std::vector<char>> mat;
  for (const auto& r : rows)
    for (const auto& q : r) column.emplace(q, column.size());
  for (const auto& r : rows) {
    std::vector<char> v(column.size(), 0);
    for (const auto& q : r) v[column.at(q)] = 1;
    mat.push_back(std::move(v));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < column.size() && rank < mat.size(); ++col) {
    std::size_t piv = rank;
    while (piv < mat.size() && !mat[piv][col]) ++piv;
    if (piv == mat.size()) continue;
    std::swap(mat[piv], mat[rank]);
    for (std::size_t i = 0; i < mat.size(); ++i)
      if (i != rank && mat[i][col])
        for (std::size_t j = 0; j < column.size(); ++j) mat[i][j] ^= mat[rank][j];
    ++rank;
  }
  return rank == classes.size();
}

ExtensionDescriptor build_compositum_over_Q(const std::vector<CompositumComponent>& components, std::uint64_t p,
                                            bool assume_disjoint) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p));
  const CompositumComponent* cm = nullptr;
  std::vector<Integer> reals;
  for (const auto& c : components) {
    if (c.is_real()) {
      reals.push_back(c.d);
      continue;
    }
    if (cm) fail(ErrorKind::InvalidArgument, "exactly one CM component is supported, got " + cm->label() + " and " + c.label());
    cm = &c;
  }
  if (!cm) fail(ErrorKind::InvalidArgument, "no CM component");

  // Ramification.
  for (const auto& d : reals)
    if (reduce_mod(quadratic_field_discriminant(d), p) == 0)
      fail(ErrorKind::RamifiedPrime, std::to_string(p) + " ramifies in Q(sqrt " + d.get_str() + ")");
  std::optional<SplittingType> cm_split;
  switch (cm->kind) {
    case CompositumComponent::Kind::Quadratic:
      if (reduce_mod(quadratic_field_discriminant(cm->d), p) == 0)
        fail(ErrorKind::RamifiedPrime, std::to_string(p) + " ramifies in " + cm->label());
      break;
    case CompositumComponent::Kind::Cyclotomic:
      if (cm->m % p == 0) fail(ErrorKind::RamifiedPrime, std::to_string(p) + " ramifies in " + cm->label());
      break;
    case CompositumComponent::Kind::Supplied:
      cm_split = splitting_type(cm->piece->field, p);
      if (!cm_split->unramified()) fail(ErrorKind::RamifiedPrime, std::to_string(p) + " ramifies in " + cm->label());
      break;
  }

  // Linear disjointness through quadratic subfields: M cap R is a subfield of
  // the multiquadratic R, so it is nontrivial iff it contains a quadratic
  // field, i.e. iff the square classes are dependent.
  const PieceCheck piece_check =
      cm->kind == CompositumComponent::Kind::Supplied ? check_supplied_piece(*cm->piece) : PieceCheck{};
  std::string disjointness = "verified";
  std::vector<Integer> classes(reals);
  switch (cm->kind) {
    case CompositumComponent::Kind::Quadratic: classes.push_back(cm->d); break;
    case CompositumComponent::Kind::Cyclotomic: {
      auto cc = cyclotomic_square_classes(cm->m);
      classes.insert(classes.end(), cc.begin(), cc.end());
      break;
    }
    case CompositumComponent::Kind::Supplied:
      if (cm->piece->square_classes) {
        classes.insert(classes.end(), cm->piece->square_classes->begin(), cm->piece->square_classes->end());
        if (!piece_check.square_classes) disjointness = "verified (supplied quadratic subfields)";
      } else if (!reals.empty()) {
        if (!assume_disjoint)
          fail(ErrorKind::NotLinearlyDisjoint, "quadratic subfields of " + cm->label() + " unknown; assert disjointness");
        disjointness = "asserted";
      }
      break;
  }
  if (!square_classes_independent(classes))
    fail(ErrorKind::NotLinearlyDisjoint, "dependent square classes among the components");

  ExtensionDescriptor ext;
  ext.p = p;
  ext.disjointness = disjointness;
  ext.real_square_classes = reals;
  {
    std::vector<std::string> names;
    for (const auto& c : components) names.push_back(c.label());
    ext.label = "";
    for (std::size_t i = 0; i < names.size(); ++i) ext.label += (i ? "*" : "") + names[i];
  }
  const IntPoly base_poly = multiquadratic_polynomial(reals);
  ext.base = make_field_known_irreducible(base_poly, reals.empty() ? "linear" : "multiquadratic, independent square classes",
                                          false);
  ext.base_degree = 1u << reals.size();

  // Gal(K/R) = Gal(M/Q) and a Frobenius sigma_M of p in M.
  Elem sigma = 0;
  bool undetermined = false;
  switch (cm->kind) {
    case CompositumComponent::Kind::Quadratic:
      ext.group = abelian_group({2});
      ext.tau = 1;
      sigma = kronecker(quadratic_field_discriminant(cm->d), Integer(static_cast<unsigned long>(p))) == 1 ? 0 : 1;
      break;
    case CompositumComponent::Kind::Cyclotomic: {
      ext.group = units_mod(cm->m);
      auto res = unit_residues(cm->m);
      auto find = [&](std::uint64_t r) {
        return static_cast<Elem>(std::lower_bound(res.begin(), res.end(), r) - res.begin());
      };
      ext.tau = find(cm->m - 1);
      sigma = find(p % cm->m);
      break;
    }
    case CompositumComponent::Kind::Supplied:
      ext.group = cm->piece->group;
      ext.tau = cm->piece->tau;
      break;
  }
  const FiniteGroup& G = *ext.group;

  unsigned f_base = 1;
  for (const auto& d : reals)
    if (kronecker(quadratic_field_discriminant(d), Integer(static_cast<unsigned long>(p))) != 1) f_base = 2;

  Subset decomposition;
  if (cm->kind == CompositumComponent::Kind::Supplied) {
    const auto& entries = cm_split->entries;
    const unsigned fM = entries.front().second;
    for (const auto& [e, f] : entries)
      if (f != fM) fail(ErrorKind::Internal, "splitting type of a Galois field must be uniform");
    std::vector<Subset> candidates;
    for (Elem x = 0; x < G.order(); ++x)
      if (G.element_order(x) == fM) candidates.push_back(G.generated({G.power(x, f_base)}));
    if (candidates.empty()) fail(ErrorKind::UndeterminedDecomposition, "no element of order " + std::to_string(fM));
    for (const auto& c : candidates)
      if (!G.conjugate_subgroups(c, candidates.front())) undetermined = true;
    if (undetermined)
      fail(ErrorKind::UndeterminedDecomposition,
           "Frobenius of " + std::to_string(p) + " in " + cm->label() + " is not determined by its order " + std::to_string(fM));
    decomposition = candidates.front();
  } else {
    decomposition = G.generated({G.power(sigma, f_base)});
  }

  const unsigned t = ext.base_degree / f_base;
  for (unsigned i = 0; i < t; ++i) {
    PrimeRecord v;
    v.label = "v" + std::to_string(i + 1);
    v.e_base = 1;
    v.f_base = f_base;
    v.decomposition = decomposition;
    v.provenance = Provenance::Computed;
    v.e = 1;
    v.f = static_cast<unsigned>(decomposition.size());
    v.g = static_cast<unsigned>(G.order() / decomposition.size());
    ext.primes.push_back(std::move(v));
  }

  AbsoluteGalois abs;
  abs.group = ext.group;
  abs.tau = ext.tau;
  abs.real_abelian_twist = !reals.empty();
  const bool supplied = cm->kind == CompositumComponent::Kind::Supplied;
  abs.verified = !supplied || piece_check.galois;
  abs.description = "Gal(" + cm->label() + "/Q)";
  abs.evidence = supplied ? piece_check.evidence : "built from abelian components";
  ext.absolute = abs;

  if (supplied && !piece_check.galois)
    ext.assertions.push_back(cm->label() + " is a field Galois over Q with group " + G.name());
  if (disjointness == "asserted") ext.assertions.push_back("components linearly disjoint");
  validate(ext);
  return ext;
}

}  // namespace gkc
