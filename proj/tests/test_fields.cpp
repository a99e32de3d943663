#include "doctest.h"

#include "gkc/algebra/integer.hpp"
#include "gkc/error.hpp"
#include "gkc/fields/number_field.hpp"

using namespace gkc;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

using Entries = std::vector<std::pair<unsigned, unsigned>>;

}  // namespace

TEST_CASE("make_field examples") {
  auto qi = make_field(IntPoly{1, 0, 1});
  CHECK(qi.degree() == 2);
  CHECK(qi.signature() == Signature{0, 1});
  CHECK(qi.poly_disc() == -4);
  CHECK(qi.totally_imaginary());

  auto r = make_field(parse_monic_vector("[-12,-26,0]"));
  CHECK(r.degree() == 3);
  CHECK(r.signature() == Signature{3, 0});
  CHECK(r.totally_real());

  CHECK(kind_of([] { make_field(IntPoly{-6, 5, 0, 1}); }) == ErrorKind::Reducible);
  CHECK(kind_of([] { make_field(IntPoly{1, 2}); }) == ErrorKind::NotMonic);
}

TEST_CASE("splitting_type examples") {
  auto qi = make_field(IntPoly{1, 0, 1});
  CHECK(splitting_type(qi, 5).entries == Entries{{1, 1}, {1, 1}});
  CHECK(is_totally_split(qi, 5));
  CHECK(splitting_type(qi, 3).entries == Entries{{1, 2}});
  CHECK(splitting_type(qi, 2).entries == Entries{{2, 1}});
  CHECK(is_totally_split(qi, 13));
  CHECK_FALSE(is_totally_split(qi, 7));

  auto z7 = cyclotomic_field(7);
  CHECK(splitting_type(z7, 2).entries == Entries{{1, 3}, {1, 3}});
  CHECK(is_totally_split(cyclotomic_field(5), 11));
  CHECK(kind_of([&] { splitting_type(qi, 4); }) == ErrorKind::NotPrime);
}

TEST_CASE("Dedekind criterion gate") {
  // 2 ramifies in Q(sqrt 3) and Z[sqrt 3] is maximal.
  CHECK(splitting_type(quadratic_field(3), 2).entries == Entries{{2, 1}});
  // Z[sqrt 5] has index 2 in the maximal order.
  CHECK(kind_of([] { splitting_type(quadratic_field(5), 2); }) == ErrorKind::UnsafePrime);
  // X^3 - 26X - 12 is X^3 mod 2 and fails Dedekind's test.
  auto r = make_field(parse_monic_vector("[-12,-26,0]"));
  CHECK(kind_of([&] { splitting_type(r, 2); }) == ErrorKind::UnsafePrime);
  // 7 divides disc once, so it is safe.
  CHECK(splitting_type(r, 7).field_degree() == 3);
}

TEST_CASE("quadratic splitting matches the Kronecker symbol") {
  auto primes = primes_in_range(3, 200);
  int checked = 0;
  for (long d = -50; d <= 50; ++d) {
    if (d == 0 || d == 1 || squarefree_part(Integer(d)) != d) continue;
    auto F = quadratic_field(d);
    Integer D = quadratic_field_discriminant(d);
    for (auto p : primes) {
      auto st = splitting_type(F, p);
      int k = kronecker(D, Integer(static_cast<unsigned long>(p)));
      if (k == 1) CHECK(st.entries == Entries{{1, 1}, {1, 1}});
      if (k == -1) CHECK(st.entries == Entries{{1, 2}});
      if (k == 0) CHECK(st.entries == Entries{{2, 1}});
      CHECK(st.field_degree() == 2);
      ++checked;
    }
  }
  CHECK(checked == 61 * 45);  // 61 squarefree d, 45 odd primes below 200
}

TEST_CASE("cyclotomic splitting matches the multiplicative order") {
  auto primes = primes_in_range(2, 200);
  for (std::uint64_t m = 3; m <= 40; ++m) {
    if (m % 4 == 2) continue;
    auto F = cyclotomic_field(m);
    for (auto p : primes) {
      if (m % p == 0) continue;
      auto st = splitting_type(F, p);
      unsigned f = static_cast<unsigned>(multiplicative_order(p, m));
      CHECK(st.entries == Entries(euler_phi(m) / f, {1, f}));
    }
  }
}
