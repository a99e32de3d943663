#include "gkc/algebra/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gkc/error.hpp"

namespace gkc {

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::from_monic_tail(const std::vector<Integer>& tail) {
  std::vector<Integer> c(tail);
  c.emplace_back(1);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1, Integer(0));
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) fail(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

std::vector<Integer> IntPoly::monic_tail() const {
  if (!is_monic()) fail(ErrorKind::NotMonic, to_string());
  return {coeffs_.begin(), coeffs_.end() - 1};
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = ::gcd(g, c);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  return divexact(g);
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int IntPoly::sign_at(const Rational& x) const { return sgn(eval(x)); }

IntPoly IntPoly::shifted(const Integer& shift) const {
  // Horner in the ring Z[X]: ((a_n)(X + s) + a_{n-1})(X + s) + ...
  IntPoly lin({Integer(shift), Integer(1)});
  IntPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + IntPoly({*it});
  return acc;
}

IntPoly IntPoly::operator-() const {
  std::vector<Integer> c(coeffs_);
  for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(c));
}

IntPoly operator*(const Integer& k, const IntPoly& a) {
  std::vector<Integer> c(a.coeffs_);
  for (auto& x : c) x *= k;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::divexact(const Integer& c) const {
  if (c == 0) fail(ErrorKind::InvalidArgument, "division by zero");
  std::vector<Integer> out(coeffs_);
  for (auto& x : out) {
    if (mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()) == 0)
      fail(ErrorKind::Internal, "inexact coefficient division");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "X";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string IntPoly::to_vector_string() const {
  std::ostringstream os;
  os << "[";
  auto tail = monic_tail();
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (i) os << ",";
    os << tail[i].get_str();
  }
  os << "]";
  return os.str();
}

void pseudo_divide(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r) {
  if (b.is_zero()) fail(ErrorKind::ZeroPolynomial, "pseudo-division by zero");
  int db = b.degree();
  if (a.degree() < db) {
    q = IntPoly();
    r = a;
    return;
  }
  int delta = a.degree() - db;
  std::vector<Integer> rem(a.coefficients());
  std::vector<Integer> quo(static_cast<std::size_t>(delta) + 1, Integer(0));
  const Integer& lb = b.leading();
  const auto& bc = b.coefficients();
  for (int k = delta; k >= 0; --k) {
    Integer lead = rem[static_cast<std::size_t>(db + k)];
    for (auto& x : rem) x *= lb;
    for (auto& x : quo) x *= lb;
    quo[static_cast<std::size_t>(k)] += lead;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(j + k)] -= lead * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  q = IntPoly(std::move(quo));
  r = IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly q, r;
    pseudo_divide(x, y, q, r);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) fail(ErrorKind::ZeroPolynomial, "division by zero polynomial");
  if (a.is_zero()) return {};
  int db = b.degree();
  if (a.degree() < db) fail(ErrorKind::Internal, "inexact polynomial division");
  std::vector<Integer> rem(a.coefficients());
  std::vector<Integer> quo(static_cast<std::size_t>(a.degree() - db) + 1, Integer(0));
  const Integer& lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer& lead = rem[static_cast<std::size_t>(db + k)];
    if (mpz_divisible_p(lead.get_mpz_t(), lb.get_mpz_t()) == 0)
      fail(ErrorKind::Internal, "inexact polynomial division");
    Integer c;
    mpz_divexact(c.get_mpz_t(), lead.get_mpz_t(), lb.get_mpz_t());
    quo[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(j + k)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
  }
  for (const auto& x : rem)
    if (x != 0) fail(ErrorKind::Internal, "inexact polynomial division");
  return IntPoly(std::move(quo));
}

IntPoly parse_monic_vector(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    fail(ErrorKind::SchemaViolation, "polynomial vector must look like [a0,...,a_{n-1}]: " + text);
  std::string body = s.substr(1, s.size() - 2);
  std::vector<Integer> tail;
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      Integer v;
      if (item.empty() || v.set_str(item, 10) != 0)
        fail(ErrorKind::SchemaViolation, "bad coefficient '" + item + "' in " + text);
      tail.push_back(v);
    }
  }
  return IntPoly::from_monic_tail(tail);
}

}  // namespace gkc
