#include "gkc/harness/table.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "gkc/algebra/fp_poly.hpp"
#include "gkc/algebra/real_roots.hpp"
#include "gkc/error.hpp"
#include "gkc/fields/number_field.hpp"

namespace gkc {

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::uint64_t parse_u64(const std::string& s, const std::string& what, const std::string& where) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorKind::MalformedRow, where + what + " '" + s + "' is not a positive integer");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    fail(ErrorKind::MalformedRow, where + what + " '" + s + "' is out of range");
  }
}

}  // namespace

std::string TableRow::to_line() const {
  return std::to_string(prime) + "; " + poly.to_vector_string() + "; " + modulus + "; " + std::to_string(degree) + "; " +
         std::to_string(r_bound);
}

TableRow parse_table_row(const std::string& line, const std::string& source) {
  const std::string where = source.empty() ? "" : source + ": ";
  std::vector<std::string> cols;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ';')) cols.push_back(trim(item));
  if (cols.size() != 5) fail(ErrorKind::MalformedRow, where + "expected 5 ';'-separated columns, got " + std::to_string(cols.size()));
  TableRow row;
  row.source = source;
  row.prime = parse_u64(cols[0], "prime", where);
  if (!is_prime(row.prime)) fail(ErrorKind::MalformedRow, where + cols[0] + " is not prime");
  try {
    row.poly = parse_monic_vector(cols[1]);
  } catch (const Error& e) {
    fail(ErrorKind::MalformedRow, where + e.detail());
  }
  if (row.poly.degree() < 1) fail(ErrorKind::MalformedRow, where + "constant defining polynomial");
  row.modulus = cols[2];
  if (row.modulus.size() < 2 || row.modulus[0] != 'p')
    fail(ErrorKind::MalformedRow, where + "modulus must look like p<q>: '" + row.modulus + "'");
  row.modulus_prime = parse_u64(row.modulus.substr(1), "modulus prime", where);
  if (!is_prime(row.modulus_prime)) fail(ErrorKind::MalformedRow, where + row.modulus + " does not name a prime");
  row.degree = static_cast<unsigned>(parse_u64(cols[3], "degree", where));
  if (row.degree % 2 != 0)
    fail(ErrorKind::MalformedRow, where + "degree " + cols[3] + " is odd, a CM field has even degree");
  row.r_bound = static_cast<unsigned>(parse_u64(cols[4], "r bound", where));
  if (row.r_bound == 0) fail(ErrorKind::MalformedRow, where + "r bound must be positive");
  return row;
}

std::vector<TableRow> read_table(std::istream& in, const std::string& source) {
  std::vector<TableRow> rows;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    rows.push_back(parse_table_row(line, source + ":" + std::to_string(n)));
  }
  return rows;
}

std::vector<TableRow> read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open table " + path);
  return read_table(in, path);
}

std::string_view to_string(FactStatus s) {
  switch (s) {
    case FactStatus::Verified: return "Verified";
    case FactStatus::Unverifiable: return "Unverifiable";
    case FactStatus::Failed: return "Failed";
  }
  return "?";
}

bool RowVerdict::structural_ok() const {
  for (const auto& f : facts)
    if ((f.name == "monic irreducible" || f.name == "totally real" || f.name == "degree identity") &&
        f.status != FactStatus::Verified)
      return false;
  return true;
}

RowVerdict check_row(const TableRow& row) {
  RowVerdict v;
  v.row = row;
  const unsigned n = static_cast<unsigned>(row.poly.degree());
  std::optional<NumberField> R;
  try {
    R = make_field(row.poly);
    v.facts.push_back({"monic irreducible", FactStatus::Verified, R->irreducibility_reason()});
  } catch (const Error& e) {
    const bool undecided = e.kind() == ErrorKind::IrreducibilityUndecided;
    v.facts.push_back({"monic irreducible", undecided ? FactStatus::Unverifiable : FactStatus::Failed, e.what()});
  }

  const unsigned real = count_real_roots(row.poly);
  v.facts.push_back({"totally real", real == n ? FactStatus::Verified : FactStatus::Failed,
                     std::to_string(real) + " of " + std::to_string(n) + " roots real"});

  const unsigned lhs = 2 * row.r_bound * n;
  v.facts.push_back({"degree identity", lhs == row.degree ? FactStatus::Verified : FactStatus::Failed,
                     "2*" + std::to_string(row.r_bound) + "*" + std::to_string(n) + " = " + std::to_string(lhs) +
                         (lhs == row.degree ? " = " : " != ") + std::to_string(row.degree)});

  // A modulus prime of the smallest possible norm exists iff q has a degree-1 prime in R.
  const std::string q = std::to_string(row.modulus_prime);
  if (!R) {
    v.facts.push_back({"degree-1 prime above " + q, FactStatus::Unverifiable, "R is not a field"});
  } else {
    try {
      auto st = splitting_type(*R, row.modulus_prime);
      bool deg1 = false;
      for (auto [e, f] : st.entries) deg1 = deg1 || f == 1;
      v.facts.push_back({"degree-1 prime above " + q, deg1 ? FactStatus::Verified : FactStatus::Unverifiable,
                         q + " = " + st.to_string()});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsafePrime) throw;
      const bool root = !roots_mod_p(row.poly, row.modulus_prime).empty();
      v.facts.push_back({"degree-1 prime above " + q, FactStatus::Unverifiable,
                         std::string("Dedekind-unsafe at ") + q + (root ? ", root mod q exists" : ", no root mod q")});
    }
  }

  v.facts.push_back({"K = R(m_inf " + row.modulus + ") has degree " + std::to_string(row.degree), FactStatus::Unverifiable,
                     "ray class field data is not reconstructed"});
  v.facts.push_back({"r_{S,chi} >= " + std::to_string(row.r_bound) + " for K/R", FactStatus::Unverifiable,
                     "needs the splitting of p in the ray class field"});
  return v;
}

std::vector<RowVerdict> check_example_table(const std::vector<TableRow>& rows) {
  std::vector<RowVerdict> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(check_row(r));
  return out;
}

}  // namespace gkc
