#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "gkc/algebra/int_poly.hpp"

namespace gkc {

/// "prime; [a0,...,a_{n-1}]; p<q>; [K:Q]; r bound", where the r bound is
/// [K+:R] and the modulus names a prime of R above q.
struct TableRow {
  std::uint64_t prime = 0;
  IntPoly poly;
  std::string modulus;
  std::uint64_t modulus_prime = 0;
  unsigned degree = 0;
  unsigned r_bound = 0;
  std::string source;  // "file:line" when read from a file

  std::string to_line() const;
};

/// Throws MalformedRow (with the source location) on any format error, a
/// composite prime or modulus, a zero bound, or an odd degree.
TableRow parse_table_row(const std::string& line, const std::string& source = "");
std::vector<TableRow> read_table(std::istream& in, const std::string& source);
std::vector<TableRow> read_table_file(const std::string& path);

enum class FactStatus { Verified, Unverifiable, Failed };
std::string_view to_string(FactStatus s);

struct Fact {
  std::string name;
  FactStatus status = FactStatus::Unverifiable;
  std::string detail;
};

struct RowVerdict {
  TableRow row;
  std::vector<Fact> facts;
  /// Irreducibility, total reality and the degree identity all Verified.
  bool structural_ok() const;
};

RowVerdict check_row(const TableRow& row);
std::vector<RowVerdict> check_example_table(const std::vector<TableRow>& rows);

}  // namespace gkc
