#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkc/fields/number_field.hpp"

namespace gkc {

struct ScanResult {
  std::vector<std::uint64_t> primes;  // ascending
  std::vector<std::string> diagnostics;
};

/// Odd primes 3 <= p <= bound totally split (hence unramified) in every
/// field. A prime at which some field is Dedekind-unsafe is left out and
/// logged. Work is spread over `threads` workers (0 = hardware); the merge is
/// by prime, so the result does not depend on scheduling.
ScanResult scan_split_primes(const std::vector<NumberField>& fields, std::uint64_t bound, unsigned threads = 0);

/// Field from a short spec: "quad:d", "cyc:m", or a monic vector "[a0,...]".
NumberField field_from_spec(const std::string& spec);

/// One monic vector per line; blank lines and '#' comments are skipped.
std::vector<IntPoly> read_polynomial_database(const std::string& path);

}  // namespace gkc
