#include "gkc/harness/scan.hpp"

#include <algorithm>
#include <fstream>
#include <thread>

#include "gkc/algebra/fp_poly.hpp"
#include "gkc/error.hpp"

namespace gkc {

namespace {

struct PrimeOutcome {
  bool split = false;
  std::vector<std::string> notes;
};

PrimeOutcome examine(const std::vector<NumberField>& fields, std::uint64_t p) {
  PrimeOutcome out;
  out.split = true;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    try {
      if (!splitting_type(fields[i], p).totally_split()) {
        out.split = false;
        return out;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsafePrime) throw;
      out.split = false;
      out.notes.push_back("p = " + std::to_string(p) + " skipped: field " + fields[i].defining_poly().to_vector_string() +
                          " is Dedekind-unsafe there");
    }
  }
  return out;
}

// Split iff f has deg f distinct roots mod p, when p does not divide disc f.
// Otherwise fall back to a fresh Dedekind computation.
bool reverify(const NumberField& F, std::uint64_t p) {
  if (reduce_mod(F.poly_disc(), p) != 0)
    return roots_mod_p(F.defining_poly(), p).size() == static_cast<std::size_t>(F.degree());
  return splitting_type(F, p).totally_split();
}

}  // namespace

ScanResult scan_split_primes(const std::vector<NumberField>& fields, std::uint64_t bound, unsigned threads) {
  if (bound < 3) fail(ErrorKind::InvalidArgument, "prime bound must be at least 3");
  const auto primes = primes_in_range(3, bound);
  std::vector<PrimeOutcome> outcomes(primes.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, primes.size())));

  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = id; i < primes.size(); i += threads) outcomes[i] = examine(fields, primes[i]);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  ScanResult res;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (auto& n : outcomes[i].notes) res.diagnostics.push_back(std::move(n));
    if (!outcomes[i].split) continue;
    for (const auto& F : fields)
      if (!reverify(F, primes[i]))
        fail(ErrorKind::Internal, "re-verification disagrees at p = " + std::to_string(primes[i]));
    res.primes.push_back(primes[i]);
  }
  return res;
}

NumberField field_from_spec(const std::string& spec) {
  auto number = [&](std::size_t from) {
    Integer v;
    if (from >= spec.size() || v.set_str(spec.substr(from), 10) != 0)
      fail(ErrorKind::SchemaViolation, "bad field spec '" + spec + "'");
    return v;
  };
  if (spec.rfind("quad:", 0) == 0) return quadratic_field(number(5));
  if (spec.rfind("cyc:", 0) == 0) {
    Integer m = number(4);
    if (m < 1 || !m.fits_ulong_p()) fail(ErrorKind::SchemaViolation, "bad conductor in '" + spec + "'");
    return cyclotomic_field(m.get_ui());
  }
  if (!spec.empty() && spec.front() == '[') return make_field(parse_monic_vector(spec));
  fail(ErrorKind::SchemaViolation, "field spec must be quad:d, cyc:m or [a0,...]: '" + spec + "'");
}

std::vector<IntPoly> read_polynomial_database(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open polynomial database " + path);
  std::vector<IntPoly> out;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_monic_vector(line));
    } catch (const Error& e) {
      fail(ErrorKind::SchemaViolation, path + ":" + std::to_string(n) + ": " + e.detail());
    }
  }
  return out;
}

}  // namespace gkc
