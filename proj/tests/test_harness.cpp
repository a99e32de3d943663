#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gkc/error.hpp"
#include "gkc/extension/ingest.hpp"
#include "gkc/harness/run.hpp"
#include "gkc/harness/scan.hpp"
#include "gkc/harness/store.hpp"
#include "gkc/harness/table.hpp"

using namespace gkc;
namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

std::string error_text(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("gkc-harness-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const fs::path kExamples = fs::path(GKC_SOURCE_DIR) / "docs" / "examples";

const char* kRows[] = {
    "2; [-12,-26,0]; p79; 18; 3",  "5; [-13,-20,-1]; p11; 30; 5", "11; [87,-39,-1]; p61; 60; 10",
    "7; [7,5,-6,-2]; p37; 16; 2", "23; [4,8,-9,-2]; p31; 24; 3",
};

}  // namespace

TEST_CASE("scan_split_primes examples") {
  CHECK(scan_split_primes({quadratic_field(-1), quadratic_field(5)}, 50).primes == std::vector<std::uint64_t>{29, 41});
  CHECK(scan_split_primes({cyclotomic_field(5)}, 50).primes == std::vector<std::uint64_t>{11, 31, 41});
  CHECK(scan_split_primes({quadratic_field(-1)}, 3).primes.empty());
  CHECK(scan_split_primes({}, 10).primes == std::vector<std::uint64_t>{3, 5, 7});
  CHECK(kind_of([] { scan_split_primes({quadratic_field(-1)}, 2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("scan agrees with the Kronecker symbol and is schedule independent") {
  for (long d : {-3L, -7L, 2L, 13L, -15L, 21L}) {
    auto serial = scan_split_primes({quadratic_field(d)}, 600, 1);
    auto parallel = scan_split_primes({quadratic_field(d)}, 600, 4);
    CHECK(serial.primes == parallel.primes);
    std::vector<std::uint64_t> expected;
    const Integer D = quadratic_field_discriminant(d);
    for (auto p : primes_in_range(3, 600))
      if (kronecker(D, Integer(p)) == 1) expected.push_back(p);
    CHECK(serial.primes == expected);
  }
}

TEST_CASE("scan logs Dedekind-unsafe primes instead of reporting them") {
  // Z[sqrt 45] has index 3 in the maximal order of Q(sqrt 5).
  auto F = make_field(IntPoly({-45, 0, 1}));
  auto res = scan_split_primes({F}, 50);
  CHECK(res.primes == std::vector<std::uint64_t>{11, 19, 29, 31, 41});
  REQUIRE(res.diagnostics.size() == 1);
  CHECK(res.diagnostics[0].find("p = 3") != std::string::npos);
}

TEST_CASE("field specs and polynomial databases") {
  CHECK(field_from_spec("quad:-1").defining_poly() == IntPoly({1, 0, 1}));
  CHECK(field_from_spec("cyc:5").degree() == 4);
  CHECK(field_from_spec("[-2,0]").defining_poly() == IntPoly({-2, 0, 1}));
  CHECK(kind_of([] { field_from_spec("cube:2"); }) == ErrorKind::SchemaViolation);
  CHECK(kind_of([] { field_from_spec("quad:x"); }) == ErrorKind::SchemaViolation);
  auto db = read_polynomial_database((kExamples / "fields.txt").string());
  CHECK(db.size() == 2);
  auto dir = scratch("db");
  std::ofstream(dir / "bad.txt") << "[1,0]\n# fine\n[1,x]\n";
  CHECK(error_text([&] { read_polynomial_database((dir / "bad.txt").string()); }).find("bad.txt:3") != std::string::npos);
}

TEST_CASE("search_theoremB examples") {
  SearchConfig cfg;
  cfg.target_r = 2;
  cfg.pool = {5, 13, 17};
  cfg.prime_bound = 10000;
  cfg.max_examples = 4;
  auto res = search_theoremB(cfg);
  REQUIRE(!res.hits.empty());
  for (std::size_t i = 0; i < res.hits.size(); ++i) {
    const auto& h = res.hits[i];
    CHECK(h.r_S >= 4);
    CHECK(h.r_S == 2 * static_cast<long long>(h.ext.primes.size()));
    CHECK(h.chain == std::vector<std::string>{"klingen-criterion", "klingen-real-abelian-compositum",
                                              "leopoldt-totally-split", "gkc-gvc-equivalence"});
    if (i > 0) CHECK(std::tie(res.hits[i - 1].p, res.hits[i - 1].discriminants) < std::tie(h.p, h.discriminants));
  }

  SearchConfig trivial;
  trivial.target_r = 1;
  trivial.pool = {1};
  trivial.prime_bound = 2000;
  trivial.max_examples = 2;
  auto t = search_theoremB(trivial);
  REQUIRE(!t.hits.empty());
  for (const auto& h : t.hits) {
    CHECK(h.discriminants.empty());
    CHECK(h.ext.primes.size() == 1);
    CHECK(h.r_S == 2);
  }

  SearchConfig empty;
  CHECK(kind_of([&] { search_theoremB(empty); }) == ErrorKind::PoolExhausted);
  SearchConfig small = cfg;
  small.target_r = 16;  // needs four independent fields, the pool has three
  CHECK(kind_of([&] { search_theoremB(small); }) == ErrorKind::PoolExhausted);
  SearchConfig short_bound = cfg;
  short_bound.prime_bound = 40;  // 47 is the first prime split in the Q8 field
  CHECK(kind_of([&] { search_theoremB(short_bound); }) == ErrorKind::PoolExhausted);
  SearchConfig meets = cfg;
  meets.pool = {6, 5};  // Q(sqrt 6) lies in the Q8 field
  meets.target_r = 2;
  auto m = search_theoremB(meets);
  CHECK(!m.diagnostics.empty());
  for (const auto& h : m.hits) CHECK(h.discriminants == std::vector<Integer>{5});
}

TEST_CASE("search results do not depend on the thread count") {
  SearchConfig cfg;
  cfg.pool = {5, 13, 17, 21, 29};
  cfg.prime_bound = 3000;
  cfg.max_examples = 0;
  cfg.threads = 1;
  auto a = search_theoremB(cfg);
  cfg.threads = 3;
  auto b = search_theoremB(cfg);
  REQUIRE(a.hits.size() == b.hits.size());
  for (std::size_t i = 0; i < a.hits.size(); ++i) {
    CHECK(a.hits[i].p == b.hits[i].p);
    CHECK(a.hits[i].discriminants == b.hits[i].discriminants);
    CHECK(a.hits[i].result.certificates == b.hits[i].result.certificates);
  }
}

TEST_CASE("check_example_table on the published rows") {
  std::vector<TableRow> rows;
  for (const char* r : kRows) rows.push_back(parse_table_row(r));
  auto verdicts = check_example_table(rows);
  REQUIRE(verdicts.size() == 5);
  const unsigned products[][3] = {{3, 3, 18}, {5, 3, 30}, {10, 3, 60}, {2, 4, 16}, {3, 4, 24}};
  for (std::size_t i = 0; i < 5; ++i) {
    CAPTURE(kRows[i]);
    CHECK(verdicts[i].structural_ok());
    CHECK(2 * products[i][0] * products[i][1] == products[i][2]);
    CHECK(static_cast<unsigned>(rows[i].poly.degree()) == products[i][1]);
    for (const auto& f : verdicts[i].facts) {
      CHECK(f.status != FactStatus::Failed);
      if (f.name.rfind("K = R(", 0) == 0) CHECK(f.status == FactStatus::Unverifiable);
    }
  }
  auto from_file = read_table_file((kExamples / "example_table.txt").string());
  REQUIRE(from_file.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(from_file[i].to_line() == kRows[i]);
}

TEST_CASE("check_example_table failures and malformed rows") {
  CHECK(kind_of([] { parse_table_row("2; [-12,-26,0]; p79; 19; 3"); }) == ErrorKind::MalformedRow);
  CHECK(kind_of([] { parse_table_row("2; [-12,-26,0]; p79; 18"); }) == ErrorKind::MalformedRow);
  CHECK(kind_of([] { parse_table_row("4; [-12,-26,0]; p79; 18; 3"); }) == ErrorKind::MalformedRow);
  CHECK(kind_of([] { parse_table_row("2; [-12,-26,0]; p77; 18; 3"); }) == ErrorKind::MalformedRow);
  CHECK(kind_of([] { parse_table_row("2; [-12,x,0]; p79; 18; 3"); }) == ErrorKind::MalformedRow);
  CHECK(kind_of([] { parse_table_row("2; [-12,-26,0]; q79; 18; 3"); }) == ErrorKind::MalformedRow);
  CHECK(kind_of([] { parse_table_row("2; [-12,-26,0]; p79; 18; 0"); }) == ErrorKind::MalformedRow);
  std::istringstream in("# header\n2; [-12,-26,0]; p79; 18; 3\n\n2; [1]; p79; 18\n");
  CHECK(error_text([&] { read_table(in, "t.txt"); }).find("t.txt:4") != std::string::npos);

  auto reducible = check_row(parse_table_row("3; [-1,0]; p5; 4; 1"));  // X^2 - 1
  CHECK(!reducible.structural_ok());
  CHECK(reducible.facts[0].status == FactStatus::Failed);
  auto imaginary = check_row(parse_table_row("3; [1,0]; p5; 4; 1"));  // X^2 + 1
  CHECK(imaginary.facts[1].status == FactStatus::Failed);
  auto wrong_degree = check_row(parse_table_row("3; [-2,0]; p7; 6; 1"));
  CHECK(wrong_degree.facts[2].status == FactStatus::Failed);
  CHECK(wrong_degree.facts[3].status == FactStatus::Verified);  // 7 splits in Q(sqrt 2)
  auto inert = check_row(parse_table_row("3; [-2,0]; p5; 4; 1"));
  CHECK(inert.structural_ok());
  CHECK(inert.facts[3].status == FactStatus::Unverifiable);
}

TEST_CASE("certificate store") {
  auto dir = scratch("store");
  auto ext = build_compositum_over_Q({CompositumComponent::cyclotomic(5), CompositumComponent::quadratic(13)}, 1301);
  auto res = certify(ext);
  REQUIRE(res.certificates.size() > 2);
  {
    CertificateStore s(dir / "c.jsonl");
    CHECK(s.append(res.certificates) == res.certificates.size());
    CHECK(s.append(res.certificates) == 0);
  }
  const std::string bytes = slurp(dir / "c.jsonl");
  CertificateStore reloaded(dir / "c.jsonl");
  CHECK(reloaded.certificates() == res.certificates);
  CHECK(reloaded.append(res.certificates) == 0);
  CHECK(slurp(dir / "c.jsonl") == bytes);
  // serialize, parse, serialize
  std::string again;
  for (const auto& c : reloaded.certificates()) again += to_json(c).dump() + "\n";
  CHECK(again == bytes);
  CHECK(reloaded.contains(res.certificates.front().digest()));
  CHECK(reloaded.unconditional_gkc_minus(ext.label).has_value());
  CHECK(!reloaded.unconditional_gkc_minus("other").has_value());

  std::ofstream(dir / "bad.jsonl") << bytes << "{not json\n";
  CHECK(error_text([&] { CertificateStore bad(dir / "bad.jsonl"); }).find("bad.jsonl:" + std::to_string(res.certificates.size() + 1)) !=
        std::string::npos);
  auto tampered = bytes;
  tampered.replace(tampered.find("\"Verified\""), 10, "\"Asserted\"");
  std::ofstream(dir / "tampered.jsonl") << tampered;
  CHECK(kind_of([&] { CertificateStore bad(dir / "tampered.jsonl"); }) == ErrorKind::InvariantViolation);
}

TEST_CASE("run config parsing") {
  nlohmann::json j = {{"schema", "gkc-run/1"}, {"prime_bound", 100}, {"pipelines", {"check-table"}},
                      {"check_table", {{"table", "t.txt"}}}};
  auto c = run_config_from_json(j, "/base");
  CHECK(c.prime_bound == 100);
  CHECK(c.table == fs::path("/base/t.txt"));
  auto bad = j;
  bad["prime_bound"] = 2;
  CHECK(kind_of([&] { run_config_from_json(bad); }) == ErrorKind::SchemaViolation);
  bad = j;
  bad["pipelines"] = {"everything"};
  CHECK(kind_of([&] { run_config_from_json(bad); }) == ErrorKind::SchemaViolation);
  bad = j;
  bad["prime_bonud"] = 7;
  CHECK(kind_of([&] { run_config_from_json(bad); }) == ErrorKind::SchemaViolation);
  bad = j;
  bad["output"] = {{"format", "xml"}};
  CHECK(kind_of([&] { run_config_from_json(bad); }) == ErrorKind::SchemaViolation);
  CHECK(kind_of([] { read_run_config("/nonexistent/run.json"); }) == ErrorKind::Io);
}

TEST_CASE("run: published table only") {
  auto dir = scratch("table-run");
  nlohmann::json j = {{"pipelines", {"check-table"}},
                      {"check_table", {{"table", (kExamples / "example_table.txt").string()}}},
                      {"output", {{"dir", dir.string()}, {"format", "both"}}}};
  auto cfg = run_config_from_json(j);
  auto rep = run(cfg);
  REQUIRE(rep.rows.size() == 5);
  for (const auto& r : rep.rows) CHECK(r.verdict == "structural checks Verified");
  write_reports(rep, cfg);
  const auto csv = slurp(dir / "report.csv");
  const auto js = slurp(dir / "report.json");
  CHECK(csv.rfind("pipeline,label,prime,base_poly,note,degree_K,r_lower_bound,verdict,certificates\n", 0) == 0);
  write_reports(run(cfg), cfg);
  CHECK(slurp(dir / "report.csv") == csv);
  CHECK(slurp(dir / "report.json") == js);
}

TEST_CASE("run: full example config is idempotent") {
  auto dir = scratch("full-run");
  auto cfg = read_run_config(kExamples / "run_all.json");
  cfg.out = dir;
  cfg.store = dir / "certificates.jsonl";
  auto first = run(cfg);
  write_reports(first, cfg);
  CHECK(!first.invariant_violation);
  CHECK(first.new_certificates > 0);
  const auto csv = slurp(dir / "report.csv");
  const auto store = slurp(dir / "certificates.jsonl");
  auto second = run(cfg);
  write_reports(second, cfg);
  CHECK(second.new_certificates == 0);
  CHECK(slurp(dir / "report.csv") == csv);
  CHECK(slurp(dir / "certificates.jsonl") == store);

  std::map<std::string, int> per;
  for (const auto& r : first.rows) ++per[r.pipeline];
  CHECK(per["scan"] > 0);
  CHECK(per["search-b"] == 3);
  CHECK(per["certify"] == 3);
  CHECK(per["check-table"] == 5);
  for (const auto& r : first.rows)
    if (r.pipeline == "scan") CHECK(r.prime % 20 == 1);  // split in Q(i), Q(zeta_5), Q(sqrt 5)
}

TEST_CASE("run: tower data and errors") {
  auto cfg = read_run_config(kExamples / "run_tower.json");
  auto rep = run(cfg);
  REQUIRE(rep.rows.size() == 1);
  bool stabilized = false;
  for (const auto& c : rep.rows[0].certificates) stabilized = stabilized || c.rfind("chevalley-stabilization", 0) == 0;
  CHECK(stabilized);

  cfg.tower = "/nonexistent/tower.json";
  auto msg = error_text([&] { run(cfg); });
  CHECK(msg.rfind("Io", 0) == 0);
  CHECK(msg.find("/nonexistent/tower.json") != std::string::npos);

  auto dir = scratch("bad-descriptor");
  auto doc = read_json_file(kExamples / "d4_over_q.json");
  doc["tau"] = 1;  // a is not central in D4
  std::ofstream(dir / "bad.json") << doc.dump();
  RunConfig bad;
  bad.pipelines = {"certify"};
  bad.descriptors = {dir / "bad.json"};
  auto r = run(bad);
  CHECK(r.invariant_violation);
  CHECK(r.rows[0].verdict == "InvariantViolation");
}
