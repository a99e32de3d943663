// gkc: command-line front end over the harness pipelines.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "gkc/error.hpp"
#include "gkc/harness/run.hpp"

namespace {

using gkc::RunConfig;

gkc::Subset parse_subset(const std::string& text) {
  gkc::Subset s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      gkc::fail(gkc::ErrorKind::InvalidArgument, "bad element list '" + text + "'");
    s.push_back(static_cast<gkc::Elem>(std::stoul(item)));
  }
  std::sort(s.begin(), s.end());
  return s;
}

struct Flags {
  std::string config;
  std::optional<std::uint64_t> prime_bound;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::string out;
  std::string format;
  // scan
  std::vector<std::string> fields;
  std::string poly_db;
  // search-b
  std::vector<std::string> pool;
  std::optional<unsigned> target_r;
  std::optional<std::size_t> max_examples;
  // certify
  std::vector<std::string> descriptors;
  std::string tower;
  std::string store;
  std::optional<std::size_t> character;
  bool assume_leopoldt = false;
  bool assume_disjointness = false;
  std::string lift_subgroup;
  std::string subfield;
  // check-table
  std::string table;
};

RunConfig build_config(const Flags& f, const std::string& pipeline) {
  RunConfig c = f.config.empty() ? RunConfig{} : gkc::read_run_config(f.config);
  if (pipeline != "report") c.pipelines = {pipeline};
  if (f.seed) c.seed = *f.seed;
  if (f.threads) c.threads = c.search.threads = *f.threads;
  if (f.prime_bound) {
    if (*f.prime_bound < 3) gkc::fail(gkc::ErrorKind::InvalidArgument, "--prime-bound must be at least 3");
    c.prime_bound = c.search.prime_bound = *f.prime_bound;
  }
  if (!f.fields.empty()) c.scan_fields = f.fields;
  if (!f.poly_db.empty()) c.poly_database = f.poly_db;
  if (!f.pool.empty()) {
    c.search.pool.clear();
    for (const auto& d : f.pool) {
      gkc::Integer v;
      if (v.set_str(d, 10) != 0) gkc::fail(gkc::ErrorKind::InvalidArgument, "bad pool entry '" + d + "'");
      c.search.pool.push_back(v);
    }
  }
  if (f.target_r) c.search.target_r = *f.target_r;
  if (f.max_examples) c.search.max_examples = *f.max_examples;
  if (!f.descriptors.empty()) {
    c.descriptors.clear();
    for (const auto& d : f.descriptors) c.descriptors.emplace_back(d);
  }
  if (!f.tower.empty()) c.tower = f.tower;
  if (!f.store.empty()) c.store = f.store;
  if (f.character) c.character = f.character;
  c.assume_leopoldt = c.assume_leopoldt || f.assume_leopoldt;
  c.assume_tower_disjointness = c.assume_tower_disjointness || f.assume_disjointness;
  if (!f.lift_subgroup.empty()) c.lift_subgroup = parse_subset(f.lift_subgroup);
  if (!f.subfield.empty()) c.subfield = parse_subset(f.subfield);
  if (!f.table.empty()) c.table = f.table;
  if (!f.out.empty()) c.out = f.out;
  if (!f.format.empty()) c.format = f.format;
  return c;
}

int execute(const Flags& f, const std::string& pipeline) {
  RunConfig c = build_config(f, pipeline);
  gkc::RunReport rep = gkc::run(c);
  for (const auto& d : rep.diagnostics) std::cerr << "note: " << d << '\n';
  if (c.out) {
    gkc::write_reports(rep, c);
  } else if (c.format == "json") {
    std::cout << gkc::to_json(rep, c).dump(2) << '\n';
  } else {
    std::cout << gkc::to_csv(rep);
  }
  if (rep.new_certificates) std::cerr << rep.new_certificates << " new certificate(s) stored\n";
  return rep.invariant_violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates for the Gross-Kuz'min and Gross vanishing-order conjectures"};
  app.require_subcommand(1);
  Flags f;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", f.config, "run configuration (JSON)");
    sub->add_option("--prime-bound", f.prime_bound, "largest prime to scan");
    sub->add_option("--seed", f.seed, "seed recorded in reports");
    sub->add_option("--threads", f.threads, "worker threads (0 = all cores)");
    sub->add_option("--out", f.out, "directory for report.csv / report.json");
    sub->add_option("--format", f.format, "csv, json or both")->check(CLI::IsMember({"csv", "json", "both"}));
  };

  auto* scan = app.add_subcommand("scan", "primes totally split in every field");
  common(scan);
  scan->add_option("--field", f.fields, "quad:d, cyc:m or [a0,...,a_{n-1}]");
  scan->add_option("--poly-db", f.poly_db, "file with one monic vector per line");

  auto* search = app.add_subcommand("search-b", "CM extensions with large vanishing order over composita of real quadratics");
  common(search);
  search->add_option("--pool", f.pool, "real quadratic d values")->delimiter(',');
  search->add_option("--target-r", f.target_r, "target vanishing order r");
  search->add_option("--max-examples", f.max_examples, "hits to certify (0 = all)");
  search->add_option("--store", f.store, "certificate store (JSON lines)");

  auto* cert = app.add_subcommand("certify", "apply the rule base to extension descriptors");
  common(cert);
  cert->add_option("descriptors", f.descriptors, "descriptor files");
  cert->add_option("--tower", f.tower, "class-group tower data");
  cert->add_option("--store", f.store, "certificate store (JSON lines)");
  cert->add_option("--character", f.character, "row of the character table");
  cert->add_flag("--assume-leopoldt", f.assume_leopoldt, "assume Leopoldt for K+ at p");
  cert->add_flag("--assume-disjointness", f.assume_disjointness, "assume K cap R_inf = R when p divides |G|");
  cert->add_option("--lift-subgroup", f.lift_subgroup, "elements of Gal(K/R~), comma separated");
  cert->add_option("--subfield", f.subfield, "elements of U with k = K^U, comma separated");

  auto* table = app.add_subcommand("check-table", "structural checks on a table of ray class examples");
  common(table);
  table->add_option("table", f.table, "table file")->required();

  auto* report = app.add_subcommand("report", "run every pipeline listed in the config");
  common(report);
  report->add_option("--store", f.store, "certificate store (JSON lines)");

  CLI11_PARSE(app, argc, argv);
  const std::string name = app.get_subcommands().front()->get_name();
  if (name == "report" && f.config.empty()) {
    std::cerr << "report needs --config\n";
    return 2;
  }
  try {
    return execute(f, name);
  } catch (const gkc::Error& e) {
    std::cerr << "gkc: " << e.what() << '\n';
    return e.kind() == gkc::ErrorKind::InvariantViolation ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "gkc: " << e.what() << '\n';
    return 2;
  }
}
