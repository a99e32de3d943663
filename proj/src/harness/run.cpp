#include "gkc/harness/run.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "gkc/error.hpp"
#include "gkc/extension/ingest.hpp"
#include "gkc/harness/scan.hpp"
#include "gkc/harness/store.hpp"
#include "gkc/harness/table.hpp"

namespace gkc {

namespace fs = std::filesystem;

namespace {

using json = nlohmann::json;

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail(ErrorKind::SchemaViolation, where + " must be an object");
  for (const auto& [k, v] : j.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; }))
      fail(ErrorKind::SchemaViolation, "unknown key " + where + "." + k);
}

template <class T>
T get(const json& j, const char* key, const std::string& where, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    fail(ErrorKind::SchemaViolation, where + "." + key + " has the wrong type");
  }
}

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

Integer integer_of(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) == 0) return out;
  }
  fail(ErrorKind::SchemaViolation, where + " must be an integer");
}

Subset subset_of(const json& v, const std::string& where) {
  if (!v.is_array()) fail(ErrorKind::SchemaViolation, where + " must be an array of group elements");
  Subset s;
  for (const auto& x : v) {
    if (!x.is_number_unsigned()) fail(ErrorKind::SchemaViolation, where + " entries must be element indices");
    s.push_back(x.get<Elem>());
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> cert_lines(const std::vector<Certificate>& certs) {
  std::vector<std::string> out;
  for (const auto& c : certs) out.push_back(c.rule + ": " + c.summary());
  return out;
}

std::string base_vector(const ExtensionDescriptor& ext) {
  return ext.base ? ext.base->defining_poly().to_vector_string() : "";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

bool RunConfig::runs(std::string_view pipeline) const {
  return std::find(pipelines.begin(), pipelines.end(), pipeline) != pipelines.end();
}

RunConfig run_config_from_json(const json& j, const fs::path& base_dir) {
  only_keys(j, "config", {"schema", "seed", "prime_bound", "threads", "pipelines", "scan", "search_b", "certify",
                          "check_table", "store", "output"});
  if (get<std::string>(j, "schema", "config", kRunSchema) != kRunSchema)
    fail(ErrorKind::SchemaViolation, std::string("config.schema must be ") + kRunSchema);
  RunConfig c;
  c.seed = get<std::uint64_t>(j, "seed", "config", kArtifactSeed);
  c.prime_bound = get<std::uint64_t>(j, "prime_bound", "config", c.prime_bound);
  if (c.prime_bound < 3) fail(ErrorKind::SchemaViolation, "config.prime_bound must be at least 3");
  c.threads = get<unsigned>(j, "threads", "config", 0);
  c.pipelines = get<std::vector<std::string>>(j, "pipelines", "config", {});
  for (const auto& p : c.pipelines)
    if (std::none_of(std::begin(kPipelines), std::end(kPipelines), [&](const char* k) { return p == k; }))
      fail(ErrorKind::SchemaViolation, "unknown pipeline '" + p + "'");

  if (j.contains("scan")) {
    const auto& s = j.at("scan");
    only_keys(s, "scan", {"fields", "poly_database"});
    c.scan_fields = get<std::vector<std::string>>(s, "fields", "scan", {});
    if (s.contains("poly_database")) c.poly_database = resolve(base_dir, get<std::string>(s, "poly_database", "scan", ""));
  }
  c.search.prime_bound = c.prime_bound;
  c.search.threads = c.threads;
  if (j.contains("search_b")) {
    const auto& s = j.at("search_b");
    only_keys(s, "search_b", {"target_r", "pool", "prime_bound", "max_examples"});
    c.search.target_r = get<unsigned>(s, "target_r", "search_b", c.search.target_r);
    c.search.prime_bound = get<std::uint64_t>(s, "prime_bound", "search_b", c.prime_bound);
    if (c.search.prime_bound < 3) fail(ErrorKind::SchemaViolation, "search_b.prime_bound must be at least 3");
    c.search.max_examples = get<std::size_t>(s, "max_examples", "search_b", c.search.max_examples);
    if (s.contains("pool")) {
      if (!s.at("pool").is_array()) fail(ErrorKind::SchemaViolation, "search_b.pool must be an array");
      for (const auto& d : s.at("pool")) c.search.pool.push_back(integer_of(d, "search_b.pool entry"));
    }
  }
  if (j.contains("certify")) {
    const auto& s = j.at("certify");
    only_keys(s, "certify", {"descriptors", "tower", "character", "assume_leopoldt", "assume_tower_disjointness", "lift_subgroup", "subfield"});
    for (const auto& d : get<std::vector<std::string>>(s, "descriptors", "certify", {})) c.descriptors.push_back(resolve(base_dir, d));
    if (s.contains("tower")) c.tower = resolve(base_dir, get<std::string>(s, "tower", "certify", ""));
    if (s.contains("character")) c.character = get<std::size_t>(s, "character", "certify", 0);
    c.assume_leopoldt = get<bool>(s, "assume_leopoldt", "certify", false);
    c.assume_tower_disjointness = get<bool>(s, "assume_tower_disjointness", "certify", false);
    if (s.contains("lift_subgroup")) c.lift_subgroup = subset_of(s.at("lift_subgroup"), "certify.lift_subgroup");
    if (s.contains("subfield")) {
      const auto& u = s.at("subfield");
      only_keys(u, "certify.subfield", {"elements", "label"});
      c.subfield = subset_of(u.value("elements", json::array()), "certify.subfield.elements");
      c.subfield_label = get<std::string>(u, "label", "certify.subfield", "k");
    }
  }
  if (j.contains("check_table")) {
    const auto& s = j.at("check_table");
    only_keys(s, "check_table", {"table"});
    if (s.contains("table")) c.table = resolve(base_dir, get<std::string>(s, "table", "check_table", ""));
  }
  if (j.contains("store")) c.store = resolve(base_dir, get<std::string>(j, "store", "config", ""));
  if (j.contains("output")) {
    const auto& s = j.at("output");
    only_keys(s, "output", {"dir", "format"});
    if (s.contains("dir")) c.out = resolve(base_dir, get<std::string>(s, "dir", "output", ""));
    c.format = get<std::string>(s, "format", "output", c.format);
  }
  if (c.format != "csv" && c.format != "json" && c.format != "both")
    fail(ErrorKind::SchemaViolation, "output.format must be csv, json or both");
  return c;
}

RunConfig read_run_config(const fs::path& path) {
  json j = read_json_file(path);
  try {
    return run_config_from_json(j, path.parent_path());
  } catch (const Error& e) {
    fail(e.kind(), path.string() + ": " + e.detail());
  }
}

RunReport run(const RunConfig& config) {
  RunReport report;
  std::optional<CertificateStore> store;
  if (config.store) store.emplace(*config.store);
  auto keep = [&](const std::vector<Certificate>& certs) {
    if (store) report.new_certificates += store->append(certs);
  };

  if (config.runs("scan")) {
    std::vector<NumberField> fields;
    std::vector<std::string> labels;
    for (const auto& s : config.scan_fields) {
      fields.push_back(field_from_spec(s));
      labels.push_back(s);
    }
    if (config.poly_database)
      for (const auto& f : read_polynomial_database(config.poly_database->string())) {
        fields.push_back(make_field(f));
        labels.push_back(f.to_vector_string());
      }
    auto res = scan_split_primes(fields, config.prime_bound, config.threads);
    for (auto& d : res.diagnostics) report.diagnostics.push_back("scan: " + d);
    for (auto p : res.primes) {
      ReportRow row;
      row.pipeline = "scan";
      row.label = join(labels, " + ");
      row.prime = p;
      row.note = "totally split in every field";
      row.verdict = "split";
      report.rows.push_back(std::move(row));
    }
  }

  if (config.runs("search-b")) {
    try {
      auto res = search_theoremB(config.search);
      for (auto& d : res.diagnostics) report.diagnostics.push_back("search-b: " + d);
      for (const auto& hit : res.hits) {
        ReportRow row;
        row.pipeline = "search-b";
        row.label = hit.ext.label;
        row.prime = hit.p;
        row.base_poly = base_vector(hit.ext);
        std::vector<std::string> discs;
        for (const auto& d : hit.discriminants) discs.push_back(d.get_str());
        row.note = "R discriminants (" + join(discs, ",") + "); chain " + join(hit.chain, " -> ");
        row.degree_K = hit.ext.degree_over_Q();
        row.r_lower_bound = hit.r_S;
        const bool conditional = std::any_of(hit.result.certificates.begin(), hit.result.certificates.end(),
                                             [](const Certificate& c) { return c.conditional(); });
        row.verdict = conditional ? "certified (conditional)" : "certified";
        row.certificates = cert_lines(hit.result.certificates);
        keep(hit.result.certificates);
        report.rows.push_back(std::move(row));
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvariantViolation) report.invariant_violation = true;
      ReportRow row;
      row.pipeline = "search-b";
      row.verdict = std::string(to_string(e.kind()));
      row.note = e.detail();
      report.rows.push_back(std::move(row));
    }
  }

  if (config.runs("certify")) {
    CertifyOptions opt;
    opt.character = config.character;
    opt.assume_leopoldt = config.assume_leopoldt;
    opt.assume_tower_disjointness = config.assume_tower_disjointness;
    opt.lift_subgroup = config.lift_subgroup;
    if (config.tower) opt.tower = read_tower_file(*config.tower);
    for (const auto& path : config.descriptors) {
      ReportRow row;
      row.pipeline = "certify";
      row.label = path.filename().string();
      try {
        ExtensionDescriptor ext = ingest_extension_file(path);
        row.label = ext.label;
        row.prime = ext.p;
        row.base_poly = base_vector(ext);
        row.degree_K = ext.degree_over_Q();
        CertifyOptions o = opt;
        if (config.subfield) {
          o.subfield = SubfieldReduction{*config.subfield, config.subfield_label, std::nullopt};
          if (store) o.subfield->gkc_minus_of_k = store->unconditional_gkc_minus(config.subfield_label);
        }
        auto res = certify(ext, o);
        row.note = join(res.diagnostics, "; ");
        row.certificates = cert_lines(res.certificates);
        bool any = false, unconditional = false;
        for (const auto& c : res.certificates) {
          any = true;
          unconditional = unconditional || !c.conditional();
          if (c.conclusion == Conclusion::GvcChi && c.value && (!row.r_lower_bound || *c.value > *row.r_lower_bound))
            row.r_lower_bound = c.value;
        }
        row.verdict = !any ? "no certificate" : unconditional ? "certified" : "certified (conditional)";
        keep(res.certificates);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Io || e.kind() == ErrorKind::SchemaViolation) throw;
        if (e.kind() == ErrorKind::InvariantViolation) report.invariant_violation = true;
        row.verdict = std::string(to_string(e.kind()));
        row.note = e.detail();
      }
      report.rows.push_back(std::move(row));
    }
  }

  if (config.runs("check-table")) {
    if (!config.table) fail(ErrorKind::SchemaViolation, "check-table needs check_table.table");
    for (const auto& v : check_example_table(read_table_file(config.table->string()))) {
      ReportRow row;
      row.pipeline = "check-table";
      row.label = v.row.source;
      row.prime = v.row.prime;
      row.base_poly = v.row.poly.to_vector_string();
      row.note = "modulus " + v.row.modulus;
      row.degree_K = v.row.degree;
      row.r_lower_bound = v.row.r_bound;
      row.verdict = v.structural_ok() ? "structural checks Verified" : "structural check Failed";
      for (const auto& f : v.facts) row.certificates.push_back(f.name + ": " + std::string(to_string(f.status)) + " (" + f.detail + ")");
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string to_csv(const RunReport& report) {
  std::ostringstream os;
  for (std::size_t i = 0; i < std::size(kReportColumns); ++i) os << (i ? "," : "") << kReportColumns[i];
  os << '\n';
  for (const auto& r : report.rows) {
    os << csv_field(r.pipeline) << ',' << csv_field(r.label) << ',' << (r.prime ? std::to_string(r.prime) : "") << ','
       << csv_field(r.base_poly) << ',' << csv_field(r.note) << ',' << (r.degree_K ? std::to_string(*r.degree_K) : "")
       << ',' << (r.r_lower_bound ? std::to_string(*r.r_lower_bound) : "") << ',' << csv_field(r.verdict) << ','
       << csv_field(join(r.certificates, " | ")) << '\n';
  }
  return os.str();
}

nlohmann::ordered_json to_json(const RunReport& report, const RunConfig& config) {
  nlohmann::ordered_json j;
  j["schema"] = "gkc-report/1";
  j["seed"] = config.seed;
  j["prime_bound"] = config.prime_bound;
  j["pipelines"] = config.pipelines;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json row;
    row["pipeline"] = r.pipeline;
    row["label"] = r.label;
    row["prime"] = r.prime ? nlohmann::ordered_json(r.prime) : nlohmann::ordered_json();
    row["base_poly"] = r.base_poly;
    row["note"] = r.note;
    row["degree_K"] = r.degree_K ? nlohmann::ordered_json(*r.degree_K) : nlohmann::ordered_json();
    row["r_lower_bound"] = r.r_lower_bound ? nlohmann::ordered_json(*r.r_lower_bound) : nlohmann::ordered_json();
    row["verdict"] = r.verdict;
    row["certificates"] = r.certificates;
    j["rows"].push_back(std::move(row));
  }
  j["diagnostics"] = report.diagnostics;
  j["invariant_violation"] = report.invariant_violation;
  return j;
}

void write_reports(const RunReport& report, const RunConfig& config) {
  if (!config.out) return;
  std::error_code ec;
  fs::create_directories(*config.out, ec);
  if (ec) fail(ErrorKind::Io, "cannot create " + config.out->string() + ": " + ec.message());
  auto put = [&](const char* name, const std::string& body) {
    const fs::path p = *config.out / name;
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot write " + p.string());
    out << body;
    if (!out) fail(ErrorKind::Io, "write failed on " + p.string());
  };
  if (config.format == "csv" || config.format == "both") put("report.csv", to_csv(report));
  if (config.format == "json" || config.format == "both") put("report.json", to_json(report, config).dump(2) + "\n");
}

}  // namespace gkc
