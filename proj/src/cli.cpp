#include "isetlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isetlab/constructions.hpp"
#include "isetlab/counting.hpp"
#include "isetlab/error.hpp"
#include "isetlab/harness.hpp"
#include "isetlab/serialize.hpp"
#include "isetlab/threshold.hpp"
#include "isetlab/transversal.hpp"

namespace isetlab::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string output;
  std::string format = "json";

  std::string construct_kind;
  std::string core;
  std::string family_path;
  std::string regime;
  std::string k_range;
  std::string dump_path;
  int n = -1;
  int k = -1;
  int t = -1;
  std::int64_t threshold_n = -1;
  int window = 16;
  bool scan = false;
  bool audit = false;
};

json envelope(const std::string& command) { return json{{"schema_version", kSchemaVersion}, {"command", command}}; }

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != 0) line += ',';
    line += cells[i];
  }
  return line + '\n';
}

void require(bool present, const std::string& what) {
  if (!present) throw ParameterError("missing required flag " + what);
}

std::uint64_t vertex_budget() {
  const char* env = std::getenv("ISETLAB_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultVertexBudget;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw ParameterError(std::string("ISETLAB_BUDGET is not a non-negative integer: '") + env + "'");
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParameterError("not an integer list: '" + text + "'");
    }
  }
  return out;
}

std::vector<int> parse_k_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return parse_int_list(text);
  const std::vector<int> lo = parse_int_list(text.substr(0, dots));
  const std::vector<int> hi = parse_int_list(text.substr(dots + 2));
  if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) throw ParameterError("bad --k-range '" + text + "'");
  std::vector<int> out;
  for (int k = lo[0]; k <= hi[0]; ++k) out.push_back(k);
  return out;
}

struct Result {
  std::string text;
  int code = kOk;
};

Result emit_json(json j, int code = kOk) { return {j.dump(2) + "\n", code}; }

Result do_construct(const Options& o) {
  json j = envelope("construct");
  j["kind"] = o.construct_kind;
  Family fam;
  if (o.construct_kind == "at") {
    require(o.n >= 0 && o.k >= 0 && o.t >= 0, "--n, --k and --t");
    fam = build_A_t(o.n, o.k, o.t);
  } else if (o.construct_kind == "sunflower") {
    require(o.n >= 0 && o.k >= 0, "--n and --k");
    std::vector<int> core;
    if (!o.core.empty()) {
      core = parse_int_list(o.core);
    } else {
      require(o.t >= 1, "--core or --t");
      for (int e = 1; e <= o.t; ++e) core.push_back(e);
    }
    fam = build_sunflower(o.n, o.k, Subset::of(o.n, core));
    j["core"] = core;
  } else if (o.construct_kind == "triangle") {
    require(o.n >= 0 && o.t >= 0, "--n and --t");
    fam = build_triangle(o.n, o.t);
  } else if (o.construct_kind == "level") {
    require(o.n >= 0 && o.k >= 0, "--n and --k");
    fam = build_full_level(o.n, o.k);
  } else {
    throw ParameterError("unknown construction '" + o.construct_kind + "' (at, sunflower, triangle, level)");
  }
  j["n"] = o.n;
  if (o.k >= 0) j["k"] = o.k;
  if (o.t >= 0) j["t"] = o.t;
  j["size"] = fam.size();
  j["family"] = family_to_json(fam);
  return emit_json(j);
}

Result do_count(const Options& o) {
  require(o.n >= 0 && o.k >= 0 && o.t >= 0, "--n, --k and --t");
  Params::make(o.n, o.k, o.t);
  std::optional<std::string> at;
  if (o.k >= o.t + 1 && o.n >= 2 * o.k - o.t) at = count_I_At(o.n, o.k, o.t).to_string();
  const std::string sunflower = count_I_sunflower(o.n, o.k, o.t).to_string();
  const std::string ekr = ekr_bound(o.n, o.k, o.t).to_string();
  std::optional<bool> chain;
  if (o.n >= o.t + 2) chain = sunflower_chain_check(o.n, o.k, o.t);
  if (o.format == "csv") {
    std::string text = csv_line({"n", "k", "t", "count_I_At", "count_I_sunflower", "ekr_bound", "sunflower_chain_check"});
    text += csv_line({std::to_string(o.n), std::to_string(o.k), std::to_string(o.t), at.value_or(""), sunflower, ekr,
                      chain ? (*chain ? "true" : "false") : ""});
    return {text, chain.value_or(true) ? kOk : kFalsified};
  }
  json j = envelope("count");
  j["n"] = o.n;
  j["k"] = o.k;
  j["t"] = o.t;
  j["count_I_At"] = at ? json(*at) : json(nullptr);
  j["count_I_sunflower"] = sunflower;
  j["ekr_bound"] = ekr;
  j["sunflower_chain_check"] = chain ? json(*chain) : json(nullptr);
  return emit_json(j, chain.value_or(true) ? kOk : kFalsified);
}

Result do_transversal(const Options& o) {
  require(!o.family_path.empty() && o.t >= 0 && o.k >= 0, "--family, --t and --k");
  const Family fam = read_family_file(o.family_path);
  json j = envelope("transversal");
  j["t"] = o.t;
  j["k"] = o.k;
  j["family"] = family_to_json(fam);
  j["transversal_count"] = transversal_family(fam, o.t, o.k).size();
  j["profile"] = profile_to_json(generator_profile(fam, o.t, o.k));
  return emit_json(j);
}

Result do_threshold(const Options& o) {
  const int modes = (o.threshold_n >= 0) + (o.scan ? 1 : 0) + (!o.regime.empty() ? 1 : 0);
  if (modes != 1) throw ParameterError("threshold needs exactly one of --n, --scan, --regime");
  if (!o.regime.empty()) {
    require(!o.k_range.empty(), "--k-range");
    RegimeSpec spec = parse_regime(o.regime);
    if (std::holds_alternative<ConstantT>(spec) && o.regime.find(':') == std::string::npos && o.t >= 1) {
      spec = ConstantT{o.t};
    }
    const auto points = fit_regime_exponent(spec, parse_k_range(o.k_range), o.window);
    const auto expected_text = [](const RegimePoint& p) {
      std::string s;
      for (std::size_t i = 0; i < p.expected.size(); ++i) s += (i ? "|" : "") + to_string(p.expected[i]);
      return s;
    };
    if (o.format == "csv") {
      std::string text = csv_line({"k", "t", "f_min", "expected_exponent", "local_exponent"});
      for (const auto& p : points) {
        std::ostringstream local;
        if (p.local_exponent) local << *p.local_exponent;
        text += csv_line({std::to_string(p.k), std::to_string(p.t), p.f_min ? std::to_string(*p.f_min) : "",
                          expected_text(p), local.str()});
      }
      return {text, kOk};
    }
    json j = envelope("threshold");
    j["regime"] = regime_name(spec);
    j["window"] = o.window;
    json rows = json::array();
    for (const auto& p : points) {
      json expected = json::array();
      for (const auto& e : p.expected) expected.push_back(to_string(e));
      rows.push_back(json{{"k", p.k},
                          {"t", p.t},
                          {"f_min", p.f_min ? json(*p.f_min) : json(nullptr)},
                          {"expected_exponent", expected},
                          {"local_exponent", p.local_exponent ? json(*p.local_exponent) : json(nullptr)},
                          {"error", p.error ? json(*p.error) : json(nullptr)}});
    }
    j["points"] = rows;
    return emit_json(j);
  }
  require(o.k >= 0 && o.t >= 0, "--k and --t");
  if (o.scan) {
    const std::int64_t f = f_min(o.k, o.t, o.window);
    if (o.format == "csv") {
      return {csv_line({"k", "t", "window", "f_min"}) +
                  csv_line({std::to_string(o.k), std::to_string(o.t), std::to_string(o.window), std::to_string(f)}),
              kOk};
    }
    json j = envelope("threshold");
    j["k"] = o.k;
    j["t"] = o.t;
    j["window"] = o.window;
    j["f_min"] = f;
    return emit_json(j);
  }
  const ThresholdVerdict v = eval_threshold_sides(o.threshold_n, o.k, o.t);
  if (o.format == "csv") {
    return {csv_line({"n", "k", "t", "lhs", "rhs", "holds"}) +
                csv_line({std::to_string(v.n), std::to_string(v.k), std::to_string(v.t), v.lhs.to_string(),
                          v.rhs.to_string(), v.holds ? "true" : "false"}),
            kOk};
  }
  json j = envelope("threshold");
  j.update(verdict_to_json(v));
  return emit_json(j);
}

Result do_verify(const Options& o) {
  require(o.n >= 0 && o.k >= 0 && o.t >= 0, "--n, --k and --t");
  ReportOptions ro;
  ro.vertex_budget = vertex_budget();
  ro.audit = o.audit || !o.dump_path.empty();
  const ExtremalReport report = extremal_report(o.n, o.k, o.t, ro);
  bool falsified = false;
  for (const auto& a : report.audits) falsified = falsified || !a.all_ok();
  if (report.kinds.contains("other")) falsified = true;

  if (!o.dump_path.empty()) {
    std::ofstream dump(o.dump_path);
    if (!dump) throw ParameterError("cannot write dump file '" + o.dump_path + "'");
    const auto families = enumerate_maximal_families(o.n, o.k, o.t, ro.vertex_budget);
    for (std::size_t i = 0; i < families.size(); ++i) {
      dump << json{{"family_id", i}, {"family", family_to_json(families[i])}, {"audit", audit_to_json(report.audits[i])}}
                  .dump()
           << '\n';
    }
  }
  const int code = falsified ? kFalsified : kOk;
  if (o.format == "csv") {
    std::string text = csv_line({"n", "k", "t", "num_maximal", "max_I", "count_I_At", "at_is_max"});
    text += csv_line({std::to_string(report.n), std::to_string(report.k), std::to_string(report.t),
                      std::to_string(report.num_maximal), std::to_string(report.max_I),
                      report.count_I_At ? report.count_I_At->to_string() : "",
                      report.at_is_max ? (*report.at_is_max ? "true" : "false") : ""});
    return {text, code};
  }
  json j = envelope("verify");
  j.update(report_to_json(report));
  if (!o.audit) j.erase("audits");
  return emit_json(j, code);
}

Result do_audit(const Options& o) {
  require(!o.family_path.empty() && o.t >= 0, "--family and --t");
  const Family fam = read_family_file(o.family_path);
  const AuditRecord rec = audit_proof_inequalities(fam, o.t);
  json j = envelope("audit");
  j["family"] = family_to_json(fam);
  j["audit"] = audit_to_json(rec);
  return emit_json(j, rec.all_ok() ? kOk : kFalsified);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"isetlab: exact tools for t-intersecting families and their distinct intersections", "isetlab"};
  app.require_subcommand(1);
  app.add_option("-o,--output", o.output, "Write the result to this file instead of stdout");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* construct = app.add_subcommand("construct", "Build a named family");
  construct->add_option("kind", o.construct_kind, "at | sunflower | triangle | level")->required();
  construct->add_option("--n", o.n);
  construct->add_option("--k", o.k);
  construct->add_option("--t", o.t);
  construct->add_option("--core", o.core, "Sunflower core, comma separated (default 1..t)");

  auto* count = app.add_subcommand("count", "Closed-form counts |I(A_t)|, |I(S_X)|, EKR bound, chain check");
  count->add_option("--n", o.n)->required();
  count->add_option("--k", o.k)->required();
  count->add_option("--t", o.t)->required();

  auto* transversal = app.add_subcommand("transversal", "Minimal t-transversals and derived statistics");
  transversal->add_option("--family", o.family_path, "Family JSON file")->required();
  transversal->add_option("--t", o.t)->required();
  transversal->add_option("--k", o.k)->required();

  auto* threshold = app.add_subcommand("threshold", "Evaluate or search the threshold inequality");
  threshold->add_option("--k", o.k);
  threshold->add_option("--t", o.t);
  threshold->add_option("--n", o.threshold_n, "Evaluate both sides at this n");
  threshold->add_flag("--scan", o.scan, "Search f_min(k, t)");
  threshold->add_option("--regime", o.regime, "const[:T] | power:E | linear:C");
  threshold->add_option("--k-range", o.k_range, "A..B or a comma list");
  threshold->add_option("--window", o.window, "Confirmation window for the scan")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Enumerate maximal families and compare with |I(A_t)|");
  verify->add_option("--n", o.n)->required();
  verify->add_option("--k", o.k)->required();
  verify->add_option("--t", o.t)->required();
  verify->add_flag("--audit", o.audit, "Include per-family audit records");
  verify->add_option("--dump", o.dump_path, "Write one JSON line per family to this file");

  auto* audit = app.add_subcommand("audit", "Audit lemma and proof inequalities on one saturated family");
  audit->add_option("--family", o.family_path, "Family JSON file")->required();
  audit->add_option("--t", o.t)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  }

  Result result;
  try {
    if (construct->parsed()) result = do_construct(o);
    else if (count->parsed()) result = do_count(o);
    else if (transversal->parsed()) result = do_transversal(o);
    else if (threshold->parsed()) result = do_threshold(o);
    else if (verify->parsed()) result = do_verify(o);
    else result = do_audit(o);
  } catch (const BudgetError& e) {
    err << "refused: " << e.what() << " (raise ISETLAB_BUDGET to allow)\n";
    return kBudgetRefused;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const std::logic_error& e) {
    err << "internal consistency check failed: " << e.what() << '\n';
    return kFalsified;
  }

  if (o.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(o.output);
    if (!file) {
      err << "error: cannot write '" << o.output << "'\n";
      return kParameterError;
    }
    file << result.text;
  }
  if (result.code == kFalsified) err << "FALSIFIED: a theorem-backed verdict failed; see output\n";
  return result.code;
}

}  // namespace isetlab::cli
