#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sra/errors.hpp"
#include "sra/parse.hpp"

namespace sra::cli {

namespace {

const std::vector<std::string> kCommands = {"eval",          "singular-scan", "gram",
                                            "nullcheck",     "ideal-compare", "genfun-dump"};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::pair<long, long> parse_range(const std::string& s) {
  auto c = s.find(':');
  if (c == std::string::npos) throw std::invalid_argument("range must look like lo:hi: " + s);
  return {std::stol(s.substr(0, c)), std::stol(s.substr(c + 1))};
}

std::pair<std::string, std::string> parse_pair(const std::string& s) {
  auto c = s.find(':');
  if (c == std::string::npos) throw std::invalid_argument("pair must look like mu0:mu1: " + s);
  return {s.substr(0, c), s.substr(c + 1)};
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

struct Family {
  bool present = false;
  DegenerateFamily fam;
};

Family parse_family(const RunConfig& cfg) {
  Family f;
  if (cfg.family.empty()) return f;
  f.present = true;
  if (cfg.family == "half") {
    f.fam = DegenerateFamily::half(Rational::parse(cfg.nu));
  } else if (cfg.family.rfind("z=", 0) == 0) {
    f.fam = DegenerateFamily::integer(std::stol(cfg.family.substr(2)));
  } else {
    throw std::invalid_argument("family must be z=K or half: " + cfg.family);
  }
  return f;
}

AlgebraParams build_params(const RunConfig& cfg) {
  if (cfg.n % 2 == 0) {
    auto parts = split(cfg.nu, ',');
    if (parts.size() != 2) throw std::invalid_argument("even n needs --nu nu0,nu1");
    return AlgebraParams::even(cfg.n, Rational::parse(parts[0]), Rational::parse(parts[1]));
  }
  if (cfg.nu.empty()) {
    auto f = parse_family(cfg);
    if (f.present && !f.fam.half_integer) return AlgebraParams::odd(cfg.n, Rational(f.fam.z, cfg.n));
    throw std::invalid_argument("--nu is required");
  }
  return AlgebraParams::odd(cfg.n, Rational::parse(cfg.nu));
}

TraceSpec build_spec(const RunConfig& cfg) {
  AlgebraParams p = build_params(cfg);
  Family f = parse_family(cfg);
  if (f.present) {
    if (p.is_even()) throw std::invalid_argument("degenerate families are defined for odd n");
    if (f.fam.half_integer) {
      if (cfg.kappa != -1) throw NondegenerateSpec("the half-integer family needs kappa = -1");
      if (!(p.nu() * Rational(2)).is_integer() || p.nu().is_integer())
        throw NondegenerateSpec("nu " + p.nu().short_str() + " is not a half-integer");
    } else {
      if (f.fam.z % cfg.n == 0) throw NondegenerateSpec("ν = z/n with z ∈ nℤ is not singular");
      if (!(p.nu() == Rational(f.fam.z, cfg.n)))
        throw NondegenerateSpec("nu " + p.nu().short_str() + " is not z/n for family " + cfg.family);
    }
    return degenerate_family(cfg.n, cfg.kappa, f.fam, parse_scalar(cfg.tau));
  }
  std::vector<CycloNum> free;
  for (const auto& s : cfg.params) free.push_back(parse_scalar(s));
  if (p.is_even() && cfg.kappa == -1) return klein_transport(make_trace_spec(p, 1, free));
  return make_trace_spec(p, cfg.kappa, free);
}

json spec_json(const TraceSpec& s) {
  json free = json::array();
  for (const auto& c : s.free()) free.push_back(to_json(c));
  return json{{"params", to_json(s.params())}, {"kappa", s.kappa()}, {"free", free}};
}

json cmd_eval(const RunConfig& cfg) {
  TraceSpec spec = build_spec(cfg);
  AlgElem x = parse_expression(spec.algebra(), cfg.expr);
  CycloNum v = trace_eval(spec, x);
  return json{{"spec", spec_json(spec)}, {"value", to_json(v)}, {"rows", json::array({json{{"expr", cfg.expr}, {"value", to_json(v)}}})}};
}

json verdict_row(const SingularVerdict& v) {
  json row = to_json(v);
  json out;
  if (v.params.is_even()) {
    out["mu0"] = to_json(v.params.mu0);
    out["mu1"] = to_json(v.params.mu1);
  } else {
    out["nu"] = to_json(v.params.nu());
  }
  out["solution_dim"] = v.solution_dim;
  out["family"] = row["family"];
  out["basis"] = row["basis"];
  return out;
}

json cmd_singular_scan(const RunConfig& cfg) {
  json rows = json::array();
  if (cfg.n % 2 == 0) {
    for (const auto& [a, b] : cfg.mu_pairs)
      rows.push_back(verdict_row(solve_even_system(cfg.n / 2, Rational::parse(a), Rational::parse(b))));
  } else {
    std::vector<Rational> nus;
    for (const auto& s : cfg.nu_list) nus.push_back(Rational::parse(s));
    if (cfg.z_range)
      for (long z = cfg.z_range->first; z <= cfg.z_range->second; ++z) nus.push_back(Rational(z, cfg.n));
    for (const auto& nu : nus) rows.push_back(verdict_row(solve_147(cfg.n, cfg.kappa, nu)));
  }
  return json{{"n", cfg.n}, {"kappa", cfg.kappa}, {"rows", rows}};
}

json cmd_gram(const RunConfig& cfg) {
  TraceSpec spec = build_spec(cfg);
  GramReport g = gram_matrix(spec, cfg.degree);
  json rows = json::array();
  for (std::size_t i = 0; i < g.kernel.size(); ++i)
    rows.push_back(json{{"index", i}, {"degree", g.kernel[i].max_degree()}, {"element", g.kernel[i].str()}});
  return json{{"spec", spec_json(spec)}, {"gram", to_json(g, spec.algebra())}, {"rows", rows}};
}

json cmd_nullcheck(const RunConfig& cfg, bool& ok) {
  TraceSpec spec = build_spec(cfg);
  auto cands = null_vector_candidates(spec);
  json rows = json::array();
  ok = true;
  for (const auto& c : cands) {
    NullCheck r = check_null_vector(spec, c.element, cfg.degree);
    ok = ok && r.nonzero == 0;
    json freqs = json::array();
    for (const auto& f : c.freqs) freqs.push_back("i*" + f.str());
    rows.push_back(json{{"p", c.p},
                        {"degree", c.element.max_degree()},
                        {"terms", c.element.terms().size()},
                        {"freqs", freqs},
                        {"checked", r.checked},
                        {"nonzero", r.nonzero}});
  }
  std::string msg = ok ? "all candidates annihilate degree ≤ " + std::to_string(cfg.degree)
                       : "some candidate fails to annihilate degree ≤ " + std::to_string(cfg.degree);
  return json{{"spec", spec_json(spec)}, {"all_annihilate", ok}, {"message", msg}, {"rows", rows}};
}

json cmd_ideal_compare(const RunConfig& cfg) {
  Family f = parse_family(cfg);
  if (!f.present || f.fam.half_integer) throw std::invalid_argument("ideal-compare needs --family z=K");
  if (f.fam.z % cfg.n == 0) throw NondegenerateSpec("ν = z/n with z ∈ nℤ is not singular");
  if (!cfg.nu.empty() && !(Rational::parse(cfg.nu) == Rational(f.fam.z, cfg.n)))
    throw NondegenerateSpec("nu " + cfg.nu + " is not z/n for family " + cfg.family);
  IdealCompareReport r = ideal_compare(cfg.n, f.fam.z, parse_scalar(cfg.tau), cfg.degree);
  json rep = to_json(r);
  json rows = json::array();
  for (const auto& k : rep["kernels"]) rows.push_back(k);
  rep["rows"] = rows;
  return rep;
}

json fn_row(const char* kind, int index, const ExpPolyFn& f) {
  auto q = quasipoly_check(f);
  json row{{"kind", kind}, {"index", index}, {"function", f.reduced().str()}, {"quasipoly", q.is_quasipoly}};
  row["form"] = q.form ? to_json(*q.form) : json();
  return row;
}

json cmd_genfun_dump(const RunConfig& cfg) {
  TraceSpec spec = build_spec(cfg);
  json rows = json::array();
  for (int k = 0; k < spec.params().n; ++k) rows.push_back(fn_row("G", k, gk_closed_form(spec, k)));
  auto fs = fp_from_gk(spec);
  for (int p = 0; p < static_cast<int>(fs.size()); ++p) rows.push_back(fn_row("F", p, fs[p]));
  return json{{"spec", spec_json(spec)}, {"M", frequency_denominator(spec.params())}, {"rows", rows}};
}

std::string csv_cell(const json& v) {
  std::string s;
  if (v.is_null()) {
    s = "";
  } else if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_object() && v.contains("str") && v.contains("order")) {
    s = v["str"].get<std::string>();
  } else if (v.is_array() && !v.empty() && v[0].is_object() && v[0].contains("str")) {
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + csv_cell(v[i]);
  } else if (v.is_array() && !v.empty() && v[0].is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " | " : "") + csv_cell(v[i]);
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return s;
}

std::string timestamp() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

void apply_config(RunConfig& cfg, const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "n") cfg.n = v.get<int>();
    else if (key == "kappa") cfg.kappa = v.is_string() ? std::stoi(v.get<std::string>()) : v.get<int>();
    else if (key == "nu") cfg.nu = scalar_text(v);
    else if (key == "params") {
      cfg.params.clear();
      if (v.is_array())
        for (const auto& p : v) cfg.params.push_back(scalar_text(p));
      else
        cfg.params = split(scalar_text(v), ',');
    } else if (key == "family") cfg.family = v.get<std::string>();
    else if (key == "tau") cfg.tau = scalar_text(v);
    else if (key == "degree" || key == "D") cfg.degree = v.get<int>();
    else if (key == "output") cfg.output = v.get<std::string>();
    else if (key == "format") cfg.format = v.get<std::string>();
    else if (key == "no_meta") cfg.no_meta = v.get<bool>();
    else if (key == "expr") cfg.expr = v.get<std::string>();
    else if (key == "nu_list") {
      cfg.nu_list.clear();
      for (const auto& p : v) cfg.nu_list.push_back(scalar_text(p));
    } else if (key == "z_range") {
      if (v.is_array()) cfg.z_range = std::make_pair(v.at(0).get<long>(), v.at(1).get<long>());
      else cfg.z_range = parse_range(v.get<std::string>());
    } else if (key == "mu_pairs") {
      cfg.mu_pairs.clear();
      for (const auto& p : v) cfg.mu_pairs.emplace_back(scalar_text(p.at(0)), scalar_text(p.at(1)));
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
}

void validate(const RunConfig& cfg) {
  if (std::find(kCommands.begin(), kCommands.end(), cfg.command) == kCommands.end())
    throw std::invalid_argument("unknown command: " + cfg.command);
  if (cfg.n < 2) throw std::invalid_argument("n must be >= 2");
  if (cfg.kappa != 1 && cfg.kappa != -1) throw std::invalid_argument("kappa must be +1 or -1");
  if (cfg.degree < 0) throw std::invalid_argument("degree must be non-negative");
  if (cfg.format != "json" && cfg.format != "csv") throw std::invalid_argument("format must be json or csv");
  if (cfg.command == "eval" && cfg.expr.empty()) throw std::invalid_argument("eval needs an expression");
}

json execute(const RunConfig& cfg) {
  validate(cfg);
  json body;
  bool ok = true;
  if (cfg.command == "eval") body = cmd_eval(cfg);
  else if (cfg.command == "singular-scan") body = cmd_singular_scan(cfg);
  else if (cfg.command == "gram") body = cmd_gram(cfg);
  else if (cfg.command == "nullcheck") body = cmd_nullcheck(cfg, ok);
  else if (cfg.command == "ideal-compare") body = cmd_ideal_compare(cfg);
  else body = cmd_genfun_dump(cfg);
  json rep{{"command", cfg.command}};
  for (auto& [k, v] : body.items()) rep[k] = v;
  if (!cfg.no_meta) rep["meta"] = json{{"timestamp", timestamp()}, {"version", "0.1.0"}};
  return rep;
}

std::string to_csv(const json& report) {
  std::ostringstream os;
  if (report.contains("rows")) {
    std::vector<std::string> cols;
    for (const auto& row : report["rows"])
      for (const auto& [k, v] : row.items())
        if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    if (!cols.empty()) os << "\n";
    for (const auto& row : report["rows"]) {
      for (std::size_t i = 0; i < cols.size(); ++i)
        os << (i ? "," : "") << (row.contains(cols[i]) ? csv_cell(row[cols[i]]) : "");
      os << "\n";
    }
    return os.str();
  }
  os << "key,value\n";
  for (const auto& [k, v] : report.items()) os << k << "," << csv_cell(v) << "\n";
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with symplectic reflection algebras of dihedral groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string config_path, kappa_text = "+1", params_text, nu_list_text, z_range_text, mu_pairs_text;

  auto add_common = [&](CLI::App* sub, bool spec_flags) {
    sub->add_option("--n", cfg.n, "Dihedral parameter n");
    sub->add_option("--kappa", kappa_text, "+1 for traces, -1 for supertraces");
    sub->add_option("--nu", cfg.nu, "nu as p/q (even n: nu0,nu1)");
    sub->add_option("--degree,-D", cfg.degree, "Degree cutoff");
    sub->add_option("--output,-o", cfg.output, "Output path (default stdout)");
    sub->add_option("--format", cfg.format, "json or csv");
    sub->add_flag("--no-meta", cfg.no_meta, "Omit the timestamp block");
    sub->add_option("--config", config_path, "JSON config; its keys override flags");
    if (spec_flags) {
      sub->add_option("--params", params_text, "Free parameters, comma separated");
      sub->add_option("--family", cfg.family, "Degenerate family: z=K or half");
      sub->add_option("--tau", cfg.tau, "Scale of the degenerate family");
    }
  };

  auto* eval = app.add_subcommand("eval", "Evaluate sp(expr)");
  add_common(eval, true);
  eval->add_option("expr", cfg.expr, "Expression")->required();
  auto* scan = app.add_subcommand("singular-scan", "Solve the degeneracy systems over a parameter list");
  add_common(scan, false);
  scan->add_option("--nu-list", nu_list_text, "Comma separated nu values (odd n)");
  scan->add_option("--z-range", z_range_text, "lo:hi, nu = z/n (odd n)");
  scan->add_option("--mu-pairs", mu_pairs_text, "mu0:mu1 pairs, comma separated (even n)");
  const std::pair<const char*, const char*> rest[] = {
      {"gram", "Gram matrix, rank and kernel up to --degree"},
      {"nullcheck", "Check the null-vector candidates against all monomials up to --degree"},
      {"ideal-compare", "Compare trace and supertrace frequencies and kernels at z"},
      {"genfun-dump", "Closed forms G_k, F_p and their quasi-polynomial forms"}};
  for (const auto& [name, help] : rest) add_common(app.add_subcommand(name, help), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.kappa = std::stoi(kappa_text);
    if (!params_text.empty()) cfg.params = split(params_text, ',');
    if (!nu_list_text.empty()) cfg.nu_list = split(nu_list_text, ',');
    if (!z_range_text.empty()) cfg.z_range = parse_range(z_range_text);
    for (const auto& p : split(mu_pairs_text, ',')) cfg.mu_pairs.push_back(parse_pair(p));
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot read config " + config_path);
      apply_config(cfg, json::parse(in));
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  json rep;
  int code = kOk;
  try {
    rep = execute(cfg);
    if (rep.contains("all_annihilate") && !rep["all_annihilate"].get<bool>()) code = kInconsistent;
  } catch (const NondegenerateSpec& e) {
    err << "error: " << e.what() << "\n";
    return kNondegenerate;
  } catch (const InconsistentSystem& e) {
    err << "error: " << e.what() << "\n";
    return kInconsistent;
  } catch (const InsufficientRelations& e) {
    err << "error: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::string text = cfg.format == "csv" ? to_csv(rep) : rep.dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.output);
    if (!f) {
      err << "error: cannot write " << cfg.output << "\n";
      return kUsage;
    }
    f << text;
  }
  return code;
}

}  // namespace sra::cli
