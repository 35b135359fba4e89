#include "cjp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cjp/degree.hpp"
#include "cjp/io.hpp"
#include "cjp/pretzel.hpp"
#include "cjp/verify.hpp"

namespace cjp::cli {

namespace {

// a N^2 + b N + c with the signs folded in.
std::string quadratic_text(const Rational& a, const Rational& b, const Rational& c) {
  std::ostringstream o;
  o << a << " N^2";
  auto term = [&](const Rational& v, const char* x) {
    if (v == 0) return;
    o << (v < 0 ? " - " : " + ") << abs(v) << x;
  };
  term(b, " N");
  term(c, "");
  return o.str();
}

using io::json;

struct RunConfig {
  std::string pretzel;
  std::string colors;
  std::string method = "statesum";
  std::string emit = "text";
  std::string verify_level = "fast";
  int exact_max = 4;
};

int env_threads() {
  const char* s = std::getenv("CJP_THREADS");
  if (!s) return 1;
  int t = std::atoi(s);
  return t > 0 ? std::min(t, 64) : 1;
}

std::string join_ints(const json& arr) {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? "," : "") + std::to_string(arr[i].get<int>());
  return out;
}

// Values from --config fill whatever the command line left unset.
void merge_config(const std::string& path, RunConfig& c, const CLI::App& sub) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
  auto unset = [&](const char* opt) {
    const CLI::Option* o = sub.get_option_no_throw(opt);
    return o == nullptr || o->count() == 0;
  };
  if (j.contains("pretzel") && unset("--pretzel"))
    c.pretzel = j["pretzel"].is_array() ? join_ints(j["pretzel"]) : j["pretzel"].get<std::string>();
  if (j.contains("colors") && unset("--colors"))
    c.colors = j["colors"].is_array() ? join_ints(j["colors"]) : j["colors"].get<std::string>();
  if (j.contains("method") && unset("--method")) c.method = j["method"].get<std::string>();
  if (j.contains("emit") && unset("--emit")) c.emit = j["emit"].get<std::string>();
  if (j.contains("verify_level") && unset("--level")) c.verify_level = j["verify_level"].get<std::string>();
  if (j.contains("exact_max") && unset("--exact-max")) c.exact_max = j["exact_max"].get<int>();
}

pretzel::PretzelSpec knot_spec(const std::string& text) {
  if (text.empty()) throw DomainError("--pretzel is required");
  auto spec = pretzel::PretzelSpec::parse(text);
  if (!spec.is_knot()) throw DomainError(spec.to_string() + " is a link; only knots are supported");
  return spec;
}

// Rough size of the cabled diagram the bracket oracle has to contract.
long oracle_cost(const pretzel::PretzelSpec& s, int n) {
  long crossings = 0;
  for (int w : s.w) crossings += std::abs(w);
  return crossings * n * n;
}
constexpr long kOracleBudget = 160;

struct JonesRow {
  int N;
  std::optional<HalfLaurent> statesum, bracket;
};

int cmd_jones(const RunConfig& c, bool force, std::ostream& out) {
  auto spec = knot_spec(c.pretzel);
  if (c.colors.empty()) throw DomainError("--color is required");
  auto colors = parse_colors(c.colors);
  bool want_s = c.method == "statesum" || c.method == "both";
  bool want_b = c.method == "bracket" || c.method == "both";
  if (!want_s && !want_b) throw DomainError("--method must be statesum, bracket or both");
  if (want_b && !force)
    for (int N : colors)
      if (oracle_cost(spec, N - 1) > kOracleBudget)
        throw DomainError("the bracket oracle is too expensive at N=" + std::to_string(N) + " (use --force)");

  int threads = env_threads();
  std::vector<JonesRow> rows;
  for (std::size_t start = 0; start < colors.size(); start += threads) {
    std::vector<std::future<JonesRow>> jobs;
    for (std::size_t i = start; i < std::min(colors.size(), start + threads); ++i) {
      int N = colors[i];
      jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, [&, N] {
        JonesRow r{N, {}, {}};
        if (want_s) r.statesum = pretzel::colored_jones_statesum(spec, N);
        if (want_b) r.bracket = pretzel::colored_jones_bracket(spec.w, N);
        return r;
      }));
    }
    for (auto& j : jobs) rows.push_back(j.get());
  }

  bool all_equal = true;
  json results = json::array();
  for (auto& r : rows) {
    json o = {{"N", r.N}};
    const HalfLaurent& main = r.statesum ? *r.statesum : *r.bracket;
    o["degree"] = main.is_zero() ? json(nullptr) : json(rational_to_string(main.degree()));
    if (r.statesum) o["statesum"] = io::to_json(*r.statesum);
    if (r.bracket) o["bracket"] = io::to_json(*r.bracket);
    if (r.statesum && r.bracket) {
      bool eq = *r.statesum == *r.bracket;
      all_equal = all_equal && eq;
      o["equal"] = eq;
    }
    results.push_back(o);
  }

  if (c.emit == "json") {
    out << json({{"pretzel", spec.w}, {"method", c.method}, {"results", results}}).dump(2) << '\n';
  } else if (c.emit == "csv") {
    out << "N,method,exp,coeff\n";
    for (auto& r : rows)
      for (auto [name, p] : {std::pair{"statesum", &r.statesum}, std::pair{"bracket", &r.bracket}})
        if (*p)
          for (auto& [e, co] : (*p)->terms())
            out << r.N << ',' << name << ',' << rational_to_string(frac(e, 2)) << ',' << rational_to_string(co) << '\n';
  } else if (c.emit == "text") {
    for (auto& r : rows) {
      if (r.statesum) out << "J_" << r.N << "(" << spec.to_string() << ") [statesum] = " << r.statesum->to_string() << '\n';
      if (r.bracket) out << "J_" << r.N << "(" << spec.to_string() << ") [bracket]  = " << r.bracket->to_string() << '\n';
      if (r.statesum && r.bracket) out << "N=" << r.N << ": " << (*r.statesum == *r.bracket ? "equal" : "MISMATCH") << '\n';
    }
  } else {
    throw DomainError("--emit must be json, csv or text");
  }
  return all_equal ? kOk : kMismatch;
}

int cmd_degree(const RunConfig& c, std::ostream& out) {
  auto spec = knot_spec(c.pretzel);
  auto colors = parse_colors(c.colors.empty() ? "2..20" : c.colors);
  degree::FitOptions fo;
  fo.exact_max_color = c.exact_max;
  fo.threads = env_threads();
  auto rep = degree::empirical_degree_fit(spec.w, colors, fo);
  if (c.emit == "json") {
    out << io::to_json(rep).dump(2) << '\n';
  } else if (c.emit == "csv") {
    out << io::to_csv(rep);
  } else if (c.emit == "text") {
    out << spec.to_string() << '\n';
    if (rep.w.size() == 3)
      out << "s = " << rep.s << ", s1 = " << rep.s1 << ", js = " << rep.js << '\n';
    if (rep.in_regime) {
      out << "congruence modulus " << rep.modulus << ", cancellation on N = 0 mod " << rep.modulus << '\n';
      for (int r = 0; r < rep.modulus; ++r) out << "  jx[" << r << "] = " << rep.jx[r] << '\n';
    } else {
      out << "caveat: " << rep.caveat << '\n';
    }
    for (auto& f : rep.fits)
      out << "fit N=" << f.residue << " mod " << rep.modulus << ": " << quadratic_text(f.a, f.b, f.c)
          << (f.exact ? "" : "  (not quadratic)") << " over " << f.points << " colors\n";
    out << std::setw(4) << "N" << std::setw(10) << "exact" << std::setw(12) << "predicted" << "  match\n";
    for (auto& r : rep.rows)
      out << std::setw(4) << r.N << std::setw(10) << (r.exact ? r.exact->get_str() : "-") << std::setw(12)
          << (r.predicted ? r.predicted->get_str() : "-") << "  " << (r.match ? (*r.match ? "yes" : "NO") : "-") << '\n';
  } else {
    throw DomainError("--emit must be json, csv or text");
  }
  return rep.all_match() ? kOk : kMismatch;
}

int cmd_verify(const RunConfig& c, int twist_offset, std::ostream& out) {
  verify::VerifyOptions o;
  if (c.verify_level == "fast")
    o.level = verify::Level::Fast;
  else if (c.verify_level == "full")
    o.level = verify::Level::Full;
  else
    throw DomainError("--level must be fast or full");
  o.twist_half_offset = twist_offset;
  o.threads = env_threads();
  bool ok = true;
  o.on_result = [&](const verify::CheckResult& r) {
    ok = ok && r.pass;
    out << (r.pass ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.name << " (" << std::fixed << std::setprecision(2)
        << r.seconds << " s): " << r.detail << std::endl;
  };
  verify::run_checks(o);
  return ok ? kOk : kMismatch;
}

int cmd_bracket(const std::string& in_path, const std::string& out_path, const RunConfig& c, int cable,
                std::ostream& out) {
  skein::PlanarDiagram d;
  if (!in_path.empty()) {
    std::ifstream in(in_path);
    if (!in) throw DomainError("cannot read " + in_path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw DomainError(std::string("diagram: ") + e.what());
    }
    d = io::diagram_from_json(j);
  } else {
    if (c.pretzel.empty()) throw DomainError("give --diagram-in or --pretzel");
    auto spec = pretzel::PretzelSpec::parse(c.pretzel);
    d = skein::cable_pretzel(spec.w, cable);
  }
  if (!out_path.empty()) {
    std::ofstream o(out_path);
    if (!o) throw DomainError("cannot write " + out_path);
    o << io::to_json(d).dump(2) << '\n';
  }
  if (!d.closed()) throw DomainError("the diagram has open ends; only closed diagrams have a bracket");
  RatFunc b = skein::bracket(d);
  if (c.emit == "json") {
    auto p = b.to_laurent();
    json j = p ? io::to_json(*p) : io::to_json(b);
    out << json({{"bracket", j}}).dump(2) << '\n';
  } else {
    out << b.to_string() << '\n';
  }
  return kOk;
}

}  // namespace

std::vector<int> parse_colors(const std::string& text) {
  std::vector<int> out;
  auto num = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw DomainError("bad color list '" + text + "'");
  };
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    int a = num(text.substr(0, dots)), b = num(text.substr(dots + 2));
    if (b < a) throw DomainError("empty color range '" + text + "'");
    for (int N = a; N <= b; ++N) out.push_back(N);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(num(item));
  }
  if (out.empty()) throw DomainError("no colors given");
  for (int N : out)
    if (N < 2) throw DomainError("colors must be >= 2");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored Jones polynomials of pretzel knots by fusion, with degree analysis"};
  app.require_subcommand(1);
  RunConfig c;
  std::string config;

  auto* jones = app.add_subcommand("jones", "Compute J_N for a pretzel knot");
  bool force = false;
  jones->add_option("--pretzel", c.pretzel, "Twist vector, e.g. -5,4,3");
  jones->add_option("--color,--colors", c.colors, "Color N (N-1 strands), a list or a range a..b");
  jones->add_option("--method", c.method, "statesum, bracket or both")->check(CLI::IsMember({"statesum", "bracket", "both"}));
  jones->add_option("--emit", c.emit, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  jones->add_option("--config", config, "RunConfig as JSON");
  jones->add_flag("--force", force, "Skip the cost guard of the bracket oracle");

  auto* deg = app.add_subcommand("degree", "Degree report with theorem predictions and exact fits");
  deg->add_option("--pretzel", c.pretzel, "Twist vector");
  deg->add_option("--colors", c.colors, "Colors, default 2..20");
  deg->add_option("--exact-max", c.exact_max, "Compute J_N exactly up to this color");
  deg->add_option("--emit", c.emit, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  deg->add_option("--config", config, "RunConfig as JSON");

  auto* ver = app.add_subcommand("verify", "Run the acceptance checks");
  int twist_offset = 0;
  ver->add_option("--level", c.verify_level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  ver->add_option("--twist-offset", twist_offset, "Corrupt every twist eigenvalue by this many half-powers")->group("");
  ver->add_option("--config", config, "RunConfig as JSON");

  auto* br = app.add_subcommand("bracket", "Kauffman bracket of a diagram");
  std::string din, dout;
  int cable = 1;
  br->add_option("--diagram-in", din, "Diagram JSON");
  br->add_option("--diagram-out", dout, "Write the diagram as JSON");
  br->add_option("--pretzel", c.pretzel, "Use the cabled pretzel diagram");
  br->add_option("--cable", cable, "Strands per cable for --pretzel")->check(CLI::Range(1, 8));
  br->add_option("--emit", c.emit, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (auto* sub : {jones, deg, ver})
      if (sub->parsed() && !config.empty()) merge_config(config, c, *sub);
    if (jones->parsed()) return cmd_jones(c, force, out);
    if (deg->parsed()) return cmd_degree(c, out);
    if (ver->parsed()) return cmd_verify(c, twist_offset, out);
    if (br->parsed()) return cmd_bracket(din, dout, c, cable, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RegimeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}

}  // namespace cjp::cli
