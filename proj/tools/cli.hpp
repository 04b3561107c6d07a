#pragma once

// Command-line surface: enum, poly, spms, verify, export.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twinv/klv.hpp"
#include "twinv/poset.hpp"
#include "twinv/spm.hpp"
#include "twinv/twisted.hpp"
#include "twinv/verify.hpp"

namespace twinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kDefaultNCap = 5;

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  int n = 0;
  int n_cap = kDefaultNCap;
  int jobs = 1;
  std::string out_path;
  std::string format;

  int window() const { return 2 * n; }

  void validate() const {
    if (n_cap < 1 || 2 * n_cap > kMaxEnumWindow) {
      throw usage_error("--n-cap must lie in [1, " + std::to_string(kMaxEnumWindow / 2) + "]");
    }
    if (n < 1) throw usage_error("--n must be positive");
    if (n > n_cap) {
      throw usage_error("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(n_cap) +
                        " (raise it with --n-cap)");
    }
    if (jobs < 1) throw usage_error("--jobs must be positive");
  }
};

inline void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--n", c.n, "Half the window; elements live in S_{2n}")->required();
  cmd->add_option("--n-cap", c.n_cap, "Largest accepted n")->capture_default_str();
  cmd->add_option("-j,--jobs", c.jobs, "Worker threads across independent w")->capture_default_str();
  cmd->add_option("-o,--out", c.out_path, "Write output to this file instead of stdout");
}

inline Perm parse_member(const std::string& text, int window, Ground g, const char* what) {
  Perm p = parse_perm(text, window);
  if (!in_ground(p, g)) {
    throw usage_error(std::string(what) + " = \"" + text + "\" is not in " +
                      (g == Ground::iota ? "iota" : "I(theta)"));
  }
  return p;
}

inline Ground parse_ground(const std::string& name) {
  if (name == "iota") return Ground::iota;
  if (name == "twisted") return Ground::twisted;
  throw usage_error("unknown ground set '" + name + "'");
}

inline int cmd_enum(const Common& c, const std::string& set, std::ostream& out) {
  const bool fpf = set == "fpf";
  if (!fpf && set != "iota") throw usage_error("--set must be iota or fpf");
  const Perm w0 = longest_element(c.window());
  // For fpf rows, rho is the rank of the matching twisted identity w0·y.
  std::vector<std::pair<Perm, int>> rows;
  if (fpf) {
    for (const Perm& y : enumerate_fpf(c.window())) rows.emplace_back(y, length(compose(w0, y)) / 2);
  } else {
    for (const Perm& x : iota_elements(c.window())) rows.emplace_back(x, length(x) / 2);
  }
  if (c.format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [p, r] : rows) arr.push_back({{"perm", p.to_string()}, {"rho", r}});
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["set"] = set;
    j["elements"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else if (c.format.empty() || c.format == "text") {
    for (const auto& [p, r] : rows) out << p.to_string() << " | rho " << r << "\n";
  } else {
    throw usage_error("enum supports --format text or json");
  }
  return kExitOk;
}

inline IntPoly poly_of(const KlvContext& ctx, char kind, int u, int w) {
  switch (kind) {
    case 'q': return ctx.q(u, w);
    case 'r': return ctx.r(u, w);
    default: return ctx.leq(u, w) ? ctx.p(u, w) : IntPoly{};
  }
}

inline int cmd_poly(const Common& c, const std::string& kind_name, const std::string& u_text,
                    const std::string& w_text, bool table, std::ostream& out) {
  if (kind_name != "q" && kind_name != "r" && kind_name != "p") {
    throw usage_error("--kind must be q, r or p");
  }
  const char kind = kind_name[0];
  if (w_text.empty()) throw usage_error("--w is required");
  const Perm w = parse_member(w_text, c.window(), Ground::iota, "w");
  const KlvContext& ctx = klv_context(c.window());
  const int wi = ctx.index_of(w);

  if (table) {
    if (!u_text.empty()) throw usage_error("--table takes --w only");
    if (c.format == "json") {
      auto arr = nlohmann::ordered_json::array();
      for (int v = 0; v < ctx.size(); ++v)
        if (ctx.leq(v, wi))
          arr.push_back({{"u", ctx.element(v).to_string()},
                         {"w", w.to_string()},
                         {"kind", kind_name},
                         {"poly", poly_of(ctx, kind, v, wi).to_string()}});
      out << arr.dump(2) << "\n";
    } else if (c.format.empty() || c.format == "csv") {
      out << "u,w,kind,poly\n";
      for (int v = 0; v < ctx.size(); ++v)
        if (ctx.leq(v, wi))
          out << ctx.element(v).to_string() << "," << w.to_string() << "," << kind_name << ","
              << poly_of(ctx, kind, v, wi).to_string() << "\n";
    } else {
      throw usage_error("poly --table supports --format csv or json");
    }
    return kExitOk;
  }

  if (u_text.empty()) throw usage_error("--u is required unless --table is given");
  const Perm u = parse_member(u_text, c.window(), Ground::iota, "u");
  const std::string text = poly_of(ctx, kind, ctx.index_of(u), wi).to_string();
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["u"] = u.to_string();
    j["w"] = w.to_string();
    j["kind"] = kind_name;
    j["poly"] = text;
    out << j.dump() << "\n";
  } else if (c.format.empty() || c.format == "text") {
    out << text << "\n";
  } else {
    throw usage_error("poly supports --format text or json");
  }
  return kExitOk;
}

inline int cmd_spms(const Common& c, const std::string& w_text, std::ostream& out) {
  if (w_text.empty()) throw usage_error("--w is required");
  if (!c.format.empty() && c.format != "json") throw usage_error("spms emits json only");
  const Perm w = parse_member(w_text, c.window(), Ground::iota, "w");
  auto P = std::make_shared<const IntervalPoset>(lower_interval(w));
  int conj = 0;
  int other = 0;
  for (const Spm& M : enumerate_spms(P)) {
    const SpmClass cls = classify_spm(M);
    (cls.kind == SpmKind::conjugation ? conj : other)++;
    out << to_json(M, cls).dump() << "\n";
  }
  out << "spms: " << conj + other << " (conjugation " << conj << ", non_conjugation " << other
      << ")\n";
  if (conj + other == 0) {
    out << "note: the interval is a single point, so no element can be matched below the top\n";
  }
  return kExitOk;
}

inline int cmd_verify(const Common& c, const std::vector<std::string>& checks, std::ostream& out) {
  std::vector<std::string> selected = checks;
  if (selected.empty()) {
    selected = {"structure", "subthin", "lifting", "covers", "spm-theorem", "invariance", "vogan"};
  }
  const auto& known = check_names();
  for (const auto& name : selected) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw usage_error("unknown check '" + name + "'");
    }
  }
  if (std::find(selected.begin(), selected.end(), "bruhat") != selected.end() &&
      c.window() > kSubwordOracleMaxWindow) {
    throw usage_error("the bruhat check needs n <= " + std::to_string(kSubwordOracleMaxWindow / 2));
  }
  int failed = 0;
  for (const auto& name : selected) {
    const CheckReport r = run_check(name, c.window(), c.jobs);
    out << (r.passed ? "PASS " : "FAIL ") << name << " (n = " << c.n << ")\n";
    for (const auto& line : r.info) out << "  " << line << "\n";
    if (!r.passed) {
      ++failed;
      out << "  failures: " << r.failure_count << "\n";
      for (const auto& f : r.failures) out << "  witness: " << f << "\n";
    }
  }
  out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << "\n";
  return failed == 0 ? kExitOk : kExitFailed;
}

inline int cmd_export(const Common& c, const std::string& u_text, const std::string& w_text,
                      const std::string& ground_name, std::ostream& out) {
  if (w_text.empty()) throw usage_error("--w is required");
  const Ground g = parse_ground(ground_name);
  const Perm w = parse_member(w_text, c.window(), g, "w");
  const Perm u =
      u_text.empty() ? Perm::identity(c.window()) : parse_member(u_text, c.window(), g, "u");
  if (!leq_dots(u, w)) throw usage_error("u is not below w");
  const IntervalPoset P = build_interval(u, w, g);
  if (c.format.empty() || c.format == "dot") {
    write_dot(out, P);
  } else if (c.format == "json") {
    out << to_json(P).dump(2) << "\n";
  } else {
    throw usage_error("export supports --format dot or json");
  }
  return kExitOk;
}

/// Parses argv and runs one command. Normal output goes to `out` (or the
/// --out file), diagnostics to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bruhat order, special partial matchings and KLV polynomials on twisted identities"};
  app.require_subcommand(1);

  Common common;
  std::string set = "iota";
  std::string kind;
  std::string u_text;
  std::string w_text;
  std::string ground = "iota";
  bool table = false;
  std::vector<std::string> checks;

  auto* e = app.add_subcommand("enum", "List iota or the fixed-point-free involutions with ranks");
  add_common(e, common);
  e->add_option("--set", set, "iota or fpf")->capture_default_str();
  e->add_option("--format", common.format, "text or json");

  auto* p = app.add_subcommand("poly", "Print a Q-, R- or P-polynomial, or a full column");
  add_common(p, common);
  p->add_option("--kind", kind, "q, r or p")->required();
  p->add_option("--u", u_text, "Lower element, one-line notation");
  p->add_option("--w", w_text, "Upper element, one-line notation");
  p->add_flag("--table", table, "Emit every entry (v, w) with v <= w");
  p->add_option("--format", common.format, "text, csv or json");

  auto* s = app.add_subcommand("spms", "Enumerate and classify the SPMs of iota[e, w]");
  add_common(s, common);
  s->add_option("--w", w_text, "Top element, one-line notation");
  s->add_option("--format", common.format, "json");

  auto* v = app.add_subcommand("verify", "Run property suites over the whole window");
  add_common(v, common);
  v->add_option("--check", checks, "Comma-separated suites")->delimiter(',');

  auto* x = app.add_subcommand("export", "Hasse diagram of an interval as DOT or JSON");
  add_common(x, common);
  x->add_option("--u", u_text, "Bottom element (default: identity)");
  x->add_option("--w", w_text, "Top element");
  x->add_option("--ground", ground, "iota or twisted")->capture_default_str();
  x->add_option("--format", common.format, "dot or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    common.validate();
    if (*e) code = cmd_enum(common, set, buffer);
    if (*p) code = cmd_poly(common, kind, u_text, w_text, table, buffer);
    if (*s) code = cmd_spms(common, w_text, buffer);
    if (*v) code = cmd_verify(common, checks, buffer);
    if (*x) code = cmd_export(common, u_text, w_text, ground, buffer);
  } catch (const theorem_violation& ex) {
    err << "verification failure: " << ex.what() << "\n";
    return kExitFailed;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kExitFailed;
  }

  if (common.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(common.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << common.out_path << "\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace twinv::cli
