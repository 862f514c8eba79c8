#pragma once

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyfam/catalog.hpp"
#include "polyfam/report.hpp"

namespace polyfam {

// Process exit codes (sysexits style).
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int identity_fails = 2;  // verify: some group fails under every variant
inline constexpr int usage = 64;
inline constexpr int bad_rational = 65;
inline constexpr int pole = 66;
inline constexpr int unknown_family = 67;
inline constexpr int parameter = 68;
inline constexpr int internal = 70;
inline constexpr int io = 74;
}  // namespace exit_code

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage:
    case ErrorKind::out_of_range:
      return exit_code::usage;
    case ErrorKind::invalid_rational:
      return exit_code::bad_rational;
    case ErrorKind::pole:
      return exit_code::pole;
    case ErrorKind::parameter:
    case ErrorKind::degenerate:
    case ErrorKind::division_by_zero:
      return exit_code::parameter;
    default:
      return exit_code::internal;
  }
}

enum class OutputFormat { csv, json, latex };

// --- rendering ---------------------------------------------------------------

inline std::string poly_csv(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ';';
    s += p.coeffs()[i].to_string();
  }
  return s;
}

inline std::string latex_rational(const Rational& q) {
  if (q.is_integer()) return q.to_string();
  const std::string sign = q.sign() < 0 ? "-" : "";
  Integer num = q.numerator();
  if (num < 0) num = -num;
  return sign + "\\frac{" + num.get_str() + "}{" + q.denominator().get_str() + "}";
}

inline std::string latex_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational c = p.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (s.empty())
      s += c.sign() < 0 ? "-" : "";
    else
      s += c.sign() < 0 ? " - " : " + ";
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) s += latex_rational(mag);
    if (i >= 1) s += i == 1 ? "x" : "x^{" + std::to_string(i) + "}";
  }
  return s;
}

inline void render_csv(const ValueTable& table, std::ostream& out) {
  std::visit(
      [&](const auto& values) {
        using T = std::decay_t<decltype(values)>;
        if constexpr (std::is_same_v<T, std::vector<std::vector<Rational>>>) {
          out << "n,m,value\n";
          for (std::size_t n = 0; n < values.size(); ++n)
            for (std::size_t m = 0; m < values[n].size(); ++m) out << n << ',' << m << ',' << values[n][m] << '\n';
        } else {
          out << "n,value\n";
          for (std::size_t n = 0; n < values.size(); ++n) {
            if constexpr (std::is_same_v<T, std::vector<Poly>>)
              out << n << ',' << poly_csv(values[n]) << '\n';
            else
              out << n << ',' << values[n] << '\n';
          }
        }
      },
      table.values);
}

inline nlohmann::ordered_json table_json(const ValueTable& table) {
  using nlohmann::ordered_json;
  const auto& spec = table.spec;
  const auto& info = family_info(spec.tag);
  ordered_json j = ordered_json::object();
  j["family"] = info.name;
  j["reference"] = info.reference;
  j["k"] = spec.k ? ordered_json(spec.k->to_string()) : ordered_json(nullptr);
  j["n_max"] = spec.n_max;
  if (info.uses_params) {
    j["alpha"] = spec.params.alpha.to_string();
    j["beta"] = spec.params.beta.to_string();
    j["gamma"] = spec.params.gamma.to_string();
  }
  if (info.uses_a) j["a"] = spec.a.to_string();
  if (info.uses_x) j["x"] = spec.symbolic() ? std::string("sym") : spec.x_value().to_string();
  if (info.bivariate) {
    j["y"] = spec.y.to_string();
    j["m_max"] = spec.m_max;
    if (spec.tag == FamilyTag::symmetrized_Dcal) j["r"] = spec.r;
  }
  ordered_json values = ordered_json::array();
  std::visit(
      [&](const auto& vs) {
        using T = std::decay_t<decltype(vs)>;
        for (const auto& v : vs) {
          if constexpr (std::is_same_v<T, std::vector<std::vector<Rational>>>) {
            ordered_json row = ordered_json::array();
            for (const auto& q : v) row.push_back(q.to_string());
            values.push_back(row);
          } else if constexpr (std::is_same_v<T, std::vector<Poly>>) {
            ordered_json coeffs = ordered_json::array();  // ascending degree
            for (const auto& c : v.coeffs()) coeffs.push_back(c.to_string());
            if (coeffs.empty()) coeffs.push_back("0");
            values.push_back(coeffs);
          } else {
            values.push_back(v.to_string());
          }
        }
      },
      table.values);
  j["values"] = values;
  return j;
}

inline void render_latex(const ValueTable& table, std::ostream& out) {
  std::visit(
      [&](const auto& values) {
        using T = std::decay_t<decltype(values)>;
        if constexpr (std::is_same_v<T, std::vector<std::vector<Rational>>>) {
          out << "\\begin{tabular}{rrl}\n$n$ & $m$ & value \\\\ \\hline\n";
          for (std::size_t n = 0; n < values.size(); ++n)
            for (std::size_t m = 0; m < values[n].size(); ++m)
              out << n << " & " << m << " & $" << latex_rational(values[n][m]) << "$ \\\\\n";
        } else {
          out << "\\begin{tabular}{rl}\n$n$ & value \\\\ \\hline\n";
          for (std::size_t n = 0; n < values.size(); ++n) {
            if constexpr (std::is_same_v<T, std::vector<Poly>>)
              out << n << " & $" << latex_poly(values[n]) << "$ \\\\\n";
            else
              out << n << " & $" << latex_rational(values[n]) << "$ \\\\\n";
          }
        }
        out << "\\end{tabular}\n";
      },
      table.values);
}

inline void render(const ValueTable& table, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::csv:
      render_csv(table, out);
      break;
    case OutputFormat::json:
      out << table_json(table).dump(2) << '\n';
      break;
    case OutputFormat::latex:
      render_latex(table, out);
      break;
  }
}

inline void render_catalog(std::ostream& out) {
  std::size_t name_w = 0, ref_w = 0;
  for (const auto& f : family_catalog()) {
    name_w = std::max(name_w, f.name.size());
    ref_w = std::max(ref_w, f.reference.size());
  }
  for (const auto& f : family_catalog())
    out << std::left << std::setw(static_cast<int>(name_w + 2)) << f.name << std::setw(static_cast<int>(ref_w + 2))
        << f.reference << f.generating_function << '\n';
}

// Writes to path, or to out when path is empty or "-".
inline int emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return exit_code::ok;
  }
  std::ofstream file(path, std::ios::binary);
  if (file) file << text;
  if (!file) {
    err << "polyfam: cannot write '" << path << "'\n";
    return exit_code::io;
  }
  return exit_code::ok;
}

// --- entry point ---------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tables and identity checks for poly-Bernoulli and poly-Euler type families", "polyfam"};
  app.require_subcommand(1);

  struct ComputeArgs {
    std::string family, k, alpha = "1", beta = "0", gamma = "1", x = "0", y = "0", a = "1", format = "csv", out;
    long n_max = 8, m_max = 4, r = 2;
  } c;
  auto* compute_cmd = app.add_subcommand("compute", "Print a value table of one family");
  compute_cmd->add_option("--family", c.family, "Family tag (see list-families)")->required();
  compute_cmd->add_option("--k", c.k, "Index, comma-separated for multiple indices");
  compute_cmd->add_option("--n-max", c.n_max, "Largest n")->capture_default_str();
  compute_cmd->add_option("--m-max", c.m_max, "Largest m of two-index tables")->capture_default_str();
  compute_cmd->add_option("--r", c.r, "Depth of symmetrized-Dcal")->capture_default_str();
  compute_cmd->add_option("--alpha", c.alpha, "ln a as p/q")->capture_default_str();
  compute_cmd->add_option("--beta", c.beta, "ln b as p/q")->capture_default_str();
  compute_cmd->add_option("--gamma", c.gamma, "ln c as p/q")->capture_default_str();
  compute_cmd->add_option("--x", c.x, "x as p/q, or sym for polynomials in x")->capture_default_str();
  compute_cmd->add_option("--y", c.y, "y as p/q")->capture_default_str();
  compute_cmd->add_option("--a", c.a, "Hurwitz parameter as p/q")->capture_default_str();
  compute_cmd->add_option("--format", c.format, "csv, json or latex")
      ->check(CLI::IsMember({"csv", "json", "latex"}))
      ->capture_default_str();
  compute_cmd->add_option("--out", c.out, "Output file (default stdout)");

  struct VerifyArgs {
    bool all = false;
    std::vector<std::string> ids;
    long order = 8, random_params = 0, escalation = 1;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::string out;
  } v;
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity checks and write a JSON report");
  verify_cmd->add_flag("--all", v.all, "Run every check (the default without --id)");
  verify_cmd->add_option("--id", v.ids, "Run only this check; repeatable");
  verify_cmd->add_option("--order", v.order, "Largest n of the identity grids")->capture_default_str();
  verify_cmd->add_option("--seed", v.seed, "Seed of the random parameter triples")->capture_default_str();
  verify_cmd->add_option("--random-params", v.random_params, "Extra random (alpha, beta, gamma) triples")
      ->capture_default_str();
  verify_cmd->add_option("--escalation", v.escalation, "Grid enlargements tried while variants tie")
      ->capture_default_str();
  verify_cmd->add_option("--jobs", v.jobs, "Worker threads (0 = hardware)")->capture_default_str();
  verify_cmd->add_option("--out", v.out, "Report file (default stdout)");

  auto* list_cmd = app.add_subcommand("list-families", "List family tags, definitions and references");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? exit_code::ok : exit_code::usage;
  }

  try {
    if (*list_cmd) {
      render_catalog(out);
      return exit_code::ok;
    }

    if (*verify_cmd) {
      if (v.all && !v.ids.empty()) throw Error(ErrorKind::usage, "--all and --id exclude each other");
      if (v.order < 0 || v.random_params < 0 || v.escalation < 0)
        throw Error(ErrorKind::usage, "--order, --random-params and --escalation must be >= 0");
      const auto known = check_ids();
      for (const auto& id : v.ids)
        if (std::find(known.begin(), known.end(), id) == known.end())
          throw Error(ErrorKind::usage, "unknown check id '" + id + "'");
      HarnessConfig cfg;
      cfg.order = static_cast<std::size_t>(v.order);
      cfg.seed = v.seed;
      cfg.random_params = static_cast<std::size_t>(v.random_params);
      cfg.escalation_ceiling = static_cast<int>(v.escalation);
      cfg.jobs = v.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : v.jobs;
      cfg.ids = v.ids;
      const auto report = run_all(cfg);
      const int rc = emit(v.out, report_text(report), out, err);
      if (rc != exit_code::ok) return rc;
      return report.all_groups_hold() ? exit_code::ok : exit_code::identity_fails;
    }

    // compute
    const auto tag = find_family(c.family);
    if (!tag) {
      err << "polyfam: unknown family '" << c.family << "' (see list-families)\n";
      return exit_code::unknown_family;
    }
    const auto& info = family_info(*tag);
    if (c.n_max < 0 || c.m_max < 0 || c.r < 0) throw Error(ErrorKind::usage, "--n-max, --m-max and --r must be >= 0");
    FamilySpec spec;
    spec.tag = *tag;
    if (!c.k.empty()) spec.k = MultiIndex::parse(c.k);
    spec.params = {Rational::parse(c.alpha), Rational::parse(c.beta), Rational::parse(c.gamma)};
    if (c.x == "sym")
      spec.x = std::monostate{};
    else
      spec.x = Rational::parse(c.x);
    spec.y = Rational::parse(c.y);
    spec.a = Rational::parse(c.a);
    spec.n_max = static_cast<std::size_t>(c.n_max);
    spec.m_max = static_cast<std::size_t>(c.m_max);
    spec.r = static_cast<std::size_t>(c.r);
    if (info.index == IndexKind::none && spec.k) throw Error(ErrorKind::usage, std::string(info.name) + " takes no --k");
    validate(spec);
    const OutputFormat format = c.format == "json" ? OutputFormat::json
                                : c.format == "latex" ? OutputFormat::latex
                                                      : OutputFormat::csv;
    std::ostringstream text;
    render(compute(spec), format, text);
    return emit(c.out, text.str(), out, err);
  } catch (const Error& e) {
    err << "polyfam: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "polyfam: internal error: " << e.what() << '\n';
    return exit_code::internal;
  }
}

}  // namespace polyfam
