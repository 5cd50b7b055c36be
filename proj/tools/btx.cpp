#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "btx/appell.hpp"
#include "btx/appell_family.hpp"
#include "btx/config.hpp"
#include "btx/error.hpp"
#include "btx/probability.hpp"
#include "btx/registry.hpp"
#include "btx/report.hpp"
#include "btx/sequence.hpp"
#include "btx/transform.hpp"

using namespace btx;
using Json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

/// A labelled list of rationals: JSON array, "index,value" CSV, or one value per line.
void print_list(Format format, const std::string& index_name, const std::vector<Rational>& values) {
  switch (format) {
    case Format::json: std::cout << rational_list(values).dump() << '\n'; break;
    case Format::csv:
      std::cout << index_name << ",value\n";
      for (std::size_t i = 0; i < values.size(); ++i) std::cout << i << ',' << values[i] << '\n';
      break;
    case Format::pretty:
      for (std::size_t i = 0; i < values.size(); ++i) std::cout << index_name << '=' << i << "  " << values[i] << '\n';
      break;
  }
}

/// Polynomials always print as a JSON coefficient array, except in CSV.
void print_poly(Format format, const std::string& power_name, const Polynomial& p) {
  if (format == Format::csv) {
    print_list(format, power_name, p.coeffs());
  } else {
    std::cout << rational_list(p.coeffs()).dump() << '\n';
  }
}

void print_value(Format format, Json fields, const Rational& value) {
  switch (format) {
    case Format::json:
      fields["value"] = value.str();
      std::cout << fields.dump() << '\n';
      break;
    case Format::csv: {
      std::string head, row;
      for (const auto& [k, v] : fields.items()) {
        head += k + ",";
        row += (v.is_string() ? v.get<std::string>() : v.dump()) + ",";
      }
      std::cout << head << "value\n" << row << value << '\n';
      break;
    }
    case Format::pretty: std::cout << value << '\n'; break;
  }
}

struct Options {
  std::string format;
  std::string seq = "harmonic";
  long n = 0;
  std::string q = "1/2";
  bool conjugate = false;
  std::string route = "direct";
  std::string mode = "product";
  long order = -1;
  bool dual = false;
  std::string family = "monomial";
  std::string y;
  std::string which;
  std::string grid = "default";
  std::string s = "1/2";
  std::string x = "1/2";
  std::string py = "1/3";
  long trials = 100000;
  long seed = 42;
  int shards = 1;
  bool all = false;
  std::vector<std::string> ids;
  std::string module;
  std::string config_path;
  std::vector<std::string> settings;
  std::optional<long> n_max, m_max, r_max;
  std::string meixner;
  std::string corrupt;
  bool no_timing = false;
};

RunConfig run_config(const Options& o) {
  RunConfig c;
  if (!o.config_path.empty()) c = load_config(o.config_path, c);
  for (const auto& s : o.settings) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + s + "'");
    apply_setting(c, s.substr(0, eq), s.substr(eq + 1));
  }
  if (o.n_max) c.bounds.n_max = *o.n_max;
  if (o.m_max) c.bounds.m_max = *o.m_max;
  if (o.r_max) c.bounds.r_max = *o.r_max;
  if (!o.meixner.empty()) c.meixner = parse_meixner(o.meixner);
  if (!o.corrupt.empty()) apply_setting(c, "corrupt", o.corrupt);
  return c;
}

int run_verify(const Options& o, Format format, std::vector<std::string> ids, bool all) {
  if (!all && ids.empty()) throw ConfigError("verify needs --all, --id or --module");
  RunConfig config = run_config(o);
  if (all) ids.clear();
  const VerificationReport report = verify(ids, config);
  std::cout << render(report, format, !o.no_timing);
  return report.all_passed() ? exit_ok : exit_failed;
}

void add_verify_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_path, "key=value or JSON config file");
  cmd->add_option("--set", o.settings, "override one config key (key=value)");
  cmd->add_option("--n-max", o.n_max, "largest n");
  cmd->add_option("--m-max", o.m_max, "largest m");
  cmd->add_option("--r-max", o.r_max, "largest r");
  cmd->add_option("--meixner", o.meixner, "pochhammer|hypergeometric");
  cmd->add_option("--corrupt", o.corrupt, "add delta to M(n,j): n,j[,delta]");
  cmd->add_flag("--no-timing", o.no_timing, "omit wall-time fields");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bernoulli transform toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  const char* env = std::getenv("BTX_FORMAT");
  o.format = env && *env ? env : "pretty";
  app.add_option("--format", o.format, "json|csv|pretty (default from BTX_FORMAT)")->capture_default_str();

  auto* transform = app.add_subcommand("transform", "Bernoulli transform S_n(q)");
  transform->require_subcommand(1);
  auto* t_eval = transform->add_subcommand("eval", "evaluate S_n(q)");
  t_eval->add_option("--seq", o.seq, "sequence spec")->required();
  t_eval->add_option("--n", o.n, "index")->required();
  t_eval->add_option("--q", o.q, "parameter")->required();
  t_eval->add_flag("--conjugate", o.conjugate, "conjugate transform S_n(1-q)");
  t_eval->add_option("--route", o.route, "direct|basis|product|composed|all")->capture_default_str();
  auto* t_coeffs = transform->add_subcommand("coeffs", "coefficients of S_n in powers of q");
  t_coeffs->add_option("--seq", o.seq, "sequence spec")->required();
  t_coeffs->add_option("--n", o.n, "index")->required();
  t_coeffs->add_flag("--conjugate", o.conjugate, "conjugate transform");
  auto* t_gf = transform->add_subcommand("gf", "S_n(q) by generating-function coefficient extraction");
  t_gf->add_option("--seq", o.seq, "sequence spec")->required();
  t_gf->add_option("--n", o.n, "index")->required();
  t_gf->add_option("--q", o.q, "parameter")->required();
  t_gf->add_option("--mode", o.mode, "product|composed")->capture_default_str();
  t_gf->add_option("--order", o.order, "series order (default n)");

  auto* diff = app.add_subcommand("diff", "difference tables");
  diff->require_subcommand(1);
  auto* d_table = diff->add_subcommand("table", "M(n,0..n), or Mbar(0..n) with --dual");
  d_table->add_option("--seq", o.seq, "sequence spec")->required();
  d_table->add_option("--n", o.n, "index")->required();
  d_table->add_flag("--dual", o.dual, "forward differences Mbar(j)");

  auto* appell = app.add_subcommand("appell", "Appell polynomials");
  appell->require_subcommand(1);
  auto* a_poly = appell->add_subcommand("poly", "coefficients of f_n(y), or its value with --y");
  a_poly->add_option("--family", o.family, "monomial, generic:c0,c1,..., bernoulli:a=.., euler:a=..")->required();
  a_poly->add_option("--n", o.n, "degree")->required();
  a_poly->add_option("--y", o.y, "evaluate at y");
  auto* a_verify = appell->add_subcommand("verify", "run the Appell identity entries");
  a_verify->add_option("--which", o.which, "entry label, e.g. k1 (all Appell entries when omitted)");
  a_verify->add_option("--grid", o.grid, "default, or a config file with grid overrides")->capture_default_str();
  add_verify_options(a_verify, o);

  auto* pmf = app.add_subcommand("pmf", "exact laws");
  pmf->require_subcommand(1);
  auto* p_bin = pmf->add_subcommand("binomial", "Binomial(n, s)");
  p_bin->add_option("--n", o.n, "trials")->required();
  p_bin->add_option("--s", o.s, "success probability")->required();
  auto* p_comp = pmf->add_subcommand("compose", "law of T(Z(n))");
  p_comp->add_option("--n", o.n, "trials")->required();
  p_comp->add_option("--x", o.x, "P(X = 0)")->required();
  p_comp->add_option("--y", o.py, "P(Y = 0)")->required();
  auto* p_mc = pmf->add_subcommand("mc", "Monte Carlo check of T(Z(n)) (advisory)");
  o.n = 2;
  p_mc->add_option("--n", o.n, "trials per draw")->capture_default_str();
  p_mc->add_option("--x", o.x, "P(X = 0)")->capture_default_str();
  p_mc->add_option("--y", o.py, "P(Y = 0)")->capture_default_str();
  p_mc->add_option("--trials", o.trials, "number of draws")->capture_default_str();
  p_mc->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  p_mc->add_option("--shards", o.shards, "independent shards")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "verify registered identities");
  ver->add_flag("--all", o.all, "every entry");
  ver->add_option("--id", o.ids, "entry id (repeatable)");
  ver->add_option("--module", o.module, "entries of one module");
  add_verify_options(ver, o);

  auto* list = app.add_subcommand("list", "list registered identities");
  list->add_option("filter", o.module, "module tag or id prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  try {
    const Format format = parse_format(o.format);

    if (*t_eval) {
      const SequenceSpec spec = SequenceSpec::parse(o.seq);
      const Rational q = Rational::parse(o.q);
      Json fields = {{"seq", spec.str()}, {"n", o.n}, {"q", q.str()}, {"conjugate", o.conjugate}};
      if (o.route == "all") {
        if (o.conjugate) throw ConfigError("--route all applies to S_n(q) only");
        Json rows = Json::array();
        for (const auto& r : all_routes(spec, o.n, q)) {
          rows.push_back({{"route", to_string(r.provenance)}, {"value", r.value ? r.value->str() : ""}});
        }
        if (format == Format::json) {
          fields["routes"] = rows;
          std::cout << fields.dump() << '\n';
        } else {
          if (format == Format::csv) std::cout << "route,value\n";
          for (const auto& r : rows) {
            std::cout << r["route"].get<std::string>() << (format == Format::csv ? "," : "  ")
                      << r["value"].get<std::string>() << '\n';
          }
        }
        return exit_ok;
      }
      Rational value;
      if (o.route == "direct") {
        value = direct_transform(spec, o.n, q, o.conjugate);
      } else if (o.route == "basis") {
        value = basis_representation(spec, o.n, o.conjugate)(q);
      } else if (o.route == "product" || o.route == "composed") {
        if (o.conjugate) throw ConfigError("generating-function routes evaluate S_n(q) only");
        value = gf_transform(spec, o.n, q, o.route == "product" ? GfMode::product : GfMode::composed);
      } else {
        throw ConfigError("unknown route '" + o.route + "'");
      }
      fields["route"] = o.route;
      print_value(format, fields, value);
      return exit_ok;
    }
    if (*t_coeffs) {
      print_poly(format, "power", basis_representation(SequenceSpec::parse(o.seq), o.n, o.conjugate));
      return exit_ok;
    }
    if (*t_gf) {
      if (o.mode != "product" && o.mode != "composed") throw ConfigError("--mode must be product or composed");
      const SequenceSpec spec = SequenceSpec::parse(o.seq);
      const Rational q = Rational::parse(o.q);
      const Rational v = gf_transform(spec, o.n, q, o.mode == "product" ? GfMode::product : GfMode::composed, o.order);
      print_value(format, {{"seq", spec.str()}, {"n", o.n}, {"q", q.str()}, {"mode", o.mode}}, v);
      return exit_ok;
    }
    if (*d_table) {
      const SequenceSpec spec = SequenceSpec::parse(o.seq);
      if (o.n < 0) throw ConfigError("--n must be nonnegative");
      std::vector<Rational> values;
      if (o.dual) {
        for (long j = 0; j <= o.n; ++j) values.push_back(dual_diff(spec, j));
      } else {
        values = diff_table(spec, o.n).values;
      }
      print_list(format, "j", values);
      return exit_ok;
    }
    if (*a_poly) {
      if (o.n < 0) throw ConfigError("--n must be nonnegative");
      const AppellSpec spec = AppellSpec::parse(o.family);
      if (!o.y.empty()) {
        const Rational y = Rational::parse(o.y);
        print_value(format, {{"family", spec.str()}, {"n", o.n}, {"y", y.str()}},
                    appell_value(spec, static_cast<std::size_t>(o.n), y));
      } else {
        print_poly(format, "power", appell_poly(spec, static_cast<std::size_t>(o.n)));
      }
      return exit_ok;
    }
    if (*a_verify) {
      Options vo = o;
      if (o.grid != "default") vo.config_path = o.grid;
      std::vector<std::string> ids;
      for (const auto* e : list_identities("appell")) {
        if (o.which.empty() || e->paper_eq == o.which) ids.push_back(e->id);
      }
      if (ids.empty()) throw ConfigError("no Appell identity labelled '" + o.which + "'");
      return run_verify(vo, format, ids, false);
    }
    if (*p_bin) {
      print_list(format, "k", binomial_pmf(o.n, Rational::parse(o.s)).masses());
      return exit_ok;
    }
    if (*p_comp) {
      const Rational x = Rational::parse(o.x);
      const Rational y = Rational::parse(o.py);
      print_list(format, "k", compose_pmf(Rational(1) - y, binomial_pmf(o.n, Rational(1) - x)).masses());
      return exit_ok;
    }
    if (*p_mc) {
      if (o.trials < 1) throw ConfigError("--trials must be at least 1");
      if (o.seed < 0) throw ConfigError("--seed must be nonnegative");
      if (o.shards < 1) throw ConfigError("--shards must be at least 1");
      const auto r = monte_carlo_check(o.n, Rational::parse(o.x), Rational::parse(o.py), o.trials,
                                       static_cast<std::uint64_t>(o.seed), o.shards);
      if (format == Format::json) {
        Json out = {{"n", r.n},           {"x", r.x.str()},        {"y", r.y.str()},
                    {"trials", r.trials}, {"seed", r.seed},        {"shards", r.shards},
                    {"counts", r.counts}, {"exact", rational_list(r.exact.masses())},
                    {"flagged", r.flagged}, {"max_deviation_se", r.max_deviation_in_se}};
        std::cout << out.dump(2) << '\n';
      } else {
        if (format == Format::csv) std::cout << "k,count,exact,flagged\n";
        for (std::size_t k = 0; k < r.counts.size(); ++k) {
          const bool flagged = std::find(r.flagged.begin(), r.flagged.end(), static_cast<long>(k)) != r.flagged.end();
          if (format == Format::csv) {
            std::cout << k << ',' << r.counts[k] << ',' << r.exact[static_cast<long>(k)] << ',' << flagged << '\n';
          } else {
            std::cout << "k=" << k << "  " << r.counts[k] << " / " << r.trials << "  exact "
                      << r.exact[static_cast<long>(k)] << (flagged ? "  FLAGGED" : "") << '\n';
          }
        }
        if (format == Format::pretty) {
          std::cout << "seed " << r.seed << ", max deviation " << r.max_deviation_in_se << " standard errors, "
                    << r.flagged.size() << " flagged\n";
        }
      }
      return exit_ok;
    }
    if (*ver) {
      std::vector<std::string> ids = o.ids;
      if (!o.module.empty()) {
        const auto selected = list_identities(o.module);
        if (selected.empty()) throw ConfigError("no identities match '" + o.module + "'");
        for (const auto* e : selected) ids.push_back(e->id);
      }
      return run_verify(o, format, ids, o.all);
    }
    if (*list) {
      const auto entries = list_identities(o.module);
      if (format == Format::json) {
        Json out = Json::array();
        for (const auto* e : entries) {
          out.push_back({{"id", e->id}, {"paper_eq", e->paper_eq}, {"module", e->module}, {"summary", e->summary},
                         {"variables", e->variables}, {"gated", static_cast<bool>(e->gate)}});
        }
        std::cout << out.dump(2) << '\n';
      } else if (format == Format::csv) {
        std::cout << "id,paper_eq,module,summary\n";
        for (const auto* e : entries) {
          std::cout << e->id << ',' << e->paper_eq << ',' << e->module << ",\"" << e->summary << "\"\n";
        }
      } else {
        for (const auto* e : entries) {
          char line[64];
          std::snprintf(line, sizeof line, "%-9s %-6s %-12s", e->id.c_str(), e->paper_eq.c_str(), e->module.c_str());
          std::cout << line << e->summary << '\n';
        }
      }
      return exit_ok;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
