#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ladderlab/analytic.hpp"
#include "ladderlab/checkpoint.hpp"
#include "ladderlab/constants.hpp"
#include "ladderlab/error.hpp"
#include "ladderlab/functional.hpp"
#include "ladderlab/ladder.hpp"

namespace ladderlab::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kCacheEnv = "LADDERLAB_CACHE";

struct GlobalOptions {
  double precision = kDefaultPrecisionTarget;
  std::string mode = "asymptotic";
  std::string backend = "real";
  std::string cache;
  std::string format = "csv";
  unsigned workers = 1;
};

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return {};
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (const char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + '"';
  }
  return v.dump();
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(const std::vector<Json>& values) {
    Json row = Json::object();
    for (std::size_t i = 0; i < columns_.size(); ++i) row[columns_[i]] = values.at(i);
    rows_.push_back(std::move(row));
  }

  void write(std::ostream& out, const std::string& format, Json config, const Json& summary) const {
    config["timestamp"] = utc_timestamp();
    if (format == "json") {
      Json doc;
      doc["config"] = std::move(config);
      doc["rows"] = rows_;
      doc["summary"] = summary;
      out << doc.dump(2) << '\n';
      return;
    }
    out << "# " << config.dump() << '\n';
    for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
    out << '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        out << (i ? "," : "") << csv_cell(row[columns_[i]]);
      }
      out << '\n';
    }
    if (!summary.is_null()) out << "# summary " << summary.dump() << '\n';
  }

 private:
  std::vector<std::string> columns_;
  Json rows_ = Json::array();
};

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

// Shared state built from the global options once parsing has succeeded.
struct Context {
  GlobalOptions global;
  std::unique_ptr<CheckpointStore> store;

  LabSettings lab_settings() const {
    LabSettings s;
    s.ladder.mode = global.mode == "quadrature" ? LadderMode::quadrature : LadderMode::asymptotic;
    s.moments.backend = global.backend == "synthetic" ? Backend::synthetic : Backend::real;
    s.moments.analytic.precision_target = global.precision;
    s.moments.policy.workers = global.workers;
    s.moments.cache = store.get();
    s.mean_square.policy.workers = global.workers;
    s.workers = global.workers;
    return s;
  }

  Json config(const std::string& command) const {
    Json c;
    c["command"] = command;
    c["precision_target"] = global.precision;
    c["mode"] = global.mode;
    c["backend"] = global.backend;
    c["cache"] = global.cache.empty() ? Json(nullptr) : Json(global.cache);
    c["format"] = global.format;
    c["workers"] = global.workers;
    return c;
  }
};

struct EvalOptions {
  std::string fn;
  double sigma = 0.5;
  std::vector<double> t;
};

void cmd_eval(const Context& ctx, const EvalOptions& o, std::ostream& out) {
  AnalyticConfig analytic;
  analytic.precision_target = ctx.global.precision;
  Table table({"fn", "sigma", "t", "re", "im"});
  std::optional<S1Profile> profile;
  if (o.fn == "s1") {
    double t_max = 1.0;
    for (const double t : o.t) t_max = std::max(t_max, t);
    profile.emplace(t_max, analytic);
  }
  for (const double t : o.t) {
    double re = 0.0;
    double im = 0.0;
    if (o.fn == "zeta") {
      const auto z = zeta_em(o.sigma, t, analytic);
      re = z.real();
      im = z.imag();
    } else if (o.fn == "hardy-z") {
      re = hardy_z(t, analytic);
    } else if (o.fn == "theta") {
      re = rs_theta(t);
    } else if (o.fn == "s") {
      re = s_of_t(t, analytic);
    } else if (o.fn == "s1") {
      re = profile->s1(t);
    } else {
      re = static_cast<double>(zero_count(t, analytic));
    }
    table.add({o.fn, o.fn == "zeta" ? Json(o.sigma) : Json(0.5), t, re, im});
  }
  Json config = ctx.config("eval");
  config["fn"] = o.fn;
  config["sigma"] = o.sigma;
  config["t"] = o.t;
  table.write(out, ctx.global.format, std::move(config), nullptr);
}

struct LadderOptions {
  double T = 0.0;
  int k = 5;
  bool no_segments = false;
};

void cmd_ladder(const Context& ctx, const LadderOptions& o, std::ostream& out) {
  const LabSettings s = ctx.lab_settings();
  const Ladder ladder(s.ladder, s.moments);
  const auto seq = ladder.reverse_iterates(o.T, o.k, !o.no_segments);
  PartitionReport report;
  if (!o.no_segments && o.k > 0) {
    const double span = seq.iterates.back() - seq.iterates.front();
    report = partition_report(seq, s.ladder.j_tol * std::max(1.0, span), s.moments);
  } else {
    report = partition_report(seq, 1.0, s.moments);
  }

  Table table({"r", "iterate", "increment", "increment_ratio", "segment_integral",
               "segment_error", "normalized_segment"});
  bool increasing = true;
  for (int r = 0; r <= o.k; ++r) {
    const auto i = static_cast<std::size_t>(r);
    Json increment = nullptr, ratio = nullptr, segment = nullptr, error = nullptr, normalized = nullptr;
    if (r >= 1) {
      increment = seq.increments[i - 1];
      increasing = increasing && seq.increments[i - 1] > 0.0;
      if (r >= 2) ratio = report.increment_ratios[i - 2];
      if (!seq.segment_integrals.empty()) {
        segment = seq.segment_integrals[i - 1];
        error = seq.segment_errors[i - 1];
        normalized = report.normalized_segments[i - 1];
      }
    }
    table.add({r, seq.iterates[i], increment, ratio, segment, error, normalized});
  }
  Json summary;
  summary["strictly_increasing"] = increasing;
  if (!seq.segment_integrals.empty()) {
    summary["telescoping_sum"] = report.telescoping_sum;
    summary["whole_integral"] = report.whole_integral;
    summary["telescoping_gap"] = std::abs(report.telescoping_sum - report.whole_integral);
    summary["error_budget"] = report.error_budget;
  }
  Json config = ctx.config("ladder");
  config["T"] = o.T;
  config["k"] = o.k;
  config["segments"] = !o.no_segments;
  config["j_tol"] = s.ladder.j_tol;
  config["root_tol"] = s.ladder.root_tol;
  table.write(out, ctx.global.format, std::move(config), summary);
}

struct FunctionalOptions {
  std::string kind = "prod3";
  double x = 1.0;
  std::vector<double> tau;
  int l = 1;
  double sigma = 1.0;
  std::optional<double> cbar;
  std::vector<double> cbar_grid{500.0, 1000.0};
  std::string family = "unit:2,mobius:2";
};

// Resolves c-bar: the explicit value if given, otherwise a fresh estimate.
double resolve_cbar(const FunctionalLab& lab, const FunctionalOptions& o, Json& config) {
  if (o.cbar) {
    if (!(*o.cbar > 0.0)) throw Error(ErrorKind::domain, "--cbar must be positive");
    config["cbar"] = *o.cbar;
    config["cbar_source"] = "given";
    return *o.cbar;
  }
  const auto est = lab.estimate_cbar(o.l, o.cbar_grid);
  config["cbar"] = est.adopted;
  config["cbar_source"] = "estimated";
  config["cbar_grid"] = o.cbar_grid;
  config["cbar_spread"] = est.spread();
  return est.adopted;
}

Json functional_config(const Context& ctx, const std::string& command,
                       const FunctionalOptions& o) {
  Json config = ctx.config(command);
  config["kind"] = o.kind;
  config["x"] = o.x;
  config["tau"] = o.tau;
  config["l"] = o.l;
  config["sigma"] = o.sigma;
  config["family"] = o.family;
  return config;
}

void cmd_functional(const Context& ctx, const FunctionalOptions& o, std::ostream& out) {
  const FunctionalLab lab(ctx.lab_settings());
  const FunctionalKind kind = functional_kind_from_string(o.kind);
  Json config = functional_config(ctx, "functional", o);
  double cbar = 0.0;
  if (kind == FunctionalKind::prod3 || kind == FunctionalKind::lin3) {
    cbar = resolve_cbar(lab, o, config);
  }
  std::optional<SeriesFamily> family;
  if (kind == FunctionalKind::dprod) family = family_from_string(o.family);

  Table table({"kind", "x", "tau", "upper_limit", "estimate", "deviation", "l", "sigma", "cbar",
               "family", "backend", "mode"});
  for (const double tau : o.tau) {
    FunctionalEstimate e;
    switch (kind) {
      case FunctionalKind::prod3: e = lab.prod3(o.x, o.l, o.sigma, tau, cbar); break;
      case FunctionalKind::lin3: e = lab.lin3(o.x, o.l, o.sigma, tau, cbar); break;
      case FunctionalKind::dprod: e = lab.dprod(o.x, *family, tau); break;
      case FunctionalKind::divisor: e = lab.divisor(o.x, tau); break;
    }
    const bool uses_l = kind == FunctionalKind::prod3 || kind == FunctionalKind::lin3;
    table.add({to_string(e.kind), e.target_x, e.tau, e.upper_limit, e.estimate, e.deviation,
               uses_l ? Json(e.parameters.l) : Json(nullptr),
               uses_l ? Json(e.parameters.sigma) : Json(nullptr),
               uses_l ? Json(e.parameters.cbar) : Json(nullptr),
               kind == FunctionalKind::dprod ? Json(e.parameters.family_id) : Json(nullptr),
               to_string(e.parameters.backend), to_string(e.parameters.ladder.mode)});
  }
  table.write(out, ctx.global.format, std::move(config), nullptr);
}

struct ScanOptions {
  FunctionalOptions functional;
  double tau = 1e4;
  FermatBounds bounds{10, 10, 10, 3, 5};
};

void cmd_scan(const Context& ctx, const ScanOptions& o, std::ostream& out) {
  const FunctionalLab lab(ctx.lab_settings());
  const auto& f = o.functional;
  const FunctionalKind kind = functional_kind_from_string(f.kind);
  Json config = functional_config(ctx, "scan", f);
  config.erase("x");
  config["tau"] = o.tau;
  config["x_max"] = o.bounds.x_max;
  config["y_max"] = o.bounds.y_max;
  config["z_max"] = o.bounds.z_max;
  config["n_min"] = o.bounds.n_min;
  config["n_max"] = o.bounds.n_max;
  double cbar = 0.0;
  if (kind == FunctionalKind::prod3 || kind == FunctionalKind::lin3) {
    cbar = resolve_cbar(lab, f, config);
  }
  std::optional<SeriesFamily> family;
  if (kind == FunctionalKind::dprod) family = family_from_string(f.family);

  const auto evaluate = [&](double x) {
    switch (kind) {
      case FunctionalKind::prod3: return lab.prod3(x, f.l, f.sigma, o.tau, cbar).estimate;
      case FunctionalKind::lin3: return lab.lin3(x, f.l, f.sigma, o.tau, cbar).estimate;
      case FunctionalKind::dprod: return lab.dprod(x, *family, o.tau).estimate;
      case FunctionalKind::divisor: return lab.divisor(x, o.tau).estimate;
    }
    return 0.0;
  };
  Table table({"x", "y", "z", "n", "exact", "float_value", "estimate", "estimate_minus_exact",
               "abs_estimate_minus_one", "abs_exact_minus_one"});
  const auto summary = lab.fermat_scan(o.bounds, evaluate, [&](const FermatScanRow& row) {
    table.add({row.x, row.y, row.z, row.n, row.exact, row.float_value, number_or_null(row.estimate),
               number_or_null(row.estimate - row.float_value),
               number_or_null(row.estimate_deviation_from_one),
               row.exact_deviation_from_one});
  });
  Json s;
  s["tuples"] = summary.tuples;
  s["fermat_equalities"] = summary.fermat_equalities;
  s["predicate_held"] = summary.fermat_equalities == 0;
  s["evaluation_failures"] = summary.evaluation_failures;
  s["max_abs_estimate_minus_exact"] = summary.max_abs_estimate_minus_exact;
  s["max_rel_estimate_minus_exact"] = summary.max_rel_estimate_minus_exact;
  s["min_abs_exact_minus_one"] = number_or_null(summary.min_exact_deviation_from_one);
  table.write(out, ctx.global.format, std::move(config), s);
}

void cmd_chain(const Context& ctx, const FunctionalOptions& o, std::ostream& out) {
  const FunctionalLab lab(ctx.lab_settings());
  Json config = functional_config(ctx, "chain", o);
  config.erase("kind");
  const double cbar = resolve_cbar(lab, o, config);
  const SeriesFamily family = family_from_string(o.family);
  Table table({"x", "tau", "prod3_inner", "dprod_inner", "divisor_segment", "prod3_over_dprod",
               "prod3_over_divisor", "dprod_over_divisor"});
  for (const double tau : o.tau) {
    const auto c = lab.chain_compare(o.x, o.l, o.sigma, cbar, family, tau);
    table.add({c.target_x, c.tau, c.prod3_inner, c.dprod_inner, c.divisor_segment,
               c.prod3_over_dprod, c.prod3_over_divisor, c.dprod_over_divisor});
  }
  table.write(out, ctx.global.format, std::move(config), nullptr);
}

void add_functional_options(CLI::App* cmd, FunctionalOptions& o, bool with_cbar_grid) {
  cmd->add_option("--l", o.l, "Moment order of S1")->check(CLI::PositiveNumber);
  cmd->add_option("--sigma", o.sigma, "Abscissa for the Hardy-Littlewood factor");
  cmd->add_option("--cbar", o.cbar, "Selberg constant; estimated when omitted");
  if (with_cbar_grid) {
    cmd->add_option("--cbar-grid", o.cbar_grid, "T grid for estimating cbar")->delimiter(',');
  }
  cmd->add_option("--family", o.family, "Comma-separated series tokens, e.g. unit:2,mobius:2");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacob's ladder and limit-functional laboratory", "ladderlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from a key=value file");

  Context ctx;
  auto& g = ctx.global;
  app.add_option("--precision", g.precision, "Absolute precision target for zeta")
      ->check(CLI::PositiveNumber);
  app.add_option("--mode", g.mode, "Ladder mode")
      ->check(CLI::IsMember({"quadrature", "asymptotic"}));
  app.add_option("--backend", g.backend, "Moment backend")
      ->check(CLI::IsMember({"real", "synthetic"}));
  app.add_option("--cache", g.cache, std::string("Checkpoint file (default $") + kCacheEnv + ")");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--workers", g.workers, "Worker threads")->check(CLI::Range(1u, 1024u));

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate zeta, Z, theta, S, S1 or N");
  eval_cmd->add_option("--fn", eval.fn, "Function")
      ->required()
      ->check(CLI::IsMember({"zeta", "hardy-z", "theta", "s", "s1", "count"}));
  eval_cmd->add_option("--sigma", eval.sigma, "Real part for zeta");
  eval_cmd->add_option("--t", eval.t, "Heights")->required()->delimiter(',');

  LadderOptions ladder;
  auto* ladder_cmd = app.add_subcommand("ladder", "Reverse iterates of the ladder");
  ladder_cmd->add_option("--T", ladder.T, "Starting point")->required();
  ladder_cmd->add_option("--k", ladder.k, "Number of reverse steps")->check(CLI::NonNegativeNumber);
  ladder_cmd->add_flag("--no-segments", ladder.no_segments, "Skip segment integrals");

  FunctionalOptions functional;
  auto* functional_cmd = app.add_subcommand("functional", "Evaluate a limit functional");
  functional_cmd->add_option("--kind", functional.kind, "prod3, lin3, dprod or divisor")
      ->check(CLI::IsMember({"prod3", "lin3", "dprod", "divisor"}));
  functional_cmd->add_option("--x", functional.x, "Target value")->check(CLI::PositiveNumber);
  functional_cmd->add_option("--tau,--tau-grid", functional.tau, "Scale parameter(s)")
      ->required()
      ->delimiter(',');
  add_functional_options(functional_cmd, functional, true);

  ScanOptions scan;
  scan.functional.kind = "dprod";
  auto* scan_cmd = app.add_subcommand("scan", "Scan Fermat rationals");
  scan_cmd->add_option("--kind", scan.functional.kind, "Functional to evaluate")
      ->check(CLI::IsMember({"prod3", "lin3", "dprod", "divisor"}));
  scan_cmd->add_option("--tau", scan.tau, "Scale parameter")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--x-max", scan.bounds.x_max)->check(CLI::Range(1, 1000));
  scan_cmd->add_option("--y-max", scan.bounds.y_max)->check(CLI::Range(1, 1000));
  scan_cmd->add_option("--z-max", scan.bounds.z_max)->check(CLI::Range(1, 1000));
  scan_cmd->add_option("--n-min", scan.bounds.n_min)->check(CLI::Range(3, 1000));
  scan_cmd->add_option("--n-max", scan.bounds.n_max)->check(CLI::Range(3, 1000));
  add_functional_options(scan_cmd, scan.functional, true);

  FunctionalOptions chain;
  auto* chain_cmd = app.add_subcommand("chain", "Compare the chained quantities");
  chain_cmd->add_option("--x", chain.x, "Target value")->check(CLI::PositiveNumber);
  chain_cmd->add_option("--tau,--tau-grid", chain.tau, "Scale parameter(s)")
      ->required()
      ->delimiter(',');
  add_functional_options(chain_cmd, chain, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? 0 : 2;
  }

  try {
    if (g.cache.empty()) {
      if (const char* env = std::getenv(kCacheEnv); env != nullptr && *env != '\0') g.cache = env;
    }
    if (!g.cache.empty()) {
      ctx.store = std::make_unique<CheckpointStore>(g.cache);
      for (const auto& w : ctx.store->warnings()) err << "warning: " << w << '\n';
    }
    if (*eval_cmd) {
      cmd_eval(ctx, eval, out);
    } else if (*ladder_cmd) {
      cmd_ladder(ctx, ladder, out);
    } else if (*functional_cmd) {
      cmd_functional(ctx, functional, out);
    } else if (*scan_cmd) {
      cmd_scan(ctx, scan, out);
    } else if (*chain_cmd) {
      cmd_chain(ctx, chain, out);
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return is_numeric_failure(e.kind()) ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ladderlab::cli
