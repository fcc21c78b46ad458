#include "secrecy/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "secrecy/core_rates.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/relay.hpp"
#include "secrecy/verification.hpp"
#include "secrecy/wiretap.hpp"

namespace secrecy::cli {
namespace {

struct CommonArgs {
  int grid = kDefaultGrid;
  int alpha_grid = kDefaultAlphaGrid;
  int samples = kDefaultEnvelopeSamples;
  double tol = kDefaultTol;
  std::string format = "json";
  bool convex_hull = false;
  std::string plot_path;
};

struct Context {
  CommonArgs common;
  wiretap::WiretapParams wiretap;
  relay::RelayParams relay;
  std::string config_path;
  std::ostream* out = nullptr;
};

struct Output {
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::optional<std::string> plot_data;
};

void add_common(CLI::App* cmd, CommonArgs& c) {
  cmd->add_option("--grid", c.grid, "coarse grid points for scalar searches")
      ->check(CLI::Range(3, 1 << 24));
  cmd->add_option("--alpha-grid", c.alpha_grid, "grid points over the time-sharing factor")
      ->check(CLI::Range(3, 1 << 20));
  cmd->add_option("--tol", c.tol, "argument tolerance of golden-section refinement")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--samples", c.samples, "envelope r1 samples")->check(CLI::Range(2, 1 << 24));
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--emit-plot-data", c.plot_path, "write two-column plot samples to a file");
}

void add_wiretap_params(CLI::App* cmd, wiretap::WiretapParams& p) {
  cmd->add_option("--p", p.p, "Node 1 power");
  cmd->add_option("--pr", p.pr, "Node 2 power");
  cmd->add_option("--h1", p.h1, "squared gain Node 1 -> eavesdropper");
  cmd->add_option("--h2", p.h2, "squared gain Node 2 -> eavesdropper");
  cmd->add_option("--rho", p.rho, "correlation of N1 and N2");
  cmd->add_option("--eta", p.eta, "correlation of N2 and N3");
}

void add_relay_params(CLI::App* cmd, relay::RelayParams& p) {
  cmd->add_option("--p1", p.p1bar, "Node 1 average power");
  cmd->add_option("--p2", p.p2bar, "Node 2 average power");
  cmd->add_option("--prbar", p.prbar, "relay average power");
  cmd->add_option("--h", p.h, "squared relay -> Node 1 gain");
}

Json wiretap_inputs(const wiretap::WiretapParams& p) {
  return Json{{"p", rounded(p.p)},   {"pr", rounded(p.pr)},   {"h1", rounded(p.h1)},
              {"h2", rounded(p.h2)}, {"rho", rounded(p.rho)}, {"eta", rounded(p.eta)}};
}

Json relay_inputs(const relay::RelayParams& p) {
  return Json{{"p1", rounded(p.p1bar)}, {"p2", rounded(p.p2bar)}, {"prbar", rounded(p.prbar)},
              {"h", rounded(p.h)}};
}

Json infimum_json(const wiretap::InfimumResult& r) {
  return Json{{"value", rounded(r.value)},
              {"t_star", rounded(r.t_star)},
              {"sigma2_star", rounded(r.sigma2_star)},
              {"at_limit", r.at_limit},
              {"limit_value", rounded(r.limit_value)},
              {"t_max_value", rounded(r.t_one_value)}};
}

Json relay_rate_json(const relay::RelayRate& r) {
  return Json{{"rate", rounded(r.rate)},
              {"alpha_star", rounded(r.alpha_star)},
              {"p_prime_star", rounded(r.p_prime_star)}};
}

// --- wiretap -------------------------------------------------------------

Output wiretap_achievable(const Context& ctx) {
  const auto& p = ctx.wiretap;
  const wiretap::SearchOptions opts{ctx.common.grid, ctx.common.tol};
  const auto s1 = wiretap::r_star(p, wiretap::Node::one, opts);
  const auto s2 = wiretap::r_star(p, wiretap::Node::two, opts);
  const auto region = triangle_region(s1.rate, s2.rate);
  Output o;
  o.inputs = wiretap_inputs(p);
  o.outputs = Json{{"r1_star", rounded(s1.rate)},
                   {"alpha1_star", rounded(s1.alpha_star)},
                   {"r2_star", rounded(s2.rate)},
                   {"alpha2_star", rounded(s2.alpha_star)},
                   {"r1_no_feedback", rounded(wiretap::r1_no_feedback(p))},
                   {"r2_no_feedback", rounded(wiretap::r2_no_feedback(p))},
                   {"sum_rate", rounded(region_sum_rate(region))},
                   {"region", to_json(region)}};
  o.plot_data = to_plot_data(region);
  return o;
}

Output wiretap_outer(const Context& ctx) {
  const auto& p = ctx.wiretap;
  const wiretap::SearchOptions opts{ctx.common.grid, ctx.common.tol};
  const auto outer = wiretap::outer_region(p, opts);
  const auto r1_bound = wiretap::outer_r1_no_feedback(p, opts);
  Output o;
  o.inputs = wiretap_inputs(p);
  o.outputs = Json{{"r1_cap", rounded(outer.r1_cap)},
                   {"r2_cap", rounded(outer.r2_cap)},
                   {"sum_cap", rounded(outer.sum_cap)},
                   {"branch1", infimum_json(outer.branch1)},
                   {"branch2", infimum_json(outer.branch2)},
                   {"r1_no_feedback_bound", infimum_json(r1_bound)},
                   {"region", to_json(outer.region)}};
  o.plot_data = to_plot_data(outer.region);
  return o;
}

Output wiretap_gap(const Context& ctx) {
  const auto& p = ctx.wiretap;
  if (p.rho != 0.0 || p.eta != 0.0) throw DomainError("gap certificate needs rho = eta = 0");
  if (!(p.p > 0.0)) throw DomainError("gap certificate needs p > 0");
  const double k = p.pr / p.p;
  const auto g = wiretap::constant_gap_certificate(p.p, k, p.h1, p.h2);
  Output o;
  o.inputs = wiretap_inputs(p);
  o.outputs = Json{{"k", rounded(k)},
                   {"gap1", rounded(g.gap1)},
                   {"gap1_const", rounded(g.gap1_const)},
                   {"gap1_holds", g.gap1_holds},
                   {"gap2", rounded(g.gap2)},
                   {"gap2_const", rounded(g.gap2_const)},
                   {"gap2_holds", g.gap2_holds}};
  return o;
}

Output wiretap_demo_unbounded(const Context& ctx) {
  const auto d = wiretap::unbounded_gap_demo(ctx.wiretap.p);
  Output o;
  o.inputs = Json{{"p", rounded(ctx.wiretap.p)}, {"pr", rounded(d.pr)}, {"h1", 1.0}, {"h2", 1.0},
                  {"alpha", 0.5}};
  o.outputs = Json{{"no_feedback_upper", rounded(d.no_feedback_upper)},
                   {"feedback_achievable", rounded(d.feedback_achievable)},
                   {"half_capacity", rounded(d.half_capacity)},
                   {"gap", rounded(d.feedback_achievable - d.no_feedback_upper)},
                   {"saturated", d.saturated},
                   {"conditions_hold", d.conditions_hold}};
  return o;
}

Output wiretap_degraded(const Context& ctx) {
  const auto& p = ctx.wiretap;
  const auto b = wiretap::degraded_bounds(p.p, p.pr, p.h1, p.h2);
  Output o;
  o.inputs = Json{{"p", rounded(p.p)}, {"pr", rounded(p.pr)}, {"h1", rounded(p.h1)},
                  {"h2", rounded(p.h2)}, {"rho", rounded(std::sqrt(p.h1))}};
  o.outputs = Json{{"achievable", rounded(b.achievable)},
                   {"bound81", rounded(b.bound81)},
                   {"bound115", rounded(b.bound115)},
                   {"gap", rounded(b.bound81 - b.achievable)}};
  return o;
}

// --- relay ---------------------------------------------------------------

relay::RelaySearchOptions relay_opts(const CommonArgs& c) {
  return relay::RelaySearchOptions{c.alpha_grid, c.alpha_grid, c.tol};
}

Output relay_achievable(const Context& ctx) {
  const auto opts = relay_opts(ctx.common);
  const auto r1 = relay::achievable_r1(ctx.relay, opts);
  const auto r2 = relay::achievable_r2(ctx.relay, opts);
  const auto region = triangle_region(r1.rate, r2.rate);
  Output o;
  o.inputs = relay_inputs(ctx.relay);
  o.outputs = Json{{"r1", relay_rate_json(r1)},
                   {"r2", relay_rate_json(r2)},
                   {"r2_construction", "extrapolated: mirrored rate with forwarding budget C(h Pr)"},
                   {"sum_rate", rounded(region_sum_rate(region))},
                   {"region", to_json(region)}};
  o.plot_data = to_plot_data(region);
  return o;
}

Output relay_outer(const Context& ctx) {
  const auto outer = relay::outer_region(ctx.relay, ctx.common.alpha_grid, ctx.common.samples);
  Json members = Json::array();
  for (const auto& [alpha, region] : outer.per_alpha) {
    Json m = to_json(region);
    m["alpha"] = rounded(alpha);
    members.push_back(std::move(m));
  }
  Output o;
  o.inputs = relay_inputs(ctx.relay);
  o.outputs = Json{{"sum_rate", rounded(region_sum_rate(outer.envelope))},
                   {"envelope", to_json(outer.envelope)},
                   {"per_alpha", std::move(members)}};
  if (ctx.common.convex_hull) {
    const auto hull = convex_hull(outer.envelope);
    o.outputs["convex_hull"] = to_json(hull);
    o.outputs["convex_hull"]["label"] = "time-shared convex hull of the union (not the plain union)";
    o.outputs["convex_hull_sum_rate"] = rounded(region_sum_rate(hull));
  }
  o.plot_data = to_plot_data(outer.envelope);
  return o;
}

Output relay_asymptotic(const Context& ctx) {
  const auto a = relay::asymptotic_regions(ctx.relay);
  Output o;
  o.inputs = relay_inputs(ctx.relay);
  o.outputs = Json{{"outer_sum_cap", rounded(region_sum_rate(a.outer))},
                   {"achievable_sum_cap", rounded(region_sum_rate(a.achievable))},
                   {"gap", rounded(lemma1_h(ctx.relay.p1bar, ctx.relay.p2bar))},
                   {"outer", to_json(a.outer)},
                   {"achievable", to_json(a.achievable)}};
  o.plot_data = to_plot_data(a.outer);
  return o;
}

Output relay_gap(const Context& ctx) {
  const auto g = relay::cor3_gap(ctx.relay, relay_opts(ctx.common), ctx.common.alpha_grid,
                                 ctx.common.samples);
  Output o;
  o.inputs = relay_inputs(ctx.relay);
  o.outputs = Json{{"asymptotic_gap", rounded(g.asymptotic_gap)},
                   {"outer_sum_rate", rounded(g.outer_sum_rate)},
                   {"achievable_sum_rate", rounded(g.achievable_sum_rate)},
                   {"empirical_gap", rounded(g.empirical_gap)}};
  return o;
}

// --- demo / verify ---------------------------------------------------------

Output demo_feedback(const Context&) {
  const auto ex = wiretap::feedback_example_rate();
  const auto params = wiretap::feedback_example_params();
  Output o;
  o.inputs = wiretap_inputs(params);
  o.outputs = Json{{"per_two_uses", rounded(ex.per_two_uses)},
                   {"per_use", rounded(ex.per_use)},
                   {"closed_form", rounded(ex.closed_form)},
                   {"crosscheck_delta", rounded(ex.crosscheck_delta)},
                   {"r1_no_feedback", rounded(wiretap::r1_no_feedback(params))}};
  return o;
}

void emit(const Context& ctx, const std::string& model, const Output& o) {
  if (!ctx.common.plot_path.empty()) {
    if (!o.plot_data) throw DomainError("this command has no plot data");
    std::ofstream f(ctx.common.plot_path);
    if (!f) throw DomainError("cannot write plot data to " + ctx.common.plot_path);
    f << *o.plot_data;
  }
  if (ctx.common.format == "csv") {
    *ctx.out << flat_csv(o.outputs);
    return;
  }
  Json doc{{"model", model},
           {"inputs", o.inputs},
           {"outputs", o.outputs},
           {"meta", {{"grid", ctx.common.grid}, {"tol", ctx.common.tol}, {"version", kVersion}}}};
  *ctx.out << doc.dump(2) << '\n';
}

int run_verify(const Context& ctx, std::ostream& err) {
  const auto results = verification::run_invariant_suite();
  int passed = 0;
  int counted = 0;
  Json checks = Json::array();
  for (const auto& r : results) {
    if (!r.informational) {
      ++counted;
      if (r.passed) ++passed;
    }
    err << (r.informational ? "INFO " : (r.passed ? "PASS " : "FAIL ")) << r.name << ": " << r.detail
        << '\n';
    checks.push_back(Json{{"name", r.name},
                          {"status", r.informational ? "info" : (r.passed ? "pass" : "fail")},
                          {"detail", r.detail}});
  }
  err << passed << "/" << counted << " checks passed\n";
  Output o;
  o.outputs = Json{{"passed", passed}, {"total", counted}, {"checks", std::move(checks)}};
  Context c = ctx;
  c.common.plot_path.clear();
  if (c.common.format == "csv") {
    *c.out << "passed,total\n" << passed << "," << counted << "\n";
  } else {
    emit(c, "verify", o);
  }
  return passed == counted ? kOk : kNumericalError;
}

int run_sweep_command(const Context& ctx, bool format_given) {
  std::ifstream f(ctx.config_path);
  if (!f) throw DomainError("cannot read sweep config " + ctx.config_path);
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("sweep config is not valid JSON: ") + e.what());
  }
  SweepConfig cfg = parse_sweep_config(doc);
  if (format_given) cfg.format = ctx.common.format == "csv" ? Format::csv : Format::json;
  const SweepTable table = run_sweep(cfg);

  if (!ctx.common.plot_path.empty() && table.columns.size() >= 2) {
    std::ofstream plot(ctx.common.plot_path);
    if (!plot) throw DomainError("cannot write plot data to " + ctx.common.plot_path);
    const std::size_t y = cfg.swept.empty() ? 0 : cfg.swept.size();
    for (const auto& row : table.rows) {
      plot << format_number(row[0]) << ' ' << format_number(row[std::min(y, row.size() - 1)]) << '\n';
    }
  }

  if (cfg.format == Format::csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) *ctx.out << (i ? "," : "") << table.columns[i];
    *ctx.out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) *ctx.out << (i ? "," : "") << format_number(row[i]);
      *ctx.out << '\n';
    }
    return kOk;
  }

  Json fixed = Json::object();
  for (const auto& [name, value] : cfg.fixed) fixed[name] = rounded(value);
  Json swept = Json::object();
  for (const auto& [name, axis] : cfg.swept) {
    swept[name] = Json{{"min", rounded(axis.min)},
                       {"max", rounded(axis.max)},
                       {"count", axis.count},
                       {"scale", axis.log_scale ? "log" : "linear"}};
  }
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r = Json::array();
    for (double x : row) r.push_back(rounded(x));
    rows.push_back(std::move(r));
  }
  Json out_doc{{"model", cfg.model},
               {"inputs", {{"fixed", fixed}, {"swept", swept}}},
               {"outputs", {{"columns", table.columns}, {"rows", rows}}},
               {"meta", {{"grid", cfg.grid}, {"tol", cfg.tol}, {"version", kVersion}}}};
  *ctx.out << out_doc.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secrecy rate regions, outer bounds and gap certificates for the Gaussian "
               "two-way wiretap channel and the two-way relay channel with an untrusted relay",
               "secrecy-cli"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  Context ctx;
  ctx.out = &out;
  std::function<Output(const Context&)> action;
  std::string model;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  const std::string& model_name, auto fn) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    add_common(cmd, ctx.common);
    cmd->callback([&, fn, model_name] {
      action = fn;
      model = model_name;
    });
    return cmd;
  };

  CLI::App* wt = app.add_subcommand("wiretap", "Gaussian two-way wiretap channel");
  wt->require_subcommand(1);
  for (auto* c : {leaf(wt, "achievable", "key-then-message achievable region", "wiretap",
                       wiretap_achievable),
                  leaf(wt, "outer", "outer region and the no-feedback Node-1 bound", "wiretap",
                       wiretap_outer),
                  leaf(wt, "gap", "constant-gap certificate for Pr = k P", "wiretap", wiretap_gap),
                  leaf(wt, "demo-unbounded", "Pr = P^(1/4) comparison at alpha = 0.5", "wiretap",
                       wiretap_demo_unbounded),
                  leaf(wt, "degraded", "degraded-eavesdropper rate and bounds", "wiretap",
                       wiretap_degraded)}) {
    add_wiretap_params(c, ctx.wiretap);
  }

  CLI::App* rl = app.add_subcommand("relay", "two-way relay channel with an untrusted relay");
  rl->require_subcommand(1);
  for (auto* c : {leaf(rl, "achievable", "compress-and-forward achievable region", "relay",
                       relay_achievable),
                  leaf(rl, "outer", "union-over-alpha outer envelope", "relay", relay_outer),
                  leaf(rl, "asymptotic", "regions as the relay power grows", "relay",
                       relay_asymptotic),
                  leaf(rl, "gap", "sum-rate gap, asymptotic and at the given relay power",
                       "relay", relay_gap)}) {
    add_relay_params(c, ctx.relay);
  }
  rl->get_subcommand("outer")->add_flag("--convex-hull", ctx.common.convex_hull,
                                         "also report the time-shared convex hull");

  CLI::App* demo = app.add_subcommand("demo", "fixed worked examples");
  demo->require_subcommand(1);
  leaf(demo, "feedback-example", "two-step feedback scheme beating the no-feedback rate",
       "wiretap", demo_feedback);

  bool verify_requested = false;
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  add_common(verify, ctx.common);
  verify->callback([&] { verify_requested = true; });

  bool sweep_requested = false;
  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep from a JSON config");
  add_common(sweep, ctx.common);
  sweep->add_option("--config", ctx.config_path, "sweep config path")->required();
  sweep->callback([&] { sweep_requested = true; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kValidationError;
  }

  try {
    if (verify_requested) return run_verify(ctx, err);
    if (sweep_requested) return run_sweep_command(ctx, sweep->count("--format") > 0);
    if (!action) {
      err << app.help();
      return kValidationError;
    }
    emit(ctx, model, action(ctx));
    return kOk;
  } catch (const DomainError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  } catch (const Json::exception& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  }
}

}  // namespace secrecy::cli
