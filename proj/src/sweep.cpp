#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "secrecy/cli.hpp"
#include "secrecy/core_rates.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/relay.hpp"
#include "secrecy/wiretap.hpp"

namespace secrecy::cli {
namespace {

const std::vector<std::string>& parameter_names(const std::string& model) {
  static const std::vector<std::string> wiretap{"p", "pr", "h1", "h2", "rho", "eta"};
  static const std::vector<std::string> relay{"p1", "p2", "prbar", "h"};
  if (model == "wiretap") return wiretap;
  if (model == "relay") return relay;
  throw DomainError("model must be \"wiretap\" or \"relay\"");
}

std::map<std::string, double> parameter_defaults(const std::string& model) {
  if (model == "wiretap") return {{"rho", 0.0}, {"eta", 0.0}};
  return {{"h", 1.0}};
}

// One sweep point. Expensive intermediate results are computed on first use.
struct WiretapPoint {
  wiretap::WiretapParams params;
  wiretap::SearchOptions opts;
  std::optional<wiretap::StarRate> star1, star2;
  std::optional<wiretap::InfimumResult> r1_bound;
  std::optional<wiretap::OuterRegion> outer;
  std::optional<wiretap::GapCertificate> gap;
  std::optional<wiretap::DegradedBounds> degraded;
  std::optional<wiretap::UnboundedGapDemo> demo;

  const wiretap::StarRate& s1() {
    if (!star1) star1 = wiretap::r_star(params, wiretap::Node::one, opts);
    return *star1;
  }
  const wiretap::StarRate& s2() {
    if (!star2) star2 = wiretap::r_star(params, wiretap::Node::two, opts);
    return *star2;
  }
  const wiretap::InfimumResult& bound() {
    if (!r1_bound) r1_bound = wiretap::outer_r1_no_feedback(params, opts);
    return *r1_bound;
  }
  const wiretap::OuterRegion& out() {
    if (!outer) outer = wiretap::outer_region(params, opts);
    return *outer;
  }
  const wiretap::GapCertificate& cert() {
    if (!gap) {
      if (!(params.p > 0.0)) throw DomainError("gap quantities need p > 0");
      gap = wiretap::constant_gap_certificate(params.p, params.pr / params.p, params.h1, params.h2);
    }
    return *gap;
  }
  const wiretap::DegradedBounds& deg() {
    if (!degraded) degraded = wiretap::degraded_bounds(params.p, params.pr, params.h1, params.h2);
    return *degraded;
  }
  const wiretap::UnboundedGapDemo& unb() {
    if (!demo) demo = wiretap::unbounded_gap_demo(params.p);
    return *demo;
  }
};

struct RelayPoint {
  relay::RelayParams params;
  relay::RelaySearchOptions opts;
  int alpha_grid = kDefaultAlphaGrid;
  int samples = kDefaultEnvelopeSamples;
  std::optional<relay::RelayRate> rate1, rate2;
  std::optional<double> outer_sum;

  const relay::RelayRate& r1() {
    if (!rate1) rate1 = relay::achievable_r1(params, opts);
    return *rate1;
  }
  const relay::RelayRate& r2() {
    if (!rate2) rate2 = relay::achievable_r2(params, opts);
    return *rate2;
  }
  double outer_sum_rate() {
    if (!outer_sum) outer_sum = region_sum_rate(relay::outer_region(params, alpha_grid, samples).envelope);
    return *outer_sum;
  }
};

using WiretapQuantity = std::function<double(WiretapPoint&)>;
using RelayQuantity = std::function<double(RelayPoint&)>;

const std::vector<std::pair<std::string, WiretapQuantity>>& wiretap_quantities() {
  static const std::vector<std::pair<std::string, WiretapQuantity>> q{
      {"r1_no_feedback", [](WiretapPoint& w) { return wiretap::r1_no_feedback(w.params); }},
      {"r2_no_feedback", [](WiretapPoint& w) { return wiretap::r2_no_feedback(w.params); }},
      {"r1_star", [](WiretapPoint& w) { return w.s1().rate; }},
      {"alpha1_star", [](WiretapPoint& w) { return w.s1().alpha_star; }},
      {"r2_star", [](WiretapPoint& w) { return w.s2().rate; }},
      {"alpha2_star", [](WiretapPoint& w) { return w.s2().alpha_star; }},
      {"outer_r1_bound", [](WiretapPoint& w) { return w.bound().value; }},
      {"outer_r1_t_star", [](WiretapPoint& w) { return w.bound().t_star; }},
      {"r1_cap", [](WiretapPoint& w) { return w.out().r1_cap; }},
      {"r2_cap", [](WiretapPoint& w) { return w.out().r2_cap; }},
      {"sum_cap", [](WiretapPoint& w) { return w.out().sum_cap; }},
      {"branch1_inf", [](WiretapPoint& w) { return w.out().branch1.value; }},
      {"branch1_t_star", [](WiretapPoint& w) { return w.out().branch1.t_star; }},
      {"branch2_inf", [](WiretapPoint& w) { return w.out().branch2.value; }},
      {"branch2_t_star", [](WiretapPoint& w) { return w.out().branch2.t_star; }},
      {"gap1", [](WiretapPoint& w) { return w.cert().gap1; }},
      {"gap1_const", [](WiretapPoint& w) { return w.cert().gap1_const; }},
      {"gap2", [](WiretapPoint& w) { return w.cert().gap2; }},
      {"gap2_const", [](WiretapPoint& w) { return w.cert().gap2_const; }},
      {"degraded_achievable", [](WiretapPoint& w) { return w.deg().achievable; }},
      {"bound81", [](WiretapPoint& w) { return w.deg().bound81; }},
      {"bound115", [](WiretapPoint& w) { return w.deg().bound115; }},
      {"no_feedback_upper", [](WiretapPoint& w) { return w.unb().no_feedback_upper; }},
      {"feedback_achievable", [](WiretapPoint& w) { return w.unb().feedback_achievable; }},
      {"half_capacity", [](WiretapPoint& w) { return w.unb().half_capacity; }},
      {"unbounded_gap",
       [](WiretapPoint& w) { return w.unb().feedback_achievable - w.unb().no_feedback_upper; }},
      {"conditions_hold", [](WiretapPoint& w) { return w.unb().conditions_hold ? 1.0 : 0.0; }},
  };
  return q;
}

const std::vector<std::pair<std::string, RelayQuantity>>& relay_quantities() {
  static const std::vector<std::pair<std::string, RelayQuantity>> q{
      {"achievable_r1", [](RelayPoint& r) { return r.r1().rate; }},
      {"alpha1_star", [](RelayPoint& r) { return r.r1().alpha_star; }},
      {"p_prime1_star", [](RelayPoint& r) { return r.r1().p_prime_star; }},
      {"achievable_r2", [](RelayPoint& r) { return r.r2().rate; }},
      {"alpha2_star", [](RelayPoint& r) { return r.r2().alpha_star; }},
      {"achievable_sum_rate", [](RelayPoint& r) { return std::max(r.r1().rate, r.r2().rate); }},
      {"outer_sum_rate", [](RelayPoint& r) { return r.outer_sum_rate(); }},
      {"empirical_gap",
       [](RelayPoint& r) { return r.outer_sum_rate() - std::max(r.r1().rate, r.r2().rate); }},
      {"asymptotic_outer_sum_cap",
       [](RelayPoint& r) { return lemma1_g(r.params.p1bar, r.params.p2bar); }},
      {"asymptotic_achievable_sum_cap",
       [](RelayPoint& r) { return lemma1_f(r.params.p1bar, r.params.p2bar); }},
      {"asymptotic_gap", [](RelayPoint& r) { return lemma1_h(r.params.p1bar, r.params.p2bar); }},
  };
  return q;
}

template <typename Table>
auto find_quantity(const Table& table, const std::string& name) {
  const auto it = std::find_if(table.begin(), table.end(),
                               [&](const auto& entry) { return entry.first == name; });
  return it;
}

double number_field(const Json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw DomainError(std::string("sweep axis needs numeric \"") + key + "\"");
  }
  return obj.at(key).get<double>();
}

}  // namespace

std::vector<double> SweepAxis::points() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double w = static_cast<double>(i) / static_cast<double>(count - 1);
    double x;
    if (i == count - 1) {
      x = max;
    } else if (log_scale) {
      x = std::pow(10.0, std::log10(min) + w * (std::log10(max) - std::log10(min)));
    } else {
      x = min + w * (max - min);
    }
    out.push_back(i == 0 ? min : x);
  }
  return out;
}

std::vector<std::string> sweep_quantities(const std::string& model) {
  std::vector<std::string> names;
  if (model == "wiretap") {
    for (const auto& [name, fn] : wiretap_quantities()) names.push_back(name);
  } else if (model == "relay") {
    for (const auto& [name, fn] : relay_quantities()) names.push_back(name);
  } else {
    throw DomainError("model must be \"wiretap\" or \"relay\"");
  }
  return names;
}

SweepConfig parse_sweep_config(const Json& doc) {
  if (!doc.is_object()) throw DomainError("sweep config must be a JSON object");
  static const std::set<std::string> known{"model", "fixed", "swept", "outputs", "format",
                                           "grid", "alpha_grid", "samples", "tol"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) throw DomainError("unknown sweep config key \"" + key + "\"");
  }

  SweepConfig cfg;
  if (!doc.contains("model") || !doc.at("model").is_string()) {
    throw DomainError("sweep config needs a \"model\" string");
  }
  cfg.model = doc.at("model").get<std::string>();
  const auto& names = parameter_names(cfg.model);
  auto check_name = [&](const std::string& n) {
    if (std::find(names.begin(), names.end(), n) == names.end()) {
      throw DomainError("unknown " + cfg.model + " parameter \"" + n + "\"");
    }
  };

  std::set<std::string> seen;
  if (doc.contains("fixed")) {
    if (!doc.at("fixed").is_object()) throw DomainError("\"fixed\" must be an object");
    for (const auto& [name, value] : doc.at("fixed").items()) {
      check_name(name);
      if (!value.is_number()) throw DomainError("fixed value for \"" + name + "\" must be a number");
      cfg.fixed.emplace_back(name, value.get<double>());
      seen.insert(name);
    }
  }
  if (doc.contains("swept")) {
    if (!doc.at("swept").is_object()) throw DomainError("\"swept\" must be an object");
    for (const auto& [name, axis_doc] : doc.at("swept").items()) {
      check_name(name);
      if (seen.count(name)) throw DomainError("\"" + name + "\" is both fixed and swept");
      if (!axis_doc.is_object()) throw DomainError("swept axis \"" + name + "\" must be an object");
      for (const auto& [key, v] : axis_doc.items()) {
        if (key != "min" && key != "max" && key != "count" && key != "scale") {
          throw DomainError("unknown sweep axis key \"" + key + "\"");
        }
      }
      SweepAxis axis;
      axis.min = number_field(axis_doc, "min");
      axis.max = number_field(axis_doc, "max");
      if (!axis_doc.contains("count") || !axis_doc.at("count").is_number_integer()) {
        throw DomainError("sweep axis needs integer \"count\"");
      }
      axis.count = axis_doc.at("count").get<int>();
      const std::string scale = axis_doc.value("scale", std::string("linear"));
      if (scale != "linear" && scale != "log") throw DomainError("scale must be linear or log");
      axis.log_scale = scale == "log";
      if (axis.count < 2) throw DomainError("sweep axis count must be >= 2");
      if (!(axis.min < axis.max)) throw DomainError("sweep axis needs min < max");
      if (axis.log_scale && !(axis.min > 0.0)) throw DomainError("log scale needs min > 0");
      cfg.swept.emplace_back(name, axis);
      seen.insert(name);
    }
  }

  if (!doc.contains("outputs") || !doc.at("outputs").is_array() || doc.at("outputs").empty()) {
    throw DomainError("sweep config needs a nonempty \"outputs\" array");
  }
  const auto valid = sweep_quantities(cfg.model);
  for (const auto& q : doc.at("outputs")) {
    if (!q.is_string()) throw DomainError("output names must be strings");
    const auto name = q.get<std::string>();
    if (std::find(valid.begin(), valid.end(), name) == valid.end()) {
      std::string list;
      for (const auto& v : valid) list += (list.empty() ? "" : ", ") + v;
      throw DomainError("unknown quantity \"" + name + "\"; valid names: " + list);
    }
    cfg.outputs.push_back(name);
  }

  if (doc.contains("format")) {
    const auto f = doc.at("format").get<std::string>();
    if (f != "json" && f != "csv") throw DomainError("format must be json or csv");
    cfg.format = f == "csv" ? Format::csv : Format::json;
  }
  auto positive_int = [&](const char* key, int& target, int minimum) {
    if (!doc.contains(key)) return;
    if (!doc.at(key).is_number_integer() || doc.at(key).get<int>() < minimum) {
      throw DomainError(std::string("\"") + key + "\" must be an integer >= " + std::to_string(minimum));
    }
    target = doc.at(key).get<int>();
  };
  positive_int("grid", cfg.grid, 3);
  positive_int("alpha_grid", cfg.alpha_grid, 3);
  positive_int("samples", cfg.samples, 2);
  if (doc.contains("tol")) {
    if (!doc.at("tol").is_number() || !(doc.at("tol").get<double>() > 0.0)) {
      throw DomainError("\"tol\" must be a positive number");
    }
    cfg.tol = doc.at("tol").get<double>();
  }

  for (const auto& [name, value] : parameter_defaults(cfg.model)) seen.insert(name);
  for (const auto& n : names) {
    if (!seen.count(n)) throw DomainError("parameter \"" + n + "\" is neither fixed nor swept");
  }
  return cfg;
}

SweepTable run_sweep(const SweepConfig& config) {
  SweepTable table;
  for (const auto& [name, axis] : config.swept) table.columns.push_back(name);
  for (const auto& q : config.outputs) table.columns.push_back(q);

  std::vector<std::vector<double>> axes;
  for (const auto& [name, axis] : config.swept) axes.push_back(axis.points());

  std::map<std::string, double> base = parameter_defaults(config.model);
  for (const auto& [name, value] : config.fixed) base[name] = value;

  std::vector<std::size_t> index(axes.size(), 0);
  while (true) {
    std::map<std::string, double> values = base;
    std::vector<double> row;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      const double x = axes[i][index[i]];
      values[config.swept[i].first] = x;
      row.push_back(x);
    }

    if (config.model == "wiretap") {
      WiretapPoint point;
      point.params = {values["p"], values["pr"], values["h1"], values["h2"], values["rho"], values["eta"]};
      point.params.validate();
      point.opts = {config.grid, config.tol};
      for (const auto& q : config.outputs) {
        row.push_back(find_quantity(wiretap_quantities(), q)->second(point));
      }
    } else {
      RelayPoint point;
      point.params = {values["p1"], values["p2"], values["prbar"], values["h"]};
      point.params.validate();
      point.opts.alpha_grid = config.alpha_grid;
      point.opts.inner_grid = config.alpha_grid;
      point.opts.tol = config.tol;
      point.alpha_grid = config.alpha_grid;
      point.samples = config.samples;
      for (const auto& q : config.outputs) {
        row.push_back(find_quantity(relay_quantities(), q)->second(point));
      }
    }
    table.rows.push_back(std::move(row));

    // Odometer increment, innermost (last declared) axis fastest.
    std::size_t k = axes.size();
    while (k > 0) {
      --k;
      if (++index[k] < axes[k].size()) break;
      index[k] = 0;
      if (k == 0) return table;
    }
    if (axes.empty()) return table;
  }
}

}  // namespace secrecy::cli
