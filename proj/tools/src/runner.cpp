#include "runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

#include "mittag/errors.hpp"
#include "mittag/fracint.hpp"
#include "mittag/kinetics.hpp"
#include "mittag/laplace.hpp"
#include "mittag/reaction_diffusion.hpp"
#include "mittag/special_functions.hpp"

namespace mittag::cli {
namespace {

using json = nlohmann::json;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  json meta = json::object();
  std::vector<std::string> warnings;
};

// Validated, ready-to-run task.
using Plan = std::function<Table()>;

// Typed access to a JSON object that rejects unknown keys.
class Fields {
 public:
  Fields(const json& obj, std::string where) : obj_(obj), where_(std::move(where)) {
    if (!obj_.is_object()) throw SpecError(where_ + ": expected an object");
  }

  bool has(const std::string& key) const { return obj_.contains(key); }

  const json& raw(const std::string& key) {
    used_.insert(key);
    if (!obj_.contains(key)) throw SpecError(where_ + ": missing '" + key + "'");
    return obj_.at(key);
  }

  double number(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number()) throw SpecError(where_ + ": '" + key + "' must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw SpecError(where_ + ": '" + key + "' must be finite");
    return d;
  }

  double number(const std::string& key, double fallback) {
    used_.insert(key);
    return has(key) ? number(key) : fallback;
  }

  std::size_t count(const std::string& key, std::size_t fallback) {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw SpecError(where_ + ": '" + key + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
  }

  std::string text(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_string()) throw SpecError(where_ + ": '" + key + "' must be a string");
    return v.get<std::string>();
  }

  std::string text(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    return has(key) ? text(key) : fallback;
  }

  void finish() const {
    for (const auto& [key, value] : obj_.items()) {
      if (!used_.contains(key)) throw SpecError(where_ + ": unknown key '" + key + "'");
    }
  }

 private:
  const json& obj_;
  std::string where_;
  std::set<std::string> used_;
};

std::vector<double> linspace(double start, double stop, std::size_t n) {
  if (n == 0) throw SpecError("grid: n must be >= 1");
  if (n == 1) return {start};
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  out.back() = stop;
  return out;
}

std::vector<double> grid_from_flag(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw SpecError("--grid: expected START:STOP:N");
  try {
    std::size_t used = 0;
    const double start = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw SpecError("--grid: bad START");
    const double stop = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw SpecError("--grid: bad STOP");
    const long n = std::stol(parts[2], &used);
    if (used != parts[2].size() || n < 1) throw SpecError("--grid: N must be a positive integer");
    if (!std::isfinite(start) || !std::isfinite(stop)) throw SpecError("--grid: non-finite bound");
    return linspace(start, stop, static_cast<std::size_t>(n));
  } catch (const std::logic_error&) {
    throw SpecError("--grid: expected START:STOP:N");
  }
}

std::vector<double> numbers(const json& v, const std::string& where) {
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_array()) {
    for (const json& x : v) {
      if (!x.is_number()) throw SpecError(where + ": expected numbers");
      out.push_back(x.get<double>());
    }
  } else {
    throw SpecError(where + ": expected a number or an array of numbers");
  }
  for (double x : out) {
    if (!std::isfinite(x)) throw SpecError(where + ": non-finite value");
  }
  return out;
}

std::vector<double> grid_from_spec(const json& g) {
  if (g.is_array()) return numbers(g, "grid");
  Fields f(g, "grid");
  std::vector<double> out;
  if (f.has("points")) {
    out = numbers(f.raw("points"), "grid.points");
  } else {
    const double start = f.number("start");
    const double stop = f.number("stop");
    out = linspace(start, stop, f.count("n", 0));
  }
  f.finish();
  return out;
}

void require_positive_points(const std::vector<double>& pts, const std::string& what) {
  if (pts.empty()) throw SpecError(what + ": grid is empty");
  for (double t : pts) {
    if (!(t > 0.0)) throw SpecError(what + ": grid points must be positive");
  }
}

// Everything a task parser may draw on besides its own parameters.
struct Context {
  std::string task;
  std::optional<std::vector<double>> grid;
  SeriesConfig series;

  const std::vector<double>& require_grid() const {
    if (!grid || grid->empty()) throw SpecError(task + ": a grid is required");
    return *grid;
  }
};

kinetics::KineticProblem parse_kinetic(Fields& f) {
  kinetics::KineticProblem p;
  try {
    p.kind = kinetics::problem_kind_from_string(f.text("kind"));
  } catch (const DomainError& e) {
    throw SpecError(std::string("parameters: ") + e.what());
  }
  p.n0 = f.number("n0", p.n0);
  p.c = f.number("c", p.c);
  p.d = f.number("d", p.d);
  p.nu = f.number("nu", p.nu);
  p.mu = f.number("mu", p.mu);
  p.gamma = f.number("gamma", p.gamma);
  p.validate();
  return p;
}

std::vector<laplace::GammaFactor> parse_factors(const json& v, const std::string& where) {
  if (!v.is_array()) throw SpecError(where + ": expected an array");
  std::vector<laplace::GammaFactor> out;
  for (const json& item : v) {
    Fields f(item, where);
    out.push_back({f.number("alpha"), f.number("beta")});
    f.finish();
  }
  return out;
}

laplace::TransformDescriptor parse_transform(const json& v) {
  Fields f(v, "parameters.transform");
  const std::string kind = f.text("kind");
  laplace::TransformDescriptor d;
  if (kind == "GammaPower") {
    d = laplace::GammaPower{f.number("alpha"), f.number("beta")};
  } else if (kind == "LaplaceDensity") {
    d = laplace::LaplaceDensity{f.number("beta")};
  } else if (kind == "ResidualProduct") {
    laplace::ResidualProduct r;
    if (f.has("inputs")) r.inputs = parse_factors(f.raw("inputs"), "transform.inputs");
    if (f.has("outputs")) r.outputs = parse_factors(f.raw("outputs"), "transform.outputs");
    d = r;
  } else if (kind == "MLBasic") {
    d = laplace::MLBasic{f.number("n0", 1.0), f.number("c"), f.number("nu")};
  } else if (kind == "MLGeneral") {
    d = laplace::MLGeneral{f.number("n0", 1.0), f.number("c"), f.number("nu"),
                           f.number("mu"), f.number("gamma", 0.0)};
  } else if (kind == "TwoRateProduct") {
    d = laplace::TwoRateProduct{f.number("n0", 1.0), f.number("c"), f.number("d"),
                                f.number("nu"), f.number("mu")};
  } else if (kind == "ThreeTermAlpha") {
    d = laplace::ThreeTermAlpha{f.number("alpha"), f.number("beta"), f.number("a"),
                                f.number("b")};
  } else if (kind == "ThreeTermBeta") {
    d = laplace::ThreeTermBeta{f.number("alpha"), f.number("beta"), f.number("a"),
                               f.number("b")};
  } else {
    throw SpecError("parameters.transform: unknown kind '" + kind + "'");
  }
  f.finish();
  laplace::validate(d);
  return d;
}

laplace::InversionConfig parse_inversion(Fields& f) {
  laplace::InversionConfig cfg;
  cfg.nodes = f.count("nodes", cfg.nodes);
  cfg.rel_target = f.number("rel_target", cfg.rel_target);
  cfg.shift = f.number("shift", cfg.shift);
  cfg.validate();
  return cfg;
}

std::vector<GammaPair> parse_pairs(const json& v, const std::string& where) {
  if (!v.is_array()) throw SpecError(where + ": expected an array");
  std::vector<GammaPair> out;
  for (const json& item : v) {
    Fields f(item, where);
    out.push_back({f.number("offset"), f.number("scale")});
    f.finish();
  }
  return out;
}

std::vector<double> eval_points(Fields& f, const Context& ctx) {
  if (f.has("z")) {
    if (ctx.grid) throw SpecError(ctx.task + ": give either parameters.z or a grid");
    return numbers(f.raw("z"), "parameters.z");
  }
  return ctx.require_grid();
}

Plan plan_eval_ml(Fields& f, const Context& ctx) {
  const MLParams ml{f.number("nu"), f.number("mu"), f.number("gamma", 1.0)};
  const std::vector<double> zs = eval_points(f, ctx);
  ml.validate();
  return [ml, zs, cfg = ctx.series] {
    Table t{{"z", "E"}, {}, json::object(), {}};
    for (double z : zs) t.rows.push_back({z, ml_eval(ml, z, cfg)});
    return t;
  };
}

Plan plan_eval_wright(Fields& f, const Context& ctx) {
  WrightParams w;
  w.upper = parse_pairs(f.raw("upper"), "parameters.upper");
  w.lower = parse_pairs(f.raw("lower"), "parameters.lower");
  const std::vector<double> zs = eval_points(f, ctx);
  w.validate();
  return [w, zs, cfg = ctx.series] {
    Table t{{"z", "psi"}, {}, json::object(), {}};
    for (double z : zs) t.rows.push_back({z, wright_eval(w, z, cfg)});
    return t;
  };
}

Plan plan_solve_kinetic(Fields& f, const Context& ctx) {
  const kinetics::KineticProblem p = parse_kinetic(f);
  const std::vector<double> ts = ctx.require_grid();
  require_positive_points(ts, ctx.task);
  return [p, ts, cfg = ctx.series] {
    const kinetics::SolutionSeries sol = kinetics::solve(p);
    Table t{{"t", "N"}, {}, json::object(), {}};
    for (double x : ts) t.rows.push_back({x, sol(x, cfg)});
    if (sol.note) {
      t.meta["note"] = *sol.note;
      t.warnings.push_back(*sol.note);
    }
    return t;
  };
}

Plan plan_invert_lt(Fields& f, const Context& ctx) {
  const laplace::TransformDescriptor d = parse_transform(f.raw("transform"));
  const laplace::InversionConfig cfg = parse_inversion(f);
  const std::vector<double> ts = ctx.require_grid();
  if (laplace::is_two_sided(d)) {
    for (double t : ts) {
      if (t == 0.0) throw SpecError(ctx.task + ": two-sided inversion needs t != 0");
    }
  } else {
    require_positive_points(ts, ctx.task);
  }
  return [d, cfg, ts] {
    Table t{{"t", "f"}, {}, json::object(), {}};
    t.meta["kind"] = std::string(laplace::kind_name(d));
    for (double x : ts) t.rows.push_back({x, laplace::lt_invert_numeric(d, x, cfg)});
    return t;
  };
}

Plan plan_invert_three_term(Fields& f, const Context& ctx) {
  kinetics::ThreeTermTransform tt;
  tt.alpha = f.number("alpha");
  tt.beta = f.number("beta");
  tt.a = f.number("a");
  tt.b = f.number("b");
  const std::string numerator = f.text("numerator", "alpha-1");
  if (numerator == "alpha-1") {
    tt.numerator = kinetics::Numerator::AlphaMinusOne;
  } else if (numerator == "beta-1") {
    tt.numerator = kinetics::Numerator::BetaMinusOne;
  } else {
    throw SpecError("parameters.numerator: expected 'alpha-1' or 'beta-1'");
  }
  const std::size_t outer = f.count("outer_terms", 64);
  if (outer < 1) throw SpecError("parameters.outer_terms: must be >= 1");
  tt.validate();
  const std::vector<double> ts = ctx.require_grid();
  require_positive_points(ts, ctx.task);
  for (double t : ts) {
    if (std::abs(tt.a) * std::pow(t, tt.alpha - tt.beta) > kinetics::kThreeTermGuard) {
      throw SpecError(ctx.task + ": |a| t^(alpha-beta) exceeds the divergence guard at t = " +
                      std::to_string(t));
    }
  }
  return [tt, outer, ts, cfg = ctx.series] {
    Table t{{"t", "f"}, {}, json::object(), {}};
    double tail = 0.0;
    for (double x : ts) {
      const kinetics::ThreeTermResult r = kinetics::invert_three_term_detailed(tt, x, outer, cfg);
      t.rows.push_back({x, r.value});
      tail = std::max(tail, r.tail_estimate);
    }
    t.meta["max_tail_estimate"] = tail;
    return t;
  };
}

std::vector<double> parse_profile(const json& v, std::size_t modes, double length,
                                  const std::string& where) {
  if (v.is_array()) return numbers(v, where);
  Fields f(v, where);
  const json& comps = f.raw("fourier");
  f.finish();
  if (!comps.is_array()) throw SpecError(where + ".fourier: expected an array");
  std::vector<rd::FourierComponent> parsed;
  for (const json& item : comps) {
    Fields c(item, where + ".fourier");
    const json& mode = c.raw("mode");
    if (!mode.is_number_integer()) throw SpecError(where + ".fourier: mode must be an integer");
    parsed.push_back({mode.get<long>(), c.number("cos", 0.0), c.number("sin", 0.0)});
    c.finish();
  }
  return rd::sample_fourier(parsed, length, modes);
}

Plan plan_rd_solve(Fields& f, const Context& ctx) {
  rd::RDProblem p;
  p.a = f.number("a", p.a);
  p.nu2 = f.number("nu2", p.nu2);
  p.xi = f.number("xi", p.xi);
  p.length = f.number("length", p.length);
  p.modes = f.count("modes", p.modes);
  p.outer_terms = f.count("outer_terms", p.outer_terms);
  p.series.rel_tol = ctx.series.rel_tol;
  if (!(p.length > 0.0)) throw SpecError("parameters.length: must be positive");
  p.initial_profile = parse_profile(f.raw("initial_profile"), p.modes, p.length,
                                    "parameters.initial_profile");
  if (f.has("initial_velocity")) {
    p.initial_velocity = parse_profile(f.raw("initial_velocity"), p.modes, p.length,
                                       "parameters.initial_velocity");
  }
  const std::string method = f.text("method", "spectral");
  if (method != "spectral" && method != "fd") {
    throw SpecError("parameters.method: expected 'spectral' or 'fd'");
  }
  p.times = ctx.require_grid();
  p.validate();
  const double dx = p.length / static_cast<double>(p.modes);
  const double dt = f.number("dt", 0.5 * dx / std::sqrt(p.nu2));
  if (method == "fd" && (!(dt > 0.0) || dt > dx / std::sqrt(p.nu2))) {
    throw SpecError("parameters.dt: must be positive and at most dx / sqrt(nu2)");
  }
  return [p, method, dt] {
    const rd::RDSolution sol = method == "fd" ? rd::rd_solve_fd(p, dt) : rd::rd_solve_spectral(p);
    Table t{{"x", "t", "N"}, {}, json::object(), sol.warnings};
    for (std::size_t i = 0; i < sol.times.size(); ++i) {
      for (std::size_t j = 0; j < sol.x.size(); ++j) {
        t.rows.push_back({sol.x[j], sol.times[i], sol.at(i, j)});
      }
    }
    t.meta["method"] = method;
    if (method == "spectral") t.meta["imag_residue"] = sol.imag_residue;
    if (method == "fd") t.meta["dt"] = dt;
    t.meta["warnings"] = sol.warnings;
    return t;
  };
}

Plan plan_verify(Fields& f, const Context& ctx) {
  const kinetics::KineticProblem p = parse_kinetic(f);
  const laplace::InversionConfig inv = parse_inversion(f);
  fracint::FracIntConfig quad;
  quad.steps = f.count("steps", quad.steps);
  quad.validate();
  const std::vector<double> ts = ctx.require_grid();
  require_positive_points(ts, ctx.task);
  return [p, inv, quad, ts, cfg = ctx.series] {
    const kinetics::SolutionSeries sol = kinetics::solve(p);
    const laplace::TransformDescriptor image = kinetics::transform_of(p);
    const auto closed = [&](double x) { return sol(x, cfg); };
    const std::vector<double> residuals = fracint::residual_check(p, closed, ts, quad);
    Table t{{"t", "closed_form", "numeric", "abs_err", "residual"}, {}, json::object(), {}};
    double max_abs = 0.0;
    double max_rel = 0.0;
    double max_res = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double cf = closed(ts[i]);
      const double num = laplace::lt_invert_numeric(image, ts[i], inv);
      const double err = std::abs(cf - num);
      t.rows.push_back({ts[i], cf, num, err, residuals[i]});
      max_abs = std::max(max_abs, err);
      if (cf != 0.0) max_rel = std::max(max_rel, err / std::abs(cf));
      max_res = std::max(max_res, std::abs(residuals[i]));
    }
    t.meta["max_abs_err"] = max_abs;
    t.meta["max_rel_err"] = max_rel;
    t.meta["max_residual"] = max_res;
    if (sol.note) t.meta["note"] = *sol.note;
    return t;
  };
}

using Planner = Plan (*)(Fields&, const Context&);

const std::vector<std::pair<std::string, Planner>>& planners() {
  static const std::vector<std::pair<std::string, Planner>> table = {
      {"eval-ml", plan_eval_ml},
      {"eval-wright", plan_eval_wright},
      {"solve-kinetic", plan_solve_kinetic},
      {"invert-lt", plan_invert_lt},
      {"invert-three-term", plan_invert_three_term},
      {"rd-solve", plan_rd_solve},
      {"verify", plan_verify},
  };
  return table;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const std::string& task, const Table& t) {
  json doc;
  doc["task"] = task;
  doc["columns"] = t.columns;
  doc["rows"] = t.rows;
  for (const auto& [key, value] : t.meta.items()) doc[key] = value;
  return doc.dump(2) + "\n";
}

std::string error_object(const std::string& kind, const std::string& message) {
  return json{{"error", {{"kind", kind}, {"message", message}}}}.dump();
}

struct Prepared {
  Plan plan;
  std::string format;
  std::string out_path;
};

Prepared prepare(const std::string& task, const json& spec, const Overrides& ov) {
  Fields top(spec, "spec");
  const std::string version = top.text("version");
  if (version != "1") throw SpecError("spec: unsupported version '" + version + "'");
  const std::string declared = top.text("task", task);
  if (declared != task) {
    throw SpecError("spec: task '" + declared + "' does not match command '" + task + "'");
  }
  if (top.has("description")) top.raw("description");

  auto it = std::find_if(planners().begin(), planners().end(),
                         [&](const auto& entry) { return entry.first == task; });
  if (it == planners().end()) throw SpecError("unknown task '" + task + "'");

  Context ctx;
  ctx.task = task;
  if (ov.grid) {
    ctx.grid = grid_from_flag(*ov.grid);
    if (top.has("grid")) top.raw("grid");
  } else if (top.has("grid")) {
    ctx.grid = grid_from_spec(top.raw("grid"));
  }
  if (ov.tol) ctx.series.rel_tol = *ov.tol;
  ctx.series.validate();

  std::string format = "csv";
  std::string out_path;
  if (top.has("output")) {
    Fields out(top.raw("output"), "spec.output");
    format = out.text("format", format);
    out_path = out.text("path", "");
    out.finish();
  }
  if (ov.format) format = *ov.format;
  if (ov.out) out_path = *ov.out;
  if (format != "csv" && format != "json") {
    throw SpecError("output format must be 'csv' or 'json'");
  }

  const json empty = json::object();
  Fields params(top.has("parameters") ? top.raw("parameters") : empty, "parameters");
  Plan plan = it->second(params, ctx);
  params.finish();
  top.finish();
  return {std::move(plan), format, out_path};
}

}  // namespace

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : planners()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

RunResult run(const std::string& task, const json& spec, const Overrides& overrides) {
  RunResult result;
  Prepared prepared;
  try {
    prepared = prepare(task, spec, overrides);
  } catch (const SpecError& e) {
    result.exit_code = kExitSpecError;
    result.error = error_object("SpecError", e.what());
    return result;
  } catch (const Error& e) {
    result.exit_code = kExitSpecError;
    result.error = error_object("SpecError", std::string(e.kind()) + ": " + e.what());
    return result;
  } catch (const json::exception& e) {
    result.exit_code = kExitSpecError;
    result.error = error_object("SpecError", e.what());
    return result;
  }

  try {
    const Table table = prepared.plan();
    result.output = prepared.format == "json" ? render_json(task, table) : render_csv(table);
    result.out_path = prepared.out_path;
    result.warnings = table.warnings;
  } catch (const Error& e) {
    result.exit_code = kExitNumericalFailure;
    result.error = error_object(e.kind(), e.what());
  } catch (const std::exception& e) {
    result.exit_code = kExitNumericalFailure;
    result.error = error_object("Error", e.what());
  }
  return result;
}

}  // namespace mittag::cli
