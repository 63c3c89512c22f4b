#include "dcq/cli/commands.hpp"

#include "dcq/bounds/bounds.hpp"
#include "dcq/bounds/sweep.hpp"
#include "dcq/cli/reproduce.hpp"
#include "dcq/dirac/chain.hpp"
#include "dcq/dirac/matrix.hpp"
#include "dcq/dirac/report.hpp"
#include "dcq/quantum/energy.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>

namespace dcq::cli {

namespace {

using Clock = std::chrono::steady_clock;

CommandResult start(const RunConfig& cfg) {
  CommandResult r;
  r.report = {{"command", cfg.command}, {"config", to_json(cfg)}};
  return r;
}

void finish(CommandResult& r, Clock::time_point t0) {
  r.report["metadata"]["elapsed_seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

struct PositionSpec {
  int j;
  char axis;
};

std::optional<PositionSpec> parse_position_spec(const std::string& id) {
  static const std::regex re(R"(^([xy])([0-9]+)-P\1\2$)");
  std::smatch m;
  if (!std::regex_match(id, m, re)) return std::nullopt;
  return PositionSpec{std::stoi(m[2]), m[1].str()[0]};
}

}  // namespace

CommandResult cmd_derive(const RunConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("derive needs k >= 1");
  auto t0 = Clock::now();
  CommandResult r = start(cfg);
  auto rep = dirac::derive(cfg.k);
  r.report["result"] = dirac::report_json(rep);
  r.text = dirac::report_text(rep);
  finish(r, t0);
  return r;
}

CommandResult cmd_bound(const RunConfig& cfg) {
  auto t0 = Clock::now();
  CommandResult r = start(cfg);
  nlohmann::json res;
  std::ostringstream text;
  if (auto ps = parse_position_spec(cfg.spec)) {
    bounds::ParamPoint p = resolve_point(cfg, bounds::ParamPoint::position_momentum(cfg.k));
    if (ps->j < 1 || ps->j > p.k) throw std::invalid_argument("particle index out of range in '" + cfg.spec + "'");
    p.validate();
    double v = bounds::position_momentum_bound(p, ps->j, ps->axis);
    Expr c = bounds::position_momentum_commutator(p.k, ps->j, ps->axis, p.convention);
    res = {{"spec", cfg.spec},
           {"kind", "position-momentum"},
           {"value", v},
           {"commutator", c.str()},
           {"convention", bounds::convention_name(p.convention)},
           {"alpha", p.alpha},
           {"k", p.k}};
    text << cfg.spec << " bound = " << num(v) << " (" << bounds::convention_name(p.convention) << ", [" << ps->axis
         << ps->j << ", P" << ps->axis << ps->j << "] = " << c.str() << ")\n";
  } else {
    const auto& s = bounds::find_spec(cfg.spec);
    RunConfig c = cfg;
    if (!cfg.x) c.k = s.arity;
    bounds::ParamPoint p =
        resolve_point(c, s.arity == 3 ? bounds::ParamPoint::tripartite() : bounds::ParamPoint::bipartite());
    p.validate();
    nlohmann::json cal = nullptr;
    if (cfg.calibrate) {
      if (!s.printed || s.form == bounds::BoundForm::TableOnly)
        throw std::invalid_argument("spec " + s.id + " has no printed closed form to calibrate against");
      auto roots = bounds::calibrate_alpha(s, p, *s.printed);
      if (roots.empty()) throw std::invalid_argument("no alpha reproduces the printed value of " + s.id);
      double best = roots.front();
      for (double x : roots)
        if (std::abs(x) < std::abs(best)) best = x;
      p.alpha = best;
      cal = {{"target", *s.printed}, {"candidates", roots}, {"chosen", best}};
    }
    res = {{"spec", s.id},
           {"kind", "momentum"},
           {"k", p.k},
           {"alpha", p.alpha},
           {"unit", bounds::angle_unit_name(p.unit)},
           {"A", p.A},
           {"B", bounds::field_from_potential(p.A, p.a())},
           {"radius_defect", p.radius_defect()},
           {"calibration", cal}};
    if (s.printed) res["printed"] = *s.printed;
    double v;
    if (s.form == bounds::BoundForm::TableOnly) {
      v = bounds::table_bound(s, p);
      res["source"] = "quantized table";
    } else {
      v = bounds::printed_bound(s, p);
      res["source"] = "closed form";
    }
    res["value"] = v;
    text << s.id << " bound = " << num(v) << " (alpha " << num(p.alpha) << ", " << bounds::angle_unit_name(p.unit)
         << ", A " << num(p.A) << ")";
    if (s.printed) text << ", printed " << num(*s.printed);
    text << "\n";
  }
  r.report["result"] = res;
  r.text = text.str();
  finish(r, t0);
  return r;
}

CommandResult cmd_sweep(const RunConfig& cfg) {
  auto t0 = Clock::now();
  CommandResult r = start(cfg);
  auto kind = bounds::parse_threshold_kind(cfg.kind);
  if (cfg.k < 2) throw std::invalid_argument("sweep needs k >= 2");
  bounds::SweepOptions so{cfg.grid_min, cfg.grid_max, cfg.grid_points, cfg.resolution};
  const double baseline = bounds::baseline_momentum();
  RunConfig c = cfg;
  c.k = 3;
  bounds::ParamPoint base = resolve_point(c, bounds::ParamPoint::tripartite());
  base.unit = cfg.unit_set ? bounds::parse_angle_unit(cfg.unit) : bounds::select_angle_unit(kind, baseline, so);
  nlohmann::json cal;
  if (cfg.alpha_set) {
    cal = {{"alpha", base.alpha}, {"source", "configured"}};
  } else {
    auto cb = bounds::calibrate_threshold(kind, base, baseline);
    base.alpha = cb.alpha;
    cal = {{"alpha", cb.alpha}, {"source", "calibrated"}, {"note", cb.note}};
  }
  cal["unit"] = bounds::angle_unit_name(base.unit);
  auto sw = bounds::sweep_threshold(kind, cfg.k, base, baseline, so);
  r.report["result"] = {{"kind", bounds::threshold_kind_name(kind)},
                        {"k", sw.k},
                        {"subsystem", sw.subsystem},
                        {"spec", sw.spec},
                        {"baseline", sw.baseline},
                        {"calibration", cal},
                        {"a_star", sw.a_star},
                        {"b_star", sw.b_star},
                        {"law", sw.law},
                        {"deviation", sw.deviation},
                        {"monotone_above", sw.monotone_above},
                        {"nonmonotone_at", sw.nonmonotone_at},
                        {"grid_points", sw.grid.size()}};
  std::ostringstream csv, text;
  csv << "A,B,bound,above\n";
  for (const auto& g : sw.grid) csv << num(g.A) << "," << num(g.B) << "," << num(g.bound) << "," << (g.above ? 1 : 0) << "\n";
  text << bounds::threshold_kind_name(kind) << " threshold, k = " << sw.k << ": A* = " << num(sw.a_star) << ", B* = "
       << num(sw.b_star) << " (law " << num(sw.law) << ", deviation " << num(sw.deviation) << "; alpha "
       << num(base.alpha) << " in " << bounds::angle_unit_name(base.unit) << ")\n";
  r.csv = csv.str();
  r.text = text.str();
  finish(r, t0);
  return r;
}

CommandResult cmd_energy(const RunConfig& cfg) {
  auto t0 = Clock::now();
  CommandResult r = start(cfg);
  if (!(cfg.a2 > 0)) throw std::invalid_argument("a^2 must be positive");
  quantum::EnergyParams p;
  p.chi = cfg.chi;
  p.alpha = cfg.alpha;
  p.A = cfg.A;
  p.V = cfg.V;
  p.e = cfg.e;
  p.a = std::sqrt(cfg.a2);
  std::size_t j = static_cast<std::size_t>(cfg.particle - 1);
  if (cfg.particle < 1) throw std::invalid_argument("particle must be >= 1");
  if (cfg.x && cfg.y) {
    if (j >= cfg.x->size() || j >= cfg.y->size()) throw std::invalid_argument("no coordinates for the chosen particle");
    p.x = (*cfg.x)[j];
    p.y = (*cfg.y)[j];
  } else {
    p.x = p.a * std::cos(p.chi);
    p.y = p.a * std::sin(p.chi);
  }
  auto e = quantum::energy(p);
  auto lz = quantum::lz_projections(cfg.chi1, cfg.chi2, cfg.alpha);
  auto cj = [](Complex z) { return nlohmann::json{{"re", z.real()}, {"im", z.imag()}}; };
  r.report["result"] = {{"constrained", cj(e.constrained)},
                        {"unconstrained", cj(e.unconstrained)},
                        {"shift", cj(e.shift)},
                        {"imaginary_part", e.imaginary_part},
                        {"alpha_bar", e.alpha_bar},
                        {"alpha_prime", e.alpha_prime},
                        {"x", p.x},
                        {"y", p.y},
                        {"reading", e.reading},
                        {"lz_projection", {{"chi1", cfg.chi1}, {"chi2", cfg.chi2}, {"lz1", lz.lz1}, {"lz2", lz.lz2}, {"total", lz.total}}}};
  std::ostringstream text;
  auto cs = [](Complex z) { return num(z.real()) + (z.imag() < 0 ? " - " : " + ") + num(std::abs(z.imag())) + "i"; };
  text << "E  = " << cs(e.constrained) << "\nE0 = " << cs(e.unconstrained) << "\nE' = " << cs(e.shift)
       << "\nimaginary part: " << (e.imaginary_part ? "yes" : "no") << "\nL_z projections: " << num(lz.lz1) << " + "
       << num(lz.lz2) << " = " << num(lz.total) << "\n";
  r.text = text.str();
  finish(r, t0);
  return r;
}

CommandResult cmd_reproduce(const RunConfig& cfg) {
  auto t0 = Clock::now();
  CommandResult r = start(cfg);
  auto rep = reproduce({cfg.only, cfg.fourier_n, cfg.nodes});
  r.report["result"] = to_json(rep);
  r.report["metadata"]["timings"] = rep.timings;
  r.text = to_text(rep);
  r.csv = to_csv(rep);
  if (!rep.all_pass) {
    r.exit_code = kExitFailedRows;
    std::ostringstream os;
    for (const auto& row : rep.rows)
      if (row.gating && !row.pass)
        os << "failed: [" << row.group << "] " << row.id << ": expected " << row.expected << ", computed " << row.computed << "\n";
    r.diagnostics = os.str();
  }
  finish(r, t0);
  return r;
}

CommandResult run_command(const RunConfig& cfg) {
  auto fail = [&](int code, const std::string& msg) {
    CommandResult r = start(cfg);
    r.exit_code = code;
    r.diagnostics = msg + "\n";
    return r;
  };
  try {
    if (cfg.k < 1) return fail(kExitUsage, "k must be >= 1");
    if (cfg.command == "derive") return cmd_derive(cfg);
    if (cfg.command == "bound") return cmd_bound(cfg);
    if (cfg.command == "sweep") return cmd_sweep(cfg);
    if (cfg.command == "energy") return cmd_energy(cfg);
    if (cfg.command == "reproduce") return cmd_reproduce(cfg);
    return fail(kExitUsage, "unknown command '" + cfg.command + "'");
  } catch (const dirac::SingularConstraintMatrix& e) {
    return fail(kExitSingular, e.what());
  } catch (const dirac::ChainError& e) {
    return fail(kExitDomain, e.what());
  } catch (const UnboundSymbolError& e) {
    return fail(kExitDomain, e.what());
  } catch (const bounds::NoCrossing& e) {
    return fail(kExitDomain, e.what());
  } catch (const ConfigError& e) {
    return fail(kExitUsage, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kExitUsage, e.what());
  }
}

std::string render(const CommandResult& r, const std::string& format) {
  if (format == "text" && !r.text.empty()) return r.text;
  if (format == "csv" && !r.csv.empty()) return r.csv;
  return r.report.dump(2) + "\n";
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
  }
  fs::rename(tmp, target);
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dirac constraint analysis and uncertainty bounds for charged particles on a circle", "dcq"};
  app.require_subcommand(1);
  const std::map<std::string, std::string> about = {{"derive", "constraint chain, Dirac matrix and bracket table"},
                                                    {"bound", "uncertainty lower bound for one operator pair"},
                                                    {"sweep", "vector-potential sweep locating a threshold"},
                                                    {"energy", "closed-form energy and its shift"},
                                                    {"reproduce", "every golden comparison with pass/fail"}};
  std::map<std::string, std::string> values;
  std::string config_path;
  bool reduced = false, full = false, json = false;
  for (const auto& [name, desc] : about) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--config", config_path, "flat key = value settings file");
    for (const auto& key : config_keys()) sub->add_option("--" + key, values[key]);
    sub->add_flag("--reduced", reduced, "impose the constraint surface on the position-momentum commutator");
    sub->add_flag("--full", full, "keep the unreduced position-momentum commutator");
    sub->add_flag("--json", json, "same as --format json");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  RunConfig cfg;
  cfg.command = app.get_subcommands().front()->get_name();
  CommandResult res;
  try {
    if (reduced && full) throw ConfigError("--reduced and --full are exclusive");
    if (!config_path.empty()) load_config_file(cfg, config_path);
    for (const auto& key : config_keys()) {
      CLI::App* sub = app.get_subcommand(cfg.command);
      if (sub->count("--" + key) > 0) apply_setting(cfg, key, values[key]);
    }
    if (reduced) cfg.convention = "reduced";
    if (full) cfg.convention = "full";
    if (json) cfg.format = "json";
  } catch (const ConfigError& e) {
    err << "dcq: " << e.what() << "\n";
    return kExitUsage;
  }

  res = run_command(cfg);
  if (!res.diagnostics.empty()) err << res.diagnostics;
  if (res.exit_code != kExitOk && res.exit_code != kExitFailedRows) return res.exit_code;
  std::string body = render(res, cfg.format);
  if (cfg.out.empty()) {
    out << body;
  } else {
    try {
      write_atomic(cfg.out, body);
    } catch (const std::exception& e) {
      err << "dcq: " << e.what() << "\n";
      return kExitFailedRows;
    }
  }
  return res.exit_code;
}

}  // namespace dcq::cli
