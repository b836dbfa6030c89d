// twolayer: evaluation, coefficient tables, rate sweeps, verification suites
// and representation demos for the two-layer Green function.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "twolayer/asymptotics.hpp"
#include "twolayer/branch.hpp"
#include "twolayer/checks.hpp"
#include "twolayer/farfield.hpp"
#include "twolayer/saddle.hpp"
#include "twolayer/scattering.hpp"

using namespace twolayer;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitBound = 4;

struct RunConfig {
  double k_plus = 2.0;
  double k_minus = 1.0;
  QuadSpec quad{};
  std::string output = "-";
  std::string format = "csv";
  std::uint64_t seed = 2024;
};

std::string num(double v) { return fmt::format("{}", v == 0.0 ? 0.0 : v); }

Point parse_point(const std::string& s) {
  std::istringstream in(s);
  double a = 0.0, b = 0.0;
  char comma = 0;
  if (!(in >> a >> comma >> b) || comma != ',') throw DomainError("expected a point as x1,x2: " + s);
  return Point(a, b);
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) v.push_back(std::stod(item));
  return v;
}

// Writes to stdout or to a file.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw DomainError("cannot open output file " + path);
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string meta(const std::string& cmd, const RunConfig& c) {
  return fmt::format("# twolayer {} k_plus={} k_minus={} rel_tol={} abs_tol={} truncation_decay={} seed={}",
                     cmd, num(c.k_plus), num(c.k_minus), num(c.quad.rel_tol), num(c.quad.abs_tol),
                     num(c.quad.truncation_decay), c.seed);
}

json profile_json(const RunConfig& c) {
  return {{"k_plus", c.k_plus}, {"k_minus", c.k_minus}, {"rel_tol", c.quad.rel_tol},
          {"abs_tol", c.quad.abs_tol}, {"truncation_decay", c.quad.truncation_decay}, {"seed", c.seed}};
}

// ---- eval ----

struct EvalArgs {
  std::string x, y, method = "auto";
};

int cmd_eval(const RunConfig& c, const EvalArgs& a) {
  const WaveProfile wp(c.k_plus, c.k_minus);
  const Point x = parse_point(a.x), y = parse_point(a.y);
  const saddle::Method m = saddle::parse_method(a.method);
  const sommerfeld::Eval e = saddle::evaluate(wp, x, y, m, c.quad);
  Sink sink(c.output);
  if (c.format == "json") {
    auto z = [](cplx v) { return json::array({v.real(), v.imag()}); };
    const json j = {{"profile", profile_json(c)},
                    {"x", {x.x1, x.x2}},
                    {"y", {y.x1, y.x2}},
                    {"method", saddle::to_string(m)},
                    {"G", z(e.value)},
                    {"dG_dy1", z(e.grad[0])},
                    {"dG_dy2", z(e.grad[1])},
                    {"error", e.error},
                    {"near_interface", e.near_interface}};
    sink.out() << j.dump(2) << "\n";
  } else {
    sink.out() << meta("eval", c) << " method=" << saddle::to_string(m) << " x=" << num(x.x1) << ","
               << num(x.x2) << " y=" << num(y.x1) << "," << num(y.x2) << "\n";
    sink.out() << "quantity,re,im,error\n";
    sink.out() << "G," << num(e.value.real()) << "," << num(e.value.imag()) << "," << num(e.error) << "\n";
    for (int i = 0; i < 2; ++i)
      sink.out() << "dG_dy" << i + 1 << "," << num(e.grad[i].real()) << "," << num(e.grad[i].imag()) << ","
                 << num(e.error) << "\n";
  }
  return 0;
}

// ---- rate ----

struct RateArgs {
  std::string thetas, offsets;
  std::vector<std::string> ys;
  double r_min = 1e2, r_max = 1e4;
  int n_radii = 25;
  std::string method = "auto";
  std::string summary;
  bool sharpness = false;
};

json summary_json(const asymptotics::ThetaSummary& s) {
  auto fit = [](const asymptotics::RateFit& f) {
    return json{{"slope", f.slope}, {"intercept", f.intercept}, {"max_abs_residual", f.max_abs_residual},
                {"npoints", f.npoints}};
  };
  return {{"theta", s.theta},
          {"y_index", s.y_index},
          {"critical_distance", std::isfinite(s.delta) ? json(s.delta) : json(nullptr)},
          {"near_critical", s.near_critical},
          {"g_fit", fit(s.g_fit)},
          {"h_fit", fit(s.h_fit)},
          {"clear_points", s.clear_points},
          {"c_full", s.c_full},
          {"c_last", s.c_last},
          {"growing", s.growing},
          {"c_far_full", s.c_far_full},
          {"c_far_last", s.c_far_last},
          {"far_stable", s.far_stable()},
          {"verdict", asymptotics::to_string(s.verdict)}};
}

int cmd_rate(const RunConfig& c, const RateArgs& a) {
  using namespace asymptotics;
  const WaveProfile wp(c.k_plus, c.k_minus);
  SweepPlan plan{wp, {}, {}};
  for (const std::string& y : a.ys) plan.y_set.push_back(parse_point(y));
  if (plan.y_set.empty()) plan.y_set.push_back(Point(0.3, wp.ordering == Ordering::PlusLess ? -0.5 : 0.5));
  plan.thetas = parse_list(a.thetas);
  std::vector<double> crit = critical_directions(wp, Half::Upper);
  for (double d : critical_directions(wp, Half::Lower)) crit.push_back(d);
  const std::vector<double> offs = parse_list(a.offsets);
  if (!offs.empty() && crit.empty()) throw DomainError("offsets need a critical angle (k+ != k-)");
  for (double off : offs) plan.thetas.push_back(crit.front() + off);
  if (plan.thetas.empty()) {
    for (double d : crit) plan.thetas.insert(plan.thetas.end(), {d, d - 0.05, d + 0.05});
    plan.thetas.insert(plan.thetas.end(), {0.5 * kPi, 1.5 * kPi});
  }
  plan.radii = log_radii(a.r_min, a.r_max, a.n_radii);
  plan.method = saddle::parse_method(a.method);
  plan.quad = c.quad;
  const EnvelopeReport rep = envelope_check(plan);

  json j = {{"schema", "twolayer.rate/1"}, {"profile", profile_json(c)}, {"method", a.method},
            {"radii", {{"min", a.r_min}, {"max", a.r_max}, {"n", a.n_radii}}}};
  j["y"] = json::array();
  for (const Point& y : plan.y_set) j["y"].push_back({y.x1, y.x2});
  j["sweeps"] = json::array();
  for (const ThetaSummary& s : rep.summaries) {
    j["sweeps"].push_back(summary_json(s));
    std::cerr << fmt::format("theta={:.6f} y={} slope={:.4f} C={:.4g} C_last={:.4g} {}\n", s.theta, s.y_index,
                             s.g_fit.slope, s.c_full, s.c_last, to_string(s.verdict));
  }
  bool ok = std::all_of(rep.summaries.begin(), rep.summaries.end(),
                        [](const ThetaSummary& s) { return s.verdict == Verdict::Pass; });
  if (a.sharpness) {
    j["sharpness"] = json::array();
    for (const SharpnessSeries& s : sharpness_probe(wp, plan.y_set.front(), a.r_max, plan.method, c.quad)) {
      j["sharpness"].push_back({{"theta", s.theta}, {"scaled34", s.scaled34}, {"scaled32", s.scaled32},
                                {"bounded_below", s.bounded_below}, {"grows", s.grows},
                                {"verdict", to_string(s.verdict)}});
      std::cerr << fmt::format("sharpness theta={:.6f} {}\n", s.theta, to_string(s.verdict));
      ok = ok && s.verdict == Verdict::Pass;
    }
  }
  j["all_pass"] = ok;

  Sink sink(c.output);
  if (c.format == "json") {
    sink.out() << j.dump(2) << "\n";
  } else {
    sink.out() << meta("rate", c) << " method=" << a.method << " r_min=" << num(a.r_min)
               << " r_max=" << num(a.r_max) << " n_radii=" << a.n_radii << "\n";
    sink.out() << "theta,r,y_index,re,im,abs_residual,flag\n";
    for (const SweepPoint& p : rep.points)
      sink.out() << num(p.theta) << "," << num(p.r) << "," << p.y_index << "," << num(p.res.g_res.real()) << ","
                 << num(p.res.g_res.imag()) << "," << num(std::abs(p.res.g_res)) << "," << (p.res.g_flag ? 1 : 0)
                 << "\n";
    if (!a.summary.empty()) {
      Sink s(a.summary);
      s.out() << j.dump(2) << "\n";
    }
  }
  return ok ? 0 : kExitBound;
}

// ---- verify ----

struct VerifyArgs {
  std::vector<std::string> suites;
  bool keep_going = false;
};

int cmd_verify(const RunConfig& c, const VerifyArgs& a) {
  const std::vector<std::string> names = a.suites.empty() ? checks::suite_names() : a.suites;
  checks::SuiteOptions opt;
  opt.seed = c.seed;
  opt.quad = c.quad;
  json report = {{"schema", "twolayer.verify/1"}, {"profile", profile_json(c)}, {"checks", json::array()}};
  std::cout << "TAP version 13\n";
  int n = 0;
  bool ok = true;
  for (const std::string& name : names) {
    for (const checks::CheckResult& r : checks::run_suite(name, opt)) {
      report["checks"].push_back({{"suite", r.suite}, {"name", r.name}, {"pass", r.pass}, {"value", r.value},
                                  {"bound", r.bound}, {"detail", r.detail}, {"info", r.info}});
      if (r.info) {
        std::cout << fmt::format("# info {}: {} = {:.6g} {}\n", r.suite, r.name, r.value, r.detail);
        continue;
      }
      ++n;
      std::cout << fmt::format("{} {} - {}: {} # value {:.3e} bound {:.3e}{}\n", r.pass ? "ok" : "not ok", n,
                               r.suite, r.name, r.value, r.bound, r.detail.empty() ? "" : " " + r.detail);
      ok = ok && r.pass;
      if (!ok && !a.keep_going) break;
    }
    if (!ok && !a.keep_going) break;
  }
  std::cout << "1.." << n << "\n";
  report["all_pass"] = ok;
  if (c.output != "-") {
    Sink sink(c.output);
    sink.out() << report.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

// ---- coeffs ----

int cmd_coeffs(const RunConfig& c, int n) {
  if (n < 1) throw DomainError("need at least one angle");
  const WaveProfile wp(c.k_plus, c.k_minus);
  Sink sink(c.output);
  json rows = json::array();
  if (c.format != "json") {
    sink.out() << meta("coeffs", c) << " n=" << n << "\n";
    sink.out() << "theta,re_R,im_R,re_T,im_T,theta_lower,re_Rt,im_Rt,re_Tt,im_Tt\n";
  }
  for (int i = 1; i <= n; ++i) {
    const double t = kPi * i / (n + 1), tl = t + kPi;
    const cplx R = branch::refl_coeff(t, wp), T = branch::trans_coeff(t, wp);
    const cplx Rt = branch::refl_tilde(tl, wp), Tt = branch::trans_tilde(tl, wp);
    if (c.format == "json") {
      rows.push_back({{"theta", t}, {"R", {R.real(), R.imag()}}, {"T", {T.real(), T.imag()}},
                      {"theta_lower", tl}, {"Rt", {Rt.real(), Rt.imag()}}, {"Tt", {Tt.real(), Tt.imag()}}});
    } else {
      sink.out() << num(t) << "," << num(R.real()) << "," << num(R.imag()) << "," << num(T.real()) << ","
                 << num(T.imag()) << "," << num(tl) << "," << num(Rt.real()) << "," << num(Rt.imag()) << ","
                 << num(Tt.real()) << "," << num(Tt.imag()) << "\n";
    }
  }
  if (c.format == "json")
    sink.out() << json{{"schema", "twolayer.coeffs/1"}, {"profile", profile_json(c)}, {"rows", rows}}.dump(2)
               << "\n";
  return 0;
}

// ---- scatter ----

struct ScatterArgs {
  std::string z0 = "0.2,-0.4";
  double radius = 2.0;
  int n_per_arc = 32;
  int points = 20;
  int directions = 20;
  double tol = 1e-6;
  std::string trace;
};

int cmd_scatter(const RunConfig& c, const ScatterArgs& a) {
  const WaveProfile wp(c.k_plus, c.k_minus);
  const Point z0 = parse_point(a.z0);
  const scattering::CircleTrace t = scattering::manufacture_trace(wp, z0, a.radius, a.n_per_arc, c.quad);
  if (!a.trace.empty()) {
    Sink s(a.trace);
    s.out() << meta("scatter-trace", c) << " z0=" << num(z0.x1) << "," << num(z0.x2) << " R=" << num(a.radius)
            << " n_per_arc=" << a.n_per_arc << "\n";
    s.out() << "theta_node,re_u,im_u,re_dudn,im_dudn\n";
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
      s.out() << num(t.nodes[i].phi) << "," << num(t.u[i].real()) << "," << num(t.u[i].imag()) << ","
              << num(t.du_dn[i].real()) << "," << num(t.du_dn[i].imag()) << "\n";
  }

  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> rad(1.25 * a.radius, 6.0 * a.radius), ang(0.1, kPi - 0.1),
      dir(saddle::kDefaultMargin, kPi - saddle::kDefaultMargin);
  struct Row {
    std::string kind;
    double theta, r;
    cplx value, ref;
    double err;
  };
  std::vector<Row> rows;
  for (int i = 0; i < a.points; ++i) {
    const Point x = Point::polar(rad(rng), ang(rng) + (i % 2 ? kPi : 0.0));
    const cplx v = scattering::represent_exterior(t, x, wp, c.quad);
    const cplx ref = sommerfeld::green(wp, x, z0, c.quad);
    rows.push_back({"exterior", x.theta, x.r, v, ref, std::abs(v - ref) / std::abs(ref)});
  }
  for (int i = 0; i < a.directions; ++i) {
    const farfield::FarDirection d(dir(rng) + (i % 2 ? kPi : 0.0));
    const cplx v = scattering::farfield_from_boundary(t, d, wp);
    const cplx ref = farfield::g_farfield(d, z0, wp);
    rows.push_back({"farfield", d.theta, 0.0, v, ref, std::abs(v - ref)});
  }
  bool ok = true;
  for (const Row& r : rows) ok = ok && r.err <= a.tol;

  Sink sink(c.output);
  if (c.format == "json") {
    json j = {{"schema", "twolayer.scatter/1"}, {"profile", profile_json(c)}, {"z0", {z0.x1, z0.x2}},
              {"radius", a.radius}, {"n_per_arc", a.n_per_arc}, {"tol", a.tol}, {"rows", json::array()}};
    for (const Row& r : rows)
      j["rows"].push_back({{"kind", r.kind}, {"theta", r.theta}, {"r", r.r}, {"value", {r.value.real(), r.value.imag()}},
                           {"reference", {r.ref.real(), r.ref.imag()}}, {"error", r.err}});
    j["all_pass"] = ok;
    sink.out() << j.dump(2) << "\n";
  } else {
    sink.out() << meta("scatter", c) << " z0=" << num(z0.x1) << "," << num(z0.x2) << " R=" << num(a.radius)
               << " n_per_arc=" << a.n_per_arc << " tol=" << num(a.tol) << "\n";
    sink.out() << "kind,theta,r,re,im,re_ref,im_ref,error\n";
    for (const Row& r : rows)
      sink.out() << r.kind << "," << num(r.theta) << "," << num(r.r) << "," << num(r.value.real()) << ","
                 << num(r.value.imag()) << "," << num(r.ref.real()) << "," << num(r.ref.imag()) << ","
                 << num(r.err) << "\n";
  }
  return ok ? 0 : kExitBound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-layer Helmholtz Green function toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value file; flags override it");

  RunConfig cfg;
  app.add_option("--kp", cfg.k_plus, "wavenumber above the interface")->check(CLI::PositiveNumber);
  app.add_option("--km", cfg.k_minus, "wavenumber below the interface")->check(CLI::PositiveNumber);
  app.add_option("--rel-tol,--rel_tol", cfg.quad.rel_tol, "quadrature relative tolerance");
  app.add_option("--abs-tol,--abs_tol", cfg.quad.abs_tol, "quadrature absolute tolerance");
  app.add_option("--truncation-decay,--truncation_decay", cfg.quad.truncation_decay, "tail cut exponent");
  app.add_option("-o,--output", cfg.output, "output path, - for stdout");
  app.add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", cfg.seed, "seed for random test points");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "G and its source gradient at one pair");
  eval->add_option("--x", ea.x, "field point x1,x2")->required();
  eval->add_option("--y", ea.y, "source point y1,y2")->required();
  eval->add_option("--method", ea.method, "quad, saddle or auto");

  RateArgs ra;
  auto* rate = app.add_subcommand("rate", "radial sweeps of the far-field residual");
  rate->add_option("--thetas", ra.thetas, "comma-separated directions");
  rate->add_option("--offsets", ra.offsets, "comma-separated offsets from the first critical direction");
  rate->add_option("--y", ra.ys, "source point y1,y2 (repeatable)");
  rate->add_option("--rmin", ra.r_min, "smallest radius");
  rate->add_option("--rmax", ra.r_max, "largest radius");
  rate->add_option("--nr", ra.n_radii, "log-spaced radii");
  rate->add_option("--method", ra.method, "quad, saddle or auto");
  rate->add_option("--summary", ra.summary, "JSON summary path for csv output");
  rate->add_flag("--sharpness", ra.sharpness, "also probe the critical directions");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "property suites as TAP");
  verify->add_option("--suite", va.suites, "suite name (repeatable)")
      ->delimiter(',')
      ->check(CLI::IsMember(checks::suite_names()));
  verify->add_flag("--keep-going", va.keep_going, "run past the first failure");

  int n_coeffs = 90;
  auto* coeffs = app.add_subcommand("coeffs", "reflection and transmission tables");
  coeffs->add_option("--n", n_coeffs, "angles per half-plane");

  ScatterArgs sa;
  auto* scatter = app.add_subcommand("scatter", "representation identities on a manufactured trace");
  scatter->add_option("--z0", sa.z0, "source inside the circle");
  scatter->add_option("--radius", sa.radius, "circle radius");
  scatter->add_option("--n-per-arc", sa.n_per_arc, "Gauss-Legendre nodes per arc");
  scatter->add_option("--points", sa.points, "exterior points");
  scatter->add_option("--directions", sa.directions, "far-field directions");
  scatter->add_option("--tol", sa.tol, "identity tolerance");
  scatter->add_option("--trace", sa.trace, "CSV dump of the trace");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) return cmd_eval(cfg, ea);
    if (*rate) return cmd_rate(cfg, ra);
    if (*verify) return cmd_verify(cfg, va);
    if (*coeffs) return cmd_coeffs(cfg, n_coeffs);
    if (*scatter) return cmd_scatter(cfg, sa);
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return kExitConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad argument: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
