#include "twolayer/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "twolayer/asymptotics.hpp"
#include "twolayer/branch.hpp"
#include "twolayer/farfield.hpp"
#include "twolayer/saddle.hpp"
#include "twolayer/scattering.hpp"
#include "twolayer/sommerfeld.hpp"
#include "twolayer/special.hpp"

namespace twolayer::checks {
namespace {

using Out = std::vector<CheckResult>;
using Rng = std::mt19937_64;

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

void add(Out& out, const std::string& suite, const std::string& name, double value,
         double bound, const std::string& detail = {}) {
  out.push_back({suite, name, value <= bound, value, bound, detail});
}

std::string fmt_angles(const std::vector<double>& v) {
  std::ostringstream s;
  s.precision(4);
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

const std::vector<std::pair<Half, Half>> kPlacements = {
    {Half::Upper, Half::Upper}, {Half::Upper, Half::Lower},
    {Half::Lower, Half::Lower}, {Half::Lower, Half::Upper}};

Point box_point(Rng& rng, Half h) {
  std::uniform_real_distribution<double> u1(-2.0, 2.0), u2(0.05, 1.5);
  const double x2 = u2(rng);
  return Point(u1(rng), h == Half::Upper ? x2 : -x2);
}

Point offset(const Point& p, double d1, double d2) { return Point(p.x1 + d1, p.x2 + d2); }

Out collapse(const SuiteOptions& o) {
  Rng rng(o.seed);
  const WaveProfile wp(2.0, 2.0);
  double worst = 0.0;
  int n = 0;
  for (auto [hx, hy] : kPlacements) {
    for (int i = 0; i < 25; ++i, ++n) {
      const Point x = box_point(rng, hx), y = box_point(rng, hy);
      const double d = std::hypot(x.x1 - y.x1, x.x2 - y.x2);
      const cplx g = sommerfeld::green(wp, x, y, o.quad);
      worst = std::max(worst, std::abs(g - 0.25 * kI * special::hankel_h0(2.0 * d)) / std::abs(g));
    }
  }
  Out out;
  add(out, "collapse", "k+ = k- = 2 reduces to (i/4) H0 on " + std::to_string(n) + " pairs", worst, 1e-8);
  return out;
}

Out branch_suite(const SuiteOptions& o) {
  Out out;
  Rng rng(o.seed);
  std::uniform_real_distribution<double> u(-4.0, 4.0), ua(0.5, 2.5);
  double worst = 0.0;
  int used = 0;
  for (int i = 0; i < 10000; ++i) {
    const cplx z(u(rng), u(rng));
    const double a = ua(rng);
    const cplx ref = z * z - a * a;
    try {
      const cplx p = branch::s_cut(z, a), q = branch::s_tilde(z, a);
      worst = std::max({worst, std::abs(p * p - ref) / std::abs(ref), std::abs(q * q - ref) / std::abs(ref)});
      ++used;
    } catch (const DomainError&) {
    }
  }
  add(out, "branch", "S^2 = S~^2 = z^2 - a^2 on " + std::to_string(used) + " random points", worst, 1e-14);

  // one-sided limits onto the vertical cut, Richardson-corrected probes at h = 1e-8
  double lim = 0.0;
  const double h = 1e-8;
  for (double a : {0.5, 0.7, 1.3, 2.0}) {
    for (double t : {0.01, 0.5, 3.0}) {
      const cplx z(a, t);
      for (auto [sgn, side] : {std::pair{1.0, branch::BranchSide::FromRight},
                               std::pair{-1.0, branch::BranchSide::FromLeft}}) {
        const cplx probe = 2.0 * branch::s_cut(z + sgn * h / 2, a) - branch::s_cut(z + sgn * h, a);
        const cplx ref = branch::s_limit(z, a, side);
        lim = std::max(lim, std::abs(probe - ref) / std::max(1.0, std::abs(ref)));
      }
    }
  }
  add(out, "branch", "one-sided limits onto the cut", lim, 1e-12);
  return out;
}

Out factorization(const SuiteOptions& o) {
  Out out;
  Rng rng(o.seed);
  const WaveProfile wp(2.0, 1.0);
  double above = 0.0, below = 0.0;
  for (int j = 1; j <= 10; ++j) {
    const double tx = wp.theta_c + (0.5 * kPi - wp.theta_c) * j / 10.5;
    const saddle::SaddleFrame f(wp, tx);
    for (int i = -40; i <= 40; ++i) {
      const double s = 0.1 * i;
      const cplx rhs = branch::s_cut(std::cos(saddle::zeta_map(s, tx, wp.k_plus)), wp.n);
      above = std::max(above, std::abs(saddle::factorized_root(s, f) - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  add(out, "factorization", "factorized root equals S(cos zeta(s), n) on a real grid, 10 angles above theta_c",
      above, 1e-10);
  std::uniform_real_distribution<double> re(-4.0, 4.0), im(-0.9, 0.9);
  for (int j = 1; j <= 10; ++j) {
    const double tx = wp.theta_c * j / 10.5;
    const saddle::SaddleFrame f(wp, tx);
    for (int i = 0; i < 100; ++i) {
      const cplx s(re(rng), im(rng) * f.sigma2);
      const cplx rhs = -branch::s_tilde(std::cos(saddle::zeta_map(s, tx, wp.k_plus)), wp.n);
      below = std::max(below, std::abs(saddle::factorized_root(s, f) - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  add(out, "factorization", "factorized root equals -S~(cos zeta(s), n) on a strip grid, 10 angles below theta_c",
      below, 1e-10);
  return out;
}

Out f2f3(const SuiteOptions&) {
  Out out;
  const std::vector<cplx> rhos = {kI, {1, 2}, {-1, 2}};
  const std::vector<cplx> bs = {{0, 0.1}, {0, -0.1}, {0, 0.7}, {0, -0.7}, {0.3, 0.4}, {0.3, -0.4}};
  double w2 = 0.0, w3 = 0.0;
  for (cplx rho : rhos)
    for (cplx b : bs)
      for (double beta : {0.5, 1.5}) {
        w2 = std::max(w2, rel(special::f2_closed(rho, b, beta), special::f2_oracle(rho, b, beta)));
        w3 = std::max(w3, rel(special::f3_closed(rho, b, beta), special::f3_oracle(rho, b, beta)));
      }
  add(out, "f2f3", "F2 closed form against quadrature, 36 (rho, b, beta)", w2, 1e-8);
  add(out, "f2f3", "F3 closed form against quadrature, 36 (rho, b, beta)", w3, 1e-8);
  return out;
}

Out pde(const SuiteOptions& o) {
  Out out;
  const std::vector<double> hs = {1e-2, 5e-3, 2.5e-3};
  double lo = 1e9, hi = -1e9;
  for (const WaveProfile& wp : {WaveProfile(2.0, 1.0), WaveProfile(1.0, 2.0)}) {
    for (auto [hx, hy] : kPlacements) {
      const Point x(1.2, hx == Half::Upper ? 0.9 : -0.9), y(-0.3, hy == Half::Upper ? 0.4 : -0.4);
      const double k = wp.k_of(x.half);
      std::vector<double> lr, lres;
      for (double h : hs) {
        auto G = [&](double a, double b) { return sommerfeld::green(wp, offset(x, a, b), y, o.quad); };
        const cplx g0 = G(0, 0);
        const cplx lap = (G(h, 0) + G(-h, 0) + G(0, h) + G(0, -h) - 4.0 * g0) / (h * h);
        lr.push_back(h);
        lres.push_back(std::abs(lap + k * k * g0) / std::abs(g0));
      }
      // three points, below what fit_rate accepts
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (std::size_t i = 0; i < lr.size(); ++i) {
        const double a = std::log(lr[i]), b = std::log(lres[i]);
        sx += a; sy += b; sxx += a * a; sxy += a * b;
      }
      const double m = static_cast<double>(lr.size());
      const double order = (m * sxy - sx * sy) / (m * sxx - sx * sx);
      lo = std::min(lo, order);
      hi = std::max(hi, order);
    }
  }
  std::ostringstream d;
  d << "orders in [" << lo << ", " << hi << "]";
  out.push_back({"pde", "Helmholtz residual order in [1.7, 2.3], 8 placements", lo >= 1.7 && hi <= 2.3,
                 std::max(2.0 - lo, hi - 2.0), 0.3, d.str()});

  double jump = 0.0;
  for (const WaveProfile& wp : {WaveProfile(2.0, 1.0), WaveProfile(1.0, 2.0)}) {
    for (const Point& x : {Point(0.9, 0.8), Point(-0.6, -1.1), Point(2.5, 0.3)}) {
      const double y1 = 0.15, h = 1e-3;
      auto side = [&](double sgn) {
        const sommerfeld::Eval a = sommerfeld::green_eval(wp, x, Point(y1, sgn * h), o.quad);
        const sommerfeld::Eval b = sommerfeld::green_eval(wp, x, Point(y1, sgn * 2 * h), o.quad);
        return std::pair{2.0 * a.value - b.value, 2.0 * a.grad[1] - b.grad[1]};
      };
      const auto up = side(1.0), down = side(-1.0);
      jump = std::max({jump, rel(up.first, down.first), rel(up.second, down.second)});
    }
  }
  add(out, "pde", "transmission jumps of G and dG/dy2 at offset 1e-3", jump, 1e-4);

  Rng rng(o.seed);
  double rec = 0.0;
  int n = 0;
  for (const WaveProfile& wp : {WaveProfile(2.0, 1.0), WaveProfile(1.0, 2.5)}) {
    for (int i = 0; i < 25; ++i, ++n) {
      const auto [hx, hy] = kPlacements[i % 4];
      const Point x = box_point(rng, hx), y = box_point(rng, hy);
      rec = std::max(rec, rel(sommerfeld::green(wp, x, y, o.quad), sommerfeld::green(wp, y, x, o.quad)));
    }
  }
  add(out, "pde", "reciprocity G(x,y) = G(y,x) on " + std::to_string(n) + " pairs", rec, 1e-9);
  return out;
}

Out methods(const SuiteOptions& o) {
  Out out;
  Rng rng(o.seed);
  const WaveProfile wp(2.0, 1.0);
  const double tc = wp.theta_c;
  const std::vector<double> thetas = {0.2, 0.5, tc - 0.3, tc, tc + 0.3, 1.45, 1.8, 2.2, 2.6, 2.9, kPi - tc, 1.0};
  std::uniform_real_distribution<double> rad(0.1, 1.0), ang(0.1, kPi - 0.1), rx(20.0, 100.0);
  std::vector<Point> ys;
  for (int i = 0; i < 5; ++i) ys.push_back(Point::polar(rad(rng), ang(rng)));
  double worst = 0.0;
  for (double t : thetas) {
    for (const Point& y : ys) {
      const Point x = Point::polar(rx(rng), t);
      const cplx a = saddle::evaluate(wp, x, y, saddle::Method::Saddle, o.quad).value;
      const cplx b = saddle::evaluate(wp, x, y, saddle::Method::Quadrature, o.quad).value;
      worst = std::max(worst, rel(a, b));
    }
  }
  add(out, "methods", "saddle against quadrature, 12 angles x 5 sources, |x| in [20, 100]", worst, 1e-6,
      "angles " + fmt_angles(thetas));
  return out;
}

const asymptotics::ThetaSummary& find(const asymptotics::EnvelopeReport& r, double theta) {
  for (const auto& s : r.summaries)
    if (s.theta == theta) return s;
  throw DomainError("missing sweep angle");
}

Out rates(const SuiteOptions& o) {
  using namespace asymptotics;
  Out out;
  const WaveProfile wp(2.0, 1.0);
  const Point y(0.3, 0.5);
  const double tc = wp.theta_c;
  const std::vector<double> far = {0.1, 0.3, tc - 0.5, tc + 0.5, 0.5 * kPi, kPi - tc + 0.5, 2.8, 3.0,
                                   3.3, 3.8, 4.2, 4.7, 5.2, 5.6, 6.0};
  SweepPlan plan{wp, {y}, {tc, tc + 0.05, tc - 0.05}};
  for (double t : far) plan.thetas.push_back(t);
  plan.radii = log_radii(1e2, 1e4, 97);
  plan.method = Method::Auto;
  plan.quad = o.quad;
  const EnvelopeReport rep = envelope_check(plan);

  const ThetaSummary& c = find(rep, tc);
  out.push_back({"rates", "slope at theta_c in [-0.85, -0.65]", c.g_fit.slope >= -0.85 && c.g_fit.slope <= -0.65,
                 c.g_fit.slope, -0.65, "envelope " + std::string(to_string(c.verdict))});
  double steepest = -1e9;
  std::string worst_angle;
  for (double t : far) {
    const ThetaSummary& s = find(rep, t);
    if (s.g_fit.slope > steepest) {
      steepest = s.g_fit.slope;
      worst_angle = fmt_angles({t});
    }
  }
  add(out, "rates", "slope <= -1.4 at 15 angles off the critical directions", steepest, -1.4,
      "largest at theta = " + worst_angle);
  for (double d : {0.05, -0.05}) {
    const ThetaSummary& s = find(rep, tc + d);
    out.push_back({"rates", std::string("envelope constant finite and stable at theta_c ") + (d > 0 ? "+" : "-") + " 0.05",
                   s.far_stable() && s.verdict == Verdict::Pass, s.c_far_last / s.c_far_full, 1.0,
                   "C last/full of |theta - theta_c|^-3/2 r^-3/2"});
  }

  SweepPlan coarse{wp, {y}, {tc - 0.5}};
  coarse.quad = o.quad;
  const double s25 = envelope_check(coarse).summaries[0].g_fit.slope;
  out.push_back({"rates", "slope at theta_c - 0.5 on the 25-point grid", true, s25, -1.4,
                 "aliased by the lateral/saddle beat", true});

  auto sharp = [&](const WaveProfile& p, const Point& src, const std::string& label) {
    for (const SharpnessSeries& s : sharpness_probe(p, src, 1e4, Method::Auto, o.quad)) {
      const double last = s.scaled34.back();
      out.push_back({"rates", label + " sharpness at theta = " + fmt_angles({s.theta}), s.verdict == Verdict::Pass,
                     last, 0.0, std::string("bounded below ") + (s.bounded_below ? "yes" : "no") +
                                    ", r^3/2 growth " + (s.grows ? "yes" : "no")});
    }
  };
  sharp(wp, y, "k+ > k-");

  const WaveProfile mp(1.0, 2.0);
  const Point my(0.3, -0.5);
  SweepPlan mirror{mp, {my}, {kPi + tc, 2.0 * kPi - tc}};
  mirror.radii = plan.radii;
  mirror.quad = o.quad;
  const EnvelopeReport mr = envelope_check(mirror);
  for (const ThetaSummary& s : mr.summaries)
    out.push_back({"rates", "mirror k+ < k- slope at theta = " + fmt_angles({s.theta}) + " in [-0.85, -0.65]",
                   s.g_fit.slope >= -0.85 && s.g_fit.slope <= -0.65, s.g_fit.slope, -0.65, {}});
  sharp(mp, my, "mirror k+ < k-");
  return out;
}

Out representation(const SuiteOptions& o) {
  Out out;
  Rng rng(o.seed);
  std::uniform_real_distribution<double> zr(0.1, 1.2), xr(2.0, 12.0), ang(0.1, kPi - 0.1),
      dir(0.05, kPi - 0.05);
  auto in_half = [&](Half h, double a) { return h == Half::Upper ? a : a + kPi; };
  for (const WaveProfile& wp : {WaveProfile(2.0, 1.0), WaveProfile(1.0, 2.0)}) {
    double rep = 0.0, ff = 0.0;
    for (Half zh : {Half::Upper, Half::Lower}) {
      const Point z0 = Point::polar(zr(rng), in_half(zh, ang(rng)));
      const scattering::CircleTrace t = scattering::manufacture_trace(wp, z0, 1.5, 32, o.quad);
      for (Half xh : {Half::Upper, Half::Lower}) {
        for (int i = 0; i < 5; ++i) {
          const Point x = Point::polar(xr(rng), in_half(xh, ang(rng)));
          rep = std::max(rep, rel(scattering::represent_exterior(t, x, wp, o.quad), sommerfeld::green(wp, x, z0, o.quad)));
          const farfield::FarDirection d(in_half(xh, dir(rng)));
          ff = std::max(ff, std::abs(scattering::farfield_from_boundary(t, d, wp) - farfield::g_farfield(d, z0, wp)));
        }
      }
    }
    const std::string tag = wp.ordering == Ordering::PlusGreater ? "k+ > k-" : "k+ < k-";
    add(out, "representation", tag + ": exterior representation at 20 points", rep, 1e-6);
    add(out, "representation", tag + ": far-field formula at 20 directions", ff, 1e-6);
  }
  return out;
}

Out gradients(const SuiteOptions& o) {
  Out out;
  const double h = 1e-6;
  double worst = 0.0;
  for (const WaveProfile& wp : {WaveProfile(2.0, 1.0), WaveProfile(1.0, 2.0)}) {
    for (double t = 0.05; t < 2.0 * kPi; t += 0.1) {
      if (std::abs(std::sin(t)) < 0.01) continue;
      const farfield::FarDirection d(t);
      for (const Point& y : {Point(0.3, 0.5), Point(-0.4, -0.6)}) {
        const auto H = farfield::h_farfield(d, y, wp);
        const cplx d1 = (farfield::g_farfield(d, offset(y, h, 0), wp) - farfield::g_farfield(d, offset(y, -h, 0), wp)) / (2 * h);
        const cplx d2 = (farfield::g_farfield(d, offset(y, 0, h), wp) - farfield::g_farfield(d, offset(y, 0, -h), wp)) / (2 * h);
        worst = std::max({worst, std::abs(H[0] - d1), std::abs(H[1] - d2)});
      }
    }
  }
  add(out, "gradients", "H^inf against differences of G^inf", worst, 1e-7);

  const WaveProfile wp(2.0, 1.0);
  asymptotics::SweepPlan plan{wp, {Point(0.3, 0.5)}, {wp.theta_c}};
  plan.quad = o.quad;
  const asymptotics::ThetaSummary s = asymptotics::envelope_check(plan).summaries[0];
  std::ostringstream d;
  d << "g slope " << s.g_fit.slope << ", h slope " << s.h_fit.slope;
  add(out, "gradients", "H_Res slope matches G_Res slope at theta_c", std::abs(s.h_fit.slope - s.g_fit.slope), 0.15,
      d.str());
  return out;
}

const std::map<std::string, std::function<Out(const SuiteOptions&)>>& table() {
  static const std::map<std::string, std::function<Out(const SuiteOptions&)>> t = {
      {"collapse", collapse},   {"branch", branch_suite}, {"factorization", factorization},
      {"f2f3", f2f3},           {"pde", pde},             {"methods", methods},
      {"rates", rates},         {"representation", representation},
      {"gradients", gradients}};
  return t;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = {"collapse", "branch", "factorization", "f2f3", "pde",
                                             "methods", "rates", "representation", "gradients"};
  return n;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt) {
  const auto it = table().find(name);
  if (it == table().end()) throw DomainError("unknown suite: " + name);
  return it->second(opt);
}

}  // namespace twolayer::checks
