#include "twolayer/asymptotics.hpp"

#include <algorithm>
#include <limits>

#include "twolayer/farfield.hpp"

namespace twolayer::asymptotics {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double wrap(double t) {
  t = std::fmod(t, 2.0 * kPi);
  return t < 0.0 ? t + 2.0 * kPi : t;
}

double far_bound(double r, double delta) {
  const double d = std::isfinite(delta) ? delta : 1.0;
  return std::pow(d, -1.5) * std::pow(r, -1.5);
}

// Running maxima of |G_Res| / bound over the full grid, the last decade and
// its two halves.
struct Constants {
  double full = 0.0, last = 0.0, prev_half = 0.0, last_half = 0.0;
  void add(double r, double r_max, double c) {
    full = std::max(full, c);
    if (r >= r_max / std::sqrt(10.0)) last_half = std::max(last_half, c);
    else if (r >= r_max / 10.0) prev_half = std::max(prev_half, c);
    if (r >= r_max / 10.0) last = std::max(last, c);
  }
  bool growing() const { return prev_half > 0.0 && last_half > 2.0 * prev_half; }
};

}  // namespace

double envelope(double r, double delta) {
  if (delta == 0.0) return std::pow(r, -0.75);
  const double d = std::isfinite(delta) ? delta : 1.0;
  return std::min(std::pow(r, -0.75), far_bound(r, d));
}

bool ThetaSummary::far_stable() const {
  return delta > 0.0 && c_far_full > 0.0 && std::isfinite(c_far_full) &&
         c_far_last >= 0.5 * c_far_full && !far_growing;
}

Residual evaluate_residual(const WaveProfile& wp, const Point& x, const Point& y, Method method,
                           const QuadSpec& q) {
  const farfield::FarDirection dir(x.theta);
  const double k = wp.k_of(x.half), r = x.r;
  const sommerfeld::Eval e = saddle::evaluate(wp, x, y, method, q);
  const cplx lead = std::exp(kI * k * r) / std::sqrt(r);
  const cplx ginf = farfield::g_farfield(dir, y, wp);
  const auto hinf = farfield::h_farfield(dir, y, wp);
  Residual out;
  out.g_res = e.value - lead * ginf;
  out.h_res = {e.grad[0] - lead * hinf[0], e.grad[1] - lead * hinf[1]};
  // quadrature estimate plus rounding of phases of size k r
  const double phase = 4.0 * kEps * (k * r + 1.0);
  out.g_error = e.error + phase * (std::abs(e.value) + std::abs(lead * ginf));
  out.h_error = e.error * k + phase * (std::abs(e.grad[0]) + std::abs(e.grad[1]) +
                                       std::abs(lead) * (std::abs(hinf[0]) + std::abs(hinf[1])));
  out.g_flag = out.g_error > 0.1 * std::abs(out.g_res);
  out.h_flag = out.h_error > 0.1 * std::hypot(std::abs(out.h_res[0]), std::abs(out.h_res[1]));
  return out;
}

cplx residual(const WaveProfile& wp, const Point& x, const Point& y, Method method,
              const QuadSpec& q) {
  return evaluate_residual(wp, x, y, method, q).g_res;
}

std::array<cplx, 2> h_residual(const WaveProfile& wp, const Point& x, const Point& y,
                               Method method, const QuadSpec& q) {
  return evaluate_residual(wp, x, y, method, q).h_res;
}

RateFit fit_rate(const std::vector<double>& radii, const std::vector<double>& m) {
  if (radii.size() != m.size()) throw DomainError("fit_rate: size mismatch");
  if (radii.size() < 5) throw DomainError("fit_rate: needs at least 5 points");
  const std::size_t n = radii.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(m[i] > 0.0)) throw DomainError("fit_rate: nonpositive magnitude");
    if (i > 0 && !(radii[i] > radii[i - 1])) throw DomainError("fit_rate: radii must increase");
    const double a = std::log(radii[i]), b = std::log(m[i]);
    sx += a;
    sy += b;
    sxx += a * a;
    sxy += a * b;
  }
  const double dn = static_cast<double>(n);
  RateFit f;
  f.slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
  f.intercept = (sy - f.slope * sx) / dn;
  f.max_abs_residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::log(m[i]) - (f.intercept + f.slope * std::log(radii[i]));
    f.max_abs_residual = std::max(f.max_abs_residual, std::abs(d));
  }
  f.npoints = static_cast<int>(n);
  return f;
}

std::vector<double> log_radii(double r_min, double r_max, int n) {
  if (!(r_min > 0.0 && r_max > r_min && n >= 2)) throw DomainError("log_radii: bad grid");
  std::vector<double> r(n);
  const double a = std::log(r_min), b = std::log(r_max);
  for (int i = 0; i < n; ++i) r[i] = std::exp(a + (b - a) * i / (n - 1));
  r.front() = r_min;
  r.back() = r_max;
  return r;
}

std::vector<double> critical_directions(const WaveProfile& wp, Half half) {
  if (wp.ordering == Ordering::PlusGreater && half == Half::Upper)
    return {wp.theta_c, kPi - wp.theta_c};
  if (wp.ordering == Ordering::PlusLess && half == Half::Lower)
    return {kPi + wp.theta_c, 2.0 * kPi - wp.theta_c};
  return {};
}

double critical_distance(const WaveProfile& wp, double theta) {
  theta = wrap(theta);
  const Half h = theta < kPi ? Half::Upper : Half::Lower;
  double d = std::numeric_limits<double>::infinity();
  for (double c : critical_directions(wp, h)) d = std::min(d, std::abs(theta - c));
  return d;
}

void SweepPlan::validate() const {
  if (radii.size() < 2) throw DomainError("sweep needs at least two radii");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1])) throw DomainError("sweep radii must increase");
  double r0 = 0.0;
  for (const Point& y : y_set) {
    if (y.half == Half::OnInterface) throw DomainError("source on the interface");
    r0 = std::max(r0, y.r);
  }
  if (!(radii.front() > 2.0 * r0)) throw DomainError("r_min must exceed 2 R0");
  if (wp.has_critical_angle() && !(radii.front() > r0 / std::cos(wp.theta_c)))
    throw DomainError("r_min must exceed R0 / cos(theta_c)");
  for (double t : thetas) farfield::FarDirection{t};
}

bool SweepPlan::near_critical(double theta) const {
  theta = wrap(theta);
  const double k = wp.k_of(theta < kPi ? Half::Upper : Half::Lower);
  return critical_distance(wp, theta) <= 0.5 / std::sqrt(k * radii.back());
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

bool EnvelopeReport::all_pass() const {
  return std::all_of(summaries.begin(), summaries.end(),
                     [](const ThetaSummary& s) { return s.verdict == Verdict::Pass; });
}

bool EnvelopeReport::any_fail() const {
  return std::any_of(summaries.begin(), summaries.end(),
                     [](const ThetaSummary& s) { return s.verdict == Verdict::Fail; });
}

EnvelopeReport envelope_check(const SweepPlan& plan) {
  plan.validate();
  EnvelopeReport rep;
  const double r_max = plan.radii.back();
  for (double theta : plan.thetas) {
    for (std::size_t yi = 0; yi < plan.y_set.size(); ++yi) {
      const Point& y = plan.y_set[yi];
      ThetaSummary s;
      s.theta = theta;
      s.y_index = static_cast<int>(yi);
      s.delta = critical_distance(plan.wp, theta);
      s.near_critical = plan.near_critical(theta);
      std::vector<double> rg, mg, rh, mh;
      Constants cu, cf;
      for (double r : plan.radii) {
        const Point x = Point::polar(r, theta);
        SweepPoint p{theta, r, static_cast<int>(yi),
                     evaluate_residual(plan.wp, x, y, plan.method, plan.quad)};
        const double ag = std::abs(p.res.g_res);
        if (!p.res.g_flag && ag > 0.0) {
          rg.push_back(r);
          mg.push_back(ag);
          cu.add(r, r_max, ag / envelope(r, s.delta));
          if (s.delta > 0.0) cf.add(r, r_max, ag / far_bound(r, s.delta));
        }
        const double ah = std::hypot(std::abs(p.res.h_res[0]), std::abs(p.res.h_res[1]));
        if (!p.res.h_flag && ah > 0.0) {
          rh.push_back(r);
          mh.push_back(ah);
        }
        rep.points.push_back(p);
      }
      s.clear_points = static_cast<int>(rg.size());
      if (rg.size() >= 5) s.g_fit = fit_rate(rg, mg);
      if (rh.size() >= 5) s.h_fit = fit_rate(rh, mh);
      s.c_full = cu.full;
      s.c_last = cu.last;
      s.growing = cu.growing();
      s.c_far_full = cf.full;
      s.c_far_last = cf.last;
      s.far_growing = cf.growing();
      if (s.clear_points < 8) s.verdict = Verdict::Inconclusive;
      else if (std::isfinite(s.c_full) && s.c_last >= 0.5 * s.c_full && !s.growing)
        s.verdict = Verdict::Pass;
      else s.verdict = Verdict::Fail;
      rep.summaries.push_back(s);
    }
  }
  return rep;
}

std::vector<SharpnessSeries> sharpness_probe(const WaveProfile& wp, const Point& y, double r_max,
                                             Method method, const QuadSpec& q) {
  if (!wp.has_critical_angle()) throw DomainError("sharpness probe needs k+ != k-");
  std::vector<double> dirs = critical_directions(wp, Half::Upper);
  for (double d : critical_directions(wp, Half::Lower)) dirs.push_back(d);
  std::vector<SharpnessSeries> out;
  for (double theta : dirs) {
    SharpnessSeries s;
    s.theta = theta;
    s.radii = log_radii(1e2, r_max, 25);
    for (double r : s.radii) {
      const Residual res = evaluate_residual(wp, Point::polar(r, theta), y, method, q);
      const double a = std::abs(res.g_res);
      s.any_flag = s.any_flag || res.g_flag;
      s.scaled34.push_back(a * std::pow(r, 0.75));
      s.scaled32.push_back(a * std::pow(r, 1.5));
    }
    std::vector<double> sorted = s.scaled34;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];
    const std::size_t n = s.scaled34.size();
    s.bounded_below = n >= 3 && std::all_of(s.scaled34.end() - 3, s.scaled34.end(),
                                            [&](double v) { return v >= 0.5 * median; });
    s.grows = true;
    for (std::size_t i = 1; i < n; ++i)
      if (s.radii[i] >= r_max / 10.0 && !(s.scaled32[i] > s.scaled32[i - 1])) s.grows = false;
    if (s.any_flag) s.verdict = Verdict::Inconclusive;
    else s.verdict = s.bounded_below && s.grows ? Verdict::Pass : Verdict::Fail;
    out.push_back(s);
  }
  return out;
}

}  // namespace twolayer::asymptotics
