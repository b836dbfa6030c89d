// Far-field residuals G_Res, H_Res along radial sweeps, log-log rate fits and
// envelope / sharpness checks.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "twolayer/core.hpp"
#include "twolayer/saddle.hpp"

namespace twolayer::asymptotics {

using saddle::Method;

struct Residual {
  cplx g_res;
  std::array<cplx, 2> h_res;
  double g_error;  // absolute error budget of g_res
  double h_error;
  bool g_flag;     // budget exceeds 0.1 |G_Res|
  bool h_flag;
};

// G - e^{ik|x|}|x|^{-1/2} G^inf and the gradient analogue, k of x's half.
Residual evaluate_residual(const WaveProfile& wp, const Point& x, const Point& y,
                           Method method, const QuadSpec& q = {});
cplx residual(const WaveProfile& wp, const Point& x, const Point& y, Method method,
              const QuadSpec& q = {});
std::array<cplx, 2> h_residual(const WaveProfile& wp, const Point& x, const Point& y,
                               Method method, const QuadSpec& q = {});

struct RateFit {
  double slope;
  double intercept;
  double max_abs_residual;  // in log space
  int npoints;
};

// Least squares of log m against log r. Needs >= 5 points, all m > 0.
RateFit fit_rate(const std::vector<double>& radii, const std::vector<double>& magnitudes);

std::vector<double> log_radii(double r_min, double r_max, int n);

// Critical directions of x's half-plane: {theta_c, pi - theta_c} above for
// k+ > k-, {pi + theta_c, 2pi - theta_c} below for k+ < k-, none otherwise.
std::vector<double> critical_directions(const WaveProfile& wp, Half half);
// Distance to the nearest of them, infinity when there are none.
double critical_distance(const WaveProfile& wp, double theta);

struct SweepPlan {
  WaveProfile wp;
  std::vector<Point> y_set;
  std::vector<double> thetas;
  std::vector<double> radii = log_radii(1e2, 1e4, 25);
  Method method = Method::Auto;
  QuadSpec quad{};

  // Throws DomainError unless radii increase and r_min exceeds 2 R0 and
  // R0 / cos(theta_c), R0 being the largest |y|.
  void validate() const;
  // |theta - critical| <= 1 / (2 sqrt(k r_max))
  bool near_critical(double theta) const;
};

enum class Verdict { Pass, Fail, Inconclusive };
const char* to_string(Verdict v);

struct SweepPoint {
  double theta;
  double r;
  int y_index;
  Residual res;
};

struct ThetaSummary {
  double theta;
  int y_index;
  double delta;        // distance to the nearest critical direction
  bool near_critical;
  RateFit g_fit{};
  RateFit h_fit{};
  int clear_points = 0;
  double c_full = 0.0;  // smallest C with |G_Res| <= C * envelope on clear points
  double c_last = 0.0;  // the same over the last decade
  bool growing = false; // C over the last half decade exceeds twice the one before
  // constants for the off-critical bound d^-3/2 r^-3/2 alone (zero when d = 0)
  double c_far_full = 0.0;
  double c_far_last = 0.0;
  bool far_growing = false;
  Verdict verdict = Verdict::Inconclusive;
  bool far_stable() const;
};

struct EnvelopeReport {
  std::vector<SweepPoint> points;
  std::vector<ThetaSummary> summaries;
  bool all_pass() const;
  bool any_fail() const;
};

// Envelope min(r^-3/4, d^-3/2 r^-3/2), d the critical distance (taken as 1
// in a half without critical directions, where the bound is r^-3/2).
double envelope(double r, double delta);

// PASS needs >= 8 clear points, c_last >= c_full / 2 and no growth.
EnvelopeReport envelope_check(const SweepPlan& plan);

struct SharpnessSeries {
  double theta;
  std::vector<double> radii;
  std::vector<double> scaled34;  // |G_Res| r^{3/4}
  std::vector<double> scaled32;  // |G_Res| r^{3/2}
  bool bounded_below = false;    // last three >= 0.5 * median of scaled34
  bool grows = false;            // scaled32 increasing across the last decade
  bool any_flag = false;
  Verdict verdict = Verdict::Inconclusive;
};

// Probes each critical direction of the profile. Throws for k+ = k-.
std::vector<SharpnessSeries> sharpness_probe(const WaveProfile& wp, const Point& y, double r_max,
                                             Method method = Method::Auto, const QuadSpec& q = {});

}  // namespace twolayer::asymptotics
