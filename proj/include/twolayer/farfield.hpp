// Closed-form far-field patterns G^inf, H^inf and the plane-wave reference field.
#pragma once

#include <array>

#include "twolayer/core.hpp"

namespace twolayer::farfield {

struct FarDirection {
  double theta;
  double c, s;  // cos theta, sin theta
  Half half;
  // Throws LateralDirectionError for theta in {0, pi, 2pi} (mod 2pi).
  explicit FarDirection(double theta);
};

struct IncidentSpec {
  double theta_d;               // in (pi, 2pi)
  std::array<double, 2> d;      // incident direction
  std::array<double, 2> d_r;    // reflected direction
  std::array<cplx, 2> d_t;      // transmitted direction, complex when evanescent
  IncidentSpec(double theta_d, const WaveProfile& wp);
};

cplx g_farfield(const FarDirection& dir, const Point& y, const WaveProfile& wp);
std::array<cplx, 2> h_farfield(const FarDirection& dir, const Point& y, const WaveProfile& wp);

// u0 = u^i + u^r above the interface, u^t below.
cplx reference_field(const IncidentSpec& inc, const Point& x, const WaveProfile& wp);

}  // namespace twolayer::farfield
