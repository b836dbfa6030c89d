#include "twolayer/core.hpp"

namespace twolayer {

const char* to_string(Half h) {
  switch (h) {
    case Half::Upper: return "upper";
    case Half::Lower: return "lower";
    default: return "interface";
  }
}

Point::Point(double a, double b) : x1(a), x2(b) {
  r = std::hypot(a, b);
  theta = std::atan2(b, a);
  if (theta < 0.0) theta += 2.0 * kPi;
  half = b > 0.0 ? Half::Upper : (b < 0.0 ? Half::Lower : Half::OnInterface);
}

Point Point::polar(double radius, double angle) {
  Point p(radius * std::cos(angle), radius * std::sin(angle));
  // keep the requested angle exactly rather than the atan2 round trip
  p.r = radius;
  p.theta = std::fmod(angle, 2.0 * kPi);
  if (p.theta < 0.0) p.theta += 2.0 * kPi;
  return p;
}

WaveProfile::WaveProfile(double kp, double km) : k_plus(kp), k_minus(km) {
  if (!(kp > 0.0) || !(km > 0.0) || !std::isfinite(kp) || !std::isfinite(km))
    throw DomainError("wavenumbers must be positive and finite");
  n = km / kp;
  if (kp > km) {
    ordering = Ordering::PlusGreater;
    theta_c = std::acos(n);
  } else if (kp < km) {
    ordering = Ordering::PlusLess;
    theta_c = std::acos(1.0 / n);
  } else {
    ordering = Ordering::Equal;
    theta_c = std::nan("");
  }
}

}  // namespace twolayer
