#include "twolayer/farfield.hpp"

#include "twolayer/branch.hpp"

namespace twolayer::farfield {
namespace {

using branch::s_cut;

void reject_interface(const Point& y) {
  if (y.half == Half::OnInterface) throw DomainError("source on the interface");
}

struct Pattern {
  cplx g;
  std::array<cplx, 2> h;
};

// Both patterns share the exponentials; H^inf carries -i k times the
// corresponding direction vector.
Pattern pattern(const FarDirection& dir, const Point& y, const WaveProfile& wp) {
  reject_interface(y);
  const double c = dir.c, s = dir.s;
  const bool up = dir.half == Half::Upper;
  const double k = up ? wp.k_plus : wp.k_minus;
  const cplx pre = std::exp(0.25 * kI * kPi) / std::sqrt(8.0 * kPi * k);
  const cplx mik = -kI * k;
  Pattern p;
  if (up && y.half == Half::Upper) {
    const cplx e1 = std::exp(-kI * k * (c * y.x1 + s * y.x2));
    const cplx e2 = branch::refl_coeff(dir.theta, wp) * std::exp(-kI * k * (c * y.x1 - s * y.x2));
    p.g = pre * (e1 + e2);
    p.h = {pre * mik * c * (e1 + e2), pre * mik * s * (e1 - e2)};
  } else if (up) {
    const cplx S = s_cut(c, wp.n);
    const cplx e = branch::trans_coeff(dir.theta, wp) * std::exp(-kI * k * (y.x1 * c + kI * y.x2 * S));
    p.g = pre * e;
    p.h = {pre * mik * c * e, pre * mik * kI * S * e};
  } else if (y.half == Half::Upper) {
    const cplx S = s_cut(c, 1.0 / wp.n);
    const cplx e = branch::trans_tilde(dir.theta, wp) * std::exp(-kI * k * (y.x1 * c - kI * y.x2 * S));
    p.g = pre * e;
    p.h = {pre * mik * c * e, pre * mik * (-kI) * S * e};
  } else {
    const cplx e1 = std::exp(-kI * k * (c * y.x1 + s * y.x2));
    const cplx e2 = branch::refl_tilde(dir.theta, wp) * std::exp(-kI * k * (c * y.x1 - s * y.x2));
    p.g = pre * (e1 + e2);
    p.h = {pre * mik * c * (e1 + e2), pre * mik * s * (e1 - e2)};
  }
  return p;
}

}  // namespace

FarDirection::FarDirection(double t) {
  theta = std::fmod(t, 2.0 * kPi);
  if (theta < 0.0) theta += 2.0 * kPi;
  s = std::sin(theta);
  c = std::cos(theta);
  if (theta == 0.0 || theta == kPi || std::abs(s) < 1e-14)
    throw LateralDirectionError("direction along the interface has no pattern");
  half = s > 0.0 ? Half::Upper : Half::Lower;
}

IncidentSpec::IncidentSpec(double td, const WaveProfile& wp) : theta_d(td) {
  if (!(td > kPi && td < 2.0 * kPi))
    throw DomainError("incident angle must lie in (pi, 2pi)");
  d = {std::cos(td), std::sin(td)};
  d_r = {d[0], -d[1]};
  d_t = {cplx(d[0] / wp.n), -kI * s_cut(d[0], wp.n) / wp.n};
}

cplx g_farfield(const FarDirection& dir, const Point& y, const WaveProfile& wp) {
  return pattern(dir, y, wp).g;
}

std::array<cplx, 2> h_farfield(const FarDirection& dir, const Point& y, const WaveProfile& wp) {
  return pattern(dir, y, wp).h;
}

cplx reference_field(const IncidentSpec& inc, const Point& x, const WaveProfile& wp) {
  if (x.half == Half::OnInterface) throw DomainError("field point on the interface");
  if (x.half == Half::Upper) {
    const double kp = wp.k_plus;
    return std::exp(kI * kp * (x.x1 * inc.d[0] + x.x2 * inc.d[1])) +
           branch::refl_coeff(kPi + inc.theta_d, wp) *
               std::exp(kI * kp * (x.x1 * inc.d_r[0] + x.x2 * inc.d_r[1]));
  }
  return branch::trans_coeff(kPi + inc.theta_d, wp) *
         std::exp(kI * wp.k_minus * (x.x1 * inc.d_t[0] + x.x2 * inc.d_t[1]));
}

}  // namespace twolayer::farfield
