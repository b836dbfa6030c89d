#include "twolayer/branch.hpp"

namespace twolayer::branch {
namespace {

// Distance to a cut is measured relative to |z|, which keeps the test
// meaningful both near the branch point and far from it.
double cut_scale(cplx z) { return kCutTol * std::abs(z); }

}  // namespace

cplx principal_power(cplx z, double beta) {
  if (z == 0.0) {
    if (beta > 0.0) return 0.0;
    throw DomainError("principal_power: zero base with nonpositive exponent");
  }
  if (z.real() < 0.0 && std::abs(z.imag()) <= cut_scale(z))
    throw DomainError("principal_power: argument on the negative real axis");
  return std::polar(std::pow(std::abs(z), beta),
                    beta * std::atan2(z.imag(), z.real()));
}

cplx s1(cplx z) {
  if (z == 0.0) return 0.0;
  if (z.imag() > 0.0 && std::abs(z.real()) <= cut_scale(z))
    throw DomainError("s1: argument on the cut Re z = 0, Im z > 0");
  // principal root, flipped where the sheet angle leaves (-pi, pi]
  const cplx r = std::sqrt(z);
  return std::atan2(z.imag(), z.real()) > 0.5 * kPi ? -r : r;
}

cplx s2(cplx z) {
  if (z == 0.0) return 0.0;
  if (z.imag() < 0.0 && std::abs(z.real()) <= cut_scale(z))
    throw DomainError("s2: argument on the cut Re z = 0, Im z < 0");
  const cplx r = std::sqrt(z);
  return std::atan2(z.imag(), z.real()) < -0.5 * kPi ? -r : r;
}

cplx s_cut(cplx z, double a) { return s1(z - a) * s2(z + a); }

cplx s_tilde(cplx z, double a) { return s2(z - a) * s2(z + a); }

cplx s_limit(cplx z, double a, BranchSide side) {
  if (std::abs(z.real() - a) > cut_scale(z) || z.imag() < -kCutTol)
    throw DomainError("s_limit: point is not on the half-line Re z = a, Im z >= 0");
  const cplx on_cut(a, std::max(z.imag(), 0.0));
  const cplx v = s_tilde(on_cut, a);
  return side == BranchSide::FromRight ? v : -v;
}

cplx refl_coeff(double theta, const WaveProfile& wp) {
  const double s = std::sin(theta);
  if (s == 0.0) throw DomainError("refl_coeff: sin(theta) = 0");
  const cplx S = s_cut(std::cos(theta), wp.n);
  return (kI * s + S) / (kI * s - S);
}

cplx trans_coeff(double theta, const WaveProfile& wp) {
  return refl_coeff(theta, wp) + 1.0;
}

cplx refl_tilde(double theta, const WaveProfile& wp) {
  const double s = std::sin(theta);
  if (s == 0.0) throw DomainError("refl_tilde: sin(theta) = 0");
  const cplx S = s_cut(std::cos(theta), 1.0 / wp.n);
  return (kI * s - S) / (kI * s + S);
}

cplx trans_tilde(double theta, const WaveProfile& wp) {
  return refl_tilde(theta, wp) + 1.0;
}

double critical_angle(const WaveProfile& wp) {
  if (!wp.has_critical_angle())
    throw DomainError("critical angle undefined for equal wavenumbers");
  return wp.theta_c;
}

}  // namespace twolayer::branch
