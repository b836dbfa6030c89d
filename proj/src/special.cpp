#include "twolayer/special.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include "twolayer/branch.hpp"
#include "twolayer/quadrature.hpp"

namespace twolayer::special {
namespace {

using cld = std::complex<long double>;

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

long double rgamma_l(long double x) {
  if (x <= 0.0L && x == std::floor(x)) return 0.0L;
  return 1.0L / std::tgamma(x);
}

// Kummer M(a, b, w) by its power series, in extended precision.
cld kummer_m(long double a, long double b, cld w) {
  cld sum = 1.0L, term = 1.0L;
  for (int k = 0; k < 4000; ++k) {
    term *= (a + k) / ((b + k) * (k + 1.0L)) * w;
    sum += term;
    if (std::abs(term) < 1e-21L * std::abs(sum) && k > std::abs(w)) break;
    if (term == 0.0L) break;
  }
  return sum;
}

cplx pcf_series(double nu, cplx z) {
  const cld zl(z.real(), z.imag());
  const cld w = zl * zl / 2.0L;
  const long double sq_pi = std::sqrt(std::numbers::pi_v<long double>);
  const cld t1 = sq_pi * rgamma_l((1.0L - nu) / 2.0L) *
                 kummer_m(-nu / 2.0L, 0.5L, w);
  const cld t2 = std::sqrt(2.0L) * sq_pi * zl * rgamma_l(-nu / 2.0L) *
                 kummer_m((1.0L - nu) / 2.0L, 1.5L, w);
  const cld v = std::pow(2.0L, nu / 2.0L) * std::exp(-zl * zl / 4.0L) * (t1 - t2);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// Large-|z| expansion, used for |arg z| <= pi/2.
cplx pcf_asymptotic(double nu, cplx z) {
  const cplx inv = 1.0 / (2.0 * z * z);
  cplx sum = 1.0, term = 1.0;
  double last = 1.0;
  for (int s = 0; s < 400; ++s) {
    const cplx next =
        -term * (-nu + 2 * s) * (-nu + 2 * s + 1) / (s + 1.0) * inv;
    const double mag = std::abs(next);
    if (mag > last) break;  // optimal truncation
    sum += next;
    term = next;
    last = mag;
    if (mag < 1e-17 * std::abs(sum)) break;
  }
  return std::exp(nu * std::log(z) - z * z / 4.0) * sum;
}

// D_mu(z) = e^{-z^2/4}/Gamma(-mu) int_0^inf t^{-mu-1} e^{-t^2/2 - z t} dt,
// mu < 0, Re z >= 0.
cplx pcf_laplace(double mu, cplx z) {
  // t = u^2 keeps the endpoint behaviour smooth
  auto f = [&](double u) {
    const double t = u * u;
    return 2.0 * std::pow(u, -2.0 * mu - 1.0) * std::exp(-t * t / 2.0 - z * t);
  };
  const double umax = std::sqrt(13.0);
  const cplx v = quad::integrate(f, 0.0, umax, 1e-300, 1e-14, 100000, 8).value;
  return std::exp(-z * z / 4.0) * rgamma(-mu) * v;
}

// Moderate |z| with Re z >= 0: Laplace integral at two negative orders, then
// the forward order recurrence D_{m+1} = z D_m - m D_{m-1}.
cplx pcf_moderate(double nu, cplx z) {
  double mu = nu;
  while (mu >= -1.0) mu -= 1.0;
  cplx lower = pcf_laplace(mu - 1.0, z);
  cplx cur = pcf_laplace(mu, z);
  while (mu < nu - 0.5) {
    const cplx next = z * cur - mu * lower;
    lower = cur;
    cur = next;
    mu += 1.0;
  }
  return cur;
}

constexpr double kSeriesRadius = 6.5;
constexpr double kAsymptoticRadius = 12.0;

// Valid for |z| <= kSeriesRadius or Re z >= 0.
cplx pcf_direct(double nu, cplx z) {
  const double az = std::abs(z);
  if (az <= kSeriesRadius) return pcf_series(nu, z);
  if (az >= kAsymptoticRadius) return pcf_asymptotic(nu, z);
  return pcf_moderate(nu, z);
}

}  // namespace

cplx hankel_h0(double x) {
  if (!(x > 0.0)) throw DomainError("hankel_h0: argument must be positive");
  return {boost::math::cyl_bessel_j(0, x), boost::math::cyl_neumann(0, x)};
}

cplx hankel_h1(double x) {
  if (!(x > 0.0)) throw DomainError("hankel_h1: argument must be positive");
  return {boost::math::cyl_bessel_j(1, x), boost::math::cyl_neumann(1, x)};
}

double gamma_fn(double x) {
  if (nonpositive_integer(x)) throw DomainError("gamma_fn: pole at nonpositive integer");
  return std::tgamma(x);
}

double rgamma(double x) {
  if (nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

cplx parabolic_d(double beta, cplx z) {
  if (!(std::abs(z) <= 30.0))
    throw DomainError("parabolic_d: |z| outside the validated range 30");
  const double az = std::abs(z);
  const double ph = std::arg(z);
  if (az <= kSeriesRadius || std::abs(ph) <= 0.5 * kPi) return pcf_direct(beta, z);
  // connection formulas push the evaluation into |arg| <= pi/2
  const double c = std::sqrt(2.0 * kPi) * rgamma(-beta);
  if (ph > 0.0) {
    cplx v = std::exp(kI * kPi * beta) * pcf_direct(beta, -z);
    if (c != 0.0)
      v += c * std::exp(kI * kPi * (beta + 1.0) / 2.0) *
           pcf_direct(-beta - 1.0, -kI * z);
    return v;
  }
  cplx v = std::exp(-kI * kPi * beta) * pcf_direct(beta, -z);
  if (c != 0.0)
    v += c * std::exp(-kI * kPi * (beta + 1.0) / 2.0) *
         pcf_direct(-beta - 1.0, kI * z);
  return v;
}

namespace {

void check_f_args(cplx rho, cplx b, double beta) {
  if (!(beta > -1.0)) throw DomainError("F2/F3: beta must exceed -1");
  if (!(rho.imag() > 0.0)) throw DomainError("F2/F3: Im rho must be positive");
  if (b.imag() == 0.0) throw DomainError("F2/F3: Im b must be nonzero");
}

}  // namespace

cplx f2_closed(cplx rho, cplx b, double beta) {
  check_f_args(rho, b, beta);
  const cplx pre = std::exp(kI * rho * b * b / 2.0) * std::sqrt(2.0 * kPi) *
                   branch::principal_power(1.0 / (2.0 * rho), (beta + 1.0) / 2.0);
  const cplx root = std::sqrt(2.0 * rho) * b;
  if (b.imag() < 0.0)
    return pre * std::exp(kI * kPi * (3.0 * beta + 1.0) / 4.0) *
           parabolic_d(beta, root * std::exp(kI * kPi / 4.0));
  return pre * std::exp(kI * kPi * (1.0 - beta) / 4.0) *
         parabolic_d(beta, root * std::exp(-3.0 * kI * kPi / 4.0));
}

cplx f3_closed(cplx rho, cplx b, double beta) {
  check_f_args(rho, b, beta);
  const double sgn = b.imag() > 0.0 ? 1.0 : -1.0;
  return sgn * std::exp(kI * rho * b * b / 2.0) *
         branch::principal_power(1.0 / (2.0 * rho), (beta + 1.0) / 2.0) *
         std::exp(kI * kPi * (beta + 3.0) / 4.0) * (2.0 * kPi * rgamma(-beta)) *
         parabolic_d(-beta - 1.0, std::sqrt(2.0 * rho) * b *
                                      std::exp(3.0 * kI * kPi / 4.0));
}

cplx f2_oracle(cplx rho, cplx b, double beta) {
  check_f_args(rho, b, beta);
  const double half = std::sqrt(60.0 / rho.imag()) + std::abs(b);
  const double c = b.real();
  auto f = [&](double s) {
    return branch::principal_power(s - b, beta) * std::exp(kI * rho * s * s);
  };
  auto r = quad::integrate(f, {c - half, c - 1.0, c, c + 1.0, c + half}, 1e-15,
                           1e-13, 200000, 8);
  return r.value;
}

cplx f3_oracle(cplx rho, cplx b, double beta) {
  check_f_args(rho, b, beta);
  // Edge values of (s-b)^beta along s = b - t: t^beta e^{+i pi beta} above the
  // cut and t^beta e^{-i pi beta} below it. The small circle around b vanishes
  // for beta > -1. With t = u^2 the endpoint root becomes smooth.
  const double umax = std::sqrt(std::abs(b.real()) + std::sqrt(60.0 / rho.imag()) + 1.0);
  auto edge = [&](double u) {
    const double t = u * u;
    return 2.0 * u * std::pow(t, beta) * std::exp(kI * rho * (b - t) * (b - t));
  };
  const cplx j = quad::integrate(edge, 0.0, umax, 1e-15, 1e-13, 200000, 16).value;
  const cplx above = std::exp(kI * kPi * beta), below = std::exp(-kI * kPi * beta);
  // counter-clockwise: lower edge left-to-right, upper edge right-to-left
  const cplx ccw = (below - above) * j;
  return b.imag() > 0.0 ? ccw : -ccw;
}

}  // namespace twolayer::special
