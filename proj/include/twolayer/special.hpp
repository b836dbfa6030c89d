// Hankel, Gamma and parabolic cylinder functions, and the Gaussian-weighted
// branch integrals F2 / F3 with their quadrature oracles.
#pragma once

#include "twolayer/core.hpp"

namespace twolayer::special {

// H0^(1)(x) and H1^(1)(x) for x > 0.
cplx hankel_h0(double x);
cplx hankel_h1(double x);

double gamma_fn(double x);
// 1/Gamma(x), zero at the poles.
double rgamma(double x);

// Parabolic cylinder function D_beta(z), validated for |z| <= 30.
cplx parabolic_d(double beta, cplx z);

// F2(rho,b,beta) = int_R (s-b)^beta e^{i rho s^2} ds
cplx f2_closed(cplx rho, cplx b, double beta);
// Loop of (s-b)^beta e^{i rho s^2} around the horizontal cut left of b,
// counter-clockwise for Im b > 0 and clockwise for Im b < 0.
cplx f3_closed(cplx rho, cplx b, double beta);

cplx f2_oracle(cplx rho, cplx b, double beta);
cplx f3_oracle(cplx rho, cplx b, double beta);

}  // namespace twolayer::special
