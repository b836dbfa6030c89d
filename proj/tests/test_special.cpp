#include <vector>

#include "doctest.h"
#include "twolayer/quadrature.hpp"
#include "twolayer/special.hpp"

using namespace twolayer;
using namespace twolayer::special;

namespace {
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

struct DCase {
  double beta;
  cplx z, value;
};
// Reference values from a 30-digit evaluation (mpmath pcfd / hankel1).
const std::vector<DCase> kDValues = {
    {0.5, {1.0, 1.0}, {1.1935416352846394, -0.18989656308145634}},
    {1.5, {0.3, -2.0}, {-2.3921555486543385, -7.9911359464163606}},
    {-2.5, {2.0, 0.5}, {0.021811940581581444, -0.027842702483805475}},
    {0, {-1.0, 2.0}, {1.1438199904987182, 1.7813940888174006}},
    {0.5, {5.0, 3.0}, {0.025780937456773273, -0.036033264504702895}},
    {1.5, {-4.0, -4.0}, {6.7795191991552415, 11.623762096650499}},
    {-1.5, {7.0, 1.0}, {-2.6722952391511455e-7, 1.6820997495396856e-7}},
    {0.5, {-9.0, 3.0}, {-1463515.358262126, 685053.28253327542}},
    {-2.5, {-6.0, -7.0}, {-2.045481278885904, -0.64445736546776411}},
    {1.5, {2.0, 12.0}, {-60268768643407670.0, 30306434513940716.0}},
    {0.5, {20.0, -5.0}, {8.1018951208036735e-41, -3.3098277249460698e-41}},
    {-0.5, {-15.0, 10.0}, {9559718849349.9908, 7943082998188.7595}},
    {0.3, {6.4, 0.2}, {5.0973437735823743e-5, -3.7226372877043667e-5}},
    {0.3, {6.6, 0.2}, {2.6450124743502468e-5, -2.0151374615058011e-5}},
    {1.5, {0.0, -6.6}, {-648645.04630329058, -648645.04630317667}},
    {0.5, {-6.6, 0.01}, {-2342.1523976561854, 71.631304098843326}},
    {-1.5, {4.7, 4.7}, {0.053923804446237836, 0.021873291067245619}},
};

struct HCase {
  double x;
  cplx h0, h1;
};
const std::vector<HCase> kHValues = {
    {1e-6, {0.99999999999975, -8.8690314816594437}, {4.9999999999993748e-7, -636619.77237217504}},
    {1e-4, {0.9999999975, -5.937289069709337}, {4.9999999937500002e-5, -6366.1980364557613}},
    {0.5, {0.9384698072408129, -0.44451873350670656}, {0.24226845767487389, -1.4714723926702431}},
    {2.0, {0.22389077914123567, 0.51037567264974512}, {0.57672480775687339, -0.10703243154093755}},
    {11.9, {0.025049441699589645, -0.22983321394337506}, {-0.22898324966192406, -0.03471149833403061}},
    {12.1, {0.069666773606807312, -0.21843838055092549}, {-0.21574897337692481, -0.078736931451395746}},
    {30.0, {-0.086367983581040211, -0.11729573168666403}, {-0.11875106261662294, 0.084425570661747235}},
    {1e3, {0.024786686152420175, 0.0047159179776228134}, {0.0047283119070895239, -0.024784331292351779}},
    {1e5, {-0.0017192011162359722, 0.0018467661588650641}, {0.0018467575628825677, 0.0017192103500882563}},
};
}  // namespace

TEST_CASE("Hankel functions") {
  for (const auto& c : kHValues) {
    CHECK(rel(hankel_h0(c.x), c.h0) < 1e-12);
    CHECK(rel(hankel_h1(c.x), c.h1) < 1e-12);
  }
  const double x = 1e-4, gamma_e = 0.57721566490153286;
  CHECK(rel(hankel_h0(x), 1.0 + 2.0 * kI / kPi * (std::log(x / 2) + gamma_e)) < 1e-8);
  CHECK(std::abs(std::abs(hankel_h0(1e4)) - std::sqrt(2.0 / (kPi * 1e4))) <
        1e-3 * std::sqrt(2.0 / (kPi * 1e4)));
  CHECK(std::abs(std::abs(hankel_h1(1e4)) - std::sqrt(2.0 / (kPi * 1e4))) <
        1e-3 * std::sqrt(2.0 / (kPi * 1e4)));
  for (double t : {1.0, 10.0, 100.0}) {
    const cplx h0 = hankel_h0(t), h1 = hankel_h1(t);
    const double w = h0.real() * h1.imag() - h1.real() * h0.imag();
    CHECK(std::abs(w + 2.0 / (kPi * t)) < 1e-14 / t);
  }
  const double h = 1e-5;
  const cplx d = (hankel_h0(2.0 + h) - hankel_h0(2.0 - h)) / (2 * h);
  CHECK(std::abs(d + hankel_h1(2.0)) < 1e-8);
  CHECK_THROWS_AS(hankel_h0(0.0), DomainError);
  CHECK_THROWS_AS(hankel_h1(-1.0), DomainError);
}

TEST_CASE("gamma") {
  const double sp = std::sqrt(kPi);
  CHECK(gamma_fn(0.5) == doctest::Approx(sp).epsilon(1e-15));
  CHECK(gamma_fn(-0.5) == doctest::Approx(-2 * sp).epsilon(1e-15));
  CHECK(gamma_fn(-1.5) == doctest::Approx(4 * sp / 3).epsilon(1e-15));
  CHECK_THROWS_AS(gamma_fn(-2.0), DomainError);
  CHECK(rgamma(-3.0) == 0.0);
  for (double x = -9.93; x < 10.0; x += 0.173)
    CHECK(std::abs(gamma_fn(x + 1) - x * gamma_fn(x)) <= 1e-13 * std::abs(gamma_fn(x + 1)));
}

TEST_CASE("parabolic cylinder function") {
  for (const auto& c : kDValues) {
    INFO("beta=" << c.beta << " z=" << c.z);
    CHECK(rel(parabolic_d(c.beta, c.z), c.value) < 1e-9);
  }
  const cplx z(1.0, 1.0);
  CHECK(rel(parabolic_d(0.0, z), std::exp(-z * z / 4.0)) < 1e-14);
  for (double b : {0.5, 1.5, -0.5, -2.5})
    CHECK(rel(parabolic_d(b, 0.0), std::pow(2.0, b / 2) * std::sqrt(kPi) * rgamma((1 - b) / 2)) < 1e-14);
  const cplx w(2.0, 1.0);
  const double b = 0.5;
  CHECK(std::abs(parabolic_d(b + 1, w) - w * parabolic_d(b, w) + b * parabolic_d(b - 1, w)) <
        1e-9 * std::abs(parabolic_d(b, w)));
  // D_{-1}(x) = e^{x^2/4} sqrt(pi/2) erfc(x/sqrt 2)
  for (double x : {-3.0, 0.4, 2.5, 8.0})
    CHECK(rel(parabolic_d(-1.0, x), std::exp(x * x / 4) * std::sqrt(kPi / 2) * std::erfc(x / std::sqrt(2.0))) < 1e-9);
  // analyticity: complex-step Cauchy-Riemann residual
  const double e = 1e-6;
  for (const auto& c : kDValues) {
    if (std::abs(c.z) > 20.0) continue;
    const cplx dx = (parabolic_d(c.beta, c.z + e) - parabolic_d(c.beta, c.z - e)) / (2 * e);
    const cplx dy = (parabolic_d(c.beta, c.z + kI * e) - parabolic_d(c.beta, c.z - kI * e)) / (2 * e);
    CHECK(std::abs(dy - kI * dx) <= 1e-5 * std::max(1.0, std::abs(dx)));
  }
  CHECK_THROWS_AS(parabolic_d(0.5, 31.0), DomainError);
}

TEST_CASE("F2 and F3 closed forms against quadrature") {
  const double sp = std::sqrt(kPi);
  CHECK(rel(f2_closed(kI, cplx(0, -0.3), 0.0), sp) < 1e-13);
  CHECK(rel(f2_oracle(kI, cplx(0, 0.3), 0.0), sp) < 1e-12);
  CHECK(rel(f2_closed(cplx(1, 2), cplx(0.2, 0.5), 0.0), std::sqrt(kPi / cplx(1, 2)) * std::exp(kI * kPi / 4.0)) < 1e-13);
  CHECK(rel(f2_closed(kI, cplx(0, -0.3), 0.5), f2_oracle(kI, cplx(0, -0.3), 0.5)) < 1e-9);
  CHECK(rel(f2_closed(kI, cplx(0, 0.3), 1.5), f2_oracle(kI, cplx(0, 0.3), 1.5)) < 1e-9);
  CHECK(rel(f3_closed(kI, cplx(0, 0.5), 0.5), f3_oracle(kI, cplx(0, 0.5), 0.5)) < 1e-8);

  const std::vector<cplx> rhos = {kI, {1, 2}, {-1, 2}};
  const std::vector<cplx> bs = {{0, 0.1}, {0, -0.1}, {0, 0.7}, {0, -0.7}, {0.3, 0.4}, {0.3, -0.4}};
  for (cplx rho : rhos)
    for (cplx b : bs)
      for (double beta : {0.5, 1.5}) {
        INFO("rho=" << rho << " b=" << b << " beta=" << beta);
        CHECK(rel(f2_closed(rho, b, beta), f2_oracle(rho, b, beta)) < 1e-8);
        CHECK(rel(f3_closed(rho, b, beta), f3_oracle(rho, b, beta)) < 1e-8);
      }

  // integrand conjugation: F2(-conj rho, conj b, beta) = conj F2(rho, b, beta)
  for (cplx b : bs) {
    const cplx rho(1, 2);
    CHECK(rel(f2_oracle(-std::conj(rho), std::conj(b), 0.5), std::conj(f2_oracle(rho, b, 0.5))) < 1e-10);
  }
  // Im b sign flip: reflecting b across the real axis conjugates the loop
  // geometry, reversing orientation
  const cplx b(0.2, 0.5);
  CHECK(rel(f3_closed(kI, std::conj(b), 0.5), f3_oracle(kI, std::conj(b), 0.5)) < 1e-8);
  // F3 vanishes at beta = 1 and is continuous through it
  CHECK(std::abs(f3_closed(kI, b, 1.0)) == 0.0);
  const cplx lo = f3_closed(kI, b, 1.0 - 1e-6), hi = f3_closed(kI, b, 1.0 + 1e-6);
  CHECK(std::abs(lo) < 1e-4);
  CHECK(std::abs(hi) < 1e-4);
  CHECK(std::abs(lo - f3_oracle(kI, b, 1.0 - 1e-6)) < 1e-10);
  CHECK_THROWS_AS(f2_closed(kI, 0.5, 0.5), DomainError);
  CHECK_THROWS_AS(f3_closed(cplx(1, 0), cplx(0, 1), 0.5), DomainError);
}

TEST_CASE("quadrature rule sanity") {
  auto r = quad::integrate([](double x) { return cplx(std::cos(x), std::exp(x)); }, 0.0, 3.0, 1e-15, 1e-14);
  CHECK(rel(r.value, cplx(std::sin(3.0), std::exp(3.0) - 1.0)) < 1e-14);
  auto s = quad::integrate([](double x) { return cplx(1.0 / std::sqrt(x)); }, 0.0, 1.0, 1e-12, 1e-12);
  CHECK(std::abs(s.value - 2.0) < 1e-10);
  std::vector<double> x, w;
  quad::gauss_legendre(16, -1.0, 2.0, x, w);
  double acc = 0.0;
  for (int i = 0; i < 16; ++i) acc += w[i] * x[i] * x[i];
  CHECK(acc == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(x.front() < x.back());
}
