#include <vector>

#include "doctest.h"
#include "twolayer/branch.hpp"
#include "twolayer/farfield.hpp"
#include "twolayer/saddle.hpp"

using namespace twolayer;
using namespace twolayer::farfield;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

const cplx kE = std::exp(0.25 * kI * kPi);

}  // namespace

TEST_CASE("directions along the interface are rejected") {
  CHECK_THROWS_AS(FarDirection{0.0}, LateralDirectionError);
  CHECK_THROWS_AS(FarDirection{kPi}, LateralDirectionError);
  CHECK_THROWS_AS(FarDirection{2.0 * kPi}, LateralDirectionError);
  CHECK(FarDirection(1.0).half == Half::Upper);
  CHECK(FarDirection(4.0).half == Half::Lower);
  CHECK_THROWS_AS(g_farfield(FarDirection(1.0), Point(1.0, 0.0), WaveProfile(2.0, 1.0)), DomainError);
}

TEST_CASE("vertical direction above a source on the axis") {
  const WaveProfile wp(2.0, 1.0);
  const double h = 0.7, k = wp.k_plus;
  const cplx expect = kE / std::sqrt(8.0 * kPi * k) *
                      (std::exp(-kI * k * h) + branch::refl_coeff(0.5 * kPi, wp) * std::exp(kI * k * h));
  CHECK(rel(g_farfield(FarDirection(0.5 * kPi), Point(0.0, h), wp), expect) < 1e-14);
  CHECK(rel(branch::refl_coeff(0.5 * kPi, wp), (1.0 - wp.n) / (1.0 + wp.n)) < 1e-14);
}

TEST_CASE("equal wavenumbers give the plane-wave pattern") {
  const WaveProfile wp(1.5, 1.5);
  const double k = 1.5;
  for (double t : {0.4, 2.0, 3.7, 5.9}) {
    const FarDirection d(t);
    for (const Point& y : {Point(0.3, 0.4), Point(-0.5, -0.2)}) {
      const cplx plane = std::exp(-kI * k * (d.c * y.x1 + d.s * y.x2));
      const cplx pre = kE / std::sqrt(8.0 * kPi * k);
      CHECK(rel(g_farfield(d, y, wp), pre * plane) < 1e-13);
      const auto H = h_farfield(d, y, wp);
      const cplx hp = std::exp(-0.25 * kI * kPi) * std::sqrt(k / (8.0 * kPi)) * plane;
      CHECK(rel(H[0], hp * d.c) < 1e-13);
      CHECK(rel(H[1], hp * d.s) < 1e-13);
    }
  }
}

TEST_CASE("gradient pattern against differences of the pattern") {
  const double h = 1e-6;
  for (const WaveProfile& wp : {WaveProfile(2.0, 1.0), WaveProfile(1.0, 2.0)}) {
    for (double t = 0.05; t < 2.0 * kPi; t += 0.1) {
      if (std::abs(std::sin(t)) < 0.01) continue;
      const FarDirection d(t);
      for (const Point& y : {Point(0.3, 0.5), Point(-0.4, -0.6)}) {
        const auto H = h_farfield(d, y, wp);
        const cplx d1 = (g_farfield(d, Point(y.x1 + h, y.x2), wp) - g_farfield(d, Point(y.x1 - h, y.x2), wp)) / (2 * h);
        const cplx d2 = (g_farfield(d, Point(y.x1, y.x2 + h), wp) - g_farfield(d, Point(y.x1, y.x2 - h), wp)) / (2 * h);
        CHECK(std::abs(H[0] - d1) <= 1e-7);
        CHECK(std::abs(H[1] - d2) <= 1e-7);
      }
    }
  }
}

TEST_CASE("evanescent transmission stays finite and decays") {
  const WaveProfile wp(2.0, 1.0);  // lower directions with |cos| > 1/n do not exist; use the swap
  const WaveProfile mp(1.0, 2.0);
  const FarDirection d(2.0 * kPi - 0.3);  // |cos| > n, upper source
  const cplx near = g_farfield(d, Point(0.0, 0.5), mp), far = g_farfield(d, Point(0.0, 5.0), mp);
  CHECK(std::isfinite(std::abs(near)));
  CHECK(std::abs(far) < std::abs(near));
  const FarDirection u(0.3);  // upper direction, lower source, k+ > k-
  CHECK(std::abs(g_farfield(u, Point(0.0, -5.0), wp)) < std::abs(g_farfield(u, Point(0.0, -0.5), wp)));
}

TEST_CASE("pattern is continuous in the direction") {
  // the largest step between neighbours shrinks under refinement
  for (const WaveProfile& wp : {WaveProfile(2.0, 1.0), WaveProfile(1.0, 2.0)}) {
    for (const Point& y : {Point(0.3, 0.5), Point(-0.4, -0.6)}) {
      for (double lo : {0.0, kPi}) {
        auto max_step = [&](int n) {
          double m = 0.0;
          cplx prev = g_farfield(FarDirection(lo + kPi / (n + 1)), y, wp);
          for (int i = 2; i <= n; ++i) {
            const cplx v = g_farfield(FarDirection(lo + kPi * i / (n + 1)), y, wp);
            m = std::max(m, std::abs(v - prev));
            prev = v;
          }
          return m;
        };
        const double a = max_step(1000), b = max_step(4000);
        CHECK(b < 0.6 * a);
        CHECK(a < 0.05);
      }
    }
  }
}

TEST_CASE("reflection bounds") {
  const WaveProfile wp(2.0, 1.0);
  for (double t = 0.01; t < kPi; t += 0.01) {
    const double m = std::abs(branch::refl_coeff(t, wp));
    const bool tir = t < wp.theta_c || t > kPi - wp.theta_c;
    if (tir) CHECK(std::abs(m - 1.0) < 1e-13);
    else CHECK(m <= 1.0 + 1e-14);
  }
}

TEST_CASE("reference field") {
  for (const WaveProfile& wp : {WaveProfile(2.0, 1.0), WaveProfile(1.0, 2.0)}) {
    for (double td : {kPi + 0.2, 4.0, 1.5 * kPi, 5.2}) {
      const IncidentSpec inc(td, wp);
      CHECK(inc.d_r[1] > 0.0);
      const bool real_t = std::abs(std::cos(td)) <= wp.n;
      CHECK((std::abs(inc.d_t[1].imag()) < 1e-15) == real_t);
      auto u = [&](double a, double b) { return reference_field(inc, Point(a, b), wp); };
      // one-sided limits and normal derivatives across x2 = 0
      const double e = 1e-7, x1 = 0.37, h = 1e-5;
      CHECK(std::abs(u(x1, e) - u(x1, -e)) < 1e-6);
      const cplx up = (u(x1, 2 * h) - u(x1, h)) / h, down = (u(x1, -h) - u(x1, -2 * h)) / h;
      CHECK(std::abs(up - down) < 1e-3 * std::max(1.0, std::abs(up)));
      // Helmholtz residual in each half
      for (double x2 : {0.8, -0.8}) {
        const double k = x2 > 0 ? wp.k_plus : wp.k_minus, s = 1e-3;
        const cplx lap = (u(x1 + s, x2) + u(x1 - s, x2) + u(x1, x2 + s) + u(x1, x2 - s) - 4.0 * u(x1, x2)) / (s * s);
        CHECK(std::abs(lap + k * k * u(x1, x2)) < 1e-4 * k * k * std::max(1.0, std::abs(u(x1, x2))));
      }
    }
  }
  CHECK_THROWS_AS((IncidentSpec{1.0, WaveProfile(2.0, 1.0)}), DomainError);
  CHECK_THROWS_AS(reference_field(IncidentSpec(4.0, WaveProfile(2.0, 1.0)), Point(1.0, 0.0), WaveProfile(2.0, 1.0)),
                  DomainError);
}

TEST_CASE("scaled field approaches the pattern") {
  const WaveProfile wp(2.0, 1.0);
  for (double t : {0.7, 1.5, 3.9, 5.0}) {
    for (const Point& y : {Point(0.3, 0.5), Point(-0.2, -0.4)}) {
      const FarDirection d(t);
      const double k = wp.k_of(d.half);
      const cplx ginf = g_farfield(d, y, wp);
      std::vector<double> err;
      for (double r : {100.0, 1000.0}) {
        const cplx g = saddle::evaluate(wp, Point::polar(r, t), y, saddle::Method::Auto).value;
        err.push_back(std::abs(std::sqrt(r) * std::exp(-kI * k * r) * g - ginf));
      }
      CHECK(err[1] < 0.5 * err[0]);
    }
  }
}
