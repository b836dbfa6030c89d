#include <random>
#include <vector>

#include "doctest.h"
#include "twolayer/scattering.hpp"
#include "twolayer/sommerfeld.hpp"

using namespace twolayer;
using namespace twolayer::scattering;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

// Point with the requested half, radius in [lo, hi].
Point random_point(std::mt19937_64& rng, Half half, double lo, double hi) {
  std::uniform_real_distribution<double> rad(lo, hi), ang(0.1, kPi - 0.1);
  const double a = ang(rng);
  return Point::polar(rad(rng), half == Half::Upper ? a : a + kPi);
}

}  // namespace

TEST_CASE("equal wavenumbers give the free-space trace") {
  const WaveProfile wp(2.0, 2.0);
  const Point z0(0.2, -0.4);
  const CircleTrace t = manufacture_trace(wp, z0, 2.0, 24);
  CHECK(t.nodes.size() == 48);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    CHECK(rel(t.u[i], sommerfeld::free_green(2.0, t.nodes[i].y, z0)) < 1e-12);
    const auto g = sommerfeld::free_green_grad_y(2.0, z0, t.nodes[i].y);
    CHECK(rel(t.du_dn[i], g[0] * t.nodes[i].normal[0] + g[1] * t.nodes[i].normal[1]) < 1e-12);
  }
  const Point x(5.0, 3.0);
  CHECK(rel(represent_exterior(t, x, wp), sommerfeld::free_green(2.0, x, z0)) < 1e-12);
  const farfield::FarDirection d(2.2);
  const cplx plane = std::exp(-kI * 2.0 * (d.c * z0.x1 + d.s * z0.x2));
  CHECK(rel(farfield_from_boundary(t, d, wp),
            std::exp(0.25 * kI * kPi) / std::sqrt(16.0 * kPi) * plane) < 1e-12);
}

TEST_CASE("trace geometry and continuity at the crossings") {
  const WaveProfile wp(2.0, 1.0);
  const Point z0(0.2, -0.4);
  const CircleTrace t = manufacture_trace(wp, z0, 2.0, 16);
  CHECK(t.split_points[0].x1 == 2.0);
  CHECK(t.split_points[1].x1 == -2.0);
  double total = 0.0;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    CHECK(t.nodes[i].y.half == (i < 16 ? Half::Upper : Half::Lower));
    total += t.nodes[i].weight;
  }
  CHECK(std::abs(total - 4.0 * kPi) < 1e-12);
  const double e = 1e-8;
  for (auto [a, b] : {std::pair{e, 2.0 * kPi - e}, std::pair{kPi - e, kPi + e}}) {
    const TraceValue up = trace_point(wp, z0, 2.0, a), down = trace_point(wp, z0, 2.0, b);
    CHECK(std::abs(up.u - down.u) < 1e-6 * std::abs(up.u));
    CHECK(std::abs(up.du_dn - down.du_dn) < 1e-6 * std::abs(up.du_dn));
  }
}

TEST_CASE("normal derivative against radial differences") {
  const double h = 1e-5;
  for (const WaveProfile& wp : {WaveProfile(2.0, 1.0), WaveProfile(1.0, 2.0)}) {
    const Point z0(-0.3, 0.5);
    for (double phi : {0.4, 2.0, 3.5, 5.9}) {
      const cplx fd = (sommerfeld::green(wp, z0, Point::polar(2.0 + h, phi)) -
                       sommerfeld::green(wp, z0, Point::polar(2.0 - h, phi))) / (2.0 * h);
      CHECK(std::abs(trace_point(wp, z0, 2.0, phi).du_dn - fd) < 1e-7);
    }
  }
}

TEST_CASE("representation of the manufactured field") {
  const WaveProfile wp(2.0, 1.0);
  const Point z0(0.2, -0.4), x(5.0, 3.0);
  const cplx g = sommerfeld::green(wp, x, z0);
  CHECK(rel(represent_exterior(manufacture_trace(wp, z0, 2.0, 128), x, wp), g) < 1e-6);
  const double e8 = rel(represent_exterior(manufacture_trace(wp, z0, 2.0, 8), x, wp), g);
  const double e16 = rel(represent_exterior(manufacture_trace(wp, z0, 2.0, 16), x, wp), g);
  CHECK(e16 * 1e2 <= e8);
}

TEST_CASE("identities over placements and orderings") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> dir(0.05, kPi - 0.05);
  for (const WaveProfile& wp : {WaveProfile(2.0, 1.0), WaveProfile(1.0, 2.0)}) {
    int n = 0;
    for (Half zh : {Half::Upper, Half::Lower}) {
      const Point z0 = random_point(rng, zh, 0.1, 1.2);
      const CircleTrace t = manufacture_trace(wp, z0, 1.5, 32);
      for (Half xh : {Half::Upper, Half::Lower}) {
        for (int i = 0; i < 5; ++i, ++n) {
          const Point x = random_point(rng, xh, 2.0, 12.0);
          CHECK(rel(represent_exterior(t, x, wp), sommerfeld::green(wp, x, z0)) < 1e-6);
          const double a = dir(rng);
          const farfield::FarDirection d(xh == Half::Upper ? a : a + kPi);
          CHECK(std::abs(farfield_from_boundary(t, d, wp) - farfield::g_farfield(d, z0, wp)) < 1e-6);
        }
      }
    }
    CHECK(n == 20);
  }
  const WaveProfile wp(2.0, 1.0);
  CHECK_THROWS_AS(manufacture_trace(wp, Point(0.0, 3.0), 2.0, 8), DomainError);
  CHECK_THROWS_AS(manufacture_trace(wp, Point(1.0, 0.0), 2.0, 8), DomainError);
  const CircleTrace t = manufacture_trace(wp, Point(0.2, 0.4), 2.0, 8);
  CHECK_THROWS_AS(represent_exterior(t, Point(1.0, 1.0), wp), DomainError);
  CHECK_THROWS_AS(represent_exterior(t, Point(5.0, 0.0), wp), DomainError);
}

TEST_CASE("scaled representation approaches the boundary far field") {
  const WaveProfile wp(2.0, 1.0);
  const Point z0(0.2, -0.4);
  const CircleTrace t = manufacture_trace(wp, z0, 2.0, 32);
  for (double theta : {1.4, 4.2}) {
    const farfield::FarDirection d(theta);
    const double k = wp.k_of(d.half);
    const cplx uinf = farfield_from_boundary(t, d, wp);
    double prev = 1e300;
    for (double r : {30.0, 300.0, 3000.0}) {
      const cplx u = represent_exterior(t, Point::polar(r, theta), wp);
      const double err = std::abs(std::sqrt(r) * std::exp(-kI * k * r) * u - uinf);
      CHECK(err < 0.2 * prev);
      prev = err;
    }
  }
}

TEST_CASE("pattern regularity by half-plane") {
  for (const WaveProfile& wp : {WaveProfile(2.0, 1.0), WaveProfile(1.0, 2.0), WaveProfile(1.5, 1.5)}) {
    const CircleTrace t = manufacture_trace(wp, Point(0.2, -0.4), 2.0, 32);
    const RegularityReport rep = pattern_regularity_scan(t, wp, 1001);
    for (const HalfScan& h : {rep.upper, rep.lower}) {
      const bool expect_smooth = wp.ordering == Ordering::Equal ||
                                 (wp.ordering == Ordering::PlusGreater) == (h.half == Half::Lower);
      CHECK(h.smooth == expect_smooth);
      CHECK(std::abs(h.l1_fine - h.l1) < 0.01 * h.l1);
      if (h.smooth) {
        CHECK(h.max_derivative_fine < 1.01 * h.max_derivative);
        CHECK_FALSE(h.spike_at_critical);
      } else {
        CHECK(h.max_derivative_fine > 1.3 * h.max_derivative);
        CHECK(h.spike_at_critical);
      }
    }
  }
}
