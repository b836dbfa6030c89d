#include <random>

#include "doctest.h"
#include "twolayer/branch.hpp"

using namespace twolayer;
using namespace twolayer::branch;

namespace {
bool close(cplx a, cplx b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}
}  // namespace

TEST_CASE("principal power") {
  CHECK(close(principal_power(4.0, 0.5), 2.0, 1e-15));
  CHECK(close(principal_power(kI, 0.5), std::exp(kI * kPi / 4.0), 1e-15));
  CHECK(principal_power(0.0, 2.0) == cplx(0.0));
  CHECK_THROWS_AS(principal_power(-1.0, 0.5), DomainError);
  CHECK_THROWS_AS(principal_power(0.0, -0.5), DomainError);
  CHECK_THROWS_AS(principal_power(cplx(-2.0, 1e-15), 0.5), DomainError);
}

TEST_CASE("sheeted roots") {
  CHECK(close(s1(-3.0), -kI * std::sqrt(3.0), 1e-15));
  CHECK(close(s1(cplx(-3.0, -0.0)), -kI * std::sqrt(3.0), 1e-15));
  CHECK(close(s1(1.0), 1.0, 1e-15));
  CHECK(close(s1(-kI), std::exp(-kI * kPi / 4.0), 1e-15));
  CHECK(close(s2(-1.0), kI, 1e-15));
  CHECK(close(s2(cplx(-1.0, -0.0)), kI, 1e-15));
  CHECK(close(s2(1.0), 1.0, 1e-15));
  CHECK(close(s2(kI), std::exp(kI * kPi / 4.0), 1e-15));
  CHECK(s1(0.0) == cplx(0.0));
  CHECK(s2(0.0) == cplx(0.0));
  CHECK_THROWS_AS(s1(cplx(0.0, 2.0)), DomainError);
  CHECK_THROWS_AS(s1(cplx(5e-14, 2.0)), DomainError);
  CHECK_THROWS_AS(s2(cplx(0.0, -2.0)), DomainError);
  CHECK_NOTHROW(s1(cplx(0.0, -2.0)));
  CHECK_NOTHROW(s2(cplx(0.0, 2.0)));
}

TEST_CASE("S and S~ on the real line") {
  const double a = 1.3;
  CHECK(close(s_cut(2.0, a), std::sqrt(4.0 - a * a), 1e-15));
  CHECK(close(s_cut(0.4, a), -kI * std::sqrt(a * a - 0.16), 1e-15));
  CHECK(s_cut(a, a) == cplx(0.0));
  CHECK(s_cut(-a, a) == cplx(0.0));
  CHECK(close(s_tilde(2.0, a), std::sqrt(4.0 - a * a), 1e-15));
  CHECK(close(s_tilde(0.4, a), kI * std::sqrt(a * a - 0.16), 1e-15));
  CHECK(close(s_tilde(-2.0, a), -std::sqrt(4.0 - a * a), 1e-15));
  for (double xi = -5.0; xi <= 5.0; xi += 0.0137) {
    const cplx v = s_cut(xi, a);
    CHECK(v.real() >= 0.0);
    CHECK(v.imag() <= 0.0);
    CHECK(close(v, s_cut(-xi, a), 1e-15));
  }
}

TEST_CASE("square identities on random grid") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const cplx z(u(rng), u(rng));
    const double a = 0.5 + 0.25 * (u(rng) + 4.0);
    const cplx ref = z * z - a * a;
    worst = std::max(worst, std::abs(s_cut(z, a) * s_cut(z, a) - ref) / std::abs(ref));
    worst = std::max(worst, std::abs(s_tilde(z, a) * s_tilde(z, a) - ref) / std::abs(ref));
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("one-sided limits onto the cut") {
  const double a = 0.7;
  for (double t : {0.0, 0.01, 0.5, 3.0}) {
    const cplx z(a, t);
    CHECK(close(s_limit(z, a, BranchSide::FromRight), s_tilde(z, a), 1e-15));
    CHECK(close(s_limit(z, a, BranchSide::FromLeft), -s_tilde(z, a), 1e-15));
    if (t > 0.0) {
      // h = 1e-8 probes with one Richardson step remove the O(h) bias
      const double h = 1e-8;
      auto probe = [&](double sgn) {
        return 2.0 * s_cut(z + sgn * h / 2, a) - s_cut(z + sgn * h, a);
      };
      CHECK(close(probe(1.0), s_limit(z, a, BranchSide::FromRight), 1e-12));
      CHECK(close(probe(-1.0), s_limit(z, a, BranchSide::FromLeft), 1e-12));
    }
  }
  CHECK(s_limit(a, a, BranchSide::FromRight) == cplx(0.0));
  CHECK_THROWS_AS(s_limit(cplx(a + 0.1, 1.0), a, BranchSide::FromLeft), DomainError);
}

TEST_CASE("coefficients") {
  WaveProfile wp(2.0, 1.0);
  CHECK(close(refl_coeff(kPi / 2, wp), (1.0 - wp.n) / (1.0 + wp.n), 1e-14));
  CHECK(close(refl_coeff(wp.theta_c, wp), 1.0, 1e-7));
  CHECK(close(trans_coeff(wp.theta_c, wp), 2.0, 1e-7));
  CHECK(close(refl_tilde(1.5 * kPi, wp), (wp.n - 1.0) / (wp.n + 1.0), 1e-14));
  WaveProfile sw = wp.swapped();
  for (double th = 3.2; th < 6.2; th += 0.1) {
    CHECK(close(trans_tilde(th, wp) - refl_tilde(th, wp), 1.0, 1e-15));
    CHECK(close(refl_tilde(th, wp), refl_coeff(2 * kPi - th, sw), 1e-13));
  }
  // total internal reflection band
  for (double th = 0.05; th < wp.theta_c; th += 0.05)
    CHECK(std::abs(std::abs(refl_coeff(th, wp)) - 1.0) < 1e-14);
  for (double th = wp.theta_c + 0.01; th < kPi - wp.theta_c; th += 0.05)
    CHECK(std::abs(refl_coeff(th, wp)) <= 1.0);
  CHECK(critical_angle(wp) == doctest::Approx(kPi / 3).epsilon(1e-15));
  CHECK(critical_angle(WaveProfile(1.0, 2.0)) == doctest::Approx(kPi / 3).epsilon(1e-15));
  CHECK_THROWS_AS(critical_angle(WaveProfile(2.0, 2.0)), DomainError);
}
