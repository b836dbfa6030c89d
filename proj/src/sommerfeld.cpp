#include "twolayer/sommerfeld.hpp"

#include "twolayer/branch.hpp"
#include "twolayer/quadrature.hpp"
#include "twolayer/special.hpp"

namespace twolayer::sommerfeld {
namespace {

using V3 = quad::Vec<3>;

// Spectral variable with the offsets xi - k+ and xi - k- carried separately,
// so branch-point neighbourhoods keep full relative precision.
struct Spec {
  cplx xi, dp, dm;
  cplx sp(double kp) const { return branch::s1(dp) * branch::s2(xi + kp); }
  cplx sm(double km) const { return branch::s1(dm) * branch::s2(xi + km); }
};

// Components: kernel K(xi), its y1-derivative factor -i xi (odd), and its
// y2-derivative factor (even).
constexpr std::array<double, 3> kParity = {1.0, -1.0, 1.0};

// int_{-inf}^{inf} K(xi) e^{i xi X} d xi for the three components. The real
// line part on [0, k_max] is folded by parity; the tails start at k_max and
// follow the rays on which e^{+-i xi X - xi D} decays without oscillating.
template <class Kernel>
quad::VecResult<3> spectral_integral(const Kernel& K, double X, double D,
                                     double kp, double km, const QuadSpec& q) {
  const double kmin = std::min(kp, km), kmax = std::max(kp, km);
  quad::VecResult<3> out{{}, 0.0, 0};

  auto add = [&out](const quad::VecResult<3>& r) {
    for (int j = 0; j < 3; ++j) out.value[j] += r.value[j];
    out.error += r.error;
    out.intervals += r.intervals;
  };
  // offset of xi from wavenumber k, exact when k is a segment endpoint
  auto offsets = [&](cplx xi, double k, cplx from_a, double a, cplx from_b, double b) {
    if (k == a) return from_a;
    if (k == b) return from_b;
    return xi - k;
  };

  // phases reach kmax * (|X| + D); their rounding sets the attainable accuracy
  const double noise = 4.0 * 2.220446049250313e-16 * kmax * (std::abs(X) + D);

  // Finite part, one segment per branch-point gap. xi = a + (b-a) sin^2(phi/2)
  // turns square-root endpoint behaviour into analytic dependence on phi.
  std::vector<std::pair<double, double>> gaps;
  if (kmin < kmax) gaps = {{0.0, kmin}, {kmin, kmax}};
  else gaps = {{0.0, kmax}};
  for (auto [a, b] : gaps) {
    const double len = b - a;
    auto f = [&, a, b, len](double phi) {
      const double sh = std::sin(0.5 * phi), ch = std::cos(0.5 * phi);
      const double xi = a + len * sh * sh;
      const cplx da = len * sh * sh, db = -len * ch * ch;
      const Spec p{xi, offsets(xi, kp, da, a, db, b), offsets(xi, km, da, a, db, b)};
      const double jac = len * sh * ch;
      const V3 k = K(p);
      const cplx even = 2.0 * std::cos(xi * X), odd = 2.0 * kI * std::sin(xi * X);
      return V3{k[0] * even * jac, k[1] * odd * jac, k[2] * even * jac};
    };
    const double phase = len * (std::abs(X) + D);
    const int panels = 2 + static_cast<int>(phase / 2.0);
    add(quad::integrate_vec<3>(f, {0.0, kPi}, q.abs_tol, q.rel_tol,
                               q.max_subdivisions, panels, noise));
  }

  // Tails: xi = kmax + u^2 w with w the descent direction of e^{i s xi X - xi D}.
  const double rho = std::hypot(D, X);
  const double umax = std::sqrt((q.truncation_decay + 10.0) / rho);
  for (double sgn : {1.0, -1.0}) {
    const cplx w = cplx(D, sgn * X) / rho;
    auto f = [&, w, sgn](double u) {
      const cplx step = u * u * w;
      const cplx xi = kmax + step;
      const cplx far = (kmax - kmin) + step;
      const Spec p{xi, kp == kmax ? step : far, km == kmax ? step : far};
      const cplx jac = 2.0 * u * w;
      const V3 k = K(p);
      const cplx e = std::exp(sgn * kI * xi * X) * jac;
      V3 r;
      for (int j = 0; j < 3; ++j) r[j] = k[j] * e * (sgn > 0 ? 1.0 : kParity[j]);
      return r;
    };
    add(quad::integrate_vec<3>(f, {0.0, umax}, q.abs_tol, q.rel_tol,
                               q.max_subdivisions, 4));
  }
  return out;
}

Eval finish(const quad::VecResult<3>& r, double scale) {
  Eval e;
  e.value = scale * r.value[0];
  e.grad = {scale * r.value[1], scale * r.value[2]};
  e.error = scale * r.error;
  return e;
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

void check_placement(const Point& x, const Point& y) {
  require(x.half != Half::OnInterface && y.half != Half::OnInterface,
          "points on the interface are not admissible");
  require(std::hypot(x.x1 - y.x1, x.x2 - y.x2) >= 1e-14, "coincident field and source points");
}

cplx free_green(double k, const Point& x, const Point& y) {
  const double d = std::hypot(x.x1 - y.x1, x.x2 - y.x2);
  require(d >= 1e-14, "coincident field and source points");
  return 0.25 * kI * special::hankel_h0(k * d);
}

Grad free_green_grad_y(double k, const Point& x, const Point& y) {
  const double d = std::hypot(x.x1 - y.x1, x.x2 - y.x2);
  require(d >= 1e-14, "coincident field and source points");
  const cplx c = -0.25 * kI * k * special::hankel_h1(k * d) / d;
  return {c * (y.x1 - x.x1), c * (y.x2 - x.x2)};
}

Eval reflected_part(const WaveProfile& wp, const Point& x, const Point& y,
                    const QuadSpec& q) {
  require(x.half == Half::Upper && y.half == Half::Upper, "reflected part needs x, y upper");
  const double kp = wp.k_plus, km = wp.k_minus, d = x.x2 + y.x2;
  if (kp == km) return Eval{0.0, {0.0, 0.0}, 0.0, false};
  auto K = [=](const Spec& p) {
    const cplx xi = p.xi, sp = p.sp(kp), sm = p.sm(km);
    const cplx k = (sp - sm) / (sp + sm) * std::exp(-sp * d) / sp;
    return V3{k, -kI * xi * k, -sp * k};
  };
  Eval e = finish(spectral_integral(K, x.x1 - y.x1, d, kp, km, q), 1.0 / (4.0 * kPi));
  e.near_interface = d < 1e-3 / kp;
  return e;
}

Eval lower_reflected_part(const WaveProfile& wp, const Point& x, const Point& y,
                          const QuadSpec& q) {
  require(x.half == Half::Lower && y.half == Half::Lower, "lower reflected part needs x, y lower");
  const double kp = wp.k_plus, km = wp.k_minus, d = -(x.x2 + y.x2);
  if (kp == km) return Eval{0.0, {0.0, 0.0}, 0.0, false};
  auto K = [=](const Spec& p) {
    const cplx xi = p.xi, sp = p.sp(kp), sm = p.sm(km);
    const cplx k = (sm - sp) / (sp + sm) * std::exp(-sm * d) / sm;
    return V3{k, -kI * xi * k, sm * k};
  };
  Eval e = finish(spectral_integral(K, x.x1 - y.x1, d, kp, km, q), 1.0 / (4.0 * kPi));
  e.near_interface = d < 1e-3 / km;
  return e;
}

Eval transmitted_part(const WaveProfile& wp, const Point& x, const Point& y,
                      const QuadSpec& q) {
  require(x.half == Half::Upper && y.half == Half::Lower, "transmitted part needs x upper, y lower");
  const double kp = wp.k_plus, km = wp.k_minus;
  const double x2 = x.x2, y2 = y.x2;
  auto K = [=](const Spec& p) {
    const cplx xi = p.xi, sp = p.sp(kp), sm = p.sm(km);
    const cplx k = std::exp(sm * y2 - sp * x2) / (sp + sm);
    return V3{k, -kI * xi * k, sm * k};
  };
  return finish(spectral_integral(K, x.x1 - y.x1, x2 - y2, kp, km, q), 1.0 / (2.0 * kPi));
}

Eval transmitted_swap_part(const WaveProfile& wp, const Point& x, const Point& y,
                           const QuadSpec& q) {
  require(x.half == Half::Lower && y.half == Half::Upper, "transmitted part needs x lower, y upper");
  const double kp = wp.k_plus, km = wp.k_minus;
  const double x2 = x.x2, y2 = y.x2;
  auto K = [=](const Spec& p) {
    const cplx xi = p.xi, sp = p.sp(kp), sm = p.sm(km);
    const cplx k = std::exp(-sp * y2 + sm * x2) / (sp + sm);
    return V3{k, -kI * xi * k, -sp * k};
  };
  return finish(spectral_integral(K, x.x1 - y.x1, y2 - x2, kp, km, q), 1.0 / (2.0 * kPi));
}

cplx green_reflected(const WaveProfile& wp, const Point& x, const Point& y, const QuadSpec& q) {
  return reflected_part(wp, x, y, q).value;
}
cplx green_transmitted(const WaveProfile& wp, const Point& x, const Point& y, const QuadSpec& q) {
  return transmitted_part(wp, x, y, q).value;
}
cplx green_lower_reflected(const WaveProfile& wp, const Point& x, const Point& y, const QuadSpec& q) {
  return lower_reflected_part(wp, x, y, q).value;
}
cplx green_transmitted_swap(const WaveProfile& wp, const Point& x, const Point& y, const QuadSpec& q) {
  return transmitted_swap_part(wp, x, y, q).value;
}

Eval green_eval(const WaveProfile& wp, const Point& x, const Point& y, const QuadSpec& q) {
  check_placement(x, y);
  if (x.half == Half::Upper && y.half == Half::Lower) return transmitted_part(wp, x, y, q);
  if (x.half == Half::Lower && y.half == Half::Upper) return transmitted_swap_part(wp, x, y, q);
  const double k = wp.k_of(x.half);
  Eval e = x.half == Half::Upper ? reflected_part(wp, x, y, q) : lower_reflected_part(wp, x, y, q);
  e.value += free_green(k, x, y);
  const Grad g = free_green_grad_y(k, x, y);
  e.grad[0] += g[0];
  e.grad[1] += g[1];
  return e;
}

cplx green(const WaveProfile& wp, const Point& x, const Point& y, const QuadSpec& q) {
  return green_eval(wp, x, y, q).value;
}

Grad grad_y_green(const WaveProfile& wp, const Point& x, const Point& y, const QuadSpec& q) {
  return green_eval(wp, x, y, q).grad;
}

}  // namespace twolayer::sommerfeld
