#include "twolayer/saddle.hpp"

#include "twolayer/branch.hpp"
#include "twolayer/quadrature.hpp"
#include "twolayer/special.hpp"

namespace twolayer::saddle {
namespace {

using V3 = quad::Vec<3>;
const cplx kEm = std::exp(-0.25 * kI * kPi);  // e^{-i pi/4}
const cplx kEp = std::exp(0.25 * kI * kPi);   // e^{+i pi/4}

void check_strip(cplx s, double kp) {
  if (!(std::abs(s.imag()) < std::sqrt(kp)))
    throw DomainError("s outside the strip |Im s| < sqrt(k+)");
}

struct Setup {
  double kp, n, r, theta_x;
  double y1, y2, ynorm;
  bool below;  // theta_x < theta_c
  cplx s_b;
  cplx pre;  // i e^{i k r} / (4 pi)
};

// Integrand pieces at s: v-weights, F, zeta' and the Gaussian, with the
// gradient factor -ik (cos zeta, -sin zeta) from F.
V3 weighted(const Setup& c, cplx s, bool line) {
  const cplx z = zeta_map(s, c.theta_x, c.kp);
  const cplx cz = std::cos(z), sz = std::sin(z);
  const double n2 = c.n * c.n;
  const cplx root = c.below ? branch::s_tilde(cz, c.n) : branch::s_cut(cz, c.n);
  cplx v = 2.0 * kI * sz * root / (n2 - 1.0);
  if (line) v += (std::cos(2.0 * z) - n2) / (n2 - 1.0);
  const cplx F = std::exp(-kI * c.kp * (c.y1 * cz - c.y2 * sz));
  const cplx g = v * F * zeta_prime(s, c.kp) * std::exp(-c.r * s * s);
  return V3{g, -kI * c.kp * cz * g, kI * c.kp * sz * g};
}

sommerfeld::Eval to_eval(const quad::VecResult<3>& r, cplx scale) {
  sommerfeld::Eval e;
  e.value = scale * r.value[0];
  e.grad = {scale * r.value[1], scale * r.value[2]};
  e.error = std::abs(scale) * r.error;
  return e;
}

// Window half-width in s beyond which the integrand is negligible.
double window(const Setup& c, const QuadSpec& q) {
  const double eff = c.r - c.ynorm;
  return std::sqrt((q.truncation_decay + c.kp * c.ynorm + 5.0) / eff);
}

Setup make_setup(const WaveProfile& wp, const Point& x, const Point& y, double margin) {
  if (wp.ordering != Ordering::PlusGreater)
    throw DomainError("saddle evaluation requires k+ > k-");
  if (x.half != Half::Upper || y.half != Half::Upper)
    throw DomainError("saddle evaluation requires x and y in the upper half-plane");
  if (x.theta < margin || x.theta > 0.5 * kPi)
    throw DomainError("saddle evaluation requires theta_x in [margin, pi/2]");
  Setup c;
  c.kp = wp.k_plus;
  c.n = wp.n;
  c.r = x.r;
  c.theta_x = x.theta;
  c.y1 = y.x1;
  c.y2 = y.x2;
  c.ynorm = y.r;
  c.below = x.theta < wp.theta_c;
  const double need = c.below ? y.r / std::cos(wp.theta_c) : y.r;
  if (!(x.r > need))
    throw DomainError(c.below ? "saddle evaluation requires |x| > |y|/cos(theta_c)"
                              : "saddle evaluation requires |x| > |y|");
  c.s_b = std::sqrt(2.0 * c.kp) * kEp * std::sin(0.5 * (wp.theta_c - x.theta));
  c.pre = kI * std::exp(kI * c.kp * c.r) / (4.0 * kPi);
  return c;
}

}  // namespace

cplx p_of_s(cplx s, double kp) {
  check_strip(s, kp);
  return std::sqrt(1.0 - s * s / (2.0 * kp * kI));
}

cplx q_of_s(cplx s, double kp) {
  check_strip(s, kp);
  return s * kEm / std::sqrt(2.0 * kp);
}

cplx zeta_map(cplx s, double theta_x, double kp) {
  return 2.0 * std::asin(q_of_s(s, kp)) + theta_x;
}

cplx zeta_prime(cplx s, double kp) {
  return std::sqrt(2.0 / kp) * kEm / p_of_s(s, kp);
}

SaddleFrame::SaddleFrame(const WaveProfile& w, double tx) : theta_x(tx), wp(w) {
  if (w.ordering != Ordering::PlusGreater)
    throw DomainError("SaddleFrame requires k+ > k-");
  const double sk = std::sqrt(w.k_plus), tc = w.theta_c;
  s_b = std::sqrt(2.0 * w.k_plus) * kEp * std::sin(0.5 * (tc - tx));
  s_b_star = std::sqrt(2.0 * w.k_plus) * kEp * std::sin(0.5 * (kPi - tc - tx));
  sigma_theta = sk * std::min(std::sin(0.5 * (tc + tx)), std::cos(0.5 * (tc - tx)));
  sigma1 = std::min(sigma_theta, sk * std::sin(0.5 * (kPi - tc - tx)));
  sigma2 = sk * std::abs(std::sin(0.5 * (tc - tx)));
  sigma1_min = std::min(sk * std::sin(0.5 * tc), sk * std::sin(0.25 * kPi - 0.5 * tc));
  sigma1_max = sk / std::sqrt(2.0);
}

cplx h_factor(double theta, cplx s, const SaddleFrame& f) {
  const double kp = f.wp.k_plus, tx = f.theta_x;
  const cplx P = p_of_s(s, kp), Q = q_of_s(s, kp);
  const double a = 0.5 * (theta - tx), b = 0.5 * (theta + tx);
  const cplx F1 = 1.0 + P * std::cos(a) + Q * std::sin(a);
  const cplx F2 = P * std::sin(b) + Q * std::cos(b);
  const cplx F3 = std::cos(a) + P;
  return std::sqrt(F1) * std::sqrt(F2) / std::sqrt(F3);
}

cplx factorized_root(cplx s, const SaddleFrame& f) {
  const double tc = f.wp.theta_c;
  return std::sqrt(2.0 / f.wp.k_plus) * kEm * h_factor(tc, s, f) *
         h_factor(kPi - tc, s, f) * std::sqrt(s - f.s_b_star) * std::sqrt(s - f.s_b);
}

namespace {

// Real-line integral of the weighted integrand, split at Re s_b where
// s = c0 -+ u^2 smooths the nearby square-root factor.
quad::VecResult<3> line_integral(const Setup& c, const QuadSpec& q, bool with_v1) {
  const double L = window(c, q);
  const double c0 = std::clamp(c.s_b.real(), -0.5 * L, 0.5 * L);
  const double ul = std::sqrt(c0 + L), ur = std::sqrt(L - c0);
  auto leg = [&](double sign) {
    return [&c, c0, sign, with_v1](double u) {
      V3 v = weighted(c, cplx(c0 + sign * u * u), with_v1);
      for (auto& e : v) e *= 2.0 * u;
      return v;
    };
  };
  auto a = quad::integrate_vec<3>(leg(-1.0), {0.0, ul}, q.abs_tol * 1e-3, q.rel_tol,
                                  q.max_subdivisions, 4);
  auto b = quad::integrate_vec<3>(leg(1.0), {0.0, ur}, q.abs_tol * 1e-3, q.rel_tol,
                                  q.max_subdivisions, 4);
  for (int j = 0; j < 3; ++j) a.value[j] += b.value[j];
  a.error += b.error;
  a.intervals += b.intervals;
  return a;
}

}  // namespace

Components g_r_components(const WaveProfile& wp, const Point& x, const Point& y,
                          const QuadSpec& q, double margin) {
  const Setup c = make_setup(wp, x, y, margin);
  Components out;
  out.line = to_eval(line_integral(c, q, true), c.pre);
  out.loop = sommerfeld::Eval{0.0, {0.0, 0.0}, 0.0, false};
  if (c.below) {
    // steepest descent ray from the branch point: s^2 = s_b^2 + u^2
    const double U = 1.2 * window(c, q) + std::abs(c.s_b);
    auto ray = [&](double u) {
      const cplx s = std::sqrt(c.s_b * c.s_b + u * u);
      V3 v = weighted(c, s, false);
      const cplx ds = u / s;
      for (auto& e : v) e *= ds;
      return v;
    };
    auto g = quad::integrate_vec<3>(ray, {0.0, U}, q.abs_tol * 1e-3, q.rel_tol, q.max_subdivisions, 4);
    out.loop = to_eval(g, -2.0 * c.pre);
  }
  return out;
}

cplx branch_regular(const SaddleFrame& f, const Point& y, cplx s) {
  const double kp = f.wp.k_plus, n2 = f.wp.n * f.wp.n, tc = f.wp.theta_c;
  const cplx z = zeta_map(s, f.theta_x, kp);
  const cplx F = std::exp(-kI * kp * (y.x1 * std::cos(z) - y.x2 * std::sin(z)));
  return std::sqrt(2.0 / kp) * kEm * h_factor(tc, s, f) * h_factor(kPi - tc, s, f) *
         std::sqrt(s - f.s_b_star) * F * zeta_prime(s, kp) * 2.0 * kI * std::sin(z) / (n2 - 1.0);
}

cplx h_c(const WaveProfile& wp, double theta, const Point& y) {
  const double kp = wp.k_plus, tc = wp.theta_c;
  const cplx lead = std::pow(2.0, 2.25) * std::exp(0.625 * kI * kPi) /
                    (std::pow(kp, 0.75) * std::pow(std::cos(0.5 * (tc - theta)), 1.5) *
                     std::sqrt(std::tan(tc)));
  return lead * std::exp(-kI * kp * y.r * std::cos(tc + y.theta));
}

cplx g2_direct(const WaveProfile& wp, const Point& x, const Point& y, const QuadSpec& q) {
  const Setup c = make_setup(wp, x, y, 0.0);
  if (c.below) throw DomainError("g2_direct requires theta_x >= theta_c");
  return c.pre * line_integral(c, q, false).value[0];
}

cplx g2_branch_split(const WaveProfile& wp, const Point& x, const Point& y, const QuadSpec& q) {
  const Setup c = make_setup(wp, x, y, 0.0);
  if (c.below) throw DomainError("g2_branch_split requires theta_x >= theta_c");
  const SaddleFrame f(wp, x.theta);
  const double r = c.r, L = window(c, q);
  auto g = [&](cplx s) { return branch_regular(f, y, s); };
  const cplx g0 = g(0.0);
  if (c.s_b == cplx(0.0)) {
    // s_b = 0: the sqrt(s) endpoint term in closed form, the rest vanishes like s^{3/2}
    const cplx lead = std::exp(0.25 * kI * kPi) / std::sqrt(2.0) * g0 *
                      special::gamma_fn(0.75) * std::pow(r, -0.75);
    auto rest = [&](double u) {
      const double s = u * u;
      return ((g(s) - g0) + kI * (g(-s) - g0)) * 2.0 * s * std::exp(-r * s * s);
    };
    const cplx tail = quad::integrate(rest, 0.0, std::sqrt(L), q.abs_tol * 1e-3, q.rel_tol,
                                      q.max_subdivisions, 4).value;
    return c.pre * (lead + tail);
  }
  const cplx sb = c.s_b, gb = g(sb), slope = (gb - g0) / sb;
  const cplx rho = kI * r;
  const cplx lead = gb * special::f2_closed(rho, sb, 0.5) + slope * special::f2_closed(rho, sb, 1.5);
  const double c0 = std::clamp(sb.real(), -0.5 * L, 0.5 * L);
  auto rest = [&](double sign) {
    return [&, sign](double u) {
      const cplx s = c0 + sign * u * u;
      return (g(s) - gb - slope * (s - sb)) * std::sqrt(s - sb) * std::exp(-r * s * s) * (2.0 * u);
    };
  };
  const cplx tail =
      quad::integrate(rest(-1.0), 0.0, std::sqrt(c0 + L), q.abs_tol * 1e-3, q.rel_tol, q.max_subdivisions, 4).value +
      quad::integrate(rest(1.0), 0.0, std::sqrt(L - c0), q.abs_tol * 1e-3, q.rel_tol, q.max_subdivisions, 4).value;
  return c.pre * (lead + tail);
}

sommerfeld::Eval g_r_saddle(const WaveProfile& wp, const Point& x, const Point& y,
                            const QuadSpec& q, double margin) {
  Components c = g_r_components(wp, x, y, q, margin);
  c.line.value += c.loop.value;
  c.line.grad[0] += c.loop.grad[0];
  c.line.grad[1] += c.loop.grad[1];
  c.line.error += c.loop.error;
  return c.line;
}

cplx g4_two_leg(const WaveProfile& wp, const Point& x, const Point& y, const QuadSpec& q) {
  const Setup c = make_setup(wp, x, y, 0.0);
  if (!c.below) return 0.0;
  const double L = window(c, q);
  auto seg = [&](double t) { return weighted(c, c.s_b * (1.0 - t), false)[0] * (-c.s_b); };
  auto half = [&](double u) { return weighted(c, cplx(u * u), false)[0] * (2.0 * u); };
  const double phase = c.r * std::norm(c.s_b);
  const int panels = 4 + static_cast<int>(phase / 2.0);
  const cplx a = quad::integrate(seg, 0.0, 1.0, q.abs_tol * 1e-3, q.rel_tol, q.max_subdivisions, panels).value;
  const cplx b = quad::integrate(half, 0.0, std::sqrt(L), q.abs_tol * 1e-3, q.rel_tol, q.max_subdivisions, 4).value;
  return -2.0 * c.pre * (a + b);
}

Reduced swap_halves(const Reduced& r) {
  return {r.wp.swapped(), Point(r.x.x1, -r.x.x2), Point(r.y.x1, -r.y.x2), !r.swapped, r.mirrored};
}

Reduced mirror_x1(const Reduced& r) {
  return {r.wp, Point(-r.x.x1, r.x.x2), Point(-r.y.x1, r.y.x2), r.swapped, !r.mirrored};
}

Reduced extend_by_symmetry(const WaveProfile& wp, const Point& x, const Point& y) {
  Reduced r{wp, x, y, false, false};
  if (r.x.half == Half::Lower) r = swap_halves(r);
  if (r.x.theta > 0.5 * kPi) r = mirror_x1(r);
  return r;
}

Method parse_method(const std::string& s) {
  if (s == "quad" || s == "quadrature") return Method::Quadrature;
  if (s == "saddle") return Method::Saddle;
  if (s == "auto") return Method::Auto;
  throw DomainError("unknown method '" + s + "'");
}

const char* to_string(Method m) {
  switch (m) {
    case Method::Quadrature: return "quad";
    case Method::Saddle: return "saddle";
    default: return "auto";
  }
}

bool saddle_applicable(const WaveProfile& wp, const Point& x, const Point& y, double margin) {
  if (x.half == Half::OnInterface || y.half != x.half) return false;
  const Reduced r = extend_by_symmetry(wp, x, y);
  if (r.wp.ordering != Ordering::PlusGreater) return false;
  if (r.x.theta < margin || r.x.theta > 0.5 * kPi) return false;
  const double need = r.x.theta < r.wp.theta_c ? r.y.r / std::cos(r.wp.theta_c) : r.y.r;
  return r.x.r > need;
}

sommerfeld::Eval evaluate(const WaveProfile& wp, const Point& x, const Point& y,
                          Method method, const QuadSpec& q, double margin) {
  sommerfeld::check_placement(x, y);
  bool use_saddle = false;
  if (method == Method::Saddle) {
    if (!saddle_applicable(wp, x, y, margin))
      throw DomainError("saddle method not applicable to this placement");
    use_saddle = true;
  } else if (method == Method::Auto) {
    use_saddle = saddle_applicable(wp, x, y, margin) && wp.k_of(x.half) * x.r >= 40.0;
  }
  if (!use_saddle) return sommerfeld::green_eval(wp, x, y, q);

  const Reduced r = extend_by_symmetry(wp, x, y);
  sommerfeld::Eval e = g_r_saddle(r.wp, r.x, r.y, q, margin);
  if (r.mirrored) e.grad[0] = -e.grad[0];
  if (r.swapped) e.grad[1] = -e.grad[1];
  const double k = wp.k_of(x.half);
  e.value += sommerfeld::free_green(k, x, y);
  const auto g = sommerfeld::free_green_grad_y(k, x, y);
  e.grad[0] += g[0];
  e.grad[1] += g[1];
  return e;
}

}  // namespace twolayer::saddle
