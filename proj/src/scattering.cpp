#include "twolayer/scattering.hpp"

#include <algorithm>

#include "twolayer/asymptotics.hpp"
#include "twolayer/quadrature.hpp"
#include "twolayer/sommerfeld.hpp"

namespace twolayer::scattering {
namespace {

cplx dot(const std::array<cplx, 2>& g, const std::array<double, 2>& n) {
  return g[0] * n[0] + g[1] * n[1];
}

HalfScan scan_half(const CircleTrace& trace, const WaveProfile& wp, Half half, int samples,
                   double margin) {
  HalfScan h;
  h.half = half;
  h.critical = asymptotics::critical_directions(wp, half);
  h.smooth = h.critical.empty();
  const double lo = (half == Half::Upper ? 0.0 : kPi) + margin, width = kPi - 2.0 * margin;
  const int fine = 2 * samples - 1;
  const double step = width / (fine - 1);
  std::vector<cplx> v(fine);
  for (int i = 0; i < fine; ++i)
    v[i] = farfield_from_boundary(trace, farfield::FarDirection(lo + i * step), wp);

  auto pass = [&](int stride, double& max_d, double& l1, double* argmax) {
    max_d = 0.0;
    l1 = 0.0;
    const double dt = stride * step;
    for (int i = 0; i + stride < fine; i += stride) {
      const double d = std::abs(v[i + stride] - v[i]) / dt;
      l1 += d * dt;
      if (d > max_d) {
        max_d = d;
        if (argmax) *argmax = lo + (i + 0.5 * stride) * step;
      }
    }
  };
  pass(2, h.max_derivative, h.l1, nullptr);
  h.argmax = lo;
  pass(1, h.max_derivative_fine, h.l1_fine, &h.argmax);
  h.spike_at_critical = std::any_of(h.critical.begin(), h.critical.end(),
                                    [&](double c) { return std::abs(h.argmax - c) <= 2.0 * step; });
  return h;
}

}  // namespace

TraceValue trace_point(const WaveProfile& wp, const Point& z0, double radius, double phi,
                       const QuadSpec& q) {
  const Point y = Point::polar(radius, phi);
  // G(y, z0) = G(z0, y), so the source gradient at y is the field gradient.
  const sommerfeld::Eval e = sommerfeld::green_eval(wp, z0, y, q);
  return {e.value, dot(e.grad, {std::cos(phi), std::sin(phi)})};
}

CircleTrace manufacture_trace(const WaveProfile& wp, const Point& z0, double radius,
                              int n_per_arc, const QuadSpec& q) {
  if (!(radius > 0.0) || !(z0.r < radius)) throw DomainError("source must lie inside B_R");
  if (z0.half == Half::OnInterface) throw DomainError("source on the interface");
  if (n_per_arc < 2) throw DomainError("need at least two nodes per arc");
  CircleTrace t;
  t.radius = radius;
  t.source = z0;
  t.n_per_arc = n_per_arc;
  t.split_points = {Point(radius, 0.0), Point(-radius, 0.0)};
  std::vector<double> nodes, weights;
  for (double a : {0.0, kPi}) {
    quad::gauss_legendre(n_per_arc, a, a + kPi, nodes, weights);
    for (int i = 0; i < n_per_arc; ++i) {
      const double phi = nodes[i];
      TraceNode nd{Point::polar(radius, phi), {std::cos(phi), std::sin(phi)}, radius * weights[i],
                   phi};
      const TraceValue tv = trace_point(wp, z0, radius, phi, q);
      t.nodes.push_back(nd);
      t.u.push_back(tv.u);
      t.du_dn.push_back(tv.du_dn);
    }
  }
  return t;
}

cplx represent_exterior(const CircleTrace& trace, const Point& x, const WaveProfile& wp,
                        const QuadSpec& q) {
  if (!(x.r > trace.radius)) throw DomainError("evaluation point must lie outside B_R");
  if (x.half == Half::OnInterface) throw DomainError("evaluation point on the interface");
  cplx sum = 0.0;
  for (std::size_t i = 0; i < trace.nodes.size(); ++i) {
    const TraceNode& nd = trace.nodes[i];
    const sommerfeld::Eval e = sommerfeld::green_eval(wp, x, nd.y, q);
    sum += nd.weight * (dot(e.grad, nd.normal) * trace.u[i] - trace.du_dn[i] * e.value);
  }
  return sum;
}

cplx farfield_from_boundary(const CircleTrace& trace, const farfield::FarDirection& dir,
                            const WaveProfile& wp) {
  cplx sum = 0.0;
  for (std::size_t i = 0; i < trace.nodes.size(); ++i) {
    const TraceNode& nd = trace.nodes[i];
    const cplx g = farfield::g_farfield(dir, nd.y, wp);
    const auto h = farfield::h_farfield(dir, nd.y, wp);
    sum += nd.weight * (dot(h, nd.normal) * trace.u[i] - trace.du_dn[i] * g);
  }
  return sum;
}

RegularityReport pattern_regularity_scan(const CircleTrace& trace, const WaveProfile& wp,
                                         int samples, double margin) {
  if (samples < 3) throw DomainError("scan needs at least three samples");
  if (!(margin > 0.0 && margin < 0.5 * kPi)) throw DomainError("bad angular margin");
  return {samples, margin, scan_half(trace, wp, Half::Upper, samples, margin),
          scan_half(trace, wp, Half::Lower, samples, margin)};
}

}  // namespace twolayer::scattering
