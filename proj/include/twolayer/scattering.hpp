// Exterior representation and far-field formulas on a circle, checked with
// manufactured radiating fields u = G(., z0).
#pragma once

#include <array>
#include <vector>

#include "twolayer/core.hpp"
#include "twolayer/farfield.hpp"

namespace twolayer::scattering {

struct TraceNode {
  Point y;
  std::array<double, 2> normal;  // outward unit normal
  double weight;                 // arc-length quadrature weight
  double phi;                    // polar angle on the circle
};

// Trace of a radiating field on the circle |y| = R. Nodes are Gauss-Legendre
// points of the upper arc (0, pi) followed by the lower arc (pi, 2pi).
struct CircleTrace {
  double radius;
  Point source;  // z0 of the manufactured field
  int n_per_arc;
  std::vector<TraceNode> nodes;
  std::vector<cplx> u;
  std::vector<cplx> du_dn;
  std::array<Point, 2> split_points;  // (R, 0) and (-R, 0)
};

// u and du/dnu of G(., z0) at angle phi on the circle.
struct TraceValue {
  cplx u;
  cplx du_dn;
};
TraceValue trace_point(const WaveProfile& wp, const Point& z0, double radius, double phi,
                       const QuadSpec& q = {});

// Throws DomainError unless |z0| < R, z0 is off the interface and n_per_arc >= 2.
CircleTrace manufacture_trace(const WaveProfile& wp, const Point& z0, double radius,
                              int n_per_arc, const QuadSpec& q = {});

// int [dG(x,y)/dnu(y) u(y) - du/dnu(y) G(x,y)] ds(y) for |x| > R off the interface.
cplx represent_exterior(const CircleTrace& trace, const Point& x, const WaveProfile& wp,
                        const QuadSpec& q = {});

// The same with the pattern kernels G^inf, H^inf.
cplx farfield_from_boundary(const CircleTrace& trace, const farfield::FarDirection& dir,
                            const WaveProfile& wp);

struct HalfScan {
  Half half;
  bool smooth;                       // no critical directions in this half
  std::vector<double> critical;      // critical directions of the half
  double max_derivative;             // max |du^inf/dtheta| by differences, coarse grid
  double max_derivative_fine;        // the same on the doubled grid
  double argmax;                     // where the fine maximum sits
  double l1;                         // trapezoid integral of |du^inf/dtheta|, coarse grid
  double l1_fine;
  bool spike_at_critical;            // fine argmax within two fine steps of a critical direction
};

struct RegularityReport {
  int samples;  // coarse samples per half
  double margin;
  HalfScan upper;
  HalfScan lower;
};

// Samples u^inf on [margin, pi - margin] and its mirror in the lower half with
// `samples` and 2 `samples` - 1 points.
RegularityReport pattern_regularity_scan(const CircleTrace& trace, const WaveProfile& wp,
                                         int samples = 2001, double margin = 0.05);

}  // namespace twolayer::scattering
