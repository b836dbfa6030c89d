// Reference evaluation of the two-layer Green function G(x,y) and its source
// gradient by quadrature of the Sommerfeld integrals.
#pragma once

#include <array>

#include "twolayer/core.hpp"

namespace twolayer::sommerfeld {

using Grad = std::array<cplx, 2>;

struct Eval {
  cplx value;
  Grad grad{};             // gradient with respect to the source y
  double error = 0.0;      // summed quadrature error estimate
  bool near_interface = false;
};

// (i/4) H0(k|x-y|)
cplx free_green(double k, const Point& x, const Point& y);
Grad free_green_grad_y(double k, const Point& x, const Point& y);

// Scattered parts, each with its own half-plane precondition.
Eval reflected_part(const WaveProfile& wp, const Point& x, const Point& y,
                    const QuadSpec& q = {});          // x, y upper
Eval transmitted_part(const WaveProfile& wp, const Point& x, const Point& y,
                      const QuadSpec& q = {});        // x upper, y lower
Eval lower_reflected_part(const WaveProfile& wp, const Point& x, const Point& y,
                          const QuadSpec& q = {});    // x, y lower
Eval transmitted_swap_part(const WaveProfile& wp, const Point& x, const Point& y,
                           const QuadSpec& q = {});   // x lower, y upper

cplx green_reflected(const WaveProfile& wp, const Point& x, const Point& y,
                     const QuadSpec& q = {});
cplx green_transmitted(const WaveProfile& wp, const Point& x, const Point& y,
                       const QuadSpec& q = {});
cplx green_lower_reflected(const WaveProfile& wp, const Point& x, const Point& y,
                           const QuadSpec& q = {});
cplx green_transmitted_swap(const WaveProfile& wp, const Point& x, const Point& y,
                            const QuadSpec& q = {});

// Full G and grad_y G for any admissible placement.
Eval green_eval(const WaveProfile& wp, const Point& x, const Point& y,
                const QuadSpec& q = {});
cplx green(const WaveProfile& wp, const Point& x, const Point& y,
           const QuadSpec& q = {});
Grad grad_y_green(const WaveProfile& wp, const Point& x, const Point& y,
                  const QuadSpec& q = {});

// Throws DomainError for interface placements and coincident points.
void check_placement(const Point& x, const Point& y);

}  // namespace twolayer::sommerfeld
