// Steepest-descent evaluation of the reflected part G_R for k+ > k-, with the
// branch-cut loop contribution below the critical angle, and the symmetry
// reductions that bring any placement to that wedge.
#pragma once

#include "twolayer/core.hpp"
#include "twolayer/sommerfeld.hpp"

namespace twolayer::saddle {

inline constexpr double kDefaultMargin = 0.05;

// P(s) = sqrt(1 - s^2/(2 k i)),  Q(s) = s e^{-i pi/4}/sqrt(2k)
cplx p_of_s(cplx s, double kp);
cplx q_of_s(cplx s, double kp);
// zeta(s) = 2 arcsin Q(s) + theta_x and its derivative
cplx zeta_map(cplx s, double theta_x, double kp);
cplx zeta_prime(cplx s, double kp);

struct SaddleFrame {
  double theta_x;
  WaveProfile wp;
  cplx s_b;       // sqrt(2k) e^{i pi/4} sin((theta_c - theta_x)/2)
  cplx s_b_star;  // sqrt(2k) e^{i pi/4} sin((pi - theta_c - theta_x)/2)
  double sigma_theta;
  double sigma1;
  double sigma2;
  double sigma1_min;
  double sigma1_max;

  SaddleFrame(const WaveProfile& wp, double theta_x);
};

// H_theta(s) = sqrt(F1) sqrt(F2) / sqrt(F3)
cplx h_factor(double theta, cplx s, const SaddleFrame& frame);

// sqrt(2/k) e^{-i pi/4} H_{theta_c} H_{pi - theta_c} sqrt(s - s_b*) sqrt(s - s_b),
// which equals S(cos zeta(s), n) above the critical angle and -S~(cos zeta(s), n)
// below it.
cplx factorized_root(cplx s, const SaddleFrame& frame);

struct Components {
  sommerfeld::Eval line;  // Gaussian-weighted real-line part (G1+G2 or G1+G3)
  sommerfeld::Eval loop;  // branch-cut loop part G4, zero above theta_c
};

// G_R and its source gradient for x, y upper, k+ > k-, theta_x in
// [margin, pi/2]. Throws DomainError when the hypotheses fail.
Components g_r_components(const WaveProfile& wp, const Point& x, const Point& y,
                          const QuadSpec& q = {}, double margin = kDefaultMargin);
sommerfeld::Eval g_r_saddle(const WaveProfile& wp, const Point& x, const Point& y,
                            const QuadSpec& q = {}, double margin = kDefaultMargin);

// g(s) of the branch-point factorization, so that the v2 part of G_R is
// pre * int sqrt(s - s_b) g(s) e^{-|x| s^2} ds for theta_x >= theta_c.
cplx branch_regular(const SaddleFrame& frame, const Point& y, cplx s);
// Closed form of g(s_b) as a function of theta_x.
cplx h_c(const WaveProfile& wp, double theta, const Point& y);
// That v2 part by direct quadrature, and by subtracting the first two terms
// at s_b and integrating them exactly with F2 (or the Gamma(3/4) term at
// theta_x = theta_c). Cross-checks only.
cplx g2_direct(const WaveProfile& wp, const Point& x, const Point& y, const QuadSpec& q = {});
cplx g2_branch_split(const WaveProfile& wp, const Point& x, const Point& y,
                     const QuadSpec& q = {});

// G4 along the segment s_b -> 0 followed by [0, inf); cross-check only.
cplx g4_two_leg(const WaveProfile& wp, const Point& x, const Point& y,
                const QuadSpec& q = {});

struct Reduced {
  WaveProfile wp;
  Point x, y;
  bool swapped;   // media exchanged, x2 and y2 negated
  bool mirrored;  // x1 and y1 negated
};

Reduced swap_halves(const Reduced& r);
Reduced mirror_x1(const Reduced& r);
// Canonical form: x upper with theta_x in (0, pi/2].
Reduced extend_by_symmetry(const WaveProfile& wp, const Point& x, const Point& y);

enum class Method { Quadrature, Saddle, Auto };

Method parse_method(const std::string& s);
const char* to_string(Method m);

// True when the saddle route is admissible for this placement.
bool saddle_applicable(const WaveProfile& wp, const Point& x, const Point& y,
                       double margin = kDefaultMargin);

// Full G and grad_y G by the requested method. Auto takes the saddle route
// when it is admissible and k|x| >= 40.
sommerfeld::Eval evaluate(const WaveProfile& wp, const Point& x, const Point& y,
                          Method method, const QuadSpec& q = {},
                          double margin = kDefaultMargin);

}  // namespace twolayer::saddle
