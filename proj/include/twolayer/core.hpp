// Shared scalar types, geometry and error classes for the two-layer kernels.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace twolayer {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

// Distance from a branch cut below which a value is treated as sitting on it.
inline constexpr double kCutTol = 1e-13;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Directions exactly along the interface have no pattern formula.
class LateralDirectionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

enum class Half { Upper, Lower, OnInterface };

const char* to_string(Half h);

// Planar point with cached polar form; theta in [0, 2pi).
struct Point {
  double x1 = 0.0;
  double x2 = 0.0;
  double r = 0.0;
  double theta = 0.0;
  Half half = Half::OnInterface;

  Point() = default;
  Point(double a, double b);
  static Point polar(double radius, double angle);
};

enum class Ordering { PlusGreater, PlusLess, Equal };

struct WaveProfile {
  double k_plus;
  double k_minus;
  double n;        // k_minus / k_plus
  double theta_c;  // NaN when k_plus == k_minus
  Ordering ordering;

  WaveProfile(double kp, double km);
  bool has_critical_angle() const { return ordering != Ordering::Equal; }
  // Profile with the two media exchanged.
  WaveProfile swapped() const { return WaveProfile(k_minus, k_plus); }
  double k_of(Half h) const { return h == Half::Lower ? k_minus : k_plus; }
};

struct QuadSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  // Tails are cut where the exponential weight drops below exp(-truncation_decay).
  double truncation_decay = 46.0;
  int max_subdivisions = 200000;
};

}  // namespace twolayer
