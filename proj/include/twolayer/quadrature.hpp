// Globally adaptive Gauss-Kronrod (G10/K21) quadrature for complex scalar and
// small complex vector integrands.
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <vector>

#include "twolayer/core.hpp"

namespace twolayer::quad {

template <std::size_t N>
using Vec = std::array<cplx, N>;

template <std::size_t N>
struct VecResult {
  Vec<N> value;
  double error;
  int intervals;
};

struct Result {
  cplx value;
  double error;
  int intervals;
};

using Integrand = std::function<cplx(double)>;

namespace detail {

struct Rule {
  std::array<double, 11> x{};   // x[0] = 0, increasing
  std::array<double, 11> wk{};  // Kronrod weights
  std::array<double, 11> wg{};  // Gauss weights on the odd Kronrod nodes
};
const Rule& rule();

template <std::size_t N>
struct Segment {
  double a, b;
  Vec<N> value;
  double error;
  double floor;  // error level that refinement cannot get below
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <std::size_t N, class F>
Segment<N> apply(const F& f, double a, double b, double noise) {
  const Rule& q = rule();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Vec<N> k{}, g{};
  double mass = 0.0;
  const Vec<N> fc = f(c);
  for (std::size_t j = 0; j < N; ++j) {
    k[j] = q.wk[0] * fc[j];
    g[j] = q.wg[0] * fc[j];
    mass += q.wk[0] * std::abs(fc[j]);
  }
  for (int i = 1; i < 11; ++i) {
    const Vec<N> lo = f(c - h * q.x[i]), hi = f(c + h * q.x[i]);
    for (std::size_t j = 0; j < N; ++j) {
      const cplx s = lo[j] + hi[j];
      k[j] += q.wk[i] * s;
      g[j] += q.wg[i] * s;
      mass += q.wk[i] * (std::abs(lo[j]) + std::abs(hi[j]));
    }
  }
  double err = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    err += std::abs((k[j] - g[j]) * h);
    k[j] *= h;
  }
  const double floor = std::max(noise, 50.0 * 2.220446049250313e-16) * mass * std::abs(h);
  return {a, b, k, err, floor};
}

template <std::size_t N>
double norm_inf(const Vec<N>& v) {
  double m = 0.0;
  for (const cplx& c : v) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace detail

// Integrates f over [breaks.front(), breaks.back()], starting from `panels`
// equal pieces between each consecutive pair of breakpoints. The error test
// is on the summed component errors against the largest component.
// `noise` is the relative evaluation error of f (e.g. eps times a large
// phase); pieces whose estimate is already at that level are not split, and
// if nothing splittable remains the reported error is the attainable one.
template <std::size_t N, class F>
VecResult<N> integrate_vec(const F& f, const std::vector<double>& breaks,
                           double abs_tol, double rel_tol,
                           int max_intervals = 200000, int panels = 1,
                           double noise = 0.0) {
  using Seg = detail::Segment<N>;
  std::priority_queue<Seg> heap;
  std::vector<Seg> settled;
  Vec<N> total{};
  double err = 0.0;
  panels = std::max(panels, 1);
  for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
    const double a = breaks[j], b = breaks[j + 1];
    if (!(b > a)) continue;
    for (int p = 0; p < panels; ++p) {
      Seg s = detail::apply<N>(f, a + (b - a) * p / panels,
                               p + 1 == panels ? b : a + (b - a) * (p + 1) / panels, noise);
      for (std::size_t c = 0; c < N; ++c) total[c] += s.value[c];
      err += s.error;
      heap.push(s);
    }
  }
  int count = static_cast<int>(heap.size());
  while (!heap.empty() && err > std::max(abs_tol, rel_tol * detail::norm_inf(total))) {
    if (count >= max_intervals)
      throw ConvergenceError("adaptive quadrature did not converge", err);
    Seg s = heap.top();
    heap.pop();
    if (s.error <= s.floor) {
      settled.push_back(s);
      continue;
    }
    const double m = 0.5 * (s.a + s.b);
    if (!(m > s.a && m < s.b))
      throw ConvergenceError("quadrature interval underflow", err);
    Seg l = detail::apply<N>(f, s.a, m, noise), r = detail::apply<N>(f, m, s.b, noise);
    for (std::size_t c = 0; c < N; ++c) total[c] += l.value[c] + r.value[c] - s.value[c];
    err += l.error + r.error - s.error;
    heap.push(l);
    heap.push(r);
    ++count;
  }
  // resum to shed the drift of incremental updates
  total = Vec<N>{};
  err = 0.0;
  while (!heap.empty()) {
    settled.push_back(heap.top());
    heap.pop();
  }
  for (const Seg& s : settled) {
    for (std::size_t c = 0; c < N; ++c) total[c] += s.value[c];
    err += s.error;
  }
  return {total, err, count};
}

Result integrate(const Integrand& f, const std::vector<double>& breaks,
                 double abs_tol, double rel_tol, int max_intervals = 200000,
                 int panels = 1);

inline Result integrate(const Integrand& f, double a, double b, double abs_tol,
                        double rel_tol, int max_intervals = 200000,
                        int panels = 1) {
  return integrate(f, std::vector<double>{a, b}, abs_tol, rel_tol,
                   max_intervals, panels);
}

// Gauss-Legendre nodes and weights on [a, b], ascending.
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace twolayer::quad
