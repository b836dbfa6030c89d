#include "twolayer/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace twolayer::quad {
namespace detail {

const Rule& rule() {
  static const Rule r = [] {
    Rule q;
    using K = boost::math::quadrature::gauss_kronrod<double, 21>;
    using G = boost::math::quadrature::gauss<double, 10>;
    for (int i = 0; i < 11; ++i) {
      q.x[i] = K::abscissa()[i];
      q.wk[i] = K::weights()[i];
    }
    for (int j = 0; j < 5; ++j) q.wg[2 * j + 1] = G::weights()[j];
    return q;
  }();
  return r;
}

}  // namespace detail

Result integrate(const Integrand& f, const std::vector<double>& breaks,
                 double abs_tol, double rel_tol, int max_intervals,
                 int panels) {
  auto g = [&f](double x) { return Vec<1>{f(x)}; };
  const auto r = integrate_vec<1>(g, breaks, abs_tol, rel_tol, max_intervals, panels);
  return {r.value[0], r.error, r.intervals};
}

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(n);
  std::vector<std::pair<double, double>> pts(n);
  for (int i = 0; i < n; ++i)
    gsl_integration_glfixed_point(a, b, i, &pts[i].first, &pts[i].second, t);
  gsl_integration_glfixed_table_free(t);
  std::sort(pts.begin(), pts.end());
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = pts[i].first;
    weights[i] = pts[i].second;
  }
}

}  // namespace twolayer::quad
