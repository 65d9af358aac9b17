#include "bjq/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "bjq/errors.hpp"

namespace bjq {

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.empty()) throw ValidationError("quadrature rule is empty");
  if (nodes_.size() != weights_.size()) throw ValidationError("quadrature nodes and weights differ in length");
  double total = 0.0;
  for (size_t k = 0; k < nodes_.size(); ++k) {
    if (!(nodes_[k] > 0.0 && nodes_[k] < 1.0)) throw ValidationError("quadrature nodes must lie strictly inside (0,1)");
    if (!std::isfinite(weights_[k])) throw ValidationError("quadrature weight is not finite");
    total += weights_[k];
  }
  if (std::abs(total - 1.0) > 1e-12) throw ValidationError("quadrature weights must sum to 1");
}

bool QuadratureRule::symmetric(double tol) const {
  const size_t n = nodes_.size();
  for (size_t k = 0; k < n; ++k) {
    if (std::abs(nodes_[k] + nodes_[n - 1 - k] - 1.0) > tol) return false;
    if (std::abs(weights_[k] - weights_[n - 1 - k]) > tol) return false;
  }
  return true;
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw ValidationError("Gauss-Legendre rule needs at least one node");
  std::vector<double> nodes(n), weights(n);
  // Newton on P_n from the Chebyshev-like initial guess; roots come in +- pairs.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      const double pn = (n == 1) ? t : p1;
      const double pn1 = (n == 1) ? 1.0 : p0;
      dp = n * (t * pn - pn1) / (t * t - 1.0);
      const double step = pn / dp;
      t -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    const double pn = (n == 1) ? t : p1;
    const double pn1 = (n == 1) ? 1.0 : p0;
    dp = n * (t * pn - pn1) / (t * t - 1.0);
    const double w = 2.0 / ((1.0 - t * t) * dp * dp);
    // Map [-1,1] -> [0,1], ascending order.
    nodes[i] = 0.5 * (1.0 - t);
    nodes[n - 1 - i] = 0.5 * (1.0 + t);
    weights[i] = weights[n - 1 - i] = 0.5 * w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.5;
  // Renormalise away the last ulp so the sum check is robust for large n.
  double total = 0.0;
  for (double w : weights) total += w;
  for (double& w : weights) w /= total;
  return QuadratureRule(std::move(nodes), std::move(weights));
}

QuadratureRule midpoint_rule(int n) {
  if (n < 1) throw ValidationError("midpoint rule needs at least one node");
  std::vector<double> nodes(n), weights(n, 1.0 / n);
  for (int k = 0; k < n; ++k) nodes[k] = (k + 0.5) / n;
  return QuadratureRule(std::move(nodes), std::move(weights));
}

}  // namespace bjq
