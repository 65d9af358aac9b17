#pragma once

#include <vector>

namespace bjq {

/// Weighted nodes on [0, 1] used for the tau-average. Construction validates:
/// nodes strictly inside (0, 1), weights summing to 1 within 1e-12.
class QuadratureRule {
 public:
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights);

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  size_t size() const { return nodes_.size(); }

  // True when node k and node size-1-k are mirror images with equal weight.
  bool symmetric(double tol = 1e-14) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// n-point Gauss-Legendre rule mapped to [0, 1].
QuadratureRule gauss_legendre(int n);

/// n-point midpoint rule on [0, 1].
QuadratureRule midpoint_rule(int n);

inline constexpr int kDefaultQuadNodes = 32;

}  // namespace bjq
