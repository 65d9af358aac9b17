#pragma once

#include <vector>

#include "bjq/metaplectic.hpp"
#include "bjq/pseudodiff.hpp"

namespace bjq {

/// Density matrix sum_j lambda_j |psi_j><psi_j| with orthonormal psi_j.
class MixedState {
 public:
  /// Validates weights (>= 0, sum 1 within 1e-10) and orthonormality (1e-8).
  MixedState(std::vector<double> weights, std::vector<SampledSignal> states);

  /// Orthonormalises `states` first (Gram-Schmidt with a second pass) and
  /// rejects the input if the Gram residual stays above 1e-8.
  static MixedState orthonormalized(std::vector<double> weights, std::vector<SampledSignal> states);
  static MixedState pure(const SampledSignal& psi);

  const std::vector<double>& weights() const { return weights_; }
  const std::vector<SampledSignal>& states() const { return states_; }
  const Grid1D& grid() const { return states_.front().grid; }

  /// max |<psi_j, psi_k> - delta_jk|
  double gram_residual() const;

 private:
  std::vector<double> weights_;
  std::vector<SampledSignal> states_;
};

struct Observable {
  OperatorMatrix matrix;
  bool hermitian = false;
};

/// Flags the matrix hermitian when ||A - A*||_F <= 1e-8 ||A||_F.
Observable make_observable(OperatorMatrix a);

cplx expectation(const MixedState& state, const Observable& a);
cplx expectation(const MixedState& state, const OperatorMatrix& a);
double variance(const MixedState& state, const Observable& a);
cplx covariance(const MixedState& state, const Observable& a, const Observable& b);
double sym_covariance(const MixedState& state, const Observable& a, const Observable& b);

struct CovarianceReport {
  double var_a = 0.0;
  double var_b = 0.0;
  cplx cov = 0.0;
  double cov_sym = 0.0;
  cplx commutator_expectation = 0.0;
  double lhs = 0.0;  // Var A Var B
  double rhs = 0.0;  // Cov_sym^2 - <[A,B]>^2 / 4
  bool satisfied = false;
};

CovarianceReport rs_check(const MixedState& state, const Observable& a, const Observable& b);

struct Cov2 {
  double xx = 0.0, xp = 0.0, pp = 0.0;
  double trace() const { return xx + pp; }
};

Cov2 covariance_matrix(const MixedState& state, const PhaseGrid& pg);

struct RsMatrixResult {
  double min_eigenvalue = 0.0;
  bool passed = false;
};

/// Smallest eigenvalue of the Hermitian matrix Sigma + (i hbar / 2) J.
RsMatrixResult rs_matrix_check(const Cov2& sigma, double hbar);

/// (2 pi hbar) sum_j lambda_j W(psi_j), with W the Wigner or Born-Jordan-Wigner function.
PhaseFunction state_symbol(const MixedState& state, Scheme scheme, const PhaseGrid& pg);
/// state_symbol / (2 pi hbar); integrates to 1.
PhaseFunction state_density(const MixedState& state, Scheme scheme, const PhaseGrid& pg);
/// <a, state_density>
cplx expectation_via_symbol(const MixedState& state, const SymbolSource& a, Scheme scheme, const PhaseGrid& pg);

/// Uncertainty report for (Op(a), Op(b)) on `state`, next to the report for
/// (Op(a o s^-1), Op(b o s^-1)) on the transported state S psi_j.
struct TransportReport {
  CovarianceReport original;
  CovarianceReport transported;
};
TransportReport transport_report(const MixedState& state, const SymbolSource& a, const SymbolSource& b,
                                 Scheme scheme, const MetaGenerator& g, const PhaseGrid& pg);

}  // namespace bjq
