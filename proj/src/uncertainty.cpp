#include "bjq/uncertainty.hpp"

#include <cmath>
#include <numbers>

#include "bjq/distributions.hpp"
#include "bjq/errors.hpp"

namespace bjq {

namespace {

void check_weights(const std::vector<double>& w, size_t count) {
  if (w.empty() || w.size() != count) throw ValidationError("mixed state needs one weight per state");
  double total = 0.0;
  for (double v : w) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ValidationError("mixture weights must be non-negative");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-10) throw ValidationError("mixture weights must sum to 1");
}

void require_hermitian(const Observable& a) {
  if (!a.hermitian) throw ValidationError("observable is not hermitian");
}


}  // namespace

MixedState::MixedState(std::vector<double> weights, std::vector<SampledSignal> states)
    : weights_(std::move(weights)), states_(std::move(states)) {
  check_weights(weights_, states_.size());
  for (const auto& s : states_)
    if (!same_grid(s.grid, states_.front().grid)) throw ValidationError("mixture states live on different grids");
  if (gram_residual() > 1e-8) throw ValidationError("mixture states are not orthonormal");
}

MixedState MixedState::orthonormalized(std::vector<double> weights, std::vector<SampledSignal> states) {
  check_weights(weights, states.size());
  for (size_t j = 0; j < states.size(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (size_t k = 0; k < j; ++k) {
        const cplx c = inner_product(states[j], states[k]);
        for (size_t i = 0; i < states[j].values.size(); ++i) states[j].values[i] -= c * states[k].values[i];
      }
    }
    const double nrm = norm(states[j]);
    if (nrm < 1e-12) throw ValidationError("mixture states are linearly dependent");
    for (auto& v : states[j].values) v /= nrm;
  }
  return MixedState(std::move(weights), std::move(states));
}

MixedState MixedState::pure(const SampledSignal& psi) { return orthonormalized({1.0}, {psi}); }

double MixedState::gram_residual() const {
  double worst = 0.0;
  for (size_t j = 0; j < states_.size(); ++j)
    for (size_t k = 0; k < states_.size(); ++k) {
      const cplx g = inner_product(states_[j], states_[k]);
      worst = std::max(worst, std::abs(g - (j == k ? 1.0 : 0.0)));
    }
  return worst;
}

Observable make_observable(OperatorMatrix a) {
  const double scale = frobenius_norm(a);
  const double skew = frobenius_norm(a - matrix_adjoint(a));
  const bool herm = skew <= 1e-8 * scale;
  return {std::move(a), herm};
}

cplx expectation(const MixedState& state, const OperatorMatrix& a) {
  if (!same_grid(a.grid.x, state.grid())) throw ValidationError("state and observable grids differ");
  cplx acc = 0.0;
  for (size_t j = 0; j < state.states().size(); ++j)
    acc += state.weights()[j] * inner_product(apply(a, state.states()[j]), state.states()[j]);
  return acc;
}

cplx expectation(const MixedState& state, const Observable& a) { return expectation(state, a.matrix); }

double variance(const MixedState& state, const Observable& a) {
  require_hermitian(a);
  const cplx mean = expectation(state, a);
  const cplx square = expectation(state, matmul(a.matrix, a.matrix));
  return std::max(0.0, (square - mean * mean).real());
}

cplx covariance(const MixedState& state, const Observable& a, const Observable& b) {
  if (!same_grid(a.matrix.grid.x, state.grid()) || !same_grid(b.matrix.grid.x, state.grid())) {
    throw ValidationError("state and observable grids differ");
  }
  return expectation(state, matmul(a.matrix, b.matrix)) - expectation(state, a) * expectation(state, b);
}

double sym_covariance(const MixedState& state, const Observable& a, const Observable& b) {
  return (0.5 * (covariance(state, a, b) + covariance(state, b, a))).real();
}

CovarianceReport rs_check(const MixedState& state, const Observable& a, const Observable& b) {
  require_hermitian(a);
  require_hermitian(b);
  CovarianceReport r;
  r.var_a = variance(state, a);
  r.var_b = variance(state, b);
  r.cov = covariance(state, a, b);
  const cplx cov_ba = covariance(state, b, a);
  r.cov_sym = (0.5 * (r.cov + cov_ba)).real();
  r.commutator_expectation = r.cov - cov_ba;
  r.lhs = r.var_a * r.var_b;
  r.rhs = r.cov_sym * r.cov_sym - 0.25 * (r.commutator_expectation * r.commutator_expectation).real();
  r.satisfied = r.lhs >= r.rhs - 1e-8 * (std::abs(r.lhs) + std::abs(r.rhs));
  return r;
}

Cov2 covariance_matrix(const MixedState& state, const PhaseGrid& pg) {
  const Observable x = make_observable(position_operator(pg));
  const Observable p = make_observable(momentum_operator(pg));
  return {variance(state, x), sym_covariance(state, x, p), variance(state, p)};
}

RsMatrixResult rs_matrix_check(const Cov2& s, double hbar) {
  if (!std::isfinite(s.xx) || !std::isfinite(s.xp) || !std::isfinite(s.pp)) {
    throw ValidationError("covariance matrix has non-finite entries");
  }
  const double mid = 0.5 * (s.xx + s.pp);
  const double half_gap = 0.5 * (s.xx - s.pp);
  const double radius = std::sqrt(half_gap * half_gap + s.xp * s.xp + 0.25 * hbar * hbar);
  const double lo = mid - radius;
  return {lo, lo >= -1e-10 * std::abs(s.trace())};
}

PhaseFunction state_symbol(const MixedState& state, Scheme scheme, const PhaseGrid& pg) {
  PhaseFunction acc(pg);
  const double two_pi_hbar = 2.0 * std::numbers::pi * pg.hbar;
  for (size_t j = 0; j < state.states().size(); ++j) {
    const SampledSignal& psi = state.states()[j];
    const PhaseFunction w = scheme == Scheme::weyl ? cross_wigner(psi, psi, pg) : bjw_filtered(psi, psi, pg);
    const double scale = two_pi_hbar * state.weights()[j];
    for (size_t i = 0; i < acc.values.size(); ++i) acc.values[i] += scale * w.values[i];
  }
  return acc;
}

PhaseFunction state_density(const MixedState& state, Scheme scheme, const PhaseGrid& pg) {
  PhaseFunction rho = state_symbol(state, scheme, pg);
  const double inv = 1.0 / (2.0 * std::numbers::pi * pg.hbar);
  for (auto& v : rho.values) v *= inv;
  return rho;
}

cplx expectation_via_symbol(const MixedState& state, const SymbolSource& a, Scheme scheme, const PhaseGrid& pg) {
  return phase_pairing(a.sample(pg), state_density(state, scheme, pg));
}

TransportReport transport_report(const MixedState& state, const SymbolSource& a, const SymbolSource& b,
                                 Scheme scheme, const MetaGenerator& g, const PhaseGrid& pg) {
  TransportReport out;
  out.original = rs_check(state, make_observable(quantize(a, scheme, pg)), make_observable(quantize(b, scheme, pg)));
  const SympMat2 s = project(g);
  const OperatorMatrix smat = meta_matrix(g, pg);
  std::vector<SampledSignal> moved;
  for (const auto& psi : state.states()) moved.push_back(apply(smat, psi));
  const MixedState moved_state = MixedState::orthonormalized(state.weights(), std::move(moved));
  out.transported = rs_check(moved_state, make_observable(quantize(pullback_symbol(a, s), scheme, pg)),
                             make_observable(quantize(pullback_symbol(b, s), scheme, pg)));
  return out;
}

}  // namespace bjq
