#pragma once

#include <utility>
#include <vector>

#include "bjq/grid.hpp"
#include "bjq/quadrature.hpp"

namespace bjq {

/// Wig_tau(psi, phi)(x, p) = (2 pi hbar)^{-1} int e^{-ipy/hbar} psi(x + tau y) conj(phi)(x - (1-tau) y) dy.
/// Off-grid samples come from the periodic band-limited interpolant. When
/// tau = r/s with s <= 16 the interpolant is evaluated once on an s-times
/// refined grid and read back by index; other tau use per-lag shifts.
PhaseFunction cross_wigner_tau(const SampledSignal& psi, const SampledSignal& phi, double tau, const PhaseGrid& pg);

// Same quantity, always through the per-lag shift path. Kept for tests.
PhaseFunction cross_wigner_tau_generic(const SampledSignal& psi, const SampledSignal& phi, double tau,
                                       const PhaseGrid& pg);

PhaseFunction cross_wigner(const SampledSignal& psi, const SampledSignal& phi, const PhaseGrid& pg);

/// Rihaczek-Kirkwood distribution, normalised to coincide with Wig_0.
PhaseFunction rihaczek(const SampledSignal& psi, const SampledSignal& phi, const PhaseGrid& pg);

/// Amb(psi, phi)(x, p) = (2 pi hbar)^{-1} int e^{-ipy/hbar} psi(y + x/2) conj(phi)(y - x/2) dy.
PhaseFunction ambiguity(const SampledSignal& psi, const SampledSignal& phi, const PhaseGrid& pg);

/// Theta(x, p) = sin(px / 2hbar) / (px / 2hbar), 1 on the axes.
double theta_value(double x, double p, double hbar);
PhaseFunction theta_filter(const PhaseGrid& pg);

/// Born-Jordan-Wigner distribution as F_sigma(Theta * Amb).
PhaseFunction bjw_filtered(const SampledSignal& psi, const SampledSignal& phi, const PhaseGrid& pg);

/// Born-Jordan-Wigner distribution as sum_k w_k Wig_{tau_k}.
PhaseFunction bjw_quadrature(const SampledSignal& psi, const SampledSignal& phi, const PhaseGrid& pg,
                             const QuadratureRule& rule);

struct Marginals {
  CVector x;  // sum_k f(x_i, p_k) dp
  CVector p;  // sum_i f(x_i, p_k) dx
};
Marginals marginals(const PhaseFunction& f);

struct InterferenceRegion {
  double x_lo, x_hi;
  double p_lo, p_hi;
};

/// sum over grid points inside the region of |f|^2 dx dp.
double interference_energy(const PhaseFunction& f, const InterferenceRegion& region);

}  // namespace bjq
