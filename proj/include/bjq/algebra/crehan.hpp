#pragma once

#include "bjq/algebra/op_poly.hpp"

namespace bjq::algebra {

/// E_N = (N + 1/2) hbar + lambda hbar (2N+1)^3 + lambda hbar (2N+1)(3 alpha hbar^2 - 4)
double crehan_spectrum(int n, double lambda, double alpha, double hbar);
mpq_class crehan_spectrum_exact(int n, const mpq_class& lambda, const mpq_class& alpha, const mpq_class& hbar);

/// H = (P^2 + X^2)/2 + lambda (P^2 + X^2)^3 + lambda (3 alpha hbar^2 - 4)(P^2 + X^2)
/// with lambda and alpha exact rationals; normal-ordered.
OpPoly crehan_hamiltonian(const mpq_class& lambda, const mpq_class& alpha);

/// Eigenvalue of crehan_hamiltonian on the N-th oscillator state, using
/// (P^2 + X^2) h_N = (2N+1) hbar h_N. Agrees with crehan_spectrum_exact at
/// hbar = 1; for other hbar the cubic term carries hbar^3 instead of hbar.
mpq_class crehan_operator_eigenvalue(int n, const mpq_class& lambda, const mpq_class& alpha, const mpq_class& hbar);

}  // namespace bjq::algebra
