#pragma once

#include "bjq/grid.hpp"
#include "bjq/quadrature.hpp"
#include "bjq/symbol.hpp"

namespace bjq {

namespace algebra {
class OpPoly;
}

/// Dense operator on sampled signals: (A psi)_i = sum_j entries[i][j] psi_j dx.
struct OperatorMatrix {
  PhaseGrid grid;
  CVector entries;

  OperatorMatrix() = default;
  explicit OperatorMatrix(const PhaseGrid& g) : grid(g), entries(g.x.size() * g.x.size()) {}
  OperatorMatrix(const PhaseGrid& g, CVector e);

  size_t n() const { return grid.x.size(); }
  cplx& at(size_t i, size_t j) { return entries[i * n() + j]; }
  const cplx& at(size_t i, size_t j) const { return entries[i * n() + j]; }
};

enum class Scheme { weyl, born_jordan };

OperatorMatrix identity_operator(const PhaseGrid& pg);
// Multiplication by x.
OperatorMatrix position_operator(const PhaseGrid& pg);
// -i hbar d/dx, built as the quantisation of the symbol p.
OperatorMatrix momentum_operator(const PhaseGrid& pg);

/// Kernel K_tau(x, y) = (2 pi hbar)^{-1} int e^{ip(x-y)/hbar} a(tau x + (1-tau) y, p) dp.
OperatorMatrix kernel_tau(const SymbolSource& a, double tau, const PhaseGrid& pg);
OperatorMatrix kernel_weyl(const SymbolSource& a, const PhaseGrid& pg);
/// Average of kernel_tau over the nodes of `rule`.
OperatorMatrix kernel_bj(const SymbolSource& a, const PhaseGrid& pg, const QuadratureRule& rule);
OperatorMatrix kernel_bj(const SymbolSource& a, const PhaseGrid& pg);
OperatorMatrix quantize(const SymbolSource& a, Scheme scheme, const PhaseGrid& pg);

/// (T_tau(z0) psi)(x) = e^{i(p0 x - (1-tau) p0 x0)/hbar} psi(x - x0).
/// Rows whose source point x - x0 leaves the grid are zero.
OperatorMatrix heisenberg_weyl(double x0, double p0, double tau, const PhaseGrid& pg);

/// A = (2 pi hbar)^{-1} sum a_sigma(z) [Theta(z)] T(z) dz on the phase grid.
OperatorMatrix op_from_twist(const SymbolSource& a, const PhaseGrid& pg, Scheme scheme);

SampledSignal apply(const OperatorMatrix& a, const SampledSignal& psi);

struct Pairing {
  cplx lhs;  // (A psi, phi) = sum (A psi)_i conj(phi_i) dx
  cplx rhs;  // <a, W(psi, phi)>
};
Pairing pairing_check(const SymbolSource& a, const SampledSignal& psi, const SampledSignal& phi, double tau,
                      const PhaseGrid& pg);
Pairing pairing_check_bj(const SymbolSource& a, const SampledSignal& psi, const SampledSignal& phi,
                         const PhaseGrid& pg);

OperatorMatrix matrix_adjoint(const OperatorMatrix& a);
// Composition of operators: (AB)_ik = sum_j A_ij B_jk dx.
OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(cplx s, const OperatorMatrix& a);

double frobenius_norm(const OperatorMatrix& a);
/// Largest singular value of the operator on l2(dx), by power iteration.
double operator_norm(const OperatorMatrix& a, int iterations = 200);
/// ||a - b||_F / ||a||_F
double relative_difference(const OperatorMatrix& a, const OperatorMatrix& b);

/// Numerical realisation of a normal-ordered polynomial in X and P.
OperatorMatrix realize(const algebra::OpPoly& poly, const PhaseGrid& pg);

}  // namespace bjq
