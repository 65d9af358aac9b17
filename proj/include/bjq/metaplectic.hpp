#pragma once

#include <string>

#include "bjq/pseudodiff.hpp"

namespace bjq {

/// [[a, b], [c, d]] acting on the column (x, p).
struct SympMat2 {
  double a = 1, b = 0, c = 0, d = 1;

  double det() const { return a * d - b * c; }
  SympMat2 inverse() const { return {d, -b, -c, a}; }
  SympMat2 operator*(const SympMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

SympMat2 make_symp(double a, double b, double c, double d);  // validates det = 1

struct MetaGenerator {
  enum class Kind { j, ml, vp };
  Kind kind = Kind::j;
  double value = 1.0;  // L for ml, P for vp
  int m = 0;           // Maslov-type index for ml

  static MetaGenerator fourier() { return {Kind::j, 1.0, 0}; }
  static MetaGenerator scaling(double l, int m = 0);
  static MetaGenerator chirp(double p) { return {Kind::vp, p, 0}; }
  /// "j", "ml:L", "ml:L:m", "vp:P"
  static MetaGenerator parse(const std::string& text);
  std::string name() const;
};

SympMat2 project(const MetaGenerator& g);

/// J psi(x) = e^{-i pi/4} (F psi)(x); M_{L,m} psi(x) = i^m sqrt|L| psi(Lx);
/// V_P psi(x) = e^{iPx^2/2hbar} psi(x).
OperatorMatrix meta_matrix(const MetaGenerator& g, const PhaseGrid& pg);
OperatorMatrix meta_inverse(const MetaGenerator& g, const PhaseGrid& pg);

/// a o s^{-1}. Product terms stay in product form where s^{-1} allows it.
SymbolSource pullback_symbol(const SymbolSource& a, const SympMat2& s);

/// ||S Op(a) S^{-1} - Op(a o s^{-1})||_F / ||Op(a)||_F
double covariance_defect(Scheme scheme, const SymbolSource& a, const MetaGenerator& g, const PhaseGrid& pg);

/// max over the grid of |Theta(s^{-1} z) - Theta(z)|
double theta_invariance(const SympMat2& s, const PhaseGrid& pg);

/// Symplectic matrix of an operator S recovered from its action on X and P:
/// S X S^{-1} and S P S^{-1} are fitted as combinations of X and P on `probe`
/// by least squares; the fit is the matrix of s^{-1}, returned inverted.
SympMat2 recover_projection(const OperatorMatrix& s, const OperatorMatrix& s_inverse, const SampledSignal& probe);

}  // namespace bjq
