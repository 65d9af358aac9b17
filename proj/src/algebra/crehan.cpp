#include "bjq/algebra/crehan.hpp"

#include "bjq/errors.hpp"

namespace bjq::algebra {

double crehan_spectrum(int n, double lambda, double alpha, double hbar) {
  if (n < 0) throw ValidationError("Crehan level N must be non-negative");
  const double odd = 2.0 * n + 1.0;
  return (n + 0.5) * hbar + lambda * hbar * odd * odd * odd + lambda * hbar * odd * (3.0 * alpha * hbar * hbar - 4.0);
}

mpq_class crehan_spectrum_exact(int n, const mpq_class& lambda, const mpq_class& alpha, const mpq_class& hbar) {
  if (n < 0) throw ValidationError("Crehan level N must be non-negative");
  const mpq_class odd = 2 * n + 1;
  mpq_class e = (mpq_class(n) + mpq_class(1, 2)) * hbar + lambda * hbar * odd * odd * odd +
                lambda * hbar * odd * (3 * alpha * hbar * hbar - 4);
  e.canonicalize();
  return e;
}

OpPoly crehan_hamiltonian(const mpq_class& lambda, const mpq_class& alpha) {
  const OpPoly base = OpPoly::monomial(0, 2) + OpPoly::monomial(2, 0);
  const HbarPoly half{GaussianRational(mpq_class(1, 2))};
  const HbarPoly lam{GaussianRational(lambda)};
  HbarPoly shift = HbarPoly::monomial(2, GaussianRational(mpq_class(3 * lambda * alpha)));
  shift.add(0, GaussianRational(mpq_class(-4 * lambda)));
  return half * base + lam * power(base, 3) + shift * base;
}

mpq_class crehan_operator_eigenvalue(int n, const mpq_class& lambda, const mpq_class& alpha, const mpq_class& hbar) {
  if (n < 0) throw ValidationError("Crehan level N must be non-negative");
  const mpq_class level = (2 * n + 1) * hbar;
  mpq_class e = level / 2 + lambda * level * level * level + lambda * (3 * alpha * hbar * hbar - 4) * level;
  e.canonicalize();
  return e;
}

}  // namespace bjq::algebra
