#pragma once

#include <map>
#include <string>

#include "bjq/algebra/op_poly.hpp"

namespace bjq::algebra {

struct QuantScheme {
  enum class Kind { weyl, born_jordan, tau };
  Kind kind = Kind::weyl;
  mpq_class tau = mpq_class(1, 2);

  static QuantScheme weyl() { return {Kind::weyl, mpq_class(1, 2)}; }
  static QuantScheme born_jordan() { return {Kind::born_jordan, 0}; }
  static QuantScheme tau_rule(mpq_class t) { return {Kind::tau, std::move(t)}; }

  /// "weyl", "bj", "tau:1/3", "tau:0.25"
  static QuantScheme parse(const std::string& text);
  std::string name() const;
};

/// Exact rational from "p/q", an integer or a finite decimal string.
mpq_class parse_rational(const std::string& text);

/// sum_k C(n,k) (1-tau)^k tau^{n-k} P^k X^m P^{n-k} for Tau(tau), tau = 1/2 for
/// Weyl, and (n+1)^{-1} sum_k P^k X^m P^{n-k} for Born-Jordan.
OpPoly quantize_monomial(int m, int n, const QuantScheme& scheme);

using ClassicalPoly = std::map<std::pair<int, int>, GaussianRational>;
OpPoly quantize_polynomial(const ClassicalPoly& poly, const QuantScheme& scheme);

/// int_0^1 (1-tau)^k tau^{n-k} dtau = k!(n-k)!/(n+1)!
mpq_class beta_average_coefficient(int k, int n);

/// P^k X^m P^{n-k}, normal-ordered.
OpPoly sandwich_word(int k, int m, int n);

/// The commutator [X^m, P^n] evaluated with the closed form
/// sum_{k>=1} (i hbar)^k C(m,k) C(n,k) P^{n-k} X^{m-k} as it is commonly
/// printed. It omits a k! factor and so differs from commutator() from
/// m = n = 2 on; kept to document that difference.
OpPoly commutator_closed_form_without_factorial(int m, int n);

}  // namespace bjq::algebra
