#pragma once

#include <map>
#include <string_view>
#include <utility>

#include "bjq/algebra/gaussian_rational.hpp"

namespace bjq::algebra {

inline constexpr int kMaxDegree = 64;

/// Noncommutative polynomial in X and P kept in normal order: the key (a, b)
/// stands for X^a P^b. Coefficients are polynomials in hbar.
class OpPoly {
 public:
  using Key = std::pair<int, int>;

  OpPoly() = default;
  OpPoly(HbarPoly c);  // NOLINT: scalars are constant operators

  static OpPoly x() { return monomial(1, 0); }
  static OpPoly p() { return monomial(0, 1); }
  static OpPoly hbar() { return OpPoly(HbarPoly::monomial(1, 1)); }
  static OpPoly monomial(int a, int b, const HbarPoly& c = HbarPoly(1));

  const std::map<Key, HbarPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  HbarPoly coefficient(int a, int b) const;

  void add(int a, int b, const HbarPoly& c);

  OpPoly& operator+=(const OpPoly& o);
  OpPoly& operator-=(const OpPoly& o);
  friend OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
  friend OpPoly operator-(OpPoly a, const OpPoly& b) { return a -= b; }
  OpPoly operator-() const;
  friend OpPoly operator*(const HbarPoly& c, const OpPoly& a);
  friend bool operator==(const OpPoly& a, const OpPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Key, HbarPoly> terms_;
};

/// Exact product, re-normal-ordered with
///   P^b X^c = sum_k C(b,k) C(c,k) k! (-i hbar)^k X^{c-k} P^{b-k}.
OpPoly multiply(const OpPoly& a, const OpPoly& b);
OpPoly operator*(const OpPoly& a, const OpPoly& b);
OpPoly power(const OpPoly& a, int k);

OpPoly commutator(const OpPoly& a, const OpPoly& b);
OpPoly anticommutator(const OpPoly& a, const OpPoly& b);

/// Reverse every word, conjugate coefficients, re-normal-order.
OpPoly formal_adjoint(const OpPoly& a);

enum class RewriteOrder { leftmost, rightmost, random };

/// Normal form of a word over {X, P} by repeated PX -> XP - i hbar rewrites.
/// Independent of `multiply`; used as its oracle. With RewriteOrder::random
/// the swap position is drawn from a generator seeded by `seed`.
OpPoly normal_order_word(std::string_view word, RewriteOrder order = RewriteOrder::leftmost, unsigned seed = 0);

}  // namespace bjq::algebra
