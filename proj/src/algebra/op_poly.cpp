#include "bjq/algebra/op_poly.hpp"

#include "bjq/errors.hpp"

namespace bjq::algebra {

namespace {

void check_degree(int a, int b) {
  if (a < 0 || b < 0) throw ValidationError("negative exponent in operator monomial");
  if (a + b > kMaxDegree) throw ValidationError("operator degree exceeds " + std::to_string(kMaxDegree));
}

// (-i)^k as a Gaussian rational
GaussianRational minus_i_pow(int k) {
  switch (k % 4) {
    case 0: return {1, 0};
    case 1: return {0, -1};
    case 2: return {-1, 0};
    default: return {0, 1};
  }
}

}  // namespace

OpPoly::OpPoly(HbarPoly c) {
  if (!c.is_zero()) terms_.emplace(Key{0, 0}, std::move(c));
}

OpPoly OpPoly::monomial(int a, int b, const HbarPoly& c) {
  OpPoly out;
  out.add(a, b, c);
  return out;
}

int OpPoly::degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
  return d;
}

HbarPoly OpPoly::coefficient(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? HbarPoly() : it->second;
}

void OpPoly::add(int a, int b, const HbarPoly& c) {
  check_degree(a, b);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OpPoly& OpPoly::operator+=(const OpPoly& o) {
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

OpPoly& OpPoly::operator-=(const OpPoly& o) {
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, -c);
  return *this;
}

OpPoly OpPoly::operator-() const {
  OpPoly out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

OpPoly operator*(const HbarPoly& c, const OpPoly& a) {
  OpPoly out;
  for (const auto& [key, coef] : a.terms_) out.add(key.first, key.second, c * coef);
  return out;
}

OpPoly multiply(const OpPoly& lhs, const OpPoly& rhs) {
  OpPoly out;
  for (const auto& [ka, ca] : lhs.terms()) {
    for (const auto& [kb, cb] : rhs.terms()) {
      const auto [a, b] = ka;
      const auto [c, d] = kb;
      check_degree(a + c, b + d);
      const HbarPoly base = ca * cb;
      // X^a (P^b X^c) P^d
      for (int k = 0; k <= std::min(b, c); ++k) {
        const mpq_class weight = binomial(b, k) * binomial(c, k) * factorial(k);
        const HbarPoly term = HbarPoly::monomial(k, minus_i_pow(k) * GaussianRational(weight)) * base;
        out.add(a + c - k, b - k + d, term);
      }
    }
  }
  return out;
}

OpPoly operator*(const OpPoly& a, const OpPoly& b) { return multiply(a, b); }

OpPoly power(const OpPoly& a, int k) {
  if (k < 0) throw ValidationError("negative operator power");
  OpPoly out(HbarPoly(1));
  for (int j = 0; j < k; ++j) out = multiply(out, a);
  return out;
}

OpPoly commutator(const OpPoly& a, const OpPoly& b) { return multiply(a, b) - multiply(b, a); }

OpPoly anticommutator(const OpPoly& a, const OpPoly& b) { return multiply(a, b) + multiply(b, a); }

OpPoly formal_adjoint(const OpPoly& a) {
  OpPoly out;
  for (const auto& [key, c] : a.terms()) {
    const OpPoly reversed = multiply(OpPoly::monomial(0, key.second), OpPoly::monomial(key.first, 0));
    out += c.conj() * reversed;
  }
  return out;
}

}  // namespace bjq::algebra
