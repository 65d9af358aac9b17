#include "bjq/algebra/gaussian_rational.hpp"

#include <cmath>

#include "bjq/errors.hpp"

namespace bjq::algebra {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational GaussianRational::pow(int k) const {
  if (k < 0) throw ValidationError("negative power of a Gaussian rational");
  GaussianRational out(1);
  for (int j = 0; j < k; ++j) out *= *this;
  return out;
}

HbarPoly HbarPoly::monomial(int power, GaussianRational c) {
  HbarPoly out;
  out.add(power, c);
  return out;
}

void HbarPoly::add(int power, const GaussianRational& c) {
  if (power < 0) throw ValidationError("negative power of hbar");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

GaussianRational HbarPoly::coefficient(int power) const {
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? GaussianRational() : it->second;
}

HbarPoly HbarPoly::conj() const {
  HbarPoly out;
  for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, c.conj());
  return out;
}

std::complex<double> HbarPoly::evaluate(double hbar) const {
  std::complex<double> acc = 0.0;
  for (const auto& [k, c] : coeffs_) acc += c.to_complex() * std::pow(hbar, k);
  return acc;
}

HbarPoly& HbarPoly::operator+=(const HbarPoly& o) {
  for (const auto& [k, c] : o.coeffs_) add(k, c);
  return *this;
}

HbarPoly& HbarPoly::operator-=(const HbarPoly& o) {
  for (const auto& [k, c] : o.coeffs_) add(k, -c);
  return *this;
}

HbarPoly operator*(const HbarPoly& a, const HbarPoly& b) {
  HbarPoly out;
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_) out.add(ka + kb, ca * cb);
  return out;
}

HbarPoly HbarPoly::operator-() const {
  HbarPoly out;
  for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, -c);
  return out;
}

mpq_class factorial(int n) {
  if (n < 0) throw ValidationError("factorial of a negative number");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return mpq_class(f);
}

mpq_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return mpq_class(b);
}

}  // namespace bjq::algebra
