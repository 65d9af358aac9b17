#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>

namespace bjq::algebra {

/// re + i im with exact rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: integers convert implicitly
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_imaginary() const { return sgn(re_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussianRational pow(int k) const;

 private:
  mpq_class re_ = 0;
  mpq_class im_ = 0;
};

/// Polynomial in hbar with Gaussian-rational coefficients; zero coefficients
/// are never stored.
class HbarPoly {
 public:
  HbarPoly() = default;
  HbarPoly(GaussianRational c) { add(0, std::move(c)); }  // NOLINT
  static HbarPoly monomial(int power, GaussianRational c);

  const std::map<int, GaussianRational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  void add(int power, const GaussianRational& c);
  GaussianRational coefficient(int power) const;

  HbarPoly conj() const;
  std::complex<double> evaluate(double hbar) const;

  HbarPoly& operator+=(const HbarPoly& o);
  HbarPoly& operator-=(const HbarPoly& o);
  friend HbarPoly operator+(HbarPoly a, const HbarPoly& b) { return a += b; }
  friend HbarPoly operator-(HbarPoly a, const HbarPoly& b) { return a -= b; }
  friend HbarPoly operator*(const HbarPoly& a, const HbarPoly& b);
  HbarPoly operator-() const;
  friend bool operator==(const HbarPoly& a, const HbarPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::map<int, GaussianRational> coeffs_;
};

mpq_class binomial(int n, int k);
mpq_class factorial(int n);

}  // namespace bjq::algebra
