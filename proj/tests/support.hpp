#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>

#include "bjq/grid.hpp"
#include "bjq/signals.hpp"

namespace testsupport {

using bjq::cplx;
using bjq::CVector;

inline bjq::PhaseGrid default_grid(double hbar = 1.0, int n = 256, double half = 10.0) {
  return bjq::make_phase_grid(n, half, hbar);
}

inline bjq::SampledSignal signal(const bjq::PhaseGrid& pg, const std::string& spec) {
  return bjq::generate_signal(bjq::SignalSpec::parse(spec), pg.x, pg.hbar);
}

// Sum of three Gaussian packets with random centres, momenta and amplitudes;
// well inside the grid and far below the Nyquist momentum.
inline bjq::SampledSignal random_packet(const bjq::PhaseGrid& pg, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> centre(-2.0, 2.0), mom(-2.0, 2.0), width(0.7, 1.3), phase(0.0, 6.28);
  bjq::SampledSignal out(pg.x);
  for (int t = 0; t < 3; ++t) {
    const double x0 = centre(rng), p0 = mom(rng), s = width(rng), ph = phase(rng);
    for (int j = 0; j < pg.n(); ++j) {
      const double x = pg.x.point(j);
      const double d = (x - x0) / s;
      out.values[j] += std::polar(std::exp(-0.5 * d * d), p0 * x / pg.hbar + ph);
    }
  }
  const double nrm = bjq::norm(out);
  for (auto& v : out.values) v /= nrm;
  return out;
}

inline double l2(const CVector& a) {
  double acc = 0.0;
  for (const auto& v : a) acc += std::norm(v);
  return std::sqrt(acc);
}

inline double rel_l2(const CVector& a, const CVector& ref) {
  double num = 0.0;
  for (size_t j = 0; j < a.size(); ++j) num += std::norm(a[j] - ref[j]);
  return std::sqrt(num) / l2(ref);
}

inline double rel_l1(const CVector& a, const CVector& ref) {
  double num = 0.0, den = 0.0;
  for (size_t j = 0; j < a.size(); ++j) {
    num += std::abs(a[j] - ref[j]);
    den += std::abs(ref[j]);
  }
  return num / den;
}

inline double max_abs(const CVector& a) {
  double m = 0.0;
  for (const auto& v : a) m = std::max(m, std::abs(v));
  return m;
}

inline double max_diff(const CVector& a, const CVector& b) {
  double m = 0.0;
  for (size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

// Composite Simpson rule on [a, b] with an even number of panels. Used as an
// independent quadrature oracle for closed-form integrals.
inline cplx simpson(const std::function<cplx(double)>& f, double a, double b, int panels = 20000) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  cplx acc = f(a) + f(b);
  for (int k = 1; k < panels; ++k) acc += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  return acc * (h / 3.0);
}

// Physicists' Hermite function, evaluated independently of the library via
// the three-term recurrence on H_k.
inline double hermite_oracle(int k, double x, double hbar) {
  const double s = x / std::sqrt(hbar);
  double h0 = 1.0, h1 = 2.0 * s;
  double hk = k == 0 ? h0 : h1;
  for (int m = 1; m < k; ++m) {
    const double next = 2.0 * s * h1 - 2.0 * m * h0;
    h0 = h1;
    h1 = next;
    hk = next;
  }
  double fact = 1.0;
  for (int m = 2; m <= k; ++m) fact *= m;
  return std::pow(std::numbers::pi * hbar, -0.25) / std::sqrt(std::pow(2.0, k) * fact) * hk * std::exp(-0.5 * s * s);
}

}  // namespace testsupport
