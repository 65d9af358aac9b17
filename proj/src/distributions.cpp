#include "bjq/distributions.hpp"

#include <cmath>
#include <numbers>

#include "bjq/errors.hpp"
#include "bjq/kernels.hpp"

namespace bjq {

namespace {

constexpr int kMaxRefine = 16;

void check_inputs(const SampledSignal& psi, const SampledSignal& phi, const PhaseGrid& pg) {
  if (!same_grid(psi.grid, pg.x) || !same_grid(phi.grid, pg.x)) {
    throw ValidationError("signals are not sampled on the phase grid's position grid");
  }
}

// Detects tau = r/s with a small denominator.
bool rational_tau(double tau, int& r, int& s) {
  for (s = 1; s <= kMaxRefine; ++s) {
    const double scaled = tau * s;
    const double nearest = std::round(scaled);
    if (std::abs(scaled - nearest) < 1e-13) {
      r = static_cast<int>(nearest);
      return true;
    }
  }
  return false;
}

// Band-limited upsampling by an integer factor: out[j] = f(x_min + j dx / s).
// Mode -n/2 is kept on the negative side, matching band_limited_shift.
CVector refine(std::span<const cplx> values, int s) {
  const size_t n = values.size();
  if (s == 1) return CVector(values.begin(), values.end());
  const size_t m = n * static_cast<size_t>(s);
  CVector spec(values.begin(), values.end());
  fft_inplace(spec, -1);
  CVector wide(m, cplx(0.0));
  const size_t half = n / 2;
  for (size_t k = 0; k < half; ++k) wide[k] = spec[k];
  for (size_t k = half; k < n; ++k) wide[m - n + k] = spec[k];
  fft_inplace(wide, +1);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : wide) v *= scale;
  return wide;
}

long wrap(long i, long m) {
  i %= m;
  return i < 0 ? i + m : i;
}

// C[i][k] = psi(x_i + tau y_k) conj phi(x_i - (1 - tau) y_k), y_k = (k - n/2) dx,
// with column 0 replaced by the mean of the y = -L and y = +L values.
CVector correlation_rational(const SampledSignal& psi, const SampledSignal& phi, int r, int s) {
  const long n = psi.grid.n_points;
  const long h = n / 2;
  const long m = n * s;
  const CVector fine_psi = refine(psi.values, s);
  const CVector fine_phi = refine(phi.values, s);
  CVector c(static_cast<size_t>(n * n));
  // x_i + tau y = x_min + (s i + r (k - h)) dx / s ; x_i - (1-tau) y = x_min + (s i - (s - r)(k - h)) dx / s.
  auto value = [&](long i, long lag) {
    const cplx a = fine_psi[wrap(s * i + r * lag, m)];
    const cplx b = fine_phi[wrap(s * i - (s - r) * lag, m)];
    return a * std::conj(b);
  };
  kernels::for_rows(static_cast<size_t>(n), [&](size_t row) {
    const long i = static_cast<long>(row);
    cplx* out = c.data() + row * n;
    for (long k = 1; k < n; ++k) out[k] = value(i, k - h);
    out[0] = 0.5 * (value(i, -h) + value(i, h));
  });
  return c;
}

CVector correlation_generic(const SampledSignal& psi, const SampledSignal& phi, double tau) {
  const long n = psi.grid.n_points;
  const long h = n / 2;
  const double dx = psi.grid.dx;
  CVector c(static_cast<size_t>(n * n));
  // Column-wise: each lag shifts both signals once. Lag index n stands for y = +L.
  std::vector<CVector> columns(static_cast<size_t>(n + 1));
  kernels::for_rows(static_cast<size_t>(n + 1), [&](size_t col) {
    const double y = static_cast<double>(static_cast<long>(col) - h) * dx;
    const CVector a = band_limited_shift(psi.values, dx, tau * y);
    const CVector b = band_limited_shift(phi.values, dx, -(1.0 - tau) * y);
    CVector prod(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) prod[i] = a[i] * std::conj(b[i]);
    columns[col] = std::move(prod);
  });
  for (long i = 0; i < n; ++i) {
    cplx* out = c.data() + i * n;
    for (long k = 1; k < n; ++k) out[k] = columns[k][i];
    out[0] = 0.5 * (columns[0][i] + columns[n][i]);
  }
  return c;
}

PhaseFunction wigner_from_correlation(CVector c, const PhaseGrid& pg) {
  const size_t n = pg.x.size();
  const double scale = pg.x.dx / (2.0 * std::numbers::pi * pg.hbar);
  kernels::centered_dft_rows(c, n, -1, scale);
  return PhaseFunction(pg, std::move(c));
}

void transpose(CVector& v, size_t n) {
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) std::swap(v[i * n + j], v[j * n + i]);
}

}  // namespace

PhaseFunction cross_wigner_tau(const SampledSignal& psi, const SampledSignal& phi, double tau, const PhaseGrid& pg) {
  check_inputs(psi, phi, pg);
  if (!std::isfinite(tau)) throw ValidationError("tau must be finite");
  int r = 0, s = 1;
  if (rational_tau(tau, r, s)) return wigner_from_correlation(correlation_rational(psi, phi, r, s), pg);
  return wigner_from_correlation(correlation_generic(psi, phi, tau), pg);
}

PhaseFunction cross_wigner_tau_generic(const SampledSignal& psi, const SampledSignal& phi, double tau,
                                       const PhaseGrid& pg) {
  check_inputs(psi, phi, pg);
  if (!std::isfinite(tau)) throw ValidationError("tau must be finite");
  return wigner_from_correlation(correlation_generic(psi, phi, tau), pg);
}

PhaseFunction cross_wigner(const SampledSignal& psi, const SampledSignal& phi, const PhaseGrid& pg) {
  return cross_wigner_tau(psi, phi, 0.5, pg);
}

PhaseFunction rihaczek(const SampledSignal& psi, const SampledSignal& phi, const PhaseGrid& pg) {
  check_inputs(psi, phi, pg);
  // R(x, p) = (2 pi hbar)^{-1/2} e^{-ipx/hbar} psi(x) conj(F phi)(p)
  const SampledSignal fphi = hbar_fourier(phi, pg.hbar);
  const size_t n = pg.x.size();
  PhaseFunction out(pg);
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * pg.hbar);
  const long h = static_cast<long>(n / 2);
  kernels::for_rows(n, [&](size_t i) {
    for (size_t k = 0; k < n; ++k) {
      // p_k x_i / hbar = 2 pi (k - h)(i - h) / n, reduced exactly mod n.
      const long prod = ((static_cast<long>(k) - h) * (static_cast<long>(i) - h)) % static_cast<long>(n);
      const double phase = -2.0 * std::numbers::pi * static_cast<double>(prod) / static_cast<double>(n);
      out.at(static_cast<int>(i), static_cast<int>(k)) =
          norm * std::polar(1.0, phase) * psi.values[i] * std::conj(fphi.values[k]);
    }
  });
  return out;
}

PhaseFunction ambiguity(const SampledSignal& psi, const SampledSignal& phi, const PhaseGrid& pg) {
  check_inputs(psi, phi, pg);
  const size_t n = pg.x.size();
  int r = 1, s = 2;
  CVector c = correlation_rational(psi, phi, r, s);
  // Rows of the transposed matrix are lags; transform over x.
  transpose(c, n);
  const double scale = pg.x.dx / (2.0 * std::numbers::pi * pg.hbar);
  kernels::centered_dft_rows(c, n, -1, scale);
  return PhaseFunction(pg, std::move(c));
}

double theta_value(double x, double p, double hbar) {
  const double t = p * x / (2.0 * hbar);
  if (t == 0.0) return 1.0;
  return std::sin(t) / t;
}

PhaseFunction theta_filter(const PhaseGrid& pg) {
  PhaseFunction out(pg);
  const int n = pg.n();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) out.at(i, k) = theta_value(pg.x.point(i), pg.p.point(k), pg.hbar);
  return out;
}

PhaseFunction bjw_filtered(const SampledSignal& psi, const SampledSignal& phi, const PhaseGrid& pg) {
  PhaseFunction amb = ambiguity(psi, phi, pg);
  const int n = pg.n();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) amb.at(i, k) *= theta_value(pg.x.point(i), pg.p.point(k), pg.hbar);
  return symplectic_fourier(amb);
}

PhaseFunction bjw_quadrature(const SampledSignal& psi, const SampledSignal& phi, const PhaseGrid& pg,
                             const QuadratureRule& rule) {
  check_inputs(psi, phi, pg);
  PhaseFunction acc(pg);
  for (size_t q = 0; q < rule.size(); ++q) {
    const PhaseFunction w = cross_wigner_tau(psi, phi, rule.nodes()[q], pg);
    const double weight = rule.weights()[q];
    for (size_t j = 0; j < acc.values.size(); ++j) acc.values[j] += weight * w.values[j];
  }
  return acc;
}

Marginals marginals(const PhaseFunction& f) {
  const size_t n = f.grid.x.size();
  Marginals m{CVector(n), CVector(n)};
  for (size_t i = 0; i < n; ++i) {
    cplx acc = 0.0;
    for (size_t k = 0; k < n; ++k) acc += f.values[i * n + k];
    m.x[i] = acc * f.grid.p.dx;
  }
  for (size_t k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += f.values[i * n + k];
    m.p[k] = acc * f.grid.x.dx;
  }
  return m;
}

double interference_energy(const PhaseFunction& f, const InterferenceRegion& region) {
  const PhaseGrid& g = f.grid;
  if (!(region.x_hi > region.x_lo) || !(region.p_hi > region.p_lo)) {
    throw ValidationError("interference region is empty");
  }
  const double tol = 1e-12;
  if (region.x_lo < g.x.x_min - tol || region.x_hi > g.x.point(g.n() - 1) + g.x.dx ||
      region.p_lo < g.p.x_min - tol || region.p_hi > g.p.point(g.n() - 1) + g.p.dx) {
    throw ValidationError("interference region extends beyond the phase grid");
  }
  double acc = 0.0;
  int hits = 0;
  for (int i = 0; i < g.n(); ++i) {
    const double x = g.x.point(i);
    if (x < region.x_lo || x > region.x_hi) continue;
    for (int k = 0; k < g.n(); ++k) {
      const double p = g.p.point(k);
      if (p < region.p_lo || p > region.p_hi) continue;
      acc += std::norm(f.at(i, k));
      ++hits;
    }
  }
  if (hits == 0) throw ValidationError("interference region contains no grid points");
  return acc * g.cell();
}

}  // namespace bjq
