#include "bjq/pseudodiff.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "bjq/algebra/op_poly.hpp"
#include "bjq/distributions.hpp"
#include "bjq/errors.hpp"
#include "bjq/kernels.hpp"

namespace bjq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// g_hat(u_r) = (2 pi hbar)^{-1} sum_m e^{i q_m u_r / hbar} g(q_m) dq on the doubled
// momentum grid q_m = (m - n) dp/2 and lag grid u_r = (r - n) dx, m, r < 2n.
CVector transformed_profile(const ScalarFn& g, const PhaseGrid& pg) {
  const size_t n2 = 2 * pg.x.size();
  const double dq = 0.5 * pg.p.dx;
  CVector vals(n2);
  for (size_t m = 0; m < n2; ++m) vals[m] = g((static_cast<double>(m) - static_cast<double>(n2 / 2)) * dq);
  centered_dft(vals, vals, +1);
  const double scale = dq / (kTwoPi * pg.hbar);
  for (auto& v : vals) v *= scale;
  return vals;
}

void check_tau(double tau) {
  if (!std::isfinite(tau)) throw ValidationError("tau must be finite");
}

// Adds sum_q w_q K_{tau_q} for a sum of sheared separable terms.
void fill_separable(const SeparableSymbol& sym, std::span<const double> taus, std::span<const double> weights,
                    const PhaseGrid& pg, OperatorMatrix& out) {
  const long n = pg.n();
  for (const auto& term : sym.terms) {
    const CVector ghat = transformed_profile(term.g, pg);
    const double c = term.shear;
    const double hbar = pg.hbar;
    kernels::for_rows(static_cast<size_t>(n), [&](size_t row) {
      const long i = static_cast<long>(row);
      const double xi = pg.x.point(static_cast<int>(i));
      for (long j = 0; j < n; ++j) {
        const double xj = pg.x.point(static_cast<int>(j));
        const double u = xi - xj;
        const cplx gh = ghat[static_cast<size_t>(i - j + n)];
        cplx acc = 0.0;
        for (size_t q = 0; q < taus.size(); ++q) {
          const double x_mid = taus[q] * xi + (1.0 - taus[q]) * xj;
          cplx v = term.f(x_mid);
          if (c != 0.0) v *= std::polar(1.0, c * x_mid * u / hbar);
          acc += weights[q] * v;
        }
        out.entries[static_cast<size_t>(i * n + j)] += acc * gh;
      }
    });
  }
}

// Direct O(n^3) evaluation for callbacks that admit no product form.
void fill_direct(const AnalyticSymbol& sym, std::span<const double> taus, std::span<const double> weights,
                 const PhaseGrid& pg, OperatorMatrix& out) {
  const long n = pg.n();
  const long n2 = 2 * n;
  const double dq = 0.5 * pg.p.dx;
  CVector twiddle(static_cast<size_t>(n2));
  for (long t = 0; t < n2; ++t) twiddle[t] = std::polar(1.0, kTwoPi * static_cast<double>(t) / static_cast<double>(n2));
  const double scale = dq / (kTwoPi * pg.hbar);
  kernels::for_rows(static_cast<size_t>(n), [&](size_t row) {
    const long i = static_cast<long>(row);
    const double xi = pg.x.point(static_cast<int>(i));
    for (long j = 0; j < n; ++j) {
      const double xj = pg.x.point(static_cast<int>(j));
      cplx acc = 0.0;
      for (size_t q = 0; q < taus.size(); ++q) {
        const double x_mid = taus[q] * xi + (1.0 - taus[q]) * xj;
        cplx inner = 0.0;
        for (long m = 0; m < n2; ++m) {
          long t = ((m - n) * (i - j)) % n2;
          if (t < 0) t += n2;
          inner += twiddle[static_cast<size_t>(t)] * sym.fn(x_mid, static_cast<double>(m - n) * dq);
        }
        acc += weights[q] * inner;
      }
      out.entries[static_cast<size_t>(i * n + j)] += acc * scale;
    }
  });
}

// Sampled symbols: per-lag transforms along p, then a band-limited shift in x.
// Lags |i - j| >= n/2 fall outside the sampled band and stay zero.
void fill_sampled(const PhaseFunction& sym, std::span<const double> taus, std::span<const double> weights,
                  const PhaseGrid& pg, OperatorMatrix& out) {
  if (!same_grid(sym.grid, pg)) throw ValidationError("sampled symbol does not match the working grid");
  const long n = pg.n();
  const long h = n / 2;
  CVector lag = sym.values;
  kernels::centered_dft_rows(lag, static_cast<size_t>(n), +1, pg.p.dx / (kTwoPi * pg.hbar));
  kernels::for_rows(static_cast<size_t>(n - 1), [&](size_t col_index) {
    const long r = static_cast<long>(col_index) + 1 - h;  // lags -h+1 .. h-1
    CVector column(static_cast<size_t>(n));
    for (long l = 0; l < n; ++l) column[l] = lag[static_cast<size_t>(l * n + r + h)];
    CVector acc(static_cast<size_t>(n), cplx(0.0));
    for (size_t q = 0; q < taus.size(); ++q) {
      const CVector shifted = band_limited_shift(column, pg.x.dx, taus[q] * static_cast<double>(r) * pg.x.dx);
      for (long j = 0; j < n; ++j) acc[j] += weights[q] * shifted[j];
    }
    for (long j = 0; j < n; ++j) {
      const long i = j + r;
      if (i < 0 || i >= n) continue;
      out.entries[static_cast<size_t>(i * n + j)] += acc[j];
    }
  });
}

OperatorMatrix build_kernel(const SymbolSource& a, std::span<const double> taus, std::span<const double> weights,
                            const PhaseGrid& pg) {
  OperatorMatrix out(pg);
  std::visit(
      [&](const auto& sym) {
        using T = std::decay_t<decltype(sym)>;
        if constexpr (std::is_same_v<T, SeparableSymbol>) fill_separable(sym, taus, weights, pg, out);
        else if constexpr (std::is_same_v<T, AnalyticSymbol>) fill_direct(sym, taus, weights, pg, out);
        else fill_sampled(sym, taus, weights, pg, out);
      },
      a.data());
  return out;
}

// (1/n) e^{-i theta/2} sin(n theta/2) / sin(theta/2), theta = 2 pi t / (n dx):
// weight of sample x_j in the band-limited interpolant evaluated at x_j + t.
cplx dirichlet(double t, int n, double dx) {
  const double theta = kTwoPi * t / (n * dx);
  const double half = 0.5 * theta;
  const double s = std::sin(half);
  if (std::abs(s) < 1e-14) {
    // theta near a multiple of 2 pi: limit of the ratio
    const double k = std::round(theta / kTwoPi);
    const double sign = (static_cast<long>(k) * (n - 1)) % 2 == 0 ? 1.0 : -1.0;
    return std::polar(sign, -half);
  }
  return std::polar(std::sin(n * half) / (n * s), -half);
}

}  // namespace

OperatorMatrix::OperatorMatrix(const PhaseGrid& g, CVector e) : grid(g), entries(std::move(e)) {
  if (entries.size() != g.x.size() * g.x.size()) throw ValidationError("operator matrix shape does not match grid");
}

OperatorMatrix identity_operator(const PhaseGrid& pg) {
  OperatorMatrix out(pg);
  for (size_t i = 0; i < out.n(); ++i) out.at(i, i) = 1.0 / pg.x.dx;
  return out;
}

OperatorMatrix position_operator(const PhaseGrid& pg) {
  OperatorMatrix out(pg);
  for (size_t i = 0; i < out.n(); ++i) out.at(i, i) = pg.x.point(static_cast<int>(i)) / pg.x.dx;
  return out;
}

OperatorMatrix momentum_operator(const PhaseGrid& pg) { return kernel_weyl(monomial_symbol(0, 1), pg); }

OperatorMatrix kernel_tau(const SymbolSource& a, double tau, const PhaseGrid& pg) {
  check_tau(tau);
  const double taus[] = {tau};
  const double weights[] = {1.0};
  return build_kernel(a, taus, weights, pg);
}

OperatorMatrix kernel_weyl(const SymbolSource& a, const PhaseGrid& pg) { return kernel_tau(a, 0.5, pg); }

OperatorMatrix kernel_bj(const SymbolSource& a, const PhaseGrid& pg, const QuadratureRule& rule) {
  return build_kernel(a, rule.nodes(), rule.weights(), pg);
}

OperatorMatrix kernel_bj(const SymbolSource& a, const PhaseGrid& pg) {
  return kernel_bj(a, pg, gauss_legendre(kDefaultQuadNodes));
}

OperatorMatrix quantize(const SymbolSource& a, Scheme scheme, const PhaseGrid& pg) {
  return scheme == Scheme::weyl ? kernel_weyl(a, pg) : kernel_bj(a, pg);
}

OperatorMatrix heisenberg_weyl(double x0, double p0, double tau, const PhaseGrid& pg) {
  check_tau(tau);
  const double x_span = -pg.x.x_min;
  const double p_span = -pg.p.x_min;
  if (std::abs(x0) > x_span || std::abs(p0) > p_span) throw ValidationError("z0 lies outside the phase grid");
  OperatorMatrix out(pg);
  const int n = pg.n();
  const double dx = pg.x.dx;
  kernels::for_rows(static_cast<size_t>(n), [&](size_t row) {
    const double xi = pg.x.point(static_cast<int>(row));
    const double source = xi - x0;
    if (!pg.x.contains(source)) return;
    const cplx phase = std::polar(1.0, (p0 * xi - (1.0 - tau) * p0 * x0) / pg.hbar);
    for (int j = 0; j < n; ++j) out.at(row, j) = phase * dirichlet(source - pg.x.point(j), n, dx) / dx;
  });
  return out;
}

OperatorMatrix op_from_twist(const SymbolSource& a, const PhaseGrid& pg, Scheme scheme) {
  PhaseFunction asig = symplectic_fourier(a.sample(pg));
  const long n = pg.n();
  const long h = n / 2;
  double peak = 0.0, edge = 0.0;
  for (long i = 0; i < n; ++i) {
    for (long k = 0; k < n; ++k) {
      const double v = std::abs(asig.values[static_cast<size_t>(i * n + k)]);
      peak = std::max(peak, v);
      if (i == 0 || k == 0 || i == n - 1 || k == n - 1) edge = std::max(edge, v);
    }
  }
  if (peak > 0.0 && edge > 1e-3 * peak) {
    throw NumericError("symplectic Fourier transform of the symbol does not decay at the grid edge (ratio " +
                       std::to_string(edge / peak) + ")");
  }
  if (scheme == Scheme::born_jordan) {
    for (long i = 0; i < n; ++i)
      for (long k = 0; k < n; ++k)
        asig.values[static_cast<size_t>(i * n + k)] *=
            theta_value(pg.x.point(static_cast<int>(i)), pg.p.point(static_cast<int>(k)), pg.hbar);
  }
  // Row d holds a_sigma at x0 = (d - h) dx. Its zero-padded length-2n DFT gives
  // sum_k a_sigma(x0, p_k) e^{i p_k (x_i + x_j) / 2 hbar} at index i + j - 2h + n.
  const long n2 = 2 * n;
  std::vector<CVector> rows(static_cast<size_t>(n));
  kernels::for_rows(static_cast<size_t>(n), [&](size_t d) {
    CVector padded(static_cast<size_t>(n2), cplx(0.0));
    for (long k = 0; k < n; ++k) padded[static_cast<size_t>(k - h + n)] = asig.values[d * n + k];
    centered_dft(padded, padded, +1);
    rows[d] = std::move(padded);
  });
  OperatorMatrix out(pg);
  const double scale = pg.p.dx / (kTwoPi * pg.hbar);
  kernels::for_rows(static_cast<size_t>(n), [&](size_t row) {
    const long i = static_cast<long>(row);
    for (long j = 0; j < n; ++j) {
      const long d = i - j + h;
      if (d < 0 || d >= n) continue;
      out.entries[static_cast<size_t>(i * n + j)] = scale * rows[d][static_cast<size_t>(i + j - 2 * h + n)];
    }
  });
  return out;
}

SampledSignal apply(const OperatorMatrix& a, const SampledSignal& psi) {
  if (!same_grid(a.grid.x, psi.grid)) throw ValidationError("apply: signal grid does not match operator grid");
  SampledSignal out(psi.grid);
  kernels::matvec(a.entries, psi.values, out.values, a.n(), a.grid.x.dx);
  return out;
}

Pairing pairing_check(const SymbolSource& a, const SampledSignal& psi, const SampledSignal& phi, double tau,
                      const PhaseGrid& pg) {
  const SampledSignal apsi = apply(kernel_tau(a, tau, pg), psi);
  return {inner_product(apsi, phi), phase_pairing(a.sample(pg), cross_wigner_tau(psi, phi, tau, pg))};
}

Pairing pairing_check_bj(const SymbolSource& a, const SampledSignal& psi, const SampledSignal& phi,
                         const PhaseGrid& pg) {
  const SampledSignal apsi = apply(kernel_bj(a, pg), psi);
  return {inner_product(apsi, phi), phase_pairing(a.sample(pg), bjw_filtered(psi, phi, pg))};
}

OperatorMatrix matrix_adjoint(const OperatorMatrix& a) {
  OperatorMatrix out(a.grid);
  const size_t n = a.n();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.at(j, i) = std::conj(a.at(i, j));
  return out;
}

OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (!same_grid(a.grid, b.grid)) throw ValidationError("matmul: operator grids differ");
  OperatorMatrix out(a.grid);
  kernels::matmul(a.entries, b.entries, out.entries, a.n(), a.grid.x.dx);
  return out;
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (!same_grid(a.grid, b.grid)) throw ValidationError("operator grids differ");
  OperatorMatrix out = a;
  for (size_t j = 0; j < out.entries.size(); ++j) out.entries[j] += b.entries[j];
  return out;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (!same_grid(a.grid, b.grid)) throw ValidationError("operator grids differ");
  OperatorMatrix out = a;
  for (size_t j = 0; j < out.entries.size(); ++j) out.entries[j] -= b.entries[j];
  return out;
}

OperatorMatrix operator*(cplx s, const OperatorMatrix& a) {
  OperatorMatrix out = a;
  for (auto& v : out.entries) v *= s;
  return out;
}

double frobenius_norm(const OperatorMatrix& a) {
  double acc = 0.0;
  for (const auto& v : a.entries) acc += std::norm(v);
  return std::sqrt(acc);
}

double operator_norm(const OperatorMatrix& a, int iterations) {
  const size_t n = a.n();
  const OperatorMatrix ah = matrix_adjoint(a);
  std::mt19937 rng(7);
  std::normal_distribution<double> gauss;
  CVector v(n), w(n);
  for (auto& e : v) e = cplx(gauss(rng), gauss(rng));
  double sigma = 0.0;
  for (int it = 0; it < iterations; ++it) {
    double nv = 0.0;
    for (const auto& e : v) nv += std::norm(e);
    nv = std::sqrt(nv);
    if (nv == 0.0) return 0.0;
    for (auto& e : v) e /= nv;
    kernels::matvec(a.entries, v, w, n, a.grid.x.dx);
    kernels::matvec(ah.entries, w, v, n, a.grid.x.dx);
    double nw = 0.0;
    for (const auto& e : w) nw += std::norm(e);
    const double next = std::sqrt(nw);
    if (it > 10 && std::abs(next - sigma) <= 1e-12 * next) return next;
    sigma = next;
  }
  return sigma;
}

double relative_difference(const OperatorMatrix& a, const OperatorMatrix& b) {
  const double base = frobenius_norm(a);
  if (base == 0.0) throw NumericError("relative difference against a zero operator");
  return frobenius_norm(a - b) / base;
}

OperatorMatrix realize(const algebra::OpPoly& poly, const PhaseGrid& pg) {
  OperatorMatrix out(pg);
  for (const auto& [key, coef] : poly.terms()) {
    const cplx c = coef.evaluate(pg.hbar);
    if (c == cplx(0.0)) continue;
    // X^a P^b in normal order is the tau = 1 quantisation of x^a p^b.
    const OperatorMatrix term = kernel_tau(monomial_symbol(key.first, key.second), 1.0, pg);
    for (size_t j = 0; j < out.entries.size(); ++j) out.entries[j] += c * term.entries[j];
  }
  return out;
}

}  // namespace bjq
