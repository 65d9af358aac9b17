#include "bjq/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bjq/errors.hpp"

namespace bjq {

namespace {

bool close_rel(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

void transpose_square(CVector& v, size_t n) {
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) std::swap(v[i * n + j], v[j * n + i]);
}

}  // namespace

Grid1D Grid1D::centered(int n_points, double dx) {
  return Grid1D{n_points, -(n_points / 2) * dx, dx};
}

bool same_grid(const Grid1D& a, const Grid1D& b) {
  return a.n_points == b.n_points && close_rel(a.dx, b.dx) &&
         std::abs(a.x_min - b.x_min) <= 1e-12 * std::max(1.0, std::abs(a.x_min));
}

bool same_grid(const PhaseGrid& a, const PhaseGrid& b) {
  return same_grid(a.x, b.x) && same_grid(a.p, b.p) && close_rel(a.hbar, b.hbar);
}

PhaseGrid make_phase_grid(int n_points, double half_length, double hbar) {
  if (n_points < 4 || n_points % 2 != 0) {
    throw ValidationError("n_points must be even and at least 4, got " + std::to_string(n_points));
  }
  if (!(half_length > 0.0) || !std::isfinite(half_length)) throw ValidationError("half_length must be positive");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw ValidationError("hbar must be positive");
  return phase_grid_for(Grid1D::centered(n_points, 2.0 * half_length / n_points), hbar);
}

PhaseGrid phase_grid_for(const Grid1D& x_grid, double hbar) {
  if (!(hbar > 0.0)) throw ValidationError("hbar must be positive");
  const double dp = 2.0 * std::numbers::pi * hbar / (x_grid.n_points * x_grid.dx);
  return PhaseGrid{x_grid, Grid1D::centered(x_grid.n_points, dp), hbar};
}

SampledSignal::SampledSignal(Grid1D g, CVector v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) throw ValidationError("signal length does not match its grid");
}

PhaseFunction::PhaseFunction(const PhaseGrid& g) : grid(g), values(g.x.size() * g.x.size()) {}

PhaseFunction::PhaseFunction(const PhaseGrid& g, CVector v) : grid(g), values(std::move(v)) {
  if (values.size() != g.x.size() * g.x.size()) throw ValidationError("phase function shape does not match grid");
}

SampledSignal hbar_fourier(const SampledSignal& sig, double hbar) {
  const PhaseGrid pg = phase_grid_for(sig.grid, hbar);
  SampledSignal out(pg.p);
  centered_dft(sig.values, out.values, -1);
  const double scale = sig.grid.dx / std::sqrt(2.0 * std::numbers::pi * hbar);
  for (auto& v : out.values) v *= scale;
  return out;
}

SampledSignal inverse_hbar_fourier(const SampledSignal& sig, double hbar) {
  // The position grid is the dual of the momentum grid under the same rule.
  const PhaseGrid dual = phase_grid_for(sig.grid, hbar);
  SampledSignal out(dual.p);
  centered_dft(sig.values, out.values, +1);
  const double scale = sig.grid.dx / std::sqrt(2.0 * std::numbers::pi * hbar);
  for (auto& v : out.values) v *= scale;
  return out;
}

PhaseFunction symplectic_fourier(const PhaseFunction& f) {
  const size_t n = f.grid.x.size();
  if (n == 0 || f.values.size() != n * n) throw ValidationError("symplectic_fourier needs a square phase function");
  PhaseFunction out(f.grid, f.values);
  // p' -> x0 (sign +) along rows, then x' -> p0 (sign -) along the other axis.
  for (size_t i = 0; i < n; ++i) {
    std::span<cplx> row(out.values.data() + i * n, n);
    centered_dft(row, row, +1);
  }
  transpose_square(out.values, n);
  for (size_t i = 0; i < n; ++i) {
    std::span<cplx> row(out.values.data() + i * n, n);
    centered_dft(row, row, -1);
  }
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : out.values) v *= scale;
  return out;
}

cplx inner_product(const SampledSignal& f, const SampledSignal& g) {
  if (!same_grid(f.grid, g.grid)) throw ValidationError("inner_product: grid mismatch");
  cplx acc = 0.0;
  for (size_t j = 0; j < f.values.size(); ++j) acc += f.values[j] * std::conj(g.values[j]);
  return acc * f.grid.dx;
}

double norm(const SampledSignal& f) { return std::sqrt(std::max(0.0, inner_product(f, f).real())); }

cplx phase_pairing(const PhaseFunction& a, const PhaseFunction& b) {
  if (!same_grid(a.grid, b.grid)) throw ValidationError("phase_pairing: grid mismatch");
  cplx acc = 0.0;
  for (size_t j = 0; j < a.values.size(); ++j) acc += a.values[j] * b.values[j];
  return acc * a.grid.cell();
}

bool check_boundary_mass(const SampledSignal& sig, double threshold) {
  double peak = 0.0;
  for (const auto& v : sig.values) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return true;
  const double edge = std::max(std::abs(sig.values.front()), std::abs(sig.values.back()));
  if (edge > threshold * peak) {
    std::ostringstream msg;
    msg << "signal has boundary mass " << edge / peak << " relative to its peak (threshold " << threshold
        << "); periodic wrap-around may bias results";
    warn(msg.str());
    return false;
  }
  return true;
}

}  // namespace bjq
