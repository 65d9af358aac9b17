#pragma once

#include <complex>
#include <span>
#include <vector>

#include "bjq/fft.hpp"

namespace bjq {

/// Uniform grid x_j = x_min + j dx, j = 0..n_points-1, centred so that
/// x_min = -(n_points/2) dx and x_{n/2} = 0.
struct Grid1D {
  int n_points = 0;
  double x_min = 0.0;
  double dx = 0.0;

  double point(int j) const { return x_min + j * dx; }
  size_t size() const { return static_cast<size_t>(n_points); }
  // Exclusive upper end of the periodic cell [x_min, x_min + n dx).
  double period_end() const { return x_min + n_points * dx; }
  bool contains(double x) const { return x >= x_min && x < period_end(); }

  static Grid1D centered(int n_points, double dx);
};

bool same_grid(const Grid1D& a, const Grid1D& b);

/// Phase-space grid z = (x, p). The momentum grid is the FFT dual of the
/// position grid: dp = 2 pi hbar / (n dx).
struct PhaseGrid {
  Grid1D x;
  Grid1D p;
  double hbar = 1.0;

  int n() const { return x.n_points; }
  double cell() const { return x.dx * p.dx; }
};

bool same_grid(const PhaseGrid& a, const PhaseGrid& b);

PhaseGrid make_phase_grid(int n_points, double half_length, double hbar);
PhaseGrid phase_grid_for(const Grid1D& x_grid, double hbar);

struct SampledSignal {
  Grid1D grid;
  CVector values;

  SampledSignal() = default;
  SampledSignal(Grid1D g, CVector v);
  explicit SampledSignal(Grid1D g) : grid(g), values(g.size()) {}
};

/// Complex values on the phase grid, row = x index, column = p index.
struct PhaseFunction {
  PhaseGrid grid;
  CVector values;

  PhaseFunction() = default;
  explicit PhaseFunction(const PhaseGrid& g);
  PhaseFunction(const PhaseGrid& g, CVector v);

  cplx& at(int i, int k) { return values[static_cast<size_t>(i) * grid.x.size() + k]; }
  const cplx& at(int i, int k) const { return values[static_cast<size_t>(i) * grid.x.size() + k]; }
  std::span<cplx> row(int i) { return {values.data() + static_cast<size_t>(i) * grid.x.size(), grid.x.size()}; }
  std::span<const cplx> row(int i) const {
    return {values.data() + static_cast<size_t>(i) * grid.x.size(), grid.x.size()};
  }
};

/// (F psi)(p) = (2 pi hbar)^{-1/2} int e^{-ipx/hbar} psi(x) dx, sampled on the
/// momentum grid of phase_grid_for(sig.grid, hbar). The result's `grid` field
/// holds that momentum grid.
SampledSignal hbar_fourier(const SampledSignal& sig, double hbar);

/// Inverse of hbar_fourier: takes samples on the momentum grid and returns
/// samples on the position grid of the same phase grid.
SampledSignal inverse_hbar_fourier(const SampledSignal& sig, double hbar);

/// a_sigma(z) = (2 pi hbar)^{-1} int e^{-i sigma(z,z')/hbar} a(z') dz' with
/// sigma(z,z') = p x' - p' x. Exact involution on the grid.
PhaseFunction symplectic_fourier(const PhaseFunction& f);

/// sum_j f_j conj(g_j) dx
cplx inner_product(const SampledSignal& f, const SampledSignal& g);
double norm(const SampledSignal& f);

/// Bilinear bracket <a, b> = sum a b dx dp (no conjugation).
cplx phase_pairing(const PhaseFunction& a, const PhaseFunction& b);

/// Emits a warning when |psi| at the first or last sample exceeds
/// `threshold` times its maximum. Returns true when the edge is clean.
bool check_boundary_mass(const SampledSignal& sig, double threshold = 1e-6);

}  // namespace bjq
