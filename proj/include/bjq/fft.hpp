#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bjq {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

// Unnormalised in-place DFT: data[m] <- sum_k exp(sign * 2 pi i m k / n) data[k].
// sign is -1 (forward) or +1 (backward). Safe to call from several threads.
void fft_inplace(std::span<cplx> data, int sign);

// Centred DFT for grids indexed j - n/2:
//   out[m] = sum_k exp(sign * 2 pi i (m - n/2)(k - n/2) / n) in[k].
// `in` and `out` may alias. n must be even.
void centered_dft(std::span<const cplx> in, std::span<cplx> out, int sign);

// Samples of the periodic band-limited interpolant of `values` (spacing dx,
// modes -n/2 .. n/2-1) at x_j + delta. Integer multiples of dx reduce to an
// index roll up to rounding.
CVector band_limited_shift(std::span<const cplx> values, double dx, double delta);

}  // namespace bjq
