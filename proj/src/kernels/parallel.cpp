#include <omp.h>

#include "bjq/kernels.hpp"

namespace bjq::kernels::parallel {

// Static schedule; a row is always handled by exactly one thread with the
// same loop order as the serial version.

void for_rows(size_t rows, const RowBody& body) {
  const long count = static_cast<long>(rows);
#pragma omp parallel for schedule(static)
  for (long r = 0; r < count; ++r) body(static_cast<size_t>(r));
}

void centered_dft_rows(std::span<cplx> data, size_t n, int sign, double scale) {
  const long rows = static_cast<long>(data.size() / n);
#pragma omp parallel for schedule(static)
  for (long r = 0; r < rows; ++r) {
    std::span<cplx> row = data.subspan(static_cast<size_t>(r) * n, n);
    centered_dft(row, row, sign);
    for (auto& v : row) v *= scale;
  }
}

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c, size_t n, double w) {
  const long rows = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long il = 0; il < rows; ++il) {
    const size_t i = static_cast<size_t>(il);
    cplx* out = c.data() + i * n;
    for (size_t k = 0; k < n; ++k) out[k] = 0.0;
    for (size_t j = 0; j < n; ++j) {
      const cplx aij = a[i * n + j] * w;
      const cplx* brow = b.data() + j * n;
      for (size_t k = 0; k < n; ++k) out[k] += aij * brow[k];
    }
  }
}

void matvec(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> y, size_t n, double w) {
  const long rows = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long il = 0; il < rows; ++il) {
    const size_t i = static_cast<size_t>(il);
    cplx acc = 0.0;
    for (size_t j = 0; j < n; ++j) acc += a[i * n + j] * x[j];
    y[i] = acc * w;
  }
}

}  // namespace bjq::kernels::parallel
