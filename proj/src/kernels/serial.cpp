#include <atomic>

#include "bjq/kernels.hpp"

namespace bjq::kernels {

namespace {
std::atomic<Exec> g_exec{Exec::parallel};
}

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec exec) { g_exec.store(exec); }

namespace serial {

void for_rows(size_t rows, const RowBody& body) {
  for (size_t r = 0; r < rows; ++r) body(r);
}

void centered_dft_rows(std::span<cplx> data, size_t n, int sign, double scale) {
  const size_t rows = data.size() / n;
  for (size_t r = 0; r < rows; ++r) {
    std::span<cplx> row = data.subspan(r * n, n);
    centered_dft(row, row, sign);
    for (auto& v : row) v *= scale;
  }
}

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c, size_t n, double w) {
  for (size_t i = 0; i < n; ++i) {
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
  for (size_t i = 0; i < n; ++i) {
    cplx acc = 0.0;
    for (size_t j = 0; j < n; ++j) acc += a[i * n + j] * x[j];
    y[i] = acc * w;
  }
}

}  // namespace serial
}  // namespace bjq::kernels
