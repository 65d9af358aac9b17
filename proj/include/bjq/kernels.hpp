#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "bjq/fft.hpp"

// Row-parallel building blocks. Every routine exists twice: a plain loop in
// bjq::kernels::serial and an OpenMP version in bjq::kernels::parallel. Rows
// are independent and each row keeps a fixed reduction order, so the two
// versions produce bit-identical output. The serial copy is the reference
// used by the tests and the benchmark.
namespace bjq::kernels {

enum class Exec { serial, parallel };

// Process-wide default used by the library entry points.
Exec default_exec();
void set_default_exec(Exec exec);

using RowBody = std::function<void(size_t row)>;

namespace serial {
void for_rows(size_t rows, const RowBody& body);
// In-place centred DFT of each length-n row of a rows x n block, then scale.
void centered_dft_rows(std::span<cplx> data, size_t n, int sign, double scale);
// C = w * A B for n x n row-major matrices.
void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c, size_t n, double w);
// y = w * A x
void matvec(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> y, size_t n, double w);
}  // namespace serial

namespace parallel {
void for_rows(size_t rows, const RowBody& body);
void centered_dft_rows(std::span<cplx> data, size_t n, int sign, double scale);
void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c, size_t n, double w);
void matvec(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> y, size_t n, double w);
}  // namespace parallel

inline void for_rows(size_t rows, const RowBody& body, Exec exec = default_exec()) {
  exec == Exec::serial ? serial::for_rows(rows, body) : parallel::for_rows(rows, body);
}
inline void centered_dft_rows(std::span<cplx> data, size_t n, int sign, double scale, Exec exec = default_exec()) {
  exec == Exec::serial ? serial::centered_dft_rows(data, n, sign, scale)
                       : parallel::centered_dft_rows(data, n, sign, scale);
}
inline void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c, size_t n, double w,
                   Exec exec = default_exec()) {
  exec == Exec::serial ? serial::matmul(a, b, c, n, w) : parallel::matmul(a, b, c, n, w);
}
inline void matvec(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> y, size_t n, double w,
                   Exec exec = default_exec()) {
  exec == Exec::serial ? serial::matvec(a, x, y, n, w) : parallel::matvec(a, x, y, n, w);
}

}  // namespace bjq::kernels
