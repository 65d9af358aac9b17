#include "bjq/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

namespace bjq {

namespace {

// FFTW planning is not thread-safe; execution through the new-array
// interface is. Plans are created once per (size, sign) and kept for the
// process lifetime.
class PlanCache {
 public:
  fftw_plan get(int n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<cplx> scratch(static_cast<size_t>(n));
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_1d(n, buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, plan);
    return plan;
  }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

void fft_inplace(std::span<cplx> data, int sign) {
  if (data.empty()) return;
  fftw_plan plan = plan_cache().get(static_cast<int>(data.size()), sign);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buf, buf);
}

void centered_dft(std::span<const cplx> in, std::span<cplx> out, int sign) {
  const size_t n = in.size();
  const size_t half = n / 2;
  CVector work(in.begin(), in.end());
  for (size_t k = 1; k < n; k += 2) work[k] = -work[k];
  fft_inplace(work, sign);
  const double global = (half % 2 == 0) ? 1.0 : -1.0;
  for (size_t m = 0; m < n; ++m) out[m] = (m % 2 == 0 ? global : -global) * work[m];
}

CVector band_limited_shift(std::span<const cplx> values, double dx, double delta) {
  const size_t n = values.size();
  const long half = static_cast<long>(n / 2);
  CVector work(values.begin(), values.end());
  fft_inplace(work, -1);
  const double period = static_cast<double>(n) * dx;
  for (size_t k = 0; k < n; ++k) {
    long mode = static_cast<long>(k);
    if (mode >= half) mode -= static_cast<long>(n);
    const double phase = 2.0 * std::numbers::pi * static_cast<double>(mode) * delta / period;
    work[k] *= std::polar(1.0 / static_cast<double>(n), phase);
  }
  fft_inplace(work, +1);
  return work;
}

}  // namespace bjq
