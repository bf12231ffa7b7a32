#include "core/welch.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <sstream>
#include <vector>

namespace cbound {

namespace {
// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex g_fftw_mutex;
}  // namespace

NoiseSpectrum welch_psd(std::span<const double> x, double dt,
                        std::size_t segment_len, double overlap,
                        WindowKind window, SpectrumKind kind) {
  if (window != WindowKind::Hann)
    throw Error(ErrorCode::InvalidArgument, "unsupported window");
  if (!(dt > 0))
    throw Error(ErrorCode::InvalidArgument, "dt must be positive");
  if (segment_len < 4)
    throw Error(ErrorCode::InvalidArgument, "segment_len must be at least 4");
  if (segment_len > x.size()) {
    std::ostringstream os;
    os << "segment_len " << segment_len << " exceeds sample count " << x.size();
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  if (!(overlap >= 0.0) || !(overlap <= 0.9))
    throw Error(ErrorCode::InvalidArgument, "overlap must lie in [0, 0.9]");

  const std::size_t len = segment_len;
  std::size_t step = len - static_cast<std::size_t>(std::floor(overlap * static_cast<double>(len)));
  if (step == 0) step = 1;
  const std::size_t n_segments = 1 + (x.size() - len) / step;

  std::vector<double> window_values(len);
  double win_sq_sum = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    window_values[k] = 0.5 * (1.0 - std::cos(2.0 * M_PI * static_cast<double>(k) /
                                             static_cast<double>(len)));
    win_sq_sum += window_values[k] * window_values[k];
  }

  const std::size_t n_bins = len / 2;  // positive-frequency bins, DC dropped
  std::vector<double> acc(n_bins + 1, 0.0);

  double* in;
  fftw_complex* out;
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    in = fftw_alloc_real(len);
    out = fftw_alloc_complex(len / 2 + 1);
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(len), in, out, FFTW_ESTIMATE);
  }
  if (!plan) {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    fftw_free(in);
    fftw_free(out);
    throw Error(ErrorCode::NumericError, "FFT plan creation failed");
  }

  for (std::size_t s = 0; s < n_segments; ++s) {
    const double* seg = x.data() + s * step;
    for (std::size_t k = 0; k < len; ++k) in[k] = seg[k] * window_values[k];
    fftw_execute(plan);
    for (std::size_t j = 1; j <= n_bins; ++j)
      acc[j] += out[j][0] * out[j][0] + out[j][1] * out[j][1];
  }

  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    fftw_destroy_plan(plan);
    fftw_free(in);
    fftw_free(out);
  }

  const double scale = dt / (win_sq_sum * static_cast<double>(n_segments));
  std::vector<double> freqs(n_bins), psd(n_bins);
  for (std::size_t j = 1; j <= n_bins; ++j) {
    freqs[j - 1] = static_cast<double>(j) / (static_cast<double>(len) * dt);
    const bool nyquist = (len % 2 == 0) && (j == n_bins);
    psd[j - 1] = acc[j] * scale * (nyquist ? 1.0 : 2.0);
  }
  return NoiseSpectrum(std::move(freqs), std::move(psd), kind);
}

}  // namespace cbound
