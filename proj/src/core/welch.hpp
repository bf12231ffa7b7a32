#pragma once

#include <span>

#include "core/spectrum.hpp"

namespace cbound {

enum class WindowKind { Hann };

// One-sided Welch PSD estimate. Periodic Hann window, overlap in [0, 0.9],
// normalization dt/sum(w^2) with the factor 2 on interior bins, so the
// integral of the PSD over the band matches the time-domain variance for
// broadband inputs. The DC bin is dropped; output runs up to Nyquist.
// The caller states what the samples measure via `kind`.
NoiseSpectrum welch_psd(std::span<const double> x, double dt,
                        std::size_t segment_len, double overlap,
                        WindowKind window, SpectrumKind kind);

}  // namespace cbound
