#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvetopo/geometry.hpp"
#include "curvetopo/polyline.hpp"

namespace curvetopo {

inline constexpr int kMinFourierSamples = 64;

/// Truncated Fourier curve
///   x(t) = sum_k a_k cos 2 pi k t + b_k sin 2 pi k t
///   y(t) = sum_k c_k cos 2 pi k t + d_k sin 2 pi k t,   k = 1..order
/// sampled at t = i / samples.
struct FourierSpec {
  int order = 1;
  std::vector<double> a, b, c, d;
  int samples = 512;
  std::uint64_t seed = 0;
};

/// Throws InvalidCurve for order < 1, fewer than kMinFourierSamples samples
/// or coefficient arrays whose length differs from the order.
ClosedPolyline sample_fourier(const FourierSpec& spec);

/// Seeded random coefficients with magnitudes decaying as 1 / k^2.
FourierSpec random_fourier_spec(int order, std::uint64_t seed, int samples);

/// Same as random_fourier_spec but redrawn with derived seeds until the curve
/// passes validate_generic. Throws GenerationExhausted after 100 attempts.
FourierSpec random_generic_spec(int order, std::uint64_t seed, int samples,
                                const std::optional<Tolerances>& tol = std::nullopt);

ClosedPolyline random_generic_curve(int order, std::uint64_t seed, int samples,
                                    const std::optional<Tolerances>& tol = std::nullopt);

/// circle_ccw, circle_cw, figure_eight, limacon, paper_sec3_example,
/// paper_example.
const std::vector<std::string>& named_curve_names();

/// Deterministic curve from the named corpus. Throws UnknownName.
ClosedPolyline named_curve(std::string_view name, int samples = 512);

/// Base point recorded with a named curve, as a parameter on
/// named_curve(name, samples). Every name has one.
double documented_basepoint(std::string_view name, int samples = 512);

}  // namespace curvetopo
