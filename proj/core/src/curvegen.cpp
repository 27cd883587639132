#include "curvetopo/curvegen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "curvetopo/crossings.hpp"
#include "curvetopo/errors.hpp"

namespace curvetopo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Symmetric value in [-1, 1] built from raw engine output, so coefficient
// streams are identical across standard libraries.
double symmetric_unit(std::mt19937_64& rng) { return 2.0 * unit_real(rng) - 1.0; }

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t attempt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (attempt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Half-offset sampling keeps vertices off symmetric double points.
double half_offset(int i, int samples) { return (i + 0.5) / samples; }

template <typename F>
ClosedPolyline sample_closed(int samples, F&& point) {
  std::vector<Point2> pts;
  pts.reserve(samples);
  for (int i = 0; i < samples; ++i) pts.push_back(point(kTwoPi * half_offset(i, samples)));
  return ClosedPolyline(std::move(pts));
}

// A small loop grafted onto the unit circle around angle `center`.
// side = +1 puts a counterclockwise loop inside, -1 a clockwise loop outside.
struct Curl {
  double center;
  double half_width;
  double reach;   // tangential backtrack
  double height;  // normal excursion
  int side;
};

Point2 circle_with_curls(double theta, const std::vector<Curl>& curls) {
  const Vec2 radial{std::cos(theta), std::sin(theta)};
  const Vec2 tangent{-radial.y, radial.x};
  Vec2 offset{0.0, 0.0};
  for (const Curl& c : curls) {
    double delta = std::remainder(theta - c.center, kTwoPi);
    const double u = delta / c.half_width;
    if (std::abs(u) >= 1.0) continue;
    const double bell = 0.5 * (1.0 + std::cos(std::numbers::pi * u));
    const double along = -c.reach * std::sin(std::numbers::pi * u) * bell;
    const double across = c.height * bell * bell;
    offset = offset + along * tangent + (-c.side * across) * radial;
  }
  return Point2{radial.x, radial.y} + offset;
}

}  // namespace

ClosedPolyline sample_fourier(const FourierSpec& spec) {
  if (spec.order < 1 || spec.samples < kMinFourierSamples) {
    throw InvalidCurve("Fourier curve needs order >= 1 and at least " +
                       std::to_string(kMinFourierSamples) + " samples");
  }
  const auto n = static_cast<std::size_t>(spec.order);
  if (spec.a.size() != n || spec.b.size() != n || spec.c.size() != n || spec.d.size() != n) {
    throw InvalidCurve("Fourier coefficient arrays must have length order");
  }
  std::vector<Point2> pts;
  pts.reserve(spec.samples);
  for (int i = 0; i < spec.samples; ++i) {
    const double t = static_cast<double>(i) / spec.samples;
    Point2 p{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      const double phase = kTwoPi * static_cast<double>(k + 1) * t;
      const double co = std::cos(phase);
      const double si = std::sin(phase);
      p.x += spec.a[k] * co + spec.b[k] * si;
      p.y += spec.c[k] * co + spec.d[k] * si;
    }
    pts.push_back(p);
  }
  return ClosedPolyline(std::move(pts));
}

FourierSpec random_fourier_spec(int order, std::uint64_t seed, int samples) {
  if (order < 1) throw InvalidCurve("order must be at least 1");
  if (samples < kMinFourierSamples) {
    throw InvalidCurve("need at least " + std::to_string(kMinFourierSamples) + " samples");
  }
  FourierSpec spec;
  spec.order = order;
  spec.samples = samples;
  spec.seed = seed;
  std::mt19937_64 rng(seed);
  for (int k = 1; k <= order; ++k) {
    const double scale = 1.0 / (static_cast<double>(k) * k);
    spec.a.push_back(scale * symmetric_unit(rng));
    spec.b.push_back(scale * symmetric_unit(rng));
    spec.c.push_back(scale * symmetric_unit(rng));
    spec.d.push_back(scale * symmetric_unit(rng));
  }
  return spec;
}

FourierSpec random_generic_spec(int order, std::uint64_t seed, int samples,
                                const std::optional<Tolerances>& tol) {
  constexpr int kAttempts = 100;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::uint64_t s = attempt == 0 ? seed : derived_seed(seed, attempt);
    FourierSpec spec = random_fourier_spec(order, s, samples);
    try {
      const ClosedPolyline curve = sample_fourier(spec);
      const Tolerances t = tol ? *tol : default_tolerances(curve);
      if (validate_generic(curve, t).ok) return spec;
    } catch (const InvalidCurve&) {
      // Degenerate sample spacing; draw again.
    }
  }
  throw GenerationExhausted("no generic curve of order " + std::to_string(order) + " after " +
                            std::to_string(kAttempts) + " attempts from seed " +
                            std::to_string(seed));
}

ClosedPolyline random_generic_curve(int order, std::uint64_t seed, int samples,
                                    const std::optional<Tolerances>& tol) {
  return sample_fourier(random_generic_spec(order, seed, samples, tol));
}

const std::vector<std::string>& named_curve_names() {
  static const std::vector<std::string> names{"circle_ccw",         "circle_cw",
                                              "figure_eight",       "limacon",
                                              "paper_sec3_example", "paper_example"};
  return names;
}

namespace {

// Circle with one outer and one inner curl.
const std::vector<Curl>& sec3_curls() {
  static const std::vector<Curl> curls{
      {0.30 * kTwoPi, 0.30, 0.20, 0.30, -1},
      {0.70 * kTwoPi, 0.30, 0.20, 0.30, 1},
  };
  return curls;
}

// Eight crossings, all of wind 1, rotation 3. Coefficients of
// sum_k z_k e^{iks} were fixed by random search and checked with the analyzer.
ClosedPolyline paper_example_curve(int samples) {
  struct Term {
    int k;
    double re, im;
  };
  static const Term terms[] = {
      {1, 1.0, 0.0},
      {3, 0.65634180179346602, 0.0},
      {-4, 0.3219237737374166, -0.31245311223733413},
      {2, -0.32197845140306397, -0.013496978690931321},
      {5, 0.0068628556118604991, -0.31745447309252528},
      {4, -0.19028281789008905, -0.20912809372761779},
  };
  return sample_closed(samples, [](double s) {
    Point2 p{0.0, 0.0};
    for (const Term& t : terms) {
      const double c = std::cos(t.k * s);
      const double n = std::sin(t.k * s);
      p.x += t.re * c - t.im * n;
      p.y += t.re * n + t.im * c;
    }
    return p;
  });
}

}  // namespace

ClosedPolyline named_curve(std::string_view name, int samples) {
  if (samples < 3) throw InvalidCurve("need at least 3 samples");
  if (name == "circle_ccw") {
    return sample_closed(samples, [](double s) { return Point2{std::cos(s), std::sin(s)}; });
  }
  if (name == "circle_cw") {
    return sample_closed(samples, [](double s) { return Point2{std::cos(s), -std::sin(s)}; });
  }
  if (name == "figure_eight") {
    return sample_closed(samples,
                         [](double s) { return Point2{std::sin(2 * s), std::sin(s)}; });
  }
  if (name == "limacon") {
    return sample_closed(samples, [](double s) {
      const double r = 1.0 + 2.0 * std::cos(s);
      return Point2{r * std::cos(s), r * std::sin(s)};
    });
  }
  if (name == "paper_sec3_example") {
    return sample_closed(samples, [](double s) { return circle_with_curls(s, sec3_curls()); });
  }
  if (name == "paper_example") {
    return paper_example_curve(samples);
  }
  throw UnknownName("unknown curve name '" + std::string(name) + "'");
}

double documented_basepoint(std::string_view name, int samples) {
  (void)samples;
  const auto& names = named_curve_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw UnknownName("unknown curve name '" + std::string(name) + "'");
  }
  if (name == "figure_eight") return 0.125;
  if (name == "limacon") return 0.5;
  return 0.05;
}

}  // namespace curvetopo
