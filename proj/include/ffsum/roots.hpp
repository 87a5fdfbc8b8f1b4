#pragma once

// Durand-Kerner simultaneous iteration for the roots of a monic complex
// polynomial. Deterministic seeds: points on a circle of the expected root
// radius at angles 2*pi*j/t + 0.4.

#include <complex>
#include <vector>

#include "ffsum/common.hpp"

namespace ffsum {

struct DurandKernerResult {
  std::vector<std::complex<double>> roots;
  int iterations = 0;
  double last_correction = 0.0;
};

/// coeffs are ascending with coeffs.back() == 1 (monic, degree >= 1).
inline DurandKernerResult durand_kerner(const std::vector<std::complex<double>>& coeffs, double radius_hint,
                                        int max_iter = 500, double step_tol = 1e-12) {
  const int t = static_cast<int>(coeffs.size()) - 1;
  if (t < 1) throw std::invalid_argument("durand_kerner: degree must be >= 1");
  auto eval = [&](std::complex<double> w) {
    std::complex<double> acc = 0.0;
    for (int i = t; i >= 0; --i) acc = acc * w + coeffs[static_cast<size_t>(i)];
    return acc;
  };
  const double r0 = radius_hint > 0 ? radius_hint : 1.0;
  const double two_pi = 6.283185307179586476925286766559;
  std::vector<std::complex<double>> w(static_cast<size_t>(t));
  for (int j = 0; j < t; ++j) {
    const double ang = two_pi * j / t + 0.4;
    w[static_cast<size_t>(j)] = std::polar(r0, ang);
  }
  DurandKernerResult res;
  const double scale = std::max(1.0, r0);
  for (int it = 0; it < max_iter; ++it) {
    double worst = 0.0;
    for (int i = 0; i < t; ++i) {
      std::complex<double> denom = 1.0;
      for (int j = 0; j < t; ++j) {
        if (j == i) continue;
        auto d = w[static_cast<size_t>(i)] - w[static_cast<size_t>(j)];
        if (std::abs(d) < 1e-300) d = 1e-300;  // collision guard
        denom *= d;
      }
      const auto delta = eval(w[static_cast<size_t>(i)]) / denom;
      w[static_cast<size_t>(i)] -= delta;
      worst = std::max(worst, std::abs(delta));
    }
    res.iterations = it + 1;
    res.last_correction = worst;
    if (worst < step_tol * scale) break;
  }
  res.roots = std::move(w);
  return res;
}

}  // namespace ffsum
