#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace hyperjulia::detail {

using cplx = std::complex<double>;

inline constexpr int kContourPoints = 64;

/// Radius of a circle around z that stays well inside the disk.
inline double contour_radius(cplx z) { return std::min(0.25, (1.0 - std::abs(z)) / 2.0); }

inline cplx contour_node(cplx center, double rho, int k, int n = kContourPoints) {
  return center + std::polar(rho, 2.0 * std::numbers::pi * k / n);
}

/// Taylor coefficients a_0..a_m of g at z by the trapezoidal rule on a circle.
template <class F>
std::vector<cplx> contour_taylor(const F& g, cplx z, int m, double rho, int n = kContourPoints) {
  std::vector<cplx> values(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) values[static_cast<std::size_t>(k)] = g(contour_node(z, rho, k, n));
  std::vector<cplx> coeffs(static_cast<std::size_t>(m) + 1, 0.0);
  for (int j = 0; j <= m; ++j) {
    cplx acc = 0.0;
    for (int k = 0; k < n; ++k)
      acc += values[static_cast<std::size_t>(k)] * std::polar(1.0, -2.0 * std::numbers::pi * k * j / n);
    coeffs[static_cast<std::size_t>(j)] = acc / (static_cast<double>(n) * std::pow(rho, j));
  }
  return coeffs;
}

template <class F>
cplx contour_derivative(const F& g, cplx z) {
  const double rho = contour_radius(z);
  cplx acc = 0.0;
  for (int k = 0; k < kContourPoints; ++k) {
    const cplx u = std::polar(1.0, 2.0 * std::numbers::pi * k / kContourPoints);
    acc += g(z + rho * u) * std::conj(u);
  }
  return acc / (static_cast<double>(kContourPoints) * rho);
}

/// Cauchy integral for g(z) over the circle |zeta - center| = rho (requires |z - center| < rho).
template <class F>
cplx cauchy_value(const F& g, cplx center, double rho, cplx z) {
  cplx acc = 0.0;
  for (int k = 0; k < kContourPoints; ++k) {
    const cplx zeta = contour_node(center, rho, k);
    acc += g(zeta) * (zeta - center) / (zeta - z);
  }
  return acc / static_cast<double>(kContourPoints);
}

}  // namespace hyperjulia::detail
