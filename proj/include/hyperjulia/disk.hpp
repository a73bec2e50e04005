#pragma once

// Geometric primitives of the Poincare disk: points, automorphisms,
// distances, horocycles and Stolz regions.

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "hyperjulia/error.hpp"

namespace hyperjulia {

using cplx = std::complex<double>;

inline constexpr double kDiskMargin = 1e-12;
inline constexpr double kBoundaryTolerance = 1e-12;
inline constexpr double kPoleThreshold = 1e-300;

namespace detail {
inline std::string format_complex(cplx z) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i)";
  return os.str();
}
}  // namespace detail

/// A point of the open unit disk, kept at least `margin` away from the boundary.
class DiskPoint {
 public:
  constexpr DiskPoint() = default;
  explicit DiskPoint(cplx value, double margin = kDiskMargin) : value_(value) {
    require(std::isfinite(value.real()) && std::isfinite(value.imag()), ErrorKind::invalid_argument,
            "disk point must be finite");
    require(std::abs(value) < 1.0 - margin, ErrorKind::invalid_argument,
            "disk point " + detail::format_complex(value) + " violates |z| < 1 - margin");
  }
  explicit DiskPoint(double re, double im = 0.0) : DiskPoint(cplx(re, im)) {}

  constexpr cplx value() const { return value_; }
  constexpr operator cplx() const { return value_; }

  /// 1/(1-|z|^2): the amplification every boundary functional suffers at this point.
  double conditioning() const { return 1.0 / (1.0 - std::norm(value_)); }

  friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

 private:
  cplx value_{0.0, 0.0};
};

/// A point of the unit circle. Stored with exact unit modulus.
class BoundaryPoint {
 public:
  BoundaryPoint() = default;
  explicit BoundaryPoint(cplx value, double tolerance = kBoundaryTolerance) {
    const double r = std::abs(value);
    require(std::isfinite(r) && std::abs(r - 1.0) <= tolerance, ErrorKind::invalid_argument,
            "boundary point " + detail::format_complex(value) + " is not unimodular");
    value_ = value / r;
  }

  static BoundaryPoint polar(double angle) {
    BoundaryPoint p;
    p.value_ = std::polar(1.0, angle);
    return p;
  }

  /// Radial projection of any nonzero complex number onto the circle.
  static BoundaryPoint project(cplx value) {
    const double r = std::abs(value);
    require(r > 0.0 && std::isfinite(r), ErrorKind::invalid_argument,
            "cannot project zero or non-finite value onto the unit circle");
    BoundaryPoint p;
    p.value_ = value / r;
    return p;
  }

  constexpr cplx value() const { return value_; }
  constexpr operator cplx() const { return value_; }
  double angle() const { return std::arg(value_); }

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

 private:
  cplx value_{1.0, 0.0};
};

/// gamma_w(z) = (z - w)/(1 - conj(w) z).
inline cplx gamma(cplx w, cplx z) {
  const cplx den = 1.0 - std::conj(w) * z;
  require(std::abs(den) >= kPoleThreshold, ErrorKind::pole,
          "gamma_w pole at z = 1/conj(w) for w = " + detail::format_complex(w));
  return (z - w) / den;
}

inline cplx gamma(DiskPoint w, cplx z) { return gamma(w.value(), z); }

/// Derivative of gamma_w at z: (1-|w|^2)/(1 - conj(w) z)^2.
inline cplx gamma_derivative(cplx w, cplx z) {
  const cplx den = 1.0 - std::conj(w) * z;
  require(std::abs(den) >= kPoleThreshold, ErrorKind::pole, "gamma_w derivative pole");
  return (1.0 - std::norm(w)) / (den * den);
}

/// Automorphism z -> e^{i theta} gamma_a(z).
struct Automorphism {
  double theta = 0.0;
  cplx a{0.0, 0.0};

  cplx rotation() const { return std::polar(1.0, theta); }
  cplx operator()(cplx z) const { return rotation() * gamma(a, z); }
  cplx derivative(cplx z) const { return rotation() * gamma_derivative(a, z); }

  /// The inverse, again written as e^{i theta'} gamma_{a'}.
  Automorphism inverse() const { return {-theta, -a * rotation()}; }

  static Automorphism identity() { return {}; }
};

/// Pseudo-hyperbolic distance |gamma_w(z)|.
inline double pseudo_hyperbolic(DiskPoint z, DiskPoint w) { return std::abs(gamma(w, z.value())); }

/// Poincare distance, computed as artanh of the pseudo-hyperbolic distance.
inline double poincare_distance(DiskPoint z, DiskPoint w) { return std::atanh(pseudo_hyperbolic(z, w)); }

/// |sigma - z|^2/(1 - |z|^2); z lies in E(sigma, R) iff this is < R.
inline double horocycle_functional(BoundaryPoint sigma, DiskPoint z) {
  return std::norm(sigma.value() - z.value()) / (1.0 - std::norm(z.value()));
}

/// Same functional for a raw complex value known to lie in the disk.
inline double horocycle_functional(cplx tau, cplx z) {
  const double den = 1.0 - std::norm(z);
  require(den > 0.0, ErrorKind::degenerate, "horocycle functional needs |z| < 1");
  return std::norm(tau - z) / den;
}

class Horocycle {
 public:
  Horocycle(BoundaryPoint center, double radius) : center_(center), radius_(radius) {
    require(radius > 0.0 && std::isfinite(radius), ErrorKind::invalid_argument,
            "horocycle radius must be positive and finite");
  }

  BoundaryPoint center() const { return center_; }
  double radius() const { return radius_; }
  double euclidean_radius() const { return radius_ / (radius_ + 1.0); }

  bool contains(DiskPoint z) const { return horocycle_functional(center_, z) < radius_; }

 private:
  BoundaryPoint center_;
  double radius_;
};

struct EuclideanDisk {
  cplx center;
  double radius;

  bool contains(cplx z) const { return std::abs(z - center) < radius; }
};

/// The Euclidean disk of radius R/(R+1) tangent to the circle at the horocycle center.
inline EuclideanDisk horocycle_euclidean(const Horocycle& h) {
  const double rho = h.euclidean_radius();
  return {h.center().value() * (1.0 - rho), rho};
}

class StolzRegion {
 public:
  StolzRegion(BoundaryPoint vertex, double amplitude) : vertex_(vertex), amplitude_(amplitude) {
    require(amplitude > 0.0, ErrorKind::invalid_argument, "Stolz amplitude must be positive");
  }

  BoundaryPoint vertex() const { return vertex_; }
  double amplitude() const { return amplitude_; }
  bool empty() const { return amplitude_ <= 1.0; }

 private:
  BoundaryPoint vertex_;
  double amplitude_;
};

/// |tau - z|/(1 - |z|) < M.
inline bool stolz_contains(const StolzRegion& k, DiskPoint z) {
  const double ratio = std::abs(k.vertex().value() - z.value()) / (1.0 - std::abs(z.value()));
  return ratio < k.amplitude();
}

}  // namespace hyperjulia
