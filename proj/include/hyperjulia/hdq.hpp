#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "hyperjulia/detail/contour.hpp"
#include "hyperjulia/disk.hpp"
#include "hyperjulia/error.hpp"
#include "hyperjulia/rational.hpp"
#include "hyperjulia/self_map.hpp"

namespace hyperjulia {

inline constexpr double kCoincidenceThreshold = 1e-8;
inline constexpr double kLowConfidenceThreshold = 1e-3;
inline constexpr double kDeflationTolerance = 1e-9;
inline constexpr double kRepeatedZeroTolerance = 1e-13;
inline constexpr double kInteriorMargin = 1e-12;

namespace detail {
inline void require_interior_value(cplx v, const char* what) {
  require(std::abs(v) < 1.0 - kInteriorMargin, ErrorKind::degenerate,
          std::string(what) + " reached the boundary: " + format_complex(v));
}
}  // namespace detail

/// f^h(z) = f'(z)(1-|z|^2)/(1-|f(z)|^2)
inline cplx hyperbolic_derivative(const SelfMap& f, cplx z) {
  const cplx fz = f(z);
  detail::require_interior_value(fz, "f(z)");
  return f.derivative(z) * (1.0 - std::norm(z)) / (1.0 - std::norm(fz));
}

/// gamma_{f(w)}(f(z)) as a rational map divided by gamma_w(z), with (z - w) removed by synthetic division.
struct Deflation {
  Polynomial numerator;
  Polynomial denominator;
  double residual = 0.0;
};

inline Deflation deflate(const Polynomial& n, const Polynomial& d, cplx w, cplx c) {
  const Polynomial top = n - d * c;
  const auto [q, rem] = top.divide_linear(w);
  const double scale = std::max(top.scale_at(w), std::numeric_limits<double>::min());
  const double residual = std::abs(rem) / scale;
  require(residual <= kDeflationTolerance, ErrorKind::deflation_residual,
          "division by (z - w) left relative remainder " + std::to_string(residual));
  return {q * Polynomial({1.0, -std::conj(w)}), d - n * std::conj(c), residual};
}

inline Deflation deflate(const SelfMap& f, cplx w) {
  const cplx c = f(w);
  detail::require_interior_value(c, "f(w)");
  if (const auto* b = f.as_blaschke()) return deflate(b->numerator(), b->denominator(), w, c);
  const RationalMap r = f.rational_form();
  return deflate(r.numerator(), r.denominator(), w, c);
}

struct HdqValue {
  cplx value;
  bool low_confidence = false;
};

/// f*(z,w) with a flag for the cancellation-prone band 1e-8 <= |gamma_w(z)| < 1e-3 on black boxes.
inline HdqValue hdq_eval(const SelfMap& f, cplx z, cplx w) {
  if (const auto* b = f.as_blaschke(); b && b->degree() == 1) {
    // e^{i theta} gamma_a: f*(z,w) = e^{i theta}(1 - conj(a) w)/(1 - a conj(w))
    const cplx a = b->zeros()[0];
    return {b->rotation() * (1.0 - std::conj(a) * w) / (1.0 - a * std::conj(w))};
  }
  if (f.is_exact()) {
    const Deflation df = deflate(f, w);
    const cplx den = df.denominator(z);
    require(std::abs(den) >= kPoleThreshold, ErrorKind::degenerate, "deflated quotient has a pole at z");
    return {df.numerator(z) / den};
  }
  const double rho = std::abs(gamma(w, z));
  if (rho < kCoincidenceThreshold) return {hyperbolic_derivative(f, z)};
  const cplx fw = f(w);
  detail::require_interior_value(fw, "f(w)");
  return {gamma(fw, f(z)) / gamma(w, z), rho < kLowConfidenceThreshold};
}

inline cplx hdq(const SelfMap& f, cplx z, cplx w) { return hdq_eval(f, z, w).value; }

/// f*(sigma,w) = gamma_{f(w)}(f(sigma))/gamma_w(sigma), unimodular.
inline BoundaryPoint boundary_hdq(const SelfMap& f, BoundaryPoint sigma, BoundaryPoint f_sigma, cplx w) {
  const cplx fw = f(w);
  detail::require_interior_value(fw, "f(w)");
  require(std::abs(f_sigma.value() - fw) > 1e-14, ErrorKind::degenerate, "f(w) coincides with f(sigma)");
  return BoundaryPoint::project(gamma(fw, f_sigma.value()) / gamma(w, sigma.value()));
}

namespace detail {

inline BlaschkeProduct delta_blaschke(const BlaschkeProduct& b, cplx w) {
  const int d = b.degree();
  require(d >= 2, ErrorKind::degree_exhaustion,
          "difference quotient of a degree " + std::to_string(d) + " Blaschke product is a unimodular constant");
  const cplx c = b(w);
  require_interior_value(c, "B(w)");
  const Polynomial top = b.numerator() - b.denominator() * c;
  const auto [q, rem] = top.divide_linear(w);
  const double residual = std::abs(rem) / top.scale_at(w);
  require(residual <= kDeflationTolerance, ErrorKind::deflation_residual,
          "division by (z - w) left relative remainder " + std::to_string(residual));
  require(q.degree() == d - 1, ErrorKind::certification, "deflated numerator lost degree");
  // Zeros of the quotient at w itself are divided out exactly.
  std::vector<cplx> at_w;
  Polynomial rest = q;
  while (rest.degree() >= 1 && std::abs(rest(w)) <= kRepeatedZeroTolerance * rest.scale_at(w)) {
    rest = rest.divide_linear(w).first;
    at_w.push_back(w);
  }
  std::vector<cplx> zeros = rest.degree() >= 1 ? polynomial_roots(rest) : std::vector<cplx>{};
  polish_roots(rest, zeros);
  zeros.insert(zeros.end(), at_w.begin(), at_w.end());
  for (cplx& a : zeros) {
    require(std::abs(a) < 1.0, ErrorKind::certification, "deflated zero outside the disk");
    // Deflation can push a zero past the storage margin only through round-off.
    if (std::abs(a) > 1.0 - kZeroMargin) a *= (1.0 - kZeroMargin) / std::abs(a);
  }
  const cplx probe = std::abs(w) > 0.0 ? -w / std::abs(w) : cplx(1.0);
  const cplx value = gamma(c, b(probe)) / gamma(w, probe);
  return blaschke_matching(std::move(zeros), probe, value);
}

}  // namespace detail

/// Delta_w f as a self-map: exact for rational kinds, a Cauchy-regularised closure for black boxes.
inline SelfMap delta(const SelfMap& f, DiskPoint w_point, int spot_samples = 64) {
  const cplx w = w_point.value();
  const std::string label = "delta(" + f.label() + ")";
  if (const auto* b = f.as_blaschke()) return SelfMap::blaschke(detail::delta_blaschke(*b, w), label);
  if (f.is_exact()) {
    const Deflation df = deflate(f, w);
    return SelfMap::rational(RationalMap(df.numerator, df.denominator), label);
  }
  const cplx c = f(w);
  detail::require_interior_value(c, "f(w)");
  const double rho = detail::contour_radius(w);
  auto raw = [f, w, c](cplx z) { return gamma(c, f(z)) / gamma(w, z); };
  auto value = [raw, w, rho](cplx z) -> cplx {
    if (std::abs(gamma(w, z)) < kLowConfidenceThreshold) return detail::cauchy_value(raw, w, rho, z);
    return raw(z);
  };
  Structure s = f.structure();
  if (s.kind == Structure::Kind::blaschke) s = Structure::blaschke(s.degree - 1);
  return SelfMap::black_box(value, {}, label, s, spot_samples);
}

class DeltaChain {
 public:
  DeltaChain(SelfMap f, std::vector<DiskPoint> points) : points_(std::move(points)) {
    const int k = length();
    if (auto d = f.blaschke_degree()) {
      require(k < *d, ErrorKind::degree_exhaustion,
              "chain of length " + std::to_string(k) + " needs Blaschke degree > k, got " + std::to_string(*d));
    }
    stages_.push_back(std::move(f));
    for (int h = 1; h <= k; ++h) {
      const SelfMap& prev = stages_.back();
      const cplx wh = points_[static_cast<std::size_t>(h - 1)].value();
      const cplx v = prev(wh);
      detail::require_interior_value(v, "stage value");
      values_.push_back(v);
      stages_.push_back(delta(prev, points_[static_cast<std::size_t>(h - 1)]));
    }
  }

  const SelfMap& base() const { return stages_.front(); }
  const std::vector<DiskPoint>& points() const { return points_; }
  int length() const { return static_cast<int>(points_.size()); }
  cplx point(int h) const { return points_.at(static_cast<std::size_t>(h - 1)).value(); }

  /// Delta_{w_h..w_1} f for h = 0..k (stage 0 is f).
  const SelfMap& stage(int h) const { return stages_.at(static_cast<std::size_t>(h)); }
  const SelfMap& final_stage() const { return stages_.back(); }
  /// Delta_{w_{h-1}..w_1} f (w_h) for h = 1..k.
  cplx stage_value(int h) const { return values_.at(static_cast<std::size_t>(h - 1)); }

 private:
  std::vector<DiskPoint> points_;
  std::vector<SelfMap> stages_;
  std::vector<cplx> values_;
};

inline DeltaChain delta_chain(const SelfMap& f, std::vector<DiskPoint> points) {
  return DeltaChain(f, std::move(points));
}

/// f, f', ..., f^(m) at z0 by contour integration (or the map's stored Taylor data).
inline TaylorData taylor(const SelfMap& f, DiskPoint z0, int m) {
  require(m >= 1, ErrorKind::invalid_argument, "taylor order must be >= 1");
  if (const auto& t = f.taylor_hint(); t && t->point == z0 && t->order() >= m) {
    return {z0, std::vector<cplx>(t->derivatives.begin(), t->derivatives.begin() + m + 1)};
  }
  auto coeffs = detail::contour_taylor(f, z0.value(), m, detail::contour_radius(z0.value()));
  double factorial = 1.0;
  for (int n = 0; n <= m; ++n) {
    if (n > 0) factorial *= n;
    coeffs[static_cast<std::size_t>(n)] *= factorial;
  }
  return {z0, std::move(coeffs)};
}

struct Delta0Taylor {
  cplx delta0_at_0;          // Delta_0 f(0) = f^h(0)
  cplx delta0_h_at_0;        // (Delta_0 f)^h(0)
  cplx delta0_second_at_0;   // (Delta_0 f)''(0)
  cplx delta00_h_at_0;       // (Delta_{0,0} f)^h(0)
};

namespace detail {
inline double automorphism_guard(cplx v, const char* what) {
  const double den = 1.0 - std::norm(v);
  require(den >= 1e-12, ErrorKind::automorphism, std::string(what) + " is unimodular: the map is an automorphism");
  return den;
}
}  // namespace detail

inline Delta0Taylor taylor_delta0(const TaylorData& t) {
  require(t.order() >= 3, ErrorKind::invalid_argument, "taylor_delta0 needs derivatives up to order 3");
  require(t.point.value() == cplx(0.0), ErrorKind::invalid_argument, "taylor_delta0 needs data at the origin");
  const cplx f0 = t[0], f1 = t[1], f2 = t[2], f3 = t[3];
  const double s = detail::automorphism_guard(f0, "f(0)");
  const cplx fh = f1 / s;
  const double sh = detail::automorphism_guard(fh, "f^h(0)");
  const cplx d0h = (f2 / (2.0 * s) + std::conj(f0) * fh * fh) / sh;
  const cplx d0pp = (f3 / 3.0 + 2.0 * std::conj(f0) * fh * f2 + 2.0 * std::conj(f0) * std::conj(f0) * fh * fh * f1) / s;
  const double sd = detail::automorphism_guard(d0h, "(Delta_0 f)^h(0)");
  const cplx d00h = (d0pp / (2.0 * sh) + std::conj(fh) * d0h * d0h) / sd;
  return {fh, d0h, d0pp, d00h};
}

/// (Delta_{w0} f)^h(0) from f(0), f'(0) and f(w0).
inline cplx general_delta_derivative(const SelfMap& f, DiskPoint w0) {
  const cplx w = w0.value();
  if (w == cplx(0.0)) return taylor_delta0(taylor(f, DiskPoint(0.0), 3)).delta0_h_at_0;
  const cplx f0 = f(0.0);
  const cplx fw = f(w);
  const cplx df0 = f.derivative(0.0);
  const cplx e = 1.0 - std::conj(fw) * f0;
  require(std::abs(e) > kPoleThreshold, ErrorKind::degenerate, "1 - conj(f(w0)) f(0) vanishes");
  const cplx delta_at_0 = (fw - f0) / (w * e);
  const double den = detail::automorphism_guard(delta_at_0, "Delta_{w0} f(0)");
  const cplx first = (fw - f0 - df0 * w) / (w * w) / e;
  const cplx second = (fw - f0) / w * (std::conj(fw) * df0 - std::conj(w) * e) / (e * e);
  return (first + second) / den;
}

}  // namespace hyperjulia
