#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperjulia/disk.hpp"
#include "hyperjulia/error.hpp"
#include "hyperjulia/polynomial.hpp"

namespace hyperjulia {

/// numerator/denominator with common roots cancelled at construction.
class RationalMap {
 public:
  RationalMap() : num_({0.0}), den_({1.0}) {}
  RationalMap(Polynomial numerator, Polynomial denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    require(!den_.is_zero(), ErrorKind::invalid_argument, "rational map with zero denominator");
    cancel_common_roots();
  }
  explicit RationalMap(Polynomial polynomial) : RationalMap(std::move(polynomial), Polynomial({1.0})) {}

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  int degree() const { return std::max(num_.degree(), den_.degree()); }

  cplx operator()(cplx z) const {
    const cplx d = den_(z);
    require(std::abs(d) >= kPoleThreshold, ErrorKind::pole, "rational map evaluated at a pole");
    return num_(z) / d;
  }

  cplx derivative(cplx z) const {
    const auto [n, dn] = num_.eval_with_derivative(z);
    const auto [d, dd] = den_.eval_with_derivative(z);
    require(std::abs(d) >= kPoleThreshold, ErrorKind::pole, "rational map derivative at a pole");
    return (dn * d - n * dd) / (d * d);
  }

  /// post o r o pre for Mobius maps pre, post.
  RationalMap compose(const Automorphism& pre, const Automorphism& post) const {
    // pre(z) = (alpha z + beta)/(gamma z + delta)
    const cplx rot = pre.rotation();
    const Polynomial top({-rot * pre.a, rot});
    const Polynomial bottom({1.0, -std::conj(pre.a)});
    const int m = degree();
    auto substitute = [&](const Polynomial& p) {
      Polynomial acc;
      for (int k = 0; k <= p.degree(); ++k) {
        Polynomial term = Polynomial::constant(p.coefficient(static_cast<std::size_t>(k)));
        for (int i = 0; i < k; ++i) term = term * top;
        for (int i = k; i < m; ++i) term = term * bottom;
        acc = acc + term;
      }
      return acc;
    };
    const Polynomial n = substitute(num_);
    const Polynomial d = substitute(den_);
    // post(w) = e^{it}(w - a)/(1 - conj(a) w) applied to n/d
    const cplx prot = post.rotation();
    return RationalMap((n - d * post.a) * prot, d - n * std::conj(post.a));
  }

 private:
  void cancel_common_roots() {
    if (num_.is_zero()) {
      den_ = Polynomial({1.0});
      return;
    }
    if (den_.degree() >= 1 && num_.degree() >= 1) {
      std::vector<cplx> roots;
      try {
        roots = polynomial_roots(den_);
      } catch (const Error&) {
        roots.clear();
      }
      for (cplx r : roots) {
        if (num_.degree() < 1) break;
        if (std::abs(num_(r)) <= 1e-10 * num_.scale_at(r)) {
          auto [qn, rn] = num_.divide_linear(r);
          auto [qd, rd] = den_.divide_linear(r);
          num_ = std::move(qn);
          den_ = std::move(qd);
        }
      }
    }
    // Normalise so the denominator is monic in its lowest nonzero coefficient.
    std::size_t i = 0;
    while (den_.coefficient(i) == cplx(0.0)) ++i;
    const cplx s = 1.0 / den_.coefficient(i);
    num_ = num_ * s;
    den_ = den_ * s;
  }

  Polynomial num_;
  Polynomial den_;
};

inline constexpr double kZeroMargin = 1e-9;

/// Finite Blaschke product e^{i theta} prod (z - a_j)/(1 - conj(a_j) z) in factored form.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  BlaschkeProduct(double theta, std::vector<cplx> zeros, double zero_margin = kZeroMargin)
      : theta_(std::remainder(theta, 2.0 * std::numbers::pi)), zeros_(std::move(zeros)) {
    require(std::isfinite(theta), ErrorKind::invalid_argument, "Blaschke theta must be finite");
    for (cplx a : zeros_) {
      require(std::abs(a) <= 1.0 - zero_margin, ErrorKind::invalid_argument,
              "Blaschke zero " + detail::format_complex(a) + " violates |a| <= 1 - 1e-9");
    }
  }

  static BlaschkeProduct monomial(int k, double theta = 0.0) {
    return BlaschkeProduct(theta, std::vector<cplx>(static_cast<std::size_t>(k), 0.0));
  }
  static BlaschkeProduct automorphism(const Automorphism& g) { return BlaschkeProduct(g.theta, {g.a}); }

  double theta() const { return theta_; }
  cplx rotation() const { return std::polar(1.0, theta_); }
  const std::vector<cplx>& zeros() const { return zeros_; }
  int degree() const { return static_cast<int>(zeros_.size()); }

  cplx operator()(cplx z) const {
    cplx acc = rotation();
    for (cplx a : zeros_) acc *= gamma(a, z);
    return acc;
  }

  cplx derivative(cplx z) const {
    const cplx value = (*this)(z);
    bool near_zero = std::abs(value) < 1e-8;
    if (!near_zero) {
      cplx sum = 0.0;
      for (cplx a : zeros_) sum += 1.0 / (z - a) + std::conj(a) / (1.0 - std::conj(a) * z);
      return value * sum;
    }
    // product rule
    cplx total = 0.0;
    for (std::size_t j = 0; j < zeros_.size(); ++j) {
      cplx term = rotation() * gamma_derivative(zeros_[j], z);
      for (std::size_t i = 0; i < zeros_.size(); ++i)
        if (i != j) term *= gamma(zeros_[i], z);
      total += term;
    }
    return total;
  }

  /// e^{i theta} prod (z - a_j)
  Polynomial numerator() const { return Polynomial::from_roots(zeros_, rotation()); }
  /// prod (1 - conj(a_j) z)
  Polynomial denominator() const {
    Polynomial d({1.0});
    for (cplx a : zeros_) d = d * Polynomial({1.0, -std::conj(a)});
    return d;
  }
  RationalMap to_rational() const { return RationalMap(numerator(), denominator()); }

  friend BlaschkeProduct operator*(const BlaschkeProduct& a, const BlaschkeProduct& b) {
    std::vector<cplx> z = a.zeros_;
    z.insert(z.end(), b.zeros_.begin(), b.zeros_.end());
    return BlaschkeProduct(a.theta_ + b.theta_, std::move(z));
  }

 private:
  double theta_ = 0.0;
  std::vector<cplx> zeros_;
};

inline cplx blaschke_eval(const BlaschkeProduct& b, cplx z) { return b(z); }
inline cplx blaschke_derivative(const BlaschkeProduct& b, cplx z) { return b.derivative(z); }

namespace detail {

/// Blaschke product with the given zeros whose value at `at` equals `value`.
inline BlaschkeProduct blaschke_matching(std::vector<cplx> zeros, cplx at, cplx value) {
  cplx base = 1.0;
  for (cplx a : zeros) base *= gamma(a, at);
  return BlaschkeProduct(std::arg(value / base), std::move(zeros));
}

inline void polish_roots(const Polynomial& p, std::vector<cplx>& roots) {
  for (cplx& r : roots) {
    for (int k = 0; k < 3; ++k) {
      const auto [pv, dpv] = p.eval_with_derivative(r);
      if (dpv == cplx(0.0) || pv == cplx(0.0)) break;
      const cplx cand = r - pv / dpv;
      if (std::abs(p(cand)) < std::abs(pv)) r = cand; else break;
    }
  }
}

}  // namespace detail

/// Blaschke form of post o B o pre. Zeros of B o pre are pulled back exactly;
/// the post-composition zeros come from the roots of B o pre = post^{-1}(0).
inline BlaschkeProduct blaschke_conjugate(const BlaschkeProduct& b, const Automorphism& pre,
                                          const Automorphism& post) {
  const Automorphism pre_inv = pre.inverse();
  std::vector<cplx> pulled;
  pulled.reserve(b.zeros().size());
  for (cplx a : b.zeros()) pulled.push_back(pre_inv(a));
  // C = B o pre has zeros `pulled`; fix its phase at the boundary point 1.
  const BlaschkeProduct c = detail::blaschke_matching(pulled, 1.0, b(pre(cplx(1.0))));
  if (post.a == cplx(0.0)) return BlaschkeProduct(c.theta() + post.theta, c.zeros());

  // C(z) = post.a  <=>  e^{i theta} prod (z - c_j) - post.a prod (1 - conj(c_j) z) = 0
  const Polynomial eq = c.numerator() - c.denominator() * post.a;
  require(eq.degree() == c.degree(), ErrorKind::certification, "conjugated numerator lost degree");
  std::vector<cplx> zeros = c.degree() > 0 ? polynomial_roots(eq) : std::vector<cplx>{};
  detail::polish_roots(eq, zeros);
  for (cplx r : zeros) {
    require(std::abs(eq(r)) <= 1e-11 * eq.scale_at(r), ErrorKind::root_convergence,
            "conjugated zero failed Newton polish residual 1e-11");
  }
  const cplx probe = 1.0;
  return detail::blaschke_matching(std::move(zeros), probe, post(c(probe)));
}

/// Count of roots strictly inside the unit disk.
inline int zeros_inside_disk(const Polynomial& p) {
  if (p.degree() < 1) return 0;
  int count = 0;
  for (cplx r : polynomial_roots(p))
    if (std::abs(r) < 1.0) ++count;
  return count;
}

/// Certifies a rational map as a Blaschke product: unimodular on 100 boundary samples
/// and all numerator roots inside the disk. Returns the factored form.
inline BlaschkeProduct certify_blaschke(const RationalMap& r, double boundary_tolerance = 1e-8,
                                        int expected_degree = -1) {
  constexpr int kSamples = 100;
  for (int i = 0; i < kSamples; ++i) {
    const cplx s = std::polar(1.0, 2.0 * std::numbers::pi * (i + 0.5) / kSamples);
    const double dev = std::abs(std::abs(r(s)) - 1.0);
    require(dev <= boundary_tolerance, ErrorKind::certification,
            "boundary modulus deviates from 1 by " + std::to_string(dev));
  }
  const int deg = r.numerator().degree();
  require(expected_degree < 0 || deg == expected_degree, ErrorKind::certification,
          "numerator degree " + std::to_string(deg) + " differs from expected " + std::to_string(expected_degree));
  std::vector<cplx> zeros = deg > 0 ? polynomial_roots(r.numerator()) : std::vector<cplx>{};
  for (cplx z : zeros)
    require(std::abs(z) < 1.0, ErrorKind::certification, "numerator root outside the disk");
  require(r.denominator().degree() <= deg, ErrorKind::certification, "denominator degree exceeds numerator degree");
  return detail::blaschke_matching(std::move(zeros), 1.0, r(1.0));
}

/// h with (1+h)/(1-h) = sum a_j (sigma_j+z)/(sigma_j-z) + (1+B)/(1-B), a Blaschke
/// product of degree n + deg B, built over the common denominator prod (sigma_j - z).
inline RationalMap herglotz_blaschke(std::span<const BoundaryPoint> sigmas, std::span<const double> weights,
                                     const BlaschkeProduct& b) {
  const std::size_t n = sigmas.size();
  require(n >= 1 && weights.size() == n, ErrorKind::invalid_argument,
          "herglotz_blaschke needs n >= 1 points with matching weights");
  for (std::size_t i = 0; i < n; ++i) {
    require(weights[i] > 0.0, ErrorKind::invalid_argument, "herglotz weights must be positive");
    for (std::size_t j = 0; j < i; ++j)
      require(std::abs(sigmas[i].value() - sigmas[j].value()) > 1e-12, ErrorKind::invalid_argument,
              "herglotz boundary points must be distinct");
  }
  require(!(b.degree() == 0 && std::abs(b.rotation() - 1.0) < 1e-15), ErrorKind::invalid_argument,
          "herglotz_blaschke requires B not identically 1");

  // S = PS/QS
  Polynomial qs({1.0});
  for (const auto& s : sigmas) qs = qs * Polynomial({s.value(), -1.0});
  Polynomial ps;
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial term = Polynomial({sigmas[j].value(), 1.0}) * weights[j];
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) term = term * Polynomial({sigmas[i].value(), -1.0});
    ps = ps + term;
  }
  const Polynomial p = b.numerator();
  const Polynomial q = b.denominator();
  const Polynomial one_minus_b = q - p;  // (1 - B) Q
  const Polynomial num = p * qs * cplx(2.0) + one_minus_b * ps;
  const Polynomial den = q * qs * cplx(2.0) + one_minus_b * ps;
  RationalMap h(num, den);
  const int expected = static_cast<int>(n) + b.degree();
  certify_blaschke(h, 1e-8, expected);
  require(zeros_inside_disk(h.numerator()) == expected, ErrorKind::certification,
          "herglotz output zero count differs from n + d");
  return h;
}

}  // namespace hyperjulia
