#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hyperjulia/disk.hpp"
#include "hyperjulia/error.hpp"
#include "hyperjulia/hdq.hpp"
#include "hyperjulia/self_map.hpp"

namespace hyperjulia {

inline constexpr double kInfiniteBeta = std::numeric_limits<double>::infinity();

struct BoundaryDilation {
  enum class Method { exact, radial };

  BoundaryPoint sigma;
  BoundaryPoint tau;
  double beta = kInfiniteBeta;
  Method method = Method::exact;
  double confidence = 0.0;

  bool finite() const { return std::isfinite(beta); }
};

inline const char* to_string(BoundaryDilation::Method m) {
  return m == BoundaryDilation::Method::exact ? "exact" : "radial";
}

/// beta = |B'(sigma)|, tau = B(sigma).
inline BoundaryDilation beta_exact(const BlaschkeProduct& b, BoundaryPoint sigma) {
  const cplx s = sigma.value();
  return {sigma, BoundaryPoint::project(b(s)), std::abs(b.derivative(s)), BoundaryDilation::Method::exact, 0.0};
}

struct RadialOptions {
  int first = 8;
  int last = 40;
  double divergence_cap = 1e8;
  double growth_factor = 1.5;
  double max_relative_increment = 1e-4;
  double noise_budget = 1e-9;
};

namespace detail {
template <class T>
struct RichardsonResult {
  T value;
  double increment;
};

/// Tableau for samples q_m whose error expands in powers of 2^{-m}; the entry
/// with the smallest increment against its predecessor is returned.
template <class T>
RichardsonResult<T> richardson_halving(const std::vector<T>& q, int max_level = 5) {
  const std::size_t n = q.size();
  std::vector<std::vector<T>> t(n);
  RichardsonResult<T> best{q.back(), std::numeric_limits<double>::infinity()};
  for (std::size_t m = 0; m < n; ++m) {
    t[m].push_back(q[m]);
    for (int j = 1; j <= max_level && static_cast<std::size_t>(j) <= m; ++j) {
      const double f = std::ldexp(1.0, j);
      t[m].push_back((f * t[m][static_cast<std::size_t>(j - 1)] - t[m - 1][static_cast<std::size_t>(j - 1)]) / (f - 1.0));
    }
    if (m == 0) continue;
    for (std::size_t j = 0; j < t[m].size() && j < t[m - 1].size(); ++j) {
      const double inc = std::abs(t[m][j] - t[m - 1][j]);
      if (inc < best.increment) best = {t[m][j], inc};
    }
  }
  return best;
}
}  // namespace detail

/// lim (1 - |f(r sigma)|)/(1 - r) sampled at r = 1 - 2^{-m}, extrapolated.
inline BoundaryDilation beta_radial(const SelfMap& f, BoundaryPoint sigma, const RadialOptions& opt = {}) {
  const cplx s = sigma.value();
  std::vector<double> q;
  cplx last_value = 0.0;
  bool diverged = false;
  for (int m = opt.first; m <= opt.last; ++m) {
    const double h = std::ldexp(1.0, -m);
    last_value = f((1.0 - h) * s);
    q.push_back((1.0 - std::abs(last_value)) / h);
    if (q.back() > opt.divergence_cap) {
      diverged = true;
      break;
    }
  }
  if (!diverged && q.size() >= 3) {
    const std::size_t n = q.size();
    diverged = q[n - 1] > opt.growth_factor * q[n - 2] && q[n - 2] > opt.growth_factor * q[n - 3];
  }
  const BoundaryPoint tau = std::abs(last_value) > 0.0 ? BoundaryPoint::project(last_value) : BoundaryPoint();
  if (diverged) return {sigma, tau, kInfiniteBeta, BoundaryDilation::Method::radial, 0.0};

  // Samples whose rounding noise 16 eps/h exceeds the noise budget only serve the divergence test.
  std::vector<double> usable;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double h = std::ldexp(1.0, -(opt.first + static_cast<int>(i)));
    if (16.0 * std::numeric_limits<double>::epsilon() / h > opt.noise_budget * std::max(1.0, std::abs(q[i]))) break;
    usable.push_back(q[i]);
  }
  if (usable.size() < 3) usable = q;
  const auto est = detail::richardson_halving(usable);
  if (!(est.increment <= opt.max_relative_increment * std::max(1.0, std::abs(est.value)))) {
    throw Error(ErrorKind::inconclusive, "radial quotient does not settle; best increment " +
                                             std::to_string(est.increment));
  }
  return {sigma, tau, est.value, BoundaryDilation::Method::radial, est.increment};
}

/// Exact where the map has exact form, radial otherwise. A rational map with
/// |f(sigma)| < 1 has infinite dilation; with |f(sigma)| = 1 it has |f'(sigma)|.
inline BoundaryDilation dilation(const SelfMap& f, BoundaryPoint sigma) {
  if (const auto* b = f.as_blaschke()) return beta_exact(*b, sigma);
  if (const auto* r = f.as_rational()) {
    const cplx v = (*r)(sigma.value());
    if (std::abs(std::abs(v) - 1.0) <= 1e-12)
      return {sigma, BoundaryPoint::project(v), std::abs(r->derivative(sigma.value())),
              BoundaryDilation::Method::exact, 0.0};
    require(std::abs(v) < 1.0, ErrorKind::invalid_argument, "rational map leaves the closed disk on the boundary");
    return {sigma, std::abs(v) > 0.0 ? BoundaryPoint::project(v) : BoundaryPoint(), kInfiniteBeta,
            BoundaryDilation::Method::exact, 0.0};
  }
  return beta_radial(f, sigma);
}

/// beta (1-|f(w)|^2)/|f(sigma)-f(w)|^2 - (1-|w|^2)/|sigma-w|^2
inline double beta_star(const SelfMap& f, BoundaryPoint sigma, BoundaryPoint f_sigma, double beta, cplx w) {
  require(std::isfinite(beta), ErrorKind::invalid_argument, "beta_star needs a finite beta");
  const cplx fw = f(w);
  detail::require_interior_value(fw, "f(w)");
  const double value = beta * ((1.0 - std::norm(fw)) / std::norm(f_sigma.value() - fw)) -
                       (1.0 - std::norm(w)) / std::norm(sigma.value() - w);
  require(value >= -1e-9, ErrorKind::invalid_argument,
          "beta_star is negative (" + std::to_string(value) + "): beta or f(sigma) inconsistent with f");
  return value;
}

struct BetaChain {
  BoundaryPoint sigma;
  std::vector<double> betas;                  // h = 0..k
  std::vector<BoundaryPoint> boundary_values; // h = 0..k
  double confidence = 0.0;                    // error bound carried on betas.back()
  BoundaryDilation::Method method = BoundaryDilation::Method::exact;
  bool negative_flag = false;
  std::vector<double> recursion;              // h = 0..k, the recursion values before any exact replacement

  int length() const { return static_cast<int>(betas.size()) - 1; }
};

/// Stage dilations by the recursion beta_h = beta_{h-1}(1-|v|^2)/|u-v|^2 - (1-|w|^2)/|sigma-w|^2.
/// Stages held as exact Blaschke products take their own angular derivative instead, which
/// avoids the cancellation of the recursion when beta_h is small.
inline BetaChain beta_chain(const DeltaChain& chain, const BoundaryDilation& base) {
  require(base.finite(), ErrorKind::invalid_argument, "beta chain needs a finite boundary dilation");
  BetaChain out{base.sigma, {base.beta}, {base.tau}, base.confidence, base.method, false, {base.beta}};
  const cplx s = base.sigma.value();
  double conf = base.confidence;
  double rec = base.beta;
  for (int h = 1; h <= chain.length(); ++h) {
    const cplx u = out.boundary_values.back().value();
    const cplx v = chain.stage_value(h);
    const cplx w = chain.point(h);
    const double factor = (1.0 - std::norm(v)) / std::norm(u - v);
    const double correction = (1.0 - std::norm(w)) / std::norm(s - w);
    rec = out.betas.back() * factor - correction;
    out.recursion.push_back(rec);
    if (rec < -1e-9) out.negative_flag = true;
    if (const auto* b = chain.stage(h).as_blaschke()) {
      const BoundaryDilation exact = beta_exact(*b, base.sigma);
      out.betas.push_back(exact.beta);
      out.boundary_values.push_back(exact.tau);
      conf = 0.0;
      continue;
    }
    conf *= factor;
    out.betas.push_back(rec);
    out.boundary_values.push_back(BoundaryPoint::project(gamma(v, u) / gamma(w, s)));
  }
  out.confidence = conf;
  return out;
}

inline BetaChain beta_chain(const DeltaChain& chain, BoundaryPoint sigma) {
  return beta_chain(chain, dilation(chain.base(), sigma));
}

/// Required boundary value at sigma for a fixed point z0 of multiplicity k: the
/// Mobius image (g + z0)/(1 + conj(z0) g) of g = gamma_{z0}(sigma)^k.
inline BoundaryPoint fixed_point_condition(DiskPoint z0, int k, BoundaryPoint sigma) {
  require(k >= 1, ErrorKind::invalid_argument, "fixed_point_condition needs k >= 1");
  const cplx z = z0.value();
  const cplx base = gamma(z, sigma.value());
  cplx g = 1.0;
  for (int i = 0; i < k; ++i) g *= base;
  return BoundaryPoint::project((g + z) / (1.0 + std::conj(z) * g));
}

/// Points sigma with f(sigma) = target(sigma), by phase sampling and bisection.
inline std::vector<BoundaryPoint> find_boundary_solutions(const std::function<cplx(cplx)>& f,
                                                          const std::function<cplx(cplx)>& target,
                                                          int samples = 4096, double accept = 1e-8) {
  auto phase = [&](double t) {
    const cplx s = std::polar(1.0, t);
    return std::arg(f(s) / target(s));
  };
  std::vector<double> found;
  const double step = 2.0 * std::numbers::pi / samples;
  std::vector<double> ph(static_cast<std::size_t>(samples) + 1);
  for (int i = 0; i <= samples; ++i) ph[static_cast<std::size_t>(i)] = phase(i * step);
  for (int i = 0; i < samples; ++i) {
    const double a = ph[static_cast<std::size_t>(i)], b = ph[static_cast<std::size_t>(i + 1)];
    if (a == 0.0) {
      found.push_back(i * step);
      continue;
    }
    const bool crossing = (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0);
    if (!crossing || std::abs(a) > std::numbers::pi / 2 || std::abs(b) > std::numbers::pi / 2) continue;
    double lo = i * step, hi = (i + 1) * step, flo = a;
    for (int it = 0; it < 80 && hi - lo > 1e-17; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = phase(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    found.push_back(0.5 * (lo + hi));
  }
  std::vector<BoundaryPoint> out;
  for (double t : found) {
    const cplx s = std::polar(1.0, t);
    if (std::abs(f(s) - target(s)) >= accept) continue;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const BoundaryPoint& p) { return std::abs(p.value() - s) < 1e-9; });
    if (!dup) out.push_back(BoundaryPoint::polar(t));
  }
  return out;
}

/// Boundary fixed points f(sigma) = sigma.
inline std::vector<BoundaryPoint> boundary_fixed_points(const SelfMap& f) {
  return find_boundary_solutions([&](cplx s) { return f(s); }, [](cplx s) { return s; });
}

/// Boundary points satisfying fixed_point_condition(z0, k, sigma) = f(sigma).
inline std::vector<BoundaryPoint> boundary_condition_points(const SelfMap& f, DiskPoint z0, int k) {
  return find_boundary_solutions([&](cplx s) { return f(s); },
                                 [z0, k](cplx s) { return fixed_point_condition(z0, k, BoundaryPoint::project(s)).value(); });
}

}  // namespace hyperjulia
