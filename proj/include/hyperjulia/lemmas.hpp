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

#include "hyperjulia/boundary.hpp"
#include "hyperjulia/disk.hpp"
#include "hyperjulia/error.hpp"
#include "hyperjulia/hdq.hpp"
#include "hyperjulia/report.hpp"
#include "hyperjulia/self_map.hpp"

namespace hyperjulia {

namespace detail {

inline double julia_side(cplx tau, cplx fz) { return std::norm(tau - fz) / (1.0 - std::norm(fz)); }
inline double horo(cplx sigma, cplx z) { return std::norm(sigma - z) / (1.0 - std::norm(z)); }

inline void reject_automorphism(const SelfMap& f) {
  require(!f.is_automorphism(), ErrorKind::automorphism, "map '" + f.label() + "' is an automorphism");
}

inline void reject_low_degree(const SelfMap& f, int k) {
  if (f.structure().is_blaschke_at_most(k).value_or(false)) {
    throw Error(k == 1 ? ErrorKind::automorphism : ErrorKind::degree_exhaustion,
                "map '" + f.label() + "' is a Blaschke product of degree at most " + std::to_string(k));
  }
}

inline BoundaryDilation finite_dilation(const SelfMap& f, BoundaryPoint sigma) {
  BoundaryDilation d = dilation(f, sigma);
  require(d.finite(), ErrorKind::invalid_argument, "boundary dilation is infinite at the given sigma");
  return d;
}

inline void require_origin_fixed(const SelfMap& f, double tol = 1e-10) {
  require(std::abs(f(0.0)) <= tol, ErrorKind::invalid_argument, "map does not fix the origin");
}

}  // namespace detail

/// |tau - f(z)|^2/(1-|f(z)|^2) <= beta |sigma - z|^2/(1-|z|^2)
inline VerificationReport check_julia(const SelfMap& f, BoundaryPoint sigma, BoundaryPoint tau, double beta, DiskPoint z,
                                      const Tolerances& tol = {}, double beta_confidence = 0.0) {
  const cplx fz = f(z.value());
  detail::require_interior_value(fz, "f(z)");
  const double h = detail::horo(sigma.value(), z.value());
  auto r = make_report("julia", detail::julia_side(tau.value(), fz), beta * h, f.structure().is_blaschke_of_degree(1),
                       tol, beta_confidence * h);
  r.with("map", f.label()).with("sigma", sigma.value()).with("tau", tau.value()).with("beta", beta).with("z", z.value());
  return r;
}

/// Worst horocycle functional of f over samples of the horocycle boundary, against beta R.
/// The supremum tends to beta R at the tangent point for every map, so no equality is expected.
inline VerificationReport check_horocycle_image(const SelfMap& f, BoundaryPoint sigma, BoundaryPoint tau, double beta,
                                                double radius, int samples = 1000, const Tolerances& tol = {}) {
  const Horocycle h(sigma, radius);
  const EuclideanDisk e = horocycle_euclidean(h);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const cplx z = e.center + std::polar(e.radius, 2.0 * std::numbers::pi * (i + 0.5) / samples);
    if (std::abs(z) >= 1.0 - 1e-12) continue;
    worst = std::max(worst, detail::julia_side(tau.value(), f(z)));
  }
  auto r = make_report("horocycle-image", worst, beta * radius, std::nullopt, tol);
  r.with("map", f.label()).with("sigma", sigma.value()).with("tau", tau.value()).with("beta", beta).with("R", radius);
  return r;
}

/// The multipoint inequality at the last stage of the chain.
inline VerificationReport check_multipoint_julia(const DeltaChain& chain, const BetaChain& b, DiskPoint z,
                                                 const Tolerances& tol = {}) {
  const int k = chain.length();
  require(k >= 1, ErrorKind::invalid_argument, "multipoint check needs a chain of length >= 1");
  require(b.length() == k, ErrorKind::invalid_argument, "beta chain length differs from the delta chain");
  detail::reject_low_degree(chain.base(), k);
  const cplx gz = chain.final_stage()(z.value());
  detail::require_interior_value(gz, "final stage value");
  const double h = detail::horo(b.sigma.value(), z.value());
  auto r = make_report("multipoint-julia", detail::julia_side(b.boundary_values.back().value(), gz), b.betas.back() * h,
                       chain.base().structure().is_blaschke_of_degree(k + 1), tol, b.confidence * h);
  std::vector<cplx> pts;
  for (const auto& p : chain.points()) pts.push_back(p.value());
  r.with("map", chain.base().label()).with("sigma", b.sigma.value()).with("points", pts).with("z", z.value());
  r.with("k", static_cast<double>(k));
  if (b.negative_flag) r.note = "negative stage beta encountered";
  return r;
}

/// The two-point inequality; computed as the length-one chain so both routes agree exactly.
inline VerificationReport check_two_point_julia(const SelfMap& f, BoundaryPoint sigma, DiskPoint z, DiskPoint w,
                                                const Tolerances& tol = {}) {
  detail::reject_automorphism(f);
  const BoundaryDilation d = detail::finite_dilation(f, sigma);
  const DeltaChain chain(f, {w});
  auto r = check_multipoint_julia(chain, beta_chain(chain, d), z, tol);
  r.name = "two-point-julia";
  r.inputs = {};
  r.with("map", f.label()).with("sigma", sigma.value()).with("z", z.value()).with("w", w.value());
  return r;
}

/// Contraction of the Poincare distance by the last stage of the chain.
inline VerificationReport check_multipoint_schwarz_pick(const DeltaChain& chain, DiskPoint z, DiskPoint w,
                                                        const Tolerances& tol = {}) {
  const SelfMap& g = chain.final_stage();
  const cplx gz = g(z.value()), gw = g(w.value());
  const double lhs = std::atanh(std::min(1.0, std::abs(gamma(gw, gz))));
  const double rhs = poincare_distance(z, w);
  auto r = make_report("multipoint-schwarz-pick", lhs, rhs,
                       chain.base().structure().is_blaschke_of_degree(chain.length() + 1), tol);
  r.with("map", chain.base().label()).with("z", z.value()).with("w", w.value());
  return r;
}

struct MercerDisk {
  cplx center;
  double radius;
  cplx value;  // f(z)
  bool contains;
};

namespace detail {
struct MercerData {
  cplx fs, fw, phi;
  double beta_hat, lambda;
};

inline MercerData mercer_data(const SelfMap& f, BoundaryPoint sigma, cplx w, cplx z) {
  reject_automorphism(f);
  const BoundaryDilation d = finite_dilation(f, sigma);
  const cplx fs = boundary_hdq(f, sigma, d.tau, w).value();
  const double beta_hat = beta_star(f, sigma, d.tau, d.beta, w);
  const double lambda = (1.0 - std::norm(z)) / std::norm(sigma.value() - z);
  return {fs, f(w), (w - z) / (1.0 - std::conj(w) * z), beta_hat, lambda};
}

inline cplx phi(cplx a, cplx z) { return (a - z) / (1.0 - std::conj(a) * z); }

inline EuclideanDisk circumcircle(cplx a, cplx b, cplx c) {
  const cplx ab = b - a, ac = c - a;
  const double d = 2.0 * (ab.real() * ac.imag() - ab.imag() * ac.real());
  require(std::abs(d) > 1e-300, ErrorKind::degenerate, "collinear points have no circumcircle");
  const double nb = std::norm(ab), nc = std::norm(ac);
  const cplx center = a + cplx((ac.imag() * nb - ab.imag() * nc) / d, (ab.real() * nc - ac.real() * nb) / d);
  return {center, std::abs(center - a)};
}
}  // namespace detail

/// Euclidean disk around f(z) from the two-point inequality, in closed form.
inline MercerDisk mercer_disk(const SelfMap& f, BoundaryPoint sigma, DiskPoint w, DiskPoint z, double tol = 1e-9) {
  const auto m = detail::mercer_data(f, sigma, w.value(), z.value());
  const cplx t = m.fs * m.phi;
  const cplx e = 1.0 - std::conj(m.fw) * t;
  const double s = 1.0 - std::norm(m.fw);
  const double big_l = (1.0 - std::norm(std::conj(m.fw) * m.phi)) / std::norm(e);
  const double k = m.beta_hat / (m.beta_hat * big_l + m.lambda);
  const cplx center = t * s / (e * e) * k + detail::phi(m.fw, t);
  const double radius = std::abs(m.phi) * s / std::norm(e) * k;
  const cplx fz = f(z.value());
  return {center, radius, fz, std::abs(fz - center) < radius + tol};
}

/// The same disk obtained as the phi_{f(w)}-image of the horocycle disk containing phi_w(z) f*(z,w).
inline EuclideanDisk mercer_image_disk(const SelfMap& f, BoundaryPoint sigma, DiskPoint w, DiskPoint z) {
  const auto m = detail::mercer_data(f, sigma, w.value(), z.value());
  const cplx c0 = m.lambda / (m.beta_hat + m.lambda) * m.fs * m.phi;
  const double r0 = m.beta_hat / (m.beta_hat + m.lambda) * std::abs(m.phi);
  if (r0 == 0.0) return {detail::phi(m.fw, c0), 0.0};
  cplx p[3];
  for (int j = 0; j < 3; ++j) p[j] = detail::phi(m.fw, c0 + std::polar(r0, 2.0 * std::numbers::pi * j / 3.0));
  return detail::circumcircle(p[0], p[1], p[2]);
}

inline VerificationReport check_mercer(const SelfMap& f, BoundaryPoint sigma, DiskPoint w, DiskPoint z,
                                       const Tolerances& tol = {}) {
  const MercerDisk d = mercer_disk(f, sigma, w, z, tol.check);
  auto r = make_report("mercer-disk", std::abs(d.value - d.center), d.radius, f.structure().is_blaschke_of_degree(2), tol);
  r.with("map", f.label()).with("sigma", sigma.value()).with("w", w.value()).with("z", z.value());
  r.with("center", d.center).with("radius", d.radius);
  return r;
}

struct EstimateLadder {
  int k = 0;
  std::vector<double> terms;
  double final = 0.0;

  bool nondecreasing(double tol = 0.0) const {
    for (std::size_t i = 1; i < terms.size(); ++i)
      if (terms[i] < terms[i - 1] - tol) return false;
    return true;
  }
};

namespace detail {
template <class Factor>
EstimateLadder ladder(const DeltaChain& chain, const BetaChain& b, DiskPoint w_next, const Factor& factor) {
  const int k = chain.length();
  require(b.length() == k, ErrorKind::invalid_argument, "beta chain length differs from the delta chain");
  const cplx s = b.sigma.value();
  EstimateLadder out{k, {}, 0.0};
  double prod = 1.0, sum = 0.0;
  for (int j = 0; j <= k; ++j) {
    const cplx w = j < k ? chain.point(j + 1) : w_next.value();
    const cplx v = j < k ? chain.stage_value(j + 1) : chain.final_stage()(w);
    require_interior_value(v, "stage value");
    prod *= factor(b.boundary_values[static_cast<std::size_t>(j)].value(), v);
    sum += (1.0 - std::norm(w)) / std::norm(s - w) * prod;
    out.terms.push_back(sum);
  }
  out.final = sum;
  return out;
}
}  // namespace detail

/// Partial sums of the angular-derivative lower bound over w_1..w_k (the chain) and w_{k+1}.
inline EstimateLadder lower_bound_ladder(const DeltaChain& chain, const BetaChain& b, DiskPoint w_next) {
  return detail::ladder(chain, b, w_next, [](cplx u, cplx v) { return std::norm(u - v) / (1.0 - std::norm(v)); });
}

/// The weaker ladder using |u - v| >= 1 - |v|.
inline EstimateLadder lower_bound_simplified(const DeltaChain& chain, const BetaChain& b, DiskPoint w_next) {
  return detail::ladder(chain, b, w_next,
                        [](cplx, cplx v) { return (1.0 - std::abs(v)) / (1.0 + std::abs(v)); });
}

struct SeriesOptions {
  bool simplified = false;
  int cap = 64;
  double stop_below = 1e-12;
};

/// Truncated infinite ladder along w_1, w_2, ... (points(j) gives w_{j+1}); stops on a small term,
/// on the cap, or when a Blaschke stage becomes an automorphism. Experimental.
inline EstimateLadder lower_bound_series(const SelfMap& f, BoundaryPoint sigma, BoundaryPoint tau,
                                         const std::function<cplx(int)>& points, const SeriesOptions& opt = {}) {
  const cplx s = sigma.value();
  SelfMap stage = f;
  cplx u = tau.value();
  double prod = 1.0, sum = 0.0;
  EstimateLadder out;
  for (int j = 0; j < opt.cap; ++j) {
    const cplx w = points(j);
    const cplx v = stage(w);
    detail::require_interior_value(v, "stage value");
    prod *= opt.simplified ? (1.0 - std::abs(v)) / (1.0 + std::abs(v)) : std::norm(u - v) / (1.0 - std::norm(v));
    const double term = (1.0 - std::norm(w)) / std::norm(s - w) * prod;
    sum += term;
    out.terms.push_back(sum);
    if (term < opt.stop_below || stage.is_automorphism() || j + 1 == opt.cap) break;
    u = BoundaryPoint::project(gamma(v, u) / gamma(w, s)).value();
    stage = delta(stage, DiskPoint(w));
  }
  out.k = static_cast<int>(out.terms.size()) - 1;
  out.final = sum;
  return out;
}

inline VerificationReport verify_ladder(const EstimateLadder& ladder, const SelfMap& f, double beta,
                                        const Tolerances& tol = {}, double beta_confidence = 0.0) {
  auto r = make_report("lower-bound", ladder.final, beta, f.structure().is_blaschke_of_degree(ladder.k + 1), tol,
                       beta_confidence);
  if (!ladder.nondecreasing(tol.check)) {
    r.holds = false;
    r.note = "ladder terms decrease";
  }
  r.with("map", f.label()).with("k", static_cast<double>(ladder.k));
  return r;
}

/// Sum of 1/(beta_j - 1) over boundary fixed points against the interior fixed point multiplier.
inline VerificationReport cowen_pommerenke(const SelfMap& f, DiskPoint z0, const std::vector<BoundaryPoint>& sigmas,
                                           const std::vector<double>& betas, const Tolerances& tol = {}) {
  detail::reject_automorphism(f);
  require(sigmas.size() == betas.size(), ErrorKind::invalid_argument, "one beta per boundary point");
  require(std::abs(f(z0.value()) - z0.value()) <= 1e-10, ErrorKind::invalid_argument, "z0 is not a fixed point");
  double lhs = 0.0;
  std::vector<cplx> pts;
  for (std::size_t j = 0; j < sigmas.size(); ++j) {
    const cplx s = sigmas[j].value();
    require(std::abs(f(s) - s) <= 1e-8, ErrorKind::invalid_argument,
            "sigma " + detail::format_complex(s) + " is not a boundary fixed point");
    require(betas[j] > 1.0 + 1e-12, ErrorKind::invalid_argument, "boundary fixed point with beta <= 1");
    lhs += 1.0 / (betas[j] - 1.0);
    pts.push_back(s);
  }
  const cplx c = f.derivative(z0.value());
  const double rhs = (1.0 - std::norm(c)) / std::norm(1.0 - c);
  auto r = make_report("cowen-pommerenke", lhs, rhs,
                       f.structure().is_blaschke_of_degree(static_cast<int>(sigmas.size()) + 1), tol);
  r.with("map", f.label()).with("z0", z0.value()).with("sigmas", pts);
  return r;
}

/// Cowen-Pommerenke sum for an interior fixed point z0 of multiplicity k.
inline VerificationReport cowen_pommerenke_multiple(const SelfMap& f, DiskPoint z0, int k,
                                                    const std::vector<BoundaryPoint>& sigmas,
                                                    const std::vector<double>& betas, const Tolerances& tol = {}) {
  require(k >= 1, ErrorKind::invalid_argument, "multiplicity k must be >= 1");
  require(sigmas.size() == betas.size(), ErrorKind::invalid_argument, "one beta per boundary point");
  detail::reject_low_degree(f, k);
  const cplx z = z0.value();
  const TaylorData t = taylor(f, z0, k);
  require(std::abs(t[0] - z) <= 1e-8, ErrorKind::invalid_argument, "z0 is not a fixed point");
  for (int j = 1; j < k; ++j)
    require(std::abs(t[static_cast<std::size_t>(j)]) <= 1e-8, ErrorKind::invalid_argument,
            "derivative of order " + std::to_string(j) + " does not vanish at z0");
  double lhs = 0.0;
  std::string note;
  std::vector<cplx> pts;
  for (std::size_t j = 0; j < sigmas.size(); ++j) {
    const cplx s = sigmas[j].value();
    const cplx fs = f(s);
    require(std::abs(fs - fixed_point_condition(z0, k, sigmas[j]).value()) <= 1e-8, ErrorKind::invalid_argument,
            "sigma " + detail::format_complex(s) + " fails the boundary condition for multiplicity k");
    const double weight = 1.0 + 2.0 * ((fs - s) * std::conj(z)).real() / std::norm(fs - z);
    const double den = weight * betas[j] - k;
    if (den <= 1e-12) {
      lhs = std::numeric_limits<double>::infinity();
      note = "nonpositive denominator at sigma " + detail::format_complex(s);
    } else if (std::isfinite(lhs)) {
      lhs += 1.0 / den;
    }
    pts.push_back(s);
  }
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  const cplx c = t[static_cast<std::size_t>(k)] / factorial * std::pow(1.0 - std::norm(z), k - 1);
  const double rhs = (1.0 - std::norm(c)) / std::norm(1.0 - c);
  auto r = make_report("cowen-pommerenke-multiple", lhs, rhs,
                       f.structure().is_blaschke_of_degree(static_cast<int>(sigmas.size()) + k), tol);
  r.note = note;
  r.with("map", f.label()).with("z0", z).with("k", static_cast<double>(k)).with("sigmas", pts);
  if (f.structure().kind == Structure::Kind::unknown)
    r.note += (r.note.empty() ? "" : "; ") + std::string("assumed not a Blaschke product of degree <= k");
  return r;
}

/// f(z)/z^k against f(sigma)/sigma^k when the first k Taylor coefficients at 0 vanish.
inline VerificationReport check_proposition_CPn(const SelfMap& f, int k, BoundaryPoint sigma, DiskPoint z,
                                                const Tolerances& tol = {}) {
  require(k >= 1, ErrorKind::invalid_argument, "k must be >= 1");
  detail::reject_low_degree(f, k);
  const TaylorData t = taylor(f, DiskPoint(0.0), k);
  for (int j = 0; j < k; ++j)
    require(std::abs(t[static_cast<std::size_t>(j)]) <= 1e-8, ErrorKind::invalid_argument,
            "Taylor coefficient of order " + std::to_string(j) + " does not vanish at 0");
  const BoundaryDilation d = detail::finite_dilation(f, sigma);
  const cplx s = sigma.value();
  cplx q;
  if (z.value() == cplx(0.0)) {
    double factorial = 1.0;
    for (int i = 2; i <= k; ++i) factorial *= i;
    q = t[static_cast<std::size_t>(k)] / factorial;
  } else {
    q = f(z.value()) / std::pow(z.value(), k);
  }
  const cplx boundary = d.tau.value() / std::pow(s, k);
  const double h = detail::horo(s, z.value());
  auto r = make_report("origin-multiplicity-julia", detail::julia_side(boundary, q), (d.beta - k) * h,
                       f.structure().is_blaschke_of_degree(k + 1), tol, d.confidence * h);
  r.with("map", f.label()).with("k", static_cast<double>(k)).with("sigma", s).with("z", z.value());
  return r;
}

/// The one-point quotient inequalities when f(0) = 0, plus the fixed-boundary form if f(sigma) = sigma.
inline std::vector<VerificationReport> check_corollary_CP(const SelfMap& f, BoundaryPoint sigma, DiskPoint z,
                                                          const Tolerances& tol = {}) {
  detail::reject_automorphism(f);
  detail::require_origin_fixed(f);
  const BoundaryDilation d = detail::finite_dilation(f, sigma);
  const cplx s = sigma.value();
  const cplx df0 = f.derivative(0.0);
  const cplx q = z.value() == cplx(0.0) ? df0 : f(z.value()) / z.value();
  const double h = detail::horo(s, z.value());
  const auto expected = f.structure().is_blaschke_of_degree(2);
  std::vector<VerificationReport> out;
  out.push_back(make_report(z.value() == cplx(0.0) ? "quotient-julia-origin" : "quotient-julia",
                            detail::julia_side(d.tau.value() / s, q), (d.beta - 1.0) * h, expected, tol,
                            d.confidence * h));
  out.back().with("map", f.label()).with("sigma", s).with("z", z.value());
  if (std::abs(d.tau.value() - s) <= 1e-8) {
    out.push_back(make_report("quotient-julia-fixed", std::norm(1.0 - df0) / (1.0 - std::norm(df0)), d.beta - 1.0,
                              expected, tol, d.confidence));
    out.back().with("map", f.label()).with("sigma", s);
  }
  return out;
}

/// The length-two origin chain inequality written through f(sigma), f'(0), f''(0) when f(0) = 0.
inline VerificationReport check_proposition_2CP(const SelfMap& f, BoundaryPoint sigma, DiskPoint z,
                                                const Tolerances& tol = {}) {
  detail::reject_low_degree(f, 2);
  detail::require_origin_fixed(f);
  const BoundaryDilation d = detail::finite_dilation(f, sigma);
  const TaylorData t = taylor(f, DiskPoint(0.0), 2);
  const cplx a1 = t[1];
  const cplx s = sigma.value();
  const cplx fs = d.tau.value();
  const cplx boundary = std::conj(s) * (fs * std::conj(s) - a1) / (1.0 - std::conj(a1) * fs * std::conj(s));
  cplx inner;
  if (z.value() == cplx(0.0)) {
    inner = t[2] / (2.0 * (1.0 - std::norm(a1)));
  } else {
    const cplx q = f(z.value()) / z.value();
    inner = (q - a1) / z.value() / (1.0 - std::conj(a1) * q);
  }
  const double factor = (1.0 - std::norm(a1)) / std::norm(fs / s - a1) * (d.beta - 1.0) - 1.0;
  const double h = detail::horo(s, z.value());
  auto r = make_report(z.value() == cplx(0.0) ? "second-quotient-julia-origin" : "second-quotient-julia",
                       detail::julia_side(boundary, inner), factor * h, f.structure().is_blaschke_of_degree(3), tol,
                       d.confidence * h);
  r.with("map", f.label()).with("sigma", s).with("z", z.value());
  return r;
}

/// Radial limits of the boundary difference quotient and of the derivative of f*(., w) at sigma,
/// both compared with f*(sigma,w) conj(sigma) beta*(sigma;w).
inline VerificationReport check_2p_jwc(const SelfMap& f, BoundaryPoint sigma, DiskPoint w, const Tolerances& tol = {}) {
  detail::reject_automorphism(f);
  const BoundaryDilation d = detail::finite_dilation(f, sigma);
  const cplx s = sigma.value();
  const cplx fs = boundary_hdq(f, sigma, d.tau, w.value()).value();
  const double bstar = beta_star(f, sigma, d.tau, d.beta, w.value());
  const cplx target = fs * std::conj(s) * bstar;
  const SelfMap g = delta(f, w);
  std::vector<cplx> q1, q2;
  for (int m = 6; m <= 30; ++m) {
    const double hstep = std::ldexp(1.0, -m);
    const cplx z = (1.0 - hstep) * s;
    q1.push_back((fs - g(z)) / (s - z));
    q2.push_back(g.derivative(z));
  }
  const auto e1 = detail::richardson_halving(q1);
  const auto e2 = detail::richardson_halving(q2);
  const double lhs = std::max(std::abs(e1.value - target), std::abs(e2.value - target));
  const double rhs = 1e-5 * std::max(1.0, std::abs(target)) + e1.increment + e2.increment + d.confidence;
  auto r = make_report("two-point-jwc", lhs, rhs, std::nullopt, tol);
  r.with("map", f.label()).with("sigma", s).with("w", w.value()).with("target", target);
  return r;
}

}  // namespace hyperjulia
