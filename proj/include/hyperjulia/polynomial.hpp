#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <span>
#include <utility>
#include <vector>

#include "hyperjulia/disk.hpp"
#include "hyperjulia/error.hpp"

namespace hyperjulia {

/// Dense polynomial with complex coefficients in ascending degree.
/// Trailing coefficients below 1e-14 (relative to the largest) are trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<cplx> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<cplx> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(cplx c) { return Polynomial({c}); }
  static Polynomial monomial(int degree, cplx c = 1.0) {
    std::vector<cplx> v(static_cast<std::size_t>(degree) + 1, 0.0);
    v.back() = c;
    return Polynomial(std::move(v));
  }
  /// lead * prod (z - r_j)
  static Polynomial from_roots(std::span<const cplx> roots, cplx lead = 1.0) {
    std::vector<cplx> v{lead};
    for (cplx r : roots) {
      std::vector<cplx> next(v.size() + 1, 0.0);
      for (std::size_t i = 0; i < v.size(); ++i) {
        next[i + 1] += v[i];
        next[i] -= r * v[i];
      }
      v = std::move(next);
    }
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; the zero polynomial reports -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::span<const cplx> coefficients() const { return c_; }
  cplx coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : cplx(0.0); }
  cplx leading() const { return c_.empty() ? cplx(0.0) : c_.back(); }

  cplx operator()(cplx z) const {
    cplx acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  /// Value and first derivative by Horner's scheme.
  std::pair<cplx, cplx> eval_with_derivative(cplx z) const {
    cplx p = 0.0, dp = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      dp = dp * z + p;
      p = p * z + *it;
    }
    return {p, dp};
  }

  /// sum_k |a_k| max(1,|z|)^k, the scale residuals are measured against.
  double scale_at(cplx z) const {
    const double r = std::max(1.0, std::abs(z));
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
  }

  double max_abs_coefficient() const {
    double m = 0.0;
    for (cplx a : c_) m = std::max(m, std::abs(a));
    return m;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<cplx> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<double>(i);
    return Polynomial(std::move(v));
  }

  /// Divides by (z - root). Returns the quotient and the remainder p(root).
  std::pair<Polynomial, cplx> divide_linear(cplx root) const {
    if (c_.empty()) return {{}, 0.0};
    std::vector<cplx> q(c_.size() - 1);
    cplx carry = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
      q[i] = carry;
      carry = c_[i] + carry * root;
    }
    return {Polynomial(std::move(q)), carry};
  }

  /// Coefficients of z^n conj(p(1/conj(z))) for n = degree: the reflected polynomial.
  Polynomial reflected(int n) const {
    std::vector<cplx> v(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(n - i)] = std::conj(c_[static_cast<std::size_t>(i)]);
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<cplx> v(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b * cplx(-1.0); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<cplx> v(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, cplx s) {
    std::vector<cplx> v(a.c_);
    for (cplx& x : v) x *= s;
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(cplx s, const Polynomial& a) { return a * s; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    const double m = max_abs_coefficient();
    while (!c_.empty() && std::abs(c_.back()) <= 1e-14 * m) c_.pop_back();
  }

  std::vector<cplx> c_;
};

struct RootOptions {
  int max_iterations = 200;
  double residual_tolerance = 1e-10;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// All roots of p (degree >= 1) by Aberth-Ehrlich simultaneous iteration,
/// followed by a Newton polish of each root.
inline std::vector<cplx> polynomial_roots(const Polynomial& p, const RootOptions& opt = {}) {
  const int n = p.degree();
  require(n >= 1, ErrorKind::invalid_argument, "polynomial_roots needs degree >= 1");
  const auto coeffs = p.coefficients();
  if (n == 1) return {-coeffs[0] / coeffs[1]};

  // Roots at the origin are split off exactly.
  std::size_t zero_roots = 0;
  while (coeffs[zero_roots] == cplx(0.0)) ++zero_roots;
  std::vector<cplx> roots(zero_roots, cplx(0.0));
  if (static_cast<int>(zero_roots) == n) return roots;
  const Polynomial q(std::vector<cplx>(coeffs.begin() + static_cast<std::ptrdiff_t>(zero_roots), coeffs.end()));
  const int m = q.degree();
  if (m == 1) {
    roots.push_back(-q.coefficient(0) / q.coefficient(1));
    return roots;
  }

  const double radius = std::pow(std::abs(q.coefficient(0) / q.leading()), 1.0 / m);
  std::vector<cplx> z(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    z[static_cast<std::size_t>(j)] = std::polar(radius, 2.0 * std::numbers::pi * j / m + 0.4);

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<bool> done(static_cast<std::size_t>(m), false);
  int stagnant = 0;
  for (int it = 0; it < opt.max_iterations; ++it) {
    bool all_done = true;
    double largest_step = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      const auto [pv, dpv] = q.eval_with_derivative(z[i]);
      if (pv == cplx(0.0)) {
        done[i] = true;
        continue;
      }
      if (std::abs(pv) <= std::numeric_limits<double>::epsilon() * q.scale_at(z[i])) {
        done[i] = true;
        continue;
      }
      all_done = false;
      if (dpv == cplx(0.0)) {
        z[i] += cplx(unit(rng), unit(rng)) * 1e-3 * std::max(1.0, std::abs(z[i]));
        continue;
      }
      const cplx ratio = pv / dpv;
      cplx s = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      const cplx step = ratio / (1.0 - ratio * s);
      z[i] -= step;
      largest_step = std::max(largest_step, std::abs(step));
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z[i]))) done[i] = true;
    }
    if (all_done) break;
    // Random perturbation restart when the iteration stops moving without converging.
    stagnant = largest_step < 1e-300 ? stagnant + 1 : 0;
    if (stagnant > 3) {
      for (std::size_t i = 0; i < z.size(); ++i)
        if (!done[i]) z[i] += cplx(unit(rng), unit(rng)) * 1e-6;
      stagnant = 0;
    }
  }

  // Newton polish; keep a step only when it lowers the residual.
  for (cplx& r : z) {
    for (int k = 0; k < 3; ++k) {
      const auto [pv, dpv] = q.eval_with_derivative(r);
      if (dpv == cplx(0.0) || pv == cplx(0.0)) break;
      const cplx cand = r - pv / dpv;
      if (std::abs(q(cand)) < std::abs(pv)) r = cand; else break;
    }
  }

  double worst = 0.0;
  for (cplx r : z) worst = std::max(worst, std::abs(q(r)) / q.scale_at(r));
  if (!(worst <= opt.residual_tolerance)) {
    std::ostringstream os;
    os << "root finder did not converge; best relative residual " << worst;
    throw Error(ErrorKind::root_convergence, os.str());
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace hyperjulia
