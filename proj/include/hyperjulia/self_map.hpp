#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyperjulia/detail/contour.hpp"
#include "hyperjulia/disk.hpp"
#include "hyperjulia/error.hpp"
#include "hyperjulia/rational.hpp"

namespace hyperjulia {

/// What is known structurally about a map: a Blaschke product of known degree,
/// certainly not a finite Blaschke product, or nothing.
struct Structure {
  enum class Kind { blaschke, non_blaschke, unknown };
  Kind kind = Kind::unknown;
  int degree = -1;

  static Structure blaschke(int d) { return {Kind::blaschke, d}; }
  static Structure non_blaschke() { return {Kind::non_blaschke, -1}; }
  static Structure unknown() { return {}; }

  /// Whether the map is a Blaschke product of degree exactly d; empty when undecidable.
  std::optional<bool> is_blaschke_of_degree(int d) const {
    if (kind == Kind::unknown) return std::nullopt;
    return kind == Kind::blaschke && degree == d;
  }
  /// Whether the map is a Blaschke product of degree at most d; empty when undecidable.
  std::optional<bool> is_blaschke_at_most(int d) const {
    if (kind == Kind::unknown) return std::nullopt;
    return kind == Kind::blaschke && degree <= d;
  }
};

/// f(0), f'(0), ..., f^(m)(0) at a designated point.
struct TaylorData {
  DiskPoint point;
  std::vector<cplx> derivatives;

  int order() const { return static_cast<int>(derivatives.size()) - 1; }
  cplx operator[](std::size_t n) const { return derivatives.at(n); }
};

struct BlackBox {
  std::function<cplx(cplx)> value;
  std::function<cplx(cplx)> derivative;  // may be empty
};

inline constexpr int kSpotCheckSamples = 1000;
inline constexpr double kSpotCheckTolerance = 1e-10;

namespace detail {
/// Deterministic, roughly area-uniform sample points of the disk of radius r_max.
inline std::vector<cplx> disk_samples(int n, double r_max = 0.999) {
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(n));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) out.push_back(std::polar(r_max * std::sqrt((i + 0.5) / n), golden * i));
  return out;
}
}  // namespace detail

/// A holomorphic self-map of the disk, either in exact rational form or as a black box.
class SelfMap {
 public:
  using Kind = std::variant<BlaschkeProduct, RationalMap, BlackBox>;

  static SelfMap blaschke(BlaschkeProduct b, std::string label = "blaschke") {
    const int d = b.degree();
    return SelfMap(std::move(b), Structure::blaschke(d), std::move(label));
  }

  /// A rational map. If it certifies as a Blaschke product it is stored in factored form.
  static SelfMap rational(RationalMap r, std::string label = "rational") {
    if (r.numerator().degree() >= 1) {
      try {
        BlaschkeProduct b = certify_blaschke(r, 1e-10);
        const int d = b.degree();
        return SelfMap(std::move(b), Structure::blaschke(d), std::move(label));
      } catch (const Error&) {
      }
    }
    SelfMap m(std::move(r), Structure::non_blaschke(), std::move(label));
    m.spot_check(kSpotCheckSamples);
    return m;
  }

  static SelfMap black_box(std::function<cplx(cplx)> value, std::function<cplx(cplx)> derivative = {},
                           std::string label = "black-box", Structure structure = Structure::unknown(),
                           int spot_samples = kSpotCheckSamples) {
    require(static_cast<bool>(value), ErrorKind::invalid_argument, "black-box map needs a value function");
    SelfMap m(BlackBox{std::move(value), std::move(derivative)}, structure, std::move(label));
    m.spot_check(spot_samples);
    return m;
  }

  cplx operator()(cplx z) const {
    return std::visit(
        [&](const auto& k) -> cplx {
          using T = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<T, BlackBox>) return k.value(z);
          else return k(z);
        },
        impl_->kind);
  }

  cplx derivative(cplx z) const {
    return std::visit(
        [&](const auto& k) -> cplx {
          using T = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<T, BlackBox>) {
            if (k.derivative) return k.derivative(z);
            return detail::contour_derivative(k.value, z);
          } else {
            return k.derivative(z);
          }
        },
        impl_->kind);
  }

  bool is_exact() const { return !std::holds_alternative<BlackBox>(impl_->kind); }
  const BlaschkeProduct* as_blaschke() const { return std::get_if<BlaschkeProduct>(&impl_->kind); }
  const RationalMap* as_rational() const { return std::get_if<RationalMap>(&impl_->kind); }
  const BlackBox* as_black_box() const { return std::get_if<BlackBox>(&impl_->kind); }

  /// Numerator/denominator form for exact maps.
  RationalMap rational_form() const {
    if (const auto* b = as_blaschke()) return b->to_rational();
    if (const auto* r = as_rational()) return *r;
    throw Error(ErrorKind::invalid_argument, "black-box map has no rational form");
  }

  const Structure& structure() const { return impl_->structure; }
  std::optional<int> blaschke_degree() const {
    if (impl_->structure.kind == Structure::Kind::blaschke) return impl_->structure.degree;
    return std::nullopt;
  }
  bool is_automorphism() const { return blaschke_degree() == 1; }

  const std::string& label() const { return impl_->label; }
  const std::optional<TaylorData>& taylor_hint() const { return impl_->taylor; }
  SelfMap with_taylor(TaylorData t) const {
    SelfMap copy = *this;
    auto impl = std::make_shared<Impl>(*impl_);
    impl->taylor = std::move(t);
    copy.impl_ = std::move(impl);
    return copy;
  }

  /// Checks |f| <= 1 + tol on n deterministic interior samples.
  void spot_check(int n) const {
    for (cplx z : detail::disk_samples(n)) {
      const cplx v = (*this)(z);
      require(std::isfinite(v.real()) && std::isfinite(v.imag()) && std::abs(v) <= 1.0 + kSpotCheckTolerance,
              ErrorKind::invalid_argument,
              "map '" + impl_->label + "' leaves the closed disk at " + detail::format_complex(z));
    }
  }

 private:
  struct Impl {
    Kind kind;
    Structure structure;
    std::string label;
    std::optional<TaylorData> taylor;
  };

  SelfMap(Kind kind, Structure structure, std::string label)
      : impl_(std::make_shared<Impl>(Impl{std::move(kind), structure, std::move(label), std::nullopt})) {}

  std::shared_ptr<const Impl> impl_;
};

}  // namespace hyperjulia
