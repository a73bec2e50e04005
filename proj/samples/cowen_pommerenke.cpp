// Boundary fixed points of a Blaschke product with an attracting fixed point
// at the origin, and the Cowen-Pommerenke sum over them.
#include <cstdio>
#include <vector>

#include "hyperjulia/hyperjulia.hpp"

namespace hj = hyperjulia;

int main() {
  const hj::SelfMap f = hj::SelfMap::blaschke(hj::BlaschkeProduct(0.0, {{0.0, 0.0}, {0.5, 0.0}, {-0.2, 0.3}}), "B3");
  const auto sigmas = hj::boundary_fixed_points(f);
  std::vector<double> betas;
  for (const auto& s : sigmas) {
    const auto d = hj::dilation(f, s);
    betas.push_back(d.beta);
    std::printf("sigma = (%+.12f,%+.12f)  beta = %.12f\n", s.value().real(), s.value().imag(), d.beta);
  }
  const auto r = hj::cowen_pommerenke(f, hj::DiskPoint(0.0), sigmas, betas);
  std::printf("sum 1/(beta-1) = %.12f\nbound          = %.12f\nholds %d equality %d\n", r.lhs, r.rhs, r.holds,
              r.equality);
  return r.consistent() ? 0 : 1;
}
