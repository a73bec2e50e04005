// Walks the lower-bound ladder for a degree-four Blaschke product and checks
// the multipoint Julia inequality at a few interior points.
#include <cstdio>
#include <vector>

#include "hyperjulia/hyperjulia.hpp"

namespace hj = hyperjulia;

int main() {
  const hj::BlaschkeProduct b(0.4, {{0.3, 0.2}, {-0.5, 0.1}, {0.1, -0.6}, {0.0, 0.0}});
  const hj::SelfMap f = hj::SelfMap::blaschke(b, "B4");
  const hj::BoundaryPoint sigma = hj::BoundaryPoint::polar(0.7);

  const std::vector<hj::DiskPoint> points = {hj::DiskPoint(hj::cplx(0.2, 0.1)), hj::DiskPoint(hj::cplx(-0.3, 0.4)),
                                             hj::DiskPoint(hj::cplx(0.0, -0.2))};
  const hj::DeltaChain chain(f, points);
  const hj::BetaChain betas = hj::beta_chain(chain, sigma);

  std::printf("beta(sigma) = %.12f\n", betas.betas.front());
  for (int h = 1; h <= betas.length(); ++h) std::printf("  stage %d beta = %.12f\n", h, betas.betas[static_cast<std::size_t>(h)]);

  const auto ladder = hj::lower_bound_ladder(chain, betas, hj::DiskPoint(hj::cplx(0.5, 0.0)));
  std::printf("ladder:");
  for (double t : ladder.terms) std::printf(" %.10f", t);
  std::printf("\nfinal %.12f (equality expected: degree %d = k + 1)\n", ladder.final, b.degree());

  for (const hj::cplx z : {hj::cplx(0.1, 0.1), hj::cplx(-0.6, 0.3), hj::cplx(0.8, -0.1)}) {
    const auto r = hj::check_multipoint_julia(chain, betas, hj::DiskPoint(z));
    std::printf("z = (%+.2f,%+.2f): lhs %.12f rhs %.12f holds %d equality %d\n", z.real(), z.imag(), r.lhs, r.rhs,
                r.holds, r.equality);
  }
  return 0;
}
