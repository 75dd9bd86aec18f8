#ifndef AFFPAV_GRASSTOOLS_HPP
#define AFFPAV_GRASSTOOLS_HPP

#include <vector>

#include "affpav/paving.hpp"
#include "affpav/weyl.hpp"

namespace affpav::grass {

using rootdata::RootDatum;
using rootdata::Vec;
using weyl::WeylElement;

/*
  Standard parabolic P = MN containing B, named by the subset of finite
  simple roots spanning the Levi M.  N-roots are the positive roots outside
  the span of the subset.
*/
struct ParabolicChoice {
  const RootDatum* rd = nullptr;
  std::vector<int> levi;            // 1-based finite simple indices, sorted
  std::vector<Vec> m_roots;         // character vectors of the roots of M
  std::vector<Vec> n_roots;         // positive roots of N
};
ParabolicChoice make_parabolic(const RootDatum& rd, std::vector<int> levi);

// Omega(mu) = { lambda : mu - w lambda is a sum of positive coroots for all
// w in W_0 }, enumerated as the union of W_0-orbits of the dominant
// cocharacters below mu in the dominance order (same coset of Q^vee).
std::vector<Vec> omega_set(const RootDatum& rd, const Vec& mu);

// nu >=_P mu: <alpha, nu> = 0 on Lie(M) and <alpha, nu + lambda> > 0 on
// Lie(N) for every lambda in Omega(mu).
bool geq_P(const RootDatum& rd, const Vec& nu, const Vec& mu, const ParabolicChoice& P);

// Smallest multiple of the M-central N-positive direction (the scaled sum of
// the fundamental coweights off the Levi) satisfying geq_P; k <= 64.
Vec find_nu(const RootDatum& rd, const Vec& mu, const ParabolicChoice& P);
// Next larger witness (for independence checks).
Vec find_nu_after(const RootDatum& rd, const Vec& mu, const ParabolicChoice& P, const Vec& nu);
// Witness additionally dominating a queried lambda: <alpha, nu + lambda> > 0
// on Lie(N).  The retraction identification needs this even when lambda lies
// outside Omega(mu); `skip` steps to later witnesses for independence checks.
Vec find_nu_adapted(const RootDatum& rd, const Vec& mu, const ParabolicChoice& P,
                    const Vec& lambda, int skip = 0);

bool is_M_dominant(const RootDatum& rd, const Vec& lambda, const ParabolicChoice& P);

struct MVResult {
  paving::FiberResult fiber;
  Vec nu;  // the witness used
};

/*
  Point count of (t^{-nu} K t^{nu}) x_lambda  n  K x_mu  in the affine
  Grassmannian, realized as the parahoric fiber of (t_mu, t_{-nu-lambda})
  over t_{-nu} with spherical W_P = W_0 and open factors.  mu must be
  dominant and lambda M-dominant.
*/
MVResult mv_intersection(const RootDatum& rd, const Vec& mu, const Vec& lambda,
                         const ParabolicChoice& P, bool want_cells = false);
// same, with a caller-chosen valid nu
paving::FiberResult mv_intersection_with_nu(const RootDatum& rd, const Vec& mu,
                                            const Vec& lambda, const ParabolicChoice& P,
                                            const Vec& nu, bool want_cells = false);

}  // namespace affpav::grass

#endif
