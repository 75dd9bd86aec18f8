#include "affpav/grasstools.hpp"

#include <algorithm>
#include <set>

#include "affpav/errors.hpp"

namespace affpav::grass {

using rootdata::dot;

ParabolicChoice make_parabolic(const RootDatum& rd, std::vector<int> levi) {
  std::sort(levi.begin(), levi.end());
  levi.erase(std::unique(levi.begin(), levi.end()), levi.end());
  for (int i : levi)
    if (i < 1 || i > rd.rank()) throw UserError("parabolic: finite simple index expected");
  ParabolicChoice P;
  P.rd = &rd;
  P.levi = levi;
  // roots of M: positive roots supported on the Levi subset (and negatives)
  for (int k = 0; k < rd.num_positive(); ++k) {
    const rootdata::Root& r = rd.roots()[k];
    bool in_levi = true;
    for (int i = 0; i < rd.rank(); ++i) {
      if (r.simple_coeffs[i] != 0 &&
          !std::binary_search(levi.begin(), levi.end(), i + 1))
        in_levi = false;
    }
    if (in_levi) {
      P.m_roots.push_back(r.ch);
      Vec neg = r.ch;
      for (auto& c : neg) c = -c;
      P.m_roots.push_back(neg);
    } else {
      P.n_roots.push_back(r.ch);
    }
  }
  return P;
}

namespace {

// finite Weyl group as matrices via the spherical parabolic of the datum
std::vector<weyl::WeylElement> finite_weyl(const RootDatum& rd) {
  std::vector<int> gens;
  for (int i = 1; i <= rd.rank(); ++i) gens.push_back(i);
  return weyl::parabolic_data(rd, gens).elements;
}

}  // namespace

std::vector<Vec> omega_set(const RootDatum& rd, const Vec& mu) {
  if (!rd.is_dominant(mu)) throw UserError("omega_set: mu must be dominant");
  // dominant members are exactly the dominant lambda <= mu in dominance order;
  // the set is the union of their W_0-orbits
  std::vector<weyl::WeylElement> w0 = finite_weyl(rd);
  long long budget = dot(rd.two_rho(), mu) / 2;  // sum of coroot coefficients
  std::set<Vec> out;
  std::vector<long long> c(rd.rank(), 0);
  for (;;) {
    long long tot = 0;
    for (long long v : c) tot += v;
    if (tot <= budget) {
      Vec lam = mu;
      for (int i = 0; i < rd.rank(); ++i)
        for (int j = 0; j < rd.rank(); ++j)
          lam[j] -= c[i] * rd.simple_root(i + 1).cov[j];
      if (rd.is_dominant(lam))
        for (const auto& w : w0) out.insert(w.w.apply(lam));
    }
    int i = 0;
    for (; i < rd.rank(); ++i) {
      if (++c[i] <= budget) break;
      c[i] = 0;
    }
    if (i == rd.rank()) break;
  }
  return std::vector<Vec>(out.begin(), out.end());
}

bool geq_P(const RootDatum& rd, const Vec& nu, const Vec& mu, const ParabolicChoice& P) {
  for (const Vec& a : P.m_roots)
    if (dot(a, nu) != 0) return false;
  std::vector<Vec> omega = omega_set(rd, mu);
  for (const Vec& a : P.n_roots)
    for (const Vec& lam : omega) {
      Vec s = nu;
      for (size_t i = 0; i < s.size(); ++i) s[i] += lam[i];
      if (dot(a, s) <= 0) return false;
    }
  return true;
}

namespace {

// Smallest integral multiple of the sum of fundamental coweights away from
// the Levi; built from the adjugate of the Cartan matrix over its determinant.
Vec central_direction(const RootDatum& rd, const ParabolicChoice& P) {
  const int n = rd.rank();
  // solve <alpha_i, c> = [i not in levi] over Q, then scale to the lattice
  // coordinates of c in the lattice basis satisfy A_ch * c = target where
  // A_ch rows are the simple-root character vectors
  std::vector<std::vector<long long>> A(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = rd.simple_root(i + 1).ch[j];
  std::vector<long long> target(n);
  for (int i = 0; i < n; ++i)
    target[i] = std::binary_search(P.levi.begin(), P.levi.end(), i + 1) ? 0 : 1;
  // Cramer with exact integers
  rootdata::Mat M;
  M.n = n;
  M.a.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M.at(i, j) = A[i][j];
  auto det = [&](const rootdata::Mat& m) {
    // reuse a tiny Bareiss; n <= 8
    rootdata::Mat t = m;
    long long sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
      if (t.at(k, k) == 0) {
        int piv = -1;
        for (int i = k + 1; i < n; ++i)
          if (t.at(i, k) != 0) {
            piv = i;
            break;
          }
        if (piv < 0) return 0LL;
        for (int j = 0; j < n; ++j) std::swap(t.at(piv, j), t.at(k, j));
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j)
          t.at(i, j) = (t.at(i, j) * t.at(k, k) - t.at(i, k) * t.at(k, j)) / prev;
      prev = t.at(k, k);
    }
    return sign * t.at(n - 1, n - 1);
  };
  long long d = det(M);
  if (d == 0) throw InternalCheckError("degenerate simple-root matrix");
  Vec numer(n, 0);
  for (int j = 0; j < n; ++j) {
    rootdata::Mat Mj = M;
    for (int i = 0; i < n; ++i) Mj.at(i, j) = target[i];
    numer[j] = det(Mj);
  }
  // c = numer / d; find the smallest k with k*c integral
  for (long long k = 1; k <= 64; ++k) {
    bool ok = true;
    for (int j = 0; j < n; ++j)
      if ((numer[j] * k) % d != 0) ok = false;
    if (ok) {
      Vec c(n);
      for (int j = 0; j < n; ++j) c[j] = numer[j] * k / d;
      return c;
    }
  }
  throw UserError("no integral M-central N-positive direction found");
}

bool vec_zero(const Vec& v) {
  for (long long x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

Vec find_nu(const RootDatum& rd, const Vec& mu, const ParabolicChoice& P) {
  if (!rd.is_dominant(mu)) throw UserError("find_nu: mu must be dominant");
  if (P.n_roots.empty()) return Vec(rd.rank(), 0);  // P = G
  Vec c = central_direction(rd, P);
  if (vec_zero(c)) throw UserError("find_nu: central direction vanished");
  Vec nu(rd.rank(), 0);
  for (int k = 1; k <= 64; ++k) {
    for (int j = 0; j < rd.rank(); ++j) nu[j] = k * c[j];
    if (geq_P(rd, nu, mu, P)) return nu;
  }
  throw UserError("find_nu: no multiple up to 64 satisfies the condition");
}

Vec find_nu_after(const RootDatum& rd, const Vec& mu, const ParabolicChoice& P,
                  const Vec& nu) {
  if (P.n_roots.empty()) return Vec(rd.rank(), 0);
  Vec c = central_direction(rd, P);
  Vec cand(rd.rank(), 0);
  for (int k = 1; k <= 128; ++k) {
    bool larger = false;
    for (int j = 0; j < rd.rank(); ++j) {
      cand[j] = nu[j] + k * c[j];
      if (cand[j] != nu[j]) larger = true;
    }
    if (larger && geq_P(rd, cand, mu, P)) return cand;
  }
  throw UserError("find_nu_after: no larger witness found");
}

Vec find_nu_adapted(const RootDatum& rd, const Vec& mu, const ParabolicChoice& P,
                    const Vec& lambda, int skip) {
  if (!rd.is_dominant(mu)) throw UserError("find_nu_adapted: mu must be dominant");
  if (P.n_roots.empty()) return Vec(rd.rank(), 0);
  Vec c = central_direction(rd, P);
  if (vec_zero(c)) throw UserError("find_nu_adapted: central direction vanished");
  Vec nu(rd.rank(), 0);
  for (int k = 1; k <= 128; ++k) {
    for (int j = 0; j < rd.rank(); ++j) nu[j] = k * c[j];
    bool ok = geq_P(rd, nu, mu, P);
    for (const Vec& a : P.n_roots) {
      if (!ok) break;
      Vec s = nu;
      for (size_t i = 0; i < s.size(); ++i) s[i] += lambda[i];
      if (dot(a, s) <= 0) ok = false;
    }
    if (ok) {
      if (skip == 0) return nu;
      --skip;
    }
  }
  throw UserError("find_nu_adapted: no multiple up to 128 satisfies the condition");
}

bool is_M_dominant(const RootDatum& rd, const Vec& lambda, const ParabolicChoice& P) {
  for (int i : P.levi)
    if (dot(rd.simple_root(i).ch, lambda) < 0) return false;
  return true;
}

paving::FiberResult mv_intersection_with_nu(const RootDatum& rd, const Vec& mu,
                                            const Vec& lambda, const ParabolicChoice& P,
                                            const Vec& nu, bool want_cells) {
  if (!rd.is_dominant(mu)) throw UserError("mv_intersection: mu must be dominant");
  if (!is_M_dominant(rd, lambda, P))
    throw UserError("mv_intersection: lambda must be M-dominant");
  // the witness must dominate both Omega(mu) and the queried lambda for the
  // fiber identification to name the intersection
  if (!geq_P(rd, nu, mu, P)) throw UserError("mv_intersection: nu is not >=_P mu");
  for (const Vec& a : P.n_roots) {
    Vec s = nu;
    for (size_t i = 0; i < s.size(); ++i) s[i] += lambda[i];
    if (dot(a, s) <= 0)
      throw UserError("mv_intersection: nu does not dominate the queried lambda");
  }
  std::vector<int> spherical;
  for (int i = 1; i <= rd.rank(); ++i) spherical.push_back(i);
  weyl::ParabolicData pd = weyl::parabolic_data(rd, spherical);
  Vec minus_nu_lambda(rd.rank()), minus_nu(rd.rank());
  for (int j = 0; j < rd.rank(); ++j) {
    minus_nu_lambda[j] = -nu[j] - lambda[j];
    minus_nu[j] = -nu[j];
  }
  std::vector<weyl::WeylElement> tuple = {weyl::translation(rd, mu),
                                          weyl::translation(rd, minus_nu_lambda)};
  return paving::parahoric_fiber(tuple, pd, weyl::translation(rd, minus_nu), {},
                                 want_cells);
}

MVResult mv_intersection(const RootDatum& rd, const Vec& mu, const Vec& lambda,
                         const ParabolicChoice& P, bool want_cells) {
  MVResult res;
  res.nu = find_nu_adapted(rd, mu, P, lambda);
  res.fiber = mv_intersection_with_nu(rd, mu, lambda, P, res.nu, want_cells);
  return res;
}

}  // namespace affpav::grass
