#include "affpav/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "affpav/errors.hpp"

namespace affpav::weyl {

namespace {

void require_same_datum(const WeylElement& x, const WeylElement& y) {
  if (x.rd == y.rd) return;
  if (x.rd && y.rd && *x.rd == *y.rd) return;
  throw UserError("Weyl elements belong to different root data");
}

// Affine root (ch, n) as the functional <ch, .> + n.  Sign of x^{-1}.a drives
// descent tests; positivity threshold is 0 for positive ch and 1 for negative.
struct AffineRoot {
  Vec ch;
  long long n = 0;
};

bool affine_negative(const RootDatum& rd, const AffineRoot& a) {
  bool pos = rd.is_positive_root_ch(a.ch);
  return pos ? a.n <= -1 : a.n <= 0;
}

AffineRoot simple_affine_root(const RootDatum& rd, int i) {
  if (i == 0) {
    AffineRoot a;
    a.ch = rd.highest_root().ch;
    for (auto& c : a.ch) c = -c;
    a.n = 1;
    return a;
  }
  return AffineRoot{rd.simple_root(i).ch, 0};
}

// action of x = t_lambda w on affine roots: (ch, n) -> (w.ch, n - <w.ch, lambda>)
AffineRoot act_affine(const WeylElement& x, const AffineRoot& a) {
  AffineRoot r;
  r.ch = x.winv.apply_transpose(a.ch);
  r.n = a.n - rootdata::dot(r.ch, x.lambda);
  return r;
}

}  // namespace

size_t WeylHash::operator()(const WeylElement& x) const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](long long v) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (long long v : x.lambda) mix(v);
  for (long long v : x.w.a) mix(v);
  return h;
}

WeylElement WeylElement::identity(const RootDatum& rd) {
  WeylElement e;
  e.rd = &rd;
  e.lambda.assign(rd.rank(), 0);
  e.w = Mat::identity(rd.rank());
  e.winv = e.w;
  return e;
}

bool WeylElement::is_identity() const {
  for (long long v : lambda)
    if (v != 0) return false;
  return w == Mat::identity(rd->rank());
}

Vec WeylElement::act(const Vec& v) const {
  Vec r = w.apply(v);
  for (int i = 0; i < rd->rank(); ++i) r[i] += lambda[i];
  return r;
}

WeylElement multiply(const WeylElement& x, const WeylElement& y) {
  require_same_datum(x, y);
  WeylElement r;
  r.rd = x.rd;
  r.lambda = x.w.apply(y.lambda);
  for (size_t i = 0; i < r.lambda.size(); ++i) r.lambda[i] += x.lambda[i];
  r.w = x.w * y.w;
  r.winv = y.winv * x.winv;
  return r;
}

WeylElement inverse(const WeylElement& x) {
  WeylElement r;
  r.rd = x.rd;
  r.lambda = x.winv.apply(x.lambda);
  for (auto& v : r.lambda) v = -v;
  r.w = x.winv;
  r.winv = x.w;
  return r;
}

WeylElement translation(const RootDatum& rd, const Vec& lambda) {
  if (static_cast<int>(lambda.size()) != rd.rank())
    throw UserError("translation: wrong coordinate count");
  WeylElement r = WeylElement::identity(rd);
  r.lambda = lambda;
  return r;
}

WeylElement simple_affine(const RootDatum& rd, int i) {
  if (i < 0 || i > rd.rank()) throw UserError("affine generator index out of range");
  WeylElement r;
  r.rd = &rd;
  if (i == 0) {
    r.lambda = rd.highest_root().cov;
    r.w = rd.theta_reflection();
  } else {
    r.lambda.assign(rd.rank(), 0);
    r.w = rd.simple_reflection(i);
  }
  r.winv = r.w;
  return r;
}

int num_affine_generators(const RootDatum& rd) { return rd.rank() + 1; }

long long length(const WeylElement& x) {
  // ell(t_lambda w) = sum over beta > 0 of | <w.beta, lambda> + [w.beta < 0] |
  const RootDatum& rd = *x.rd;
  long long total = 0;
  for (int k = 0; k < rd.num_positive(); ++k) {
    Vec wb = x.winv.apply_transpose(rd.roots()[k].ch);
    long long v = rootdata::dot(wb, x.lambda);
    if (!rd.is_positive_root_ch(wb)) v += 1;
    total += std::llabs(v);
  }
  return total;
}

bool is_right_descent(const WeylElement& x, int i) {
  AffineRoot a = simple_affine_root(*x.rd, i);
  return affine_negative(*x.rd, act_affine(x, a));
}

bool is_left_descent(const WeylElement& x, int i) {
  // ell(s_a x) < ell(x)  iff  x^{-1}.a < 0; x^{-1}.(ch,n) = (w^{-1}ch, n + <ch,lambda>)
  AffineRoot a = simple_affine_root(*x.rd, i);
  AffineRoot r;
  r.ch = x.w.apply_transpose(a.ch);
  r.n = a.n + rootdata::dot(a.ch, x.lambda);
  return affine_negative(*x.rd, r);
}

ReducedWord reduced_word(const WeylElement& x) {
  ReducedWord rw;
  WeylElement cur = x;
  const int m = num_affine_generators(*x.rd);
  std::vector<int> rev;
  for (;;) {
    int d = -1;
    for (int i = 0; i < m; ++i)
      if (is_right_descent(cur, i)) {
        d = i;
        break;
      }
    if (d < 0) break;
    rev.push_back(d);
    cur = multiply(cur, simple_affine(*x.rd, d));
  }
  rw.omega_part = cur;
  rw.letters.assign(rev.rbegin(), rev.rend());
  return rw;
}

WeylElement from_word(const RootDatum& rd, const std::vector<int>& letters) {
  WeylElement r = WeylElement::identity(rd);
  for (int i : letters) r = multiply(r, simple_affine(rd, i));
  return r;
}

bool is_length_zero(const WeylElement& x) {
  const int m = num_affine_generators(*x.rd);
  for (int i = 0; i < m; ++i)
    if (is_right_descent(x, i)) return false;
  return true;
}

WeylElement omega_part(const WeylElement& x) { return reduced_word(x).omega_part; }

std::vector<WeylElement> omega_elements(const RootDatum& rd) {
  // Omega is isomorphic to the finite group X_* / Q^vee, generated by the
  // images of the basis vectors; close under them with membership dedup.
  std::vector<Vec> class_reps{Vec(rd.rank(), 0)};
  auto known = [&](const Vec& cand) {
    for (const Vec& c : class_reps) {
      Vec d = cand;
      for (int i = 0; i < rd.rank(); ++i) d[i] -= c[i];
      if (rd.in_coroot_lattice(d)) return true;
    }
    return false;
  };
  for (size_t k = 0; k < class_reps.size(); ++k)
    for (int i = 0; i < rd.rank(); ++i) {
      Vec cand = class_reps[k];
      cand[i] += 1;
      if (!known(cand)) class_reps.push_back(std::move(cand));
    }
  std::vector<WeylElement> reps;
  for (const Vec& c : class_reps) reps.push_back(omega_part(translation(rd, c)));
  std::sort(reps.begin(), reps.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.is_identity() != b.is_identity()) return a.is_identity();
    return a < b;
  });
  return reps;
}

int omega_conjugate(const WeylElement& tau, int i) {
  if (!is_length_zero(tau)) throw UserError("omega_conjugate: element has nonzero length");
  WeylElement conj = multiply(multiply(tau, simple_affine(*tau.rd, i)), inverse(tau));
  const int m = num_affine_generators(*tau.rd);
  for (int j = 0; j < m; ++j)
    if (conj == simple_affine(*tau.rd, j)) return j;
  throw InternalCheckError("omega conjugation left S_aff");
}

bool same_omega_component(const WeylElement& x, const WeylElement& y) {
  require_same_datum(x, y);
  // x W_aff = y W_aff iff the translation part of y^{-1} x lies in Q^vee
  WeylElement d = multiply(inverse(y), x);
  return x.rd->in_coroot_lattice(d.lambda);
}

bool bruhat_leq(const WeylElement& x, const WeylElement& y) {
  require_same_datum(x, y);
  if (!same_omega_component(x, y)) return false;
  WeylElement a = x, b = y;
  long long la = length(a), lb = length(b);
  const int m = num_affine_generators(*x.rd);
  while (lb > 0) {
    if (la > lb) return false;
    if (la == lb) return a == b;
    int d = -1;
    for (int i = 0; i < m; ++i)
      if (is_right_descent(b, i)) {
        d = i;
        break;
      }
    WeylElement s = simple_affine(*x.rd, d);
    b = multiply(b, s);
    --lb;
    if (is_right_descent(a, d)) {
      a = multiply(a, s);
      --la;
    }
  }
  return a == b;
}

WeylElement demazure(const WeylElement& x, const WeylElement& y) {
  require_same_datum(x, y);
  ReducedWord wy = reduced_word(y);
  WeylElement acc = multiply(x, wy.omega_part);
  for (int i : wy.letters)
    if (!is_right_descent(acc, i)) acc = multiply(acc, simple_affine(*x.rd, i));
  return acc;
}

std::vector<WeylElement> bruhat_interval_below(const WeylElement& y) {
  ReducedWord wy = reduced_word(y);
  std::unordered_set<WeylElement, WeylHash> interval;
  interval.insert(wy.omega_part);
  for (int i : wy.letters) {
    WeylElement s = simple_affine(*y.rd, i);
    std::vector<WeylElement> add;
    add.reserve(interval.size());
    for (const WeylElement& z : interval) add.push_back(multiply(z, s));
    for (auto& z : add) interval.insert(std::move(z));
  }
  std::vector<WeylElement> out(interval.begin(), interval.end());
  std::sort(out.begin(), out.end());
  return out;
}

ParabolicData parabolic_data(const RootDatum& rd, std::vector<int> generators,
                             size_t element_cap) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (int i : generators)
    if (i < 0 || i > rd.rank()) throw UserError("parabolic generator index out of range");

  ParabolicData pd;
  pd.generators = generators;
  std::unordered_set<WeylElement, WeylHash> seen;
  std::vector<WeylElement> queue{WeylElement::identity(rd)};
  seen.insert(queue[0]);
  while (!queue.empty()) {
    WeylElement cur = queue.back();
    queue.pop_back();
    for (int i : generators) {
      WeylElement nxt = multiply(cur, simple_affine(rd, i));
      if (seen.insert(nxt).second) {
        if (seen.size() > element_cap)
          throw CapExceeded("parabolic subgroup not of finite type (cap exceeded)");
        queue.push_back(nxt);
      }
    }
  }
  pd.elements.assign(seen.begin(), seen.end());
  std::sort(pd.elements.begin(), pd.elements.end(), [](const WeylElement& a, const WeylElement& b) {
    long long la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  pd.length_multiset.reserve(pd.elements.size());
  for (const auto& e : pd.elements) pd.length_multiset.push_back(length(e));
  pd.longest = pd.elements.back();
  if (pd.elements.size() >= 2 &&
      pd.length_multiset[pd.elements.size() - 2] == pd.length_multiset.back())
    throw InternalCheckError("parabolic subgroup without a unique longest element");
  return pd;
}

bool is_right_minimal(const WeylElement& x, const std::vector<int>& gens) {
  for (int i : gens)
    if (is_right_descent(x, i)) return false;
  return true;
}

WeylElement right_minimal_rep(WeylElement x, const std::vector<int>& gens) {
  for (;;) {
    int d = -1;
    for (int i : gens)
      if (is_right_descent(x, i)) {
        d = i;
        break;
      }
    if (d < 0) return x;
    x = multiply(x, simple_affine(*x.rd, d));
  }
}

WeylElement double_coset_min(const WeylElement& x, const ParabolicData& pd) {
  WeylElement cur = x;
  for (;;) {
    bool moved = false;
    for (int i : pd.generators) {
      if (is_right_descent(cur, i)) {
        cur = multiply(cur, simple_affine(*x.rd, i));
        moved = true;
      } else if (is_left_descent(cur, i)) {
        cur = multiply(simple_affine(*x.rd, i), cur);
        moved = true;
      }
    }
    if (!moved) return cur;
  }
}

WeylElement double_coset_max(const WeylElement& x, const ParabolicData& pd) {
  WeylElement cur = x;
  for (;;) {
    bool moved = false;
    for (int i : pd.generators) {
      if (!is_right_descent(cur, i)) {
        cur = multiply(cur, simple_affine(*x.rd, i));
        moved = true;
      } else if (!is_left_descent(cur, i)) {
        cur = multiply(simple_affine(*x.rd, i), cur);
        moved = true;
      }
    }
    if (!moved) return cur;
  }
}

CosetNormalForms coset_normal_forms(const WeylElement& x, const ParabolicData& pd) {
  CosetNormalForms nf;
  nf.min_rep = double_coset_min(x, pd);
  nf.max_rep = double_coset_max(x, pd);
  std::unordered_set<WeylElement, WeylHash> etas;
  for (const WeylElement& u : pd.elements)
    etas.insert(right_minimal_rep(multiply(u, x), pd.generators));
  nf.eta_list.assign(etas.begin(), etas.end());
  std::sort(nf.eta_list.begin(), nf.eta_list.end(),
            [](const WeylElement& a, const WeylElement& b) {
              long long la = length(a), lb = length(b);
              if (la != lb) return la < lb;
              return a < b;
            });
  return nf;
}

bool double_coset_leq(const WeylElement& x, const WeylElement& y, const ParabolicData& pd) {
  return bruhat_leq(double_coset_max(x, pd), double_coset_max(y, pd));
}

std::vector<WeylElement> double_cosets_below(const WeylElement& w, const ParabolicData& pd) {
  WeylElement top = double_coset_max(w, pd);
  std::unordered_set<WeylElement, WeylHash> reps;
  for (const WeylElement& z : bruhat_interval_below(top))
    reps.insert(double_coset_max(z, pd));
  std::vector<WeylElement> out(reps.begin(), reps.end());
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    long long la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

}  // namespace affpav::weyl
