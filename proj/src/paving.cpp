#include "affpav/paving.hpp"

#include <algorithm>

#include "affpav/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace affpav::paving {

using weyl::inverse;
using weyl::is_right_descent;
using weyl::multiply;
using weyl::reduced_word;
using weyl::simple_affine;
using weyl::WeylHash;

PavingPolynomial PavingPolynomial::unit() {
  PavingPolynomial p;
  p.m_[{0, 0}] = BigInt(1);
  return p;
}

void PavingPolynomial::add_monomial(int a, int b, const BigInt& mult) {
  if (mult.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto [it, fresh] = m_.emplace(key, mult);
  if (!fresh) {
    it->second += mult;
    if (it->second.is_zero()) m_.erase(it);
  }
}

PavingPolynomial& PavingPolynomial::operator+=(const PavingPolynomial& o) {
  for (const auto& [ab, mult] : o.m_) add_monomial(ab.first, ab.second, mult);
  return *this;
}

PavingPolynomial PavingPolynomial::shifted(int a, int b) const {
  PavingPolynomial r;
  for (const auto& [ab, mult] : m_) r.m_[{ab.first + a, ab.second + b}] = mult;
  return r;
}

PavingPolynomial operator*(const PavingPolynomial& x, const PavingPolynomial& y) {
  PavingPolynomial r;
  for (const auto& [ab1, m1] : x.m_)
    for (const auto& [ab2, m2] : y.m_)
      r.add_monomial(ab1.first + ab2.first, ab1.second + ab2.second, m1 * m2);
  return r;
}

PolyQ PavingPolynomial::value() const {
  PolyQ r;
  for (const auto& [ab, mult] : m_)
    r += PolyQ::q_pow_times_qm1_pow(ab.first, ab.second).times_big(mult);
  return r;
}

BigInt PavingPolynomial::total_cells() const {
  BigInt r(0);
  for (const auto& [ab, mult] : m_) r += mult;
  return r;
}

BigInt PavingPolynomial::value_at_one() const {
  BigInt r(0);
  for (const auto& [ab, mult] : m_)
    if (ab.second == 0) r += mult;
  return r;
}

bool PavingPolynomial::pure_affine() const {
  for (const auto& [ab, mult] : m_)
    if (ab.second != 0) return false;
  return true;
}

int PavingCell::a() const {
  int n = 0;
  for (CellFactor f : factors) n += f == CellFactor::A1;
  return n;
}

int PavingCell::b() const {
  int n = 0;
  for (CellFactor f : factors) n += f == CellFactor::Gm;
  return n;
}

namespace {

void check_letters(const RootDatum& rd, const std::vector<int>& letters) {
  for (int i : letters)
    if (i < 0 || i > rd.rank()) throw UserError("word letter out of S_aff range");
}

bool in_affine_part(const WeylElement& v) { return v.rd->in_coroot_lattice(v.lambda); }

struct BackwardMemo {
  // memo[i] maps v to the fiber value of letters[0..i) over v
  std::vector<std::unordered_map<WeylElement, PavingPolynomial, WeylHash>> memo;
};

const PavingPolynomial& backward_value(const RootDatum& rd, const std::vector<int>& letters,
                                       int i, const WeylElement& v, Mode mode,
                                       BackwardMemo& bm) {
  auto& layer = bm.memo[i];
  auto it = layer.find(v);
  if (it != layer.end()) return it->second;
  PavingPolynomial out;
  if (i == 0) {
    if (v.is_identity()) out = PavingPolynomial::unit();
  } else if (weyl::length(v) <= i) {  // a prefix of length i cannot reach deeper
    int s = letters[i - 1];
    WeylElement vs = multiply(v, simple_affine(rd, s));
    bool descent = is_right_descent(v, s);  // vs < v
    if (mode == Mode::Uncompactified) {
      if (!descent) {
        out = backward_value(rd, letters, i - 1, vs, mode, bm).shifted(1, 0);
      } else {
        out = backward_value(rd, letters, i - 1, v, mode, bm).shifted(0, 1);
        out += backward_value(rd, letters, i - 1, vs, mode, bm);
      }
    } else {
      if (!descent) {
        out = backward_value(rd, letters, i - 1, v, mode, bm);
        out += backward_value(rd, letters, i - 1, vs, mode, bm).shifted(1, 0);
      } else {
        out = backward_value(rd, letters, i - 1, v, mode, bm).shifted(1, 0);
        out += backward_value(rd, letters, i - 1, vs, mode, bm);
      }
    }
  }
  return layer.emplace(v, std::move(out)).first->second;
}

void collect_cells(const RootDatum& rd, const std::vector<int>& letters, int i,
                   const WeylElement& v, Mode mode, BackwardMemo& bm,
                   std::vector<std::pair<CellFactor, WeylElement>>& stack,
                   std::vector<PavingCell>& out) {
  if (i == 0) {
    if (!v.is_identity()) return;
    PavingCell cell;
    cell.trace.push_back(v);
    for (size_t k = stack.size(); k-- > 0;) {
      cell.factors.push_back(stack[k].first);
      cell.trace.push_back(stack[k].second);
    }
    out.push_back(std::move(cell));
    return;
  }
  int s = letters[i - 1];
  WeylElement vs = multiply(v, simple_affine(rd, s));
  bool descent = is_right_descent(v, s);
  auto nonzero = [&](const WeylElement& u) {
    return !backward_value(rd, letters, i - 1, u, mode, bm).is_zero();
  };
  auto branch = [&](const WeylElement& pred, CellFactor f) {
    if (!nonzero(pred)) return;
    stack.emplace_back(f, v);
    collect_cells(rd, letters, i - 1, pred, mode, bm, stack, out);
    stack.pop_back();
  };
  if (mode == Mode::Uncompactified) {
    if (!descent) {
      branch(vs, CellFactor::A1);
    } else {
      branch(v, CellFactor::Gm);
      branch(vs, CellFactor::A0);
    }
  } else {
    if (!descent) {
      branch(v, CellFactor::A0);
      branch(vs, CellFactor::A1);
    } else {
      branch(v, CellFactor::A1);
      branch(vs, CellFactor::A0);
    }
  }
}

}  // namespace

FiberResult iwahori_fiber(const RootDatum& rd, const std::vector<int>& letters,
                          const WeylElement& v, Mode mode, bool want_cells) {
  check_letters(rd, letters);
  FiberResult res;
  if (!in_affine_part(v)) {  // Omega component mismatch: empty fiber
    if (want_cells) res.cells.emplace();
    return res;
  }
  BackwardMemo bm;
  bm.memo.resize(letters.size() + 1);
  res.value = backward_value(rd, letters, static_cast<int>(letters.size()), v, mode, bm);
  if (want_cells) {
    res.cells.emplace();
    std::vector<std::pair<CellFactor, WeylElement>> stack;
    collect_cells(rd, letters, static_cast<int>(letters.size()), v, mode, bm, stack,
                  *res.cells);
    PavingPolynomial check;
    for (const PavingCell& c : *res.cells) check.add_monomial(c.a(), c.b());
    if (!(check == res.value))
      throw InternalCheckError("iwahori_fiber: cell list does not sum to the value");
  }
  return res;
}

Distribution iwahori_distribution(const RootDatum& rd, const std::vector<int>& letters,
                                  Mode mode, bool want_cells) {
  check_letters(rd, letters);
  Distribution cur;
  WeylElement e = WeylElement::identity(rd);
  cur.values.emplace(e, PavingPolynomial::unit());
  if (want_cells) {
    PavingCell seed;
    seed.trace.push_back(e);
    cur.cells[e].push_back(std::move(seed));
  }
  for (int s : letters) {
    Distribution next;
    WeylElement sgen = simple_affine(rd, s);
    auto push = [&](const WeylElement& from, const WeylElement& to, int da, int db,
                    CellFactor f, const PavingPolynomial& val) {
      auto [it, fresh] = next.values.emplace(to, val.shifted(da, db));
      if (!fresh) it->second += val.shifted(da, db);
      if (want_cells) {
        for (const PavingCell& c : cur.cells[from]) {
          PavingCell nc = c;
          nc.factors.push_back(f);
          nc.trace.push_back(to);
          next.cells[to].push_back(std::move(nc));
        }
      }
    };
    for (const auto& [u, val] : cur.values) {
      WeylElement us = multiply(u, sgen);
      bool descent = is_right_descent(u, s);  // us < u
      if (mode == Mode::Uncompactified) {
        if (descent) {
          push(u, us, 1, 0, CellFactor::A1, val);
          push(u, u, 0, 1, CellFactor::Gm, val);
        } else {
          push(u, us, 0, 0, CellFactor::A0, val);
        }
      } else {
        if (descent) {
          push(u, us, 1, 0, CellFactor::A1, val);
          push(u, u, 1, 0, CellFactor::A1, val);
        } else {
          push(u, us, 0, 0, CellFactor::A0, val);
          push(u, u, 0, 0, CellFactor::A0, val);
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::unordered_map<WeylElement, PavingPolynomial, WeylHash> iwahori_transfer(
    const RootDatum& rd, const std::vector<int>& letters, const WeylElement& target,
    Mode mode) {
  check_letters(rd, letters);
  std::unordered_map<WeylElement, PavingPolynomial, WeylHash> cur;
  cur.emplace(target, PavingPolynomial::unit());
  for (size_t k = letters.size(); k-- > 0;) {
    int s = letters[k];
    WeylElement sgen = simple_affine(rd, s);
    std::unordered_map<WeylElement, PavingPolynomial, WeylHash> prev;
    auto add = [&](const WeylElement& u, const PavingPolynomial& v) {
      auto [it, fresh] = prev.emplace(u, v);
      if (!fresh) it->second += v;
    };
    for (const auto& [t, val] : cur) {
      WeylElement ts = multiply(t, sgen);
      bool t_descent = is_right_descent(t, s);  // ts < t
      if (mode == Mode::Uncompactified) {
        // sources: ts always (move), t itself only on a fold
        add(ts, t_descent ? val : val.shifted(1, 0));
        if (t_descent) add(t, val.shifted(0, 1));
      } else {
        add(ts, t_descent ? val : val.shifted(1, 0));
        add(t, t_descent ? val.shifted(1, 0) : val);
      }
    }
    cur = std::move(prev);
  }
  return cur;
}

NormalizedTuple normalize_tuple(const RootDatum& rd, const std::vector<WeylElement>& tuple) {
  // T_{w_1}...T_{w_r} = T_{tau_1...tau_r} * prod_i T of the W_aff part of w_i
  // conjugated by (tau_{i+1}...tau_r)^{-1}; conjugation by Omega permutes S_aff.
  NormalizedTuple out;
  std::vector<weyl::ReducedWord> words;
  words.reserve(tuple.size());
  for (const WeylElement& w : tuple) words.push_back(reduced_word(w));
  WeylElement c = WeylElement::identity(rd);  // tau_{i+1} ... tau_r
  std::vector<std::vector<int>> blocks(tuple.size());
  for (size_t i = tuple.size(); i-- > 0;) {
    WeylElement cinv = inverse(c);
    std::vector<int>& blk = blocks[i];
    blk.reserve(words[i].letters.size());
    for (int j : words[i].letters) blk.push_back(weyl::omega_conjugate(cinv, j));
    c = multiply(words[i].omega_part, c);
  }
  out.omega = c;
  for (const auto& blk : blocks)
    out.letters.insert(out.letters.end(), blk.begin(), blk.end());
  return out;
}

namespace {

struct Entry {
  PavingPolynomial val;
  std::vector<PavingCell> cells;
};

using State = std::unordered_map<WeylElement, Entry, WeylHash>;

std::vector<WeylElement> factor_cosets(const WeylElement& w, const ParabolicData& pd,
                                       bool closed) {
  if (!closed) return {w};
  return weyl::double_cosets_below(w, pd);
}

}  // namespace

FiberResult parahoric_fiber(const std::vector<WeylElement>& tuple, const ParabolicData& pd,
                            const WeylElement& x, const std::vector<bool>& closed_flags,
                            bool want_cells) {
  if (tuple.empty()) throw UserError("parahoric_fiber: empty tuple");
  if (!closed_flags.empty() && closed_flags.size() != tuple.size())
    throw UserError("parahoric_fiber: closed flag count mismatch");
  const RootDatum& rd = *tuple[0].rd;
  auto closed_at = [&](size_t i) { return !closed_flags.empty() && closed_flags[i]; };
  WeylElement xhat = weyl::right_minimal_rep(x, pd.generators);
  WeylElement e = WeylElement::identity(rd);

  // step 1: the fiber of Y_P(w_1) -> X_P over y e_P is a reduced point iff
  // y W_P lies in the double coset (union of double cosets when closed)
  State state;
  for (const WeylElement& d : factor_cosets(tuple[0], pd, closed_at(0))) {
    weyl::CosetNormalForms nf = weyl::coset_normal_forms(d, pd);
    for (const WeylElement& eta : nf.eta_list) {
      Entry& en = state[eta];
      en.val += PavingPolynomial::unit();
      if (want_cells) {
        PavingCell cell;
        cell.trace = {e, eta};
        en.cells.push_back(std::move(cell));
      }
    }
  }

  for (size_t step = 1; step < tuple.size(); ++step) {
    // right-minimal eta with W_P w^{-1} W_P = |_| eta W_P (unions over the
    // lower double cosets when the factor is taken closed)
    std::vector<WeylElement> etas;
    for (const WeylElement& d : factor_cosets(tuple[step], pd, closed_at(step))) {
      weyl::CosetNormalForms nf = weyl::coset_normal_forms(inverse(d), pd);
      etas.insert(etas.end(), nf.eta_list.begin(), nf.eta_list.end());
    }

    const bool last = step + 1 == tuple.size();
    if (last && !want_cells) {
      // evaluate at xhat only, sharing the long eta^{-1} suffix of each word
      // through one backward transfer pass per (eta, Omega target)
      PavingPolynomial total;
      for (const WeylElement& eta : etas) {
        weyl::ReducedWord etainv = reduced_word(inverse(eta));
        const WeylElement& tau = etainv.omega_part;
        WeylElement tauinv = inverse(tau);
        std::unordered_map<WeylElement,
                           std::unordered_map<WeylElement, PavingPolynomial, WeylHash>,
                           WeylHash>
            transfers;  // keyed by the letter-level target
        for (const auto& [y, en] : state) {
          weyl::ReducedWord wy = reduced_word(y);
          WeylElement tau_total = multiply(wy.omega_part, tau);
          WeylElement target = multiply(inverse(tau_total), xhat);
          if (!in_affine_part(target)) continue;
          auto tit = transfers.find(target);
          if (tit == transfers.end())
            tit = transfers
                      .emplace(target, iwahori_transfer(rd, etainv.letters, target,
                                                        Mode::Uncompactified))
                      .first;
          const auto& K = tit->second;
          if (K.empty()) continue;
          // prefix letters: word of y conjugated by tau^{-1}, then the word of
          // tau u^{-1} tau^{-1} for u in W_P
          std::vector<int> ybase;
          ybase.reserve(wy.letters.size());
          for (int j : wy.letters) ybase.push_back(weyl::omega_conjugate(tauinv, j));
          for (const WeylElement& u : pd.elements) {
            std::vector<int> prefix = ybase;
            for (int j : reduced_word(inverse(u)).letters)
              prefix.push_back(weyl::omega_conjugate(tauinv, j));
            Distribution D = iwahori_distribution(rd, prefix, Mode::Uncompactified);
            PavingPolynomial n_val;
            for (const auto& [v, dv] : D.values) {
              auto kit = K.find(v);
              if (kit != K.end()) n_val += dv * kit->second;
            }
            if (!n_val.is_zero()) total += en.val * n_val;
          }
        }
      }
      FiberResult res;
      res.value = std::move(total);
      return res;
    }

    State next;
    for (const auto& [y, en] : state) {
      for (const WeylElement& eta : etas) {
        for (const WeylElement& u : pd.elements) {
          WeylElement z = inverse(multiply(eta, u));
          NormalizedTuple nt = normalize_tuple(rd, {y, z});
          Distribution D = iwahori_distribution(rd, nt.letters, Mode::Uncompactified,
                                                want_cells);
          for (const auto& [v, dv] : D.values) {
            WeylElement vhat = multiply(nt.omega, v);
            if (!weyl::is_right_minimal(vhat, pd.generators)) continue;
            if (last && !(vhat == xhat)) continue;
            Entry& out = next[vhat];
            out.val += en.val * dv;
            if (want_cells) {
              for (const PavingCell& base : en.cells) {
                for (const PavingCell& gal : D.cells[v]) {
                  PavingCell merged;
                  merged.factors = base.factors;
                  merged.factors.insert(merged.factors.end(), gal.factors.begin(),
                                        gal.factors.end());
                  merged.trace = base.trace;
                  merged.trace.push_back(vhat);
                  next[vhat].cells.push_back(std::move(merged));
                }
              }
            }
          }
        }
      }
    }
    state = std::move(next);
  }

  FiberResult res;
  if (want_cells) res.cells.emplace();
  auto it = state.find(xhat);
  if (it != state.end()) {
    res.value = it->second.val;
    if (want_cells) {
      *res.cells = it->second.cells;
      PavingPolynomial check;
      for (const PavingCell& c : *res.cells) check.add_monomial(c.a(), c.b());
      if (!(check == res.value))
        throw InternalCheckError("parahoric_fiber: cell list does not sum to the value");
    }
  }
  return res;
}

std::map<std::pair<int, int>, BigInt> mab_table(const PavingPolynomial& p) { return p.mab(); }

std::vector<PolyQ> batch_fiber_values_serial(const RootDatum& rd,
                                             const std::vector<FiberJob>& jobs) {
  std::vector<PolyQ> out(jobs.size());
  for (size_t k = 0; k < jobs.size(); ++k)
    out[k] = iwahori_fiber(rd, jobs[k].letters, jobs[k].v, jobs[k].mode).value.value();
  return out;
}

std::vector<PolyQ> batch_fiber_values(const RootDatum& rd, const std::vector<FiberJob>& jobs) {
  std::vector<PolyQ> out(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < static_cast<long long>(jobs.size()); ++k)
    out[k] = iwahori_fiber(rd, jobs[k].letters, jobs[k].v, jobs[k].mode).value.value();
  return out;
}

}  // namespace affpav::paving
