#include "affpav/rootdata.hpp"

#include <algorithm>
#include <set>

#include "affpav/errors.hpp"

namespace affpav::rootdata {

Mat Mat::identity(int n) {
  Mat m;
  m.n = n;
  m.a.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Mat::apply(const Vec& v) const {
  Vec r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += at(i, j) * v[j];
  return r;
}

Vec Mat::apply_transpose(const Vec& v) const {
  Vec r(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) r[j] += at(i, j) * v[i];
  return r;
}

Mat operator*(const Mat& x, const Mat& y) {
  Mat r;
  r.n = x.n;
  r.a.assign(static_cast<size_t>(x.n) * x.n, 0);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      long long v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

long long dot(const Vec& a, const Vec& b) {
  long long r = 0;
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

namespace {

Mat cartan_matrix(char series, int rank) {
  Mat c = Mat::identity(rank);
  for (int i = 0; i < rank; ++i) c.at(i, i) = 2;
  auto link = [&](int i, int j, long long aij, long long aji) {
    c.at(i, j) = aij;
    c.at(j, i) = aji;
  };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':  // alpha_rank short: <alpha_{n-1}, alpha_n^vee> = -2
      if (rank < 2) throw UserError("series B requires rank >= 2");
      for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1, -1);
      link(rank - 2, rank - 1, -2, -1);
      break;
    case 'C':  // alpha_rank long: transpose of B
      if (rank < 2) throw UserError("series C requires rank >= 2");
      for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1, -1);
      link(rank - 2, rank - 1, -1, -2);
      break;
    case 'D':
      if (rank < 3) throw UserError("series D requires rank >= 3");
      for (int i = 0; i + 3 < rank; ++i) link(i, i + 1, -1, -1);
      link(rank - 3, rank - 2, -1, -1);
      link(rank - 3, rank - 1, -1, -1);
      break;
    case 'G':
      if (rank != 2) throw UserError("series G requires rank 2");
      link(0, 1, -1, -3);
      break;
    default:
      throw UserError(std::string("unsupported series '") + series + "'");
  }
  return c;
}

long long det_int(Mat m) {
  // fraction-free Gaussian elimination (Bareiss); matrices are tiny
  int n = m.n;
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

Mat adjugate(const Mat& m) {
  // adj(M) = det * M^{-1}; computed by cofactors (rank <= 8)
  int n = m.n;
  Mat adj;
  adj.n = n;
  adj.a.assign(static_cast<size_t>(n) * n, 0);
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat minor;
      minor.n = n - 1;
      minor.a.reserve(static_cast<size_t>(n - 1) * (n - 1));
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0; c < n; ++c) {
          if (c == j) continue;
          minor.a.push_back(m.at(r, c));
        }
      }
      long long cof = det_int(minor);
      if ((i + j) % 2) cof = -cof;
      adj.at(j, i) = cof;  // transpose of cofactor matrix
    }
  return adj;
}

}  // namespace

std::shared_ptr<const RootDatum> RootDatum::make(char series, int rank, Isogeny isogeny) {
  if (rank < 1 || rank > 8) throw UserError("rank must be between 1 and 8");
  if (series == 'A' && rank < 1) throw UserError("series A requires rank >= 1");
  auto rd = std::shared_ptr<RootDatum>(new RootDatum());
  rd->series_ = series;
  rd->rank_ = rank;
  rd->isogeny_ = isogeny;
  rd->cartan_ = cartan_matrix(series, rank);
  rd->build();
  return rd;
}

std::shared_ptr<const RootDatum> RootDatum::parse(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw UserError("group spec must look like B2:adjoint or A1:sc");
  std::string type = spec.substr(0, colon), iso = spec.substr(colon + 1);
  if (type.size() < 2) throw UserError("bad group type '" + type + "'");
  char series = type[0];
  int rank = 0;
  for (size_t i = 1; i < type.size(); ++i) {
    if (type[i] < '0' || type[i] > '9') throw UserError("bad rank in '" + type + "'");
    rank = rank * 10 + (type[i] - '0');
  }
  Isogeny isogeny;
  if (iso == "sc")
    isogeny = Isogeny::SimplyConnected;
  else if (iso == "adjoint")
    isogeny = Isogeny::Adjoint;
  else
    throw UserError("isogeny must be 'sc' or 'adjoint', got '" + iso + "'");
  return make(series, rank, isogeny);
}

std::string RootDatum::spec_string() const {
  return std::string(1, series_) + std::to_string(rank_) +
         (isogeny_ == Isogeny::SimplyConnected ? ":sc" : ":adjoint");
}

void RootDatum::build() {
  const int n = rank_;

  // simple roots/coroots in the chosen lattice coordinates
  std::vector<Root> simples(n);
  for (int i = 0; i < n; ++i) {
    Root r;
    r.ch.assign(n, 0);
    r.cov.assign(n, 0);
    r.simple_coeffs.assign(n, 0);
    r.simple_coeffs[i] = 1;
    r.height = 1;
    r.positive = true;
    if (isogeny_ == Isogeny::SimplyConnected) {
      for (int j = 0; j < n; ++j) r.ch[j] = cartan_.at(i, j);
      r.cov[i] = 1;
    } else {
      r.ch[i] = 1;
      for (int j = 0; j < n; ++j) r.cov[j] = cartan_.at(j, i);
    }
    simples[i] = std::move(r);
  }

  // close the simple roots under simple reflections
  std::map<Vec, Root> found;
  std::vector<Vec> queue;
  for (auto& r : simples) {
    found[r.ch] = r;
    queue.push_back(r.ch);
  }
  auto pair_with_simple_coroot = [&](const Vec& ch, int i) {
    return dot(ch, simples[i].cov);
  };
  while (!queue.empty()) {
    Vec ch = queue.back();
    queue.pop_back();
    Root cur = found[ch];
    for (int i = 0; i < n; ++i) {
      long long k = pair_with_simple_coroot(cur.ch, i);
      Root img;
      img.ch = cur.ch;
      img.cov = cur.cov;
      img.simple_coeffs = cur.simple_coeffs;
      long long kc = dot(simples[i].ch, cur.cov);  // <alpha_i, beta^vee>
      for (int j = 0; j < n; ++j) {
        img.ch[j] -= k * simples[i].ch[j];
        img.cov[j] -= kc * simples[i].cov[j];
      }
      img.simple_coeffs[i] -= k;
      img.height = 0;
      for (long long m : img.simple_coeffs) img.height += static_cast<int>(m);
      if (found.emplace(img.ch, img).second) queue.push_back(img.ch);
    }
  }

  // positivity from the simple-root expansion
  std::vector<Root> pos, neg;
  for (auto& [ch, r] : found) {
    bool nonneg = true, nonpos = true;
    for (long long m : r.simple_coeffs) {
      if (m > 0) nonpos = false;
      if (m < 0) nonneg = false;
    }
    if (nonneg == nonpos) throw InternalCheckError("mixed-sign root in closure");
    Root rr = r;
    rr.positive = nonneg;
    (nonneg ? pos : neg).push_back(std::move(rr));
  }
  if (pos.size() != neg.size()) throw InternalCheckError("asymmetric root closure");

  auto order = [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.simple_coeffs < b.simple_coeffs;
  };
  std::sort(pos.begin(), pos.end(), order);
  std::sort(neg.begin(), neg.end(), [&](const Root& a, const Root& b) {
    return order(b, a);  // mirrored
  });
  num_positive_ = static_cast<int>(pos.size());
  roots_ = std::move(pos);
  roots_.insert(roots_.end(), neg.begin(), neg.end());
  for (int k = 0; k < static_cast<int>(roots_.size()); ++k)
    root_lookup_[roots_[k].ch] = k;

  simple_index_.assign(n + 1, -1);
  for (int i = 0; i < n; ++i) simple_index_[i + 1] = root_lookup_.at(simples[i].ch);

  theta_index_ = num_positive_ - 1;  // maximal height after sorting
  // connectedness check: a second root of maximal height means a reducible
  // diagram slipped through the series constructor (cannot happen), but a
  // disconnected diagram shows up as theta not pairing with some simple
  two_rho_.assign(n, 0);
  for (int k = 0; k < num_positive_; ++k)
    for (int j = 0; j < n; ++j) two_rho_[j] += roots_[k].ch[j];

  simple_refl_.clear();
  for (int i = 0; i < n; ++i) {
    Mat m = Mat::identity(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        m.at(r, c) -= simples[i].cov[r] * simples[i].ch[c];
    simple_refl_.push_back(std::move(m));
  }
  {
    const Root& th = roots_[theta_index_];
    Mat m = Mat::identity(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m.at(r, c) -= th.cov[r] * th.ch[c];
    theta_refl_ = std::move(m);
  }

  // Q^vee membership data: columns are the simple coroots
  Mat c;
  c.n = n;
  c.a.assign(static_cast<size_t>(n) * n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) c.at(i, j) = simples[j].cov[i];
  coroot_det_ = det_int(c);
  if (coroot_det_ == 0) throw InternalCheckError("degenerate coroot lattice");
  coroot_adjugate_ = adjugate(c);
}

long long RootDatum::pair(const Vec& ch, const Vec& cochar) const {
  if (static_cast<int>(ch.size()) != rank_ || static_cast<int>(cochar.size()) != rank_)
    throw UserError("pairing: dimension mismatch");
  return dot(ch, cochar);
}

int RootDatum::root_index(const Vec& ch) const {
  auto it = root_lookup_.find(ch);
  return it == root_lookup_.end() ? -1 : it->second;
}

bool RootDatum::is_positive_root_ch(const Vec& ch) const {
  int k = root_index(ch);
  if (k < 0) throw InternalCheckError("vector is not a root");
  return roots_[k].positive;
}

bool RootDatum::in_coroot_lattice(const Vec& v) const {
  Vec w = coroot_adjugate_.apply(v);
  for (long long x : w)
    if (x % coroot_det_ != 0) return false;
  return true;
}

bool RootDatum::is_dominant(const Vec& cochar) const {
  for (int i = 1; i <= rank_; ++i)
    if (dot(simple_root(i).ch, cochar) < 0) return false;
  return true;
}

bool operator==(const RootDatum& a, const RootDatum& b) {
  return a.series_ == b.series_ && a.rank_ == b.rank_ && a.isogeny_ == b.isogeny_ &&
         a.cartan_ == b.cartan_ && a.num_positive_ == b.num_positive_ &&
         [&] {
           if (a.roots_.size() != b.roots_.size()) return false;
           for (size_t i = 0; i < a.roots_.size(); ++i)
             if (a.roots_[i].ch != b.roots_[i].ch || a.roots_[i].cov != b.roots_[i].cov)
               return false;
           return true;
         }();
}

}  // namespace affpav::rootdata
