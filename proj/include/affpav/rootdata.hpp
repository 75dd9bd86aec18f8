#ifndef AFFPAV_ROOTDATA_HPP
#define AFFPAV_ROOTDATA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace affpav::rootdata {

using Vec = std::vector<long long>;

// Small dense integer matrix, row-major, acting on cocharacter coordinates.
struct Mat {
  int n = 0;
  std::vector<long long> a;

  static Mat identity(int n);
  long long& at(int i, int j) { return a[i * n + j]; }
  long long at(int i, int j) const { return a[i * n + j]; }
  Vec apply(const Vec& v) const;            // v -> M v
  Vec apply_transpose(const Vec& v) const;  // v -> M^T v
  friend Mat operator*(const Mat& x, const Mat& y);
  friend bool operator==(const Mat& x, const Mat& y) { return x.n == y.n && x.a == y.a; }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
  friend bool operator<(const Mat& x, const Mat& y) { return x.a < y.a; }
};

long long dot(const Vec& a, const Vec& b);

enum class Isogeny { SimplyConnected, Adjoint };

struct Root {
  Vec ch;             // character coordinates (dual basis of the lattice basis)
  Vec cov;            // coordinates of the coroot in the lattice basis
  Vec simple_coeffs;  // expansion in the simple roots
  bool positive = false;
  int height = 0;     // signed sum of simple_coeffs
};

/*
  Finite based root datum of an irreducible series (A,B,C,D,G2) with the
  cocharacter lattice fixed by the isogeny choice: X_* is the coroot lattice
  for :sc and the coweight lattice for :adjoint.  Cocharacters are integer
  vectors in the lattice basis, characters live in the dual basis, and the
  canonical pairing is the dot product.  Immutable after construction.
*/
class RootDatum {
 public:
  static std::shared_ptr<const RootDatum> make(char series, int rank, Isogeny isogeny);
  // Parses "B2:adjoint", "A1:sc".
  static std::shared_ptr<const RootDatum> parse(const std::string& spec);

  char series() const { return series_; }
  int rank() const { return rank_; }
  Isogeny isogeny() const { return isogeny_; }
  std::string spec_string() const;

  const Mat& cartan() const { return cartan_; }
  const std::vector<Root>& roots() const { return roots_; }
  int num_positive() const { return num_positive_; }
  const Root& simple_root(int i) const { return roots_[simple_index_[i]]; }   // 1-based
  const Root& highest_root() const { return roots_[theta_index_]; }
  const Vec& two_rho() const { return two_rho_; }

  // Reflection matrices on X_* for the simple roots (1-based) and for theta.
  const Mat& simple_reflection(int i) const { return simple_refl_[i - 1]; }
  const Mat& theta_reflection() const { return theta_refl_; }

  long long pair(const Vec& ch, const Vec& cochar) const;

  // Root lookup by character coordinates; -1 if not a root.
  int root_index(const Vec& ch) const;
  bool is_positive_root_ch(const Vec& ch) const;

  // Membership of a lattice vector in the coroot lattice Q^vee.
  bool in_coroot_lattice(const Vec& v) const;

  bool is_dominant(const Vec& cochar) const;

  // Structural equality (determinism check; elements normally compare data).
  friend bool operator==(const RootDatum& a, const RootDatum& b);

 private:
  RootDatum() = default;
  void build();

  char series_ = 0;
  int rank_ = 0;
  Isogeny isogeny_ = Isogeny::SimplyConnected;
  Mat cartan_;
  std::vector<Root> roots_;  // positives first (height, then lex), then negatives
  std::vector<int> simple_index_;  // simple_index_[i] for i = 1..rank
  int num_positive_ = 0;
  int theta_index_ = -1;
  Vec two_rho_;
  std::vector<Mat> simple_refl_;
  Mat theta_refl_;
  std::map<Vec, int> root_lookup_;
  // adjugate/determinant of the matrix whose columns are the simple coroots,
  // used for exact Q^vee membership tests
  Mat coroot_adjugate_;
  long long coroot_det_ = 1;
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

}  // namespace affpav::rootdata

#endif
