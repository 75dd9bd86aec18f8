#ifndef AFFPAV_PAVING_HPP
#define AFFPAV_PAVING_HPP

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "affpav/polyq.hpp"
#include "affpav/weyl.hpp"

namespace affpav::paving {

using rootdata::RootDatum;
using weyl::ParabolicData;
using weyl::WeylElement;

/*
  Point counts of convolution-morphism fibers as explicit cellular data: a
  multiset of monomials q^a (q-1)^b, one per cell, i.e. the m_{a,b} table.
*/
class PavingPolynomial {
 public:
  PavingPolynomial() = default;
  static PavingPolynomial unit();  // the single monomial q^0 (q-1)^0

  bool is_zero() const { return m_.empty(); }
  const std::map<std::pair<int, int>, BigInt>& mab() const { return m_; }

  void add_monomial(int a, int b, const BigInt& mult = BigInt(1));
  PavingPolynomial& operator+=(const PavingPolynomial& o);
  friend PavingPolynomial operator+(PavingPolynomial x, const PavingPolynomial& y) {
    return x += y;
  }
  // multiply every monomial by q^a (q-1)^b
  PavingPolynomial shifted(int a, int b) const;
  // multiset convolution: (a1+a2, b1+b2) with multiplicities multiplied
  friend PavingPolynomial operator*(const PavingPolynomial& x, const PavingPolynomial& y);

  PolyQ value() const;
  BigInt total_cells() const;  // sum of all multiplicities
  BigInt value_at_one() const; // q = 1: only b = 0 monomials survive
  bool pure_affine() const;    // no (q-1) factors (all b = 0)

  friend bool operator==(const PavingPolynomial& x, const PavingPolynomial& y) {
    return x.m_ == y.m_;
  }

 private:
  std::map<std::pair<int, int>, BigInt> m_;  // (a,b) -> multiplicity, no zeros
};

enum class CellFactor : char { A1 = 'A', Gm = 'G', A0 = '0' };

struct PavingCell {
  std::vector<CellFactor> factors;     // one per step
  std::vector<WeylElement> trace;      // v_0 = e, v_1, ..., v_r
  int a() const;                       // number of A1 factors
  int b() const;                       // number of Gm factors
};

enum class Mode { Uncompactified, Compactified };

struct FiberResult {
  PavingPolynomial value;
  std::optional<std::vector<PavingCell>> cells;
};

/*
  Fiber over v of the convolution of the simple-reflection tuple `letters`
  (S_aff indices; Omega parts already stripped).  Uncompactified branch
  follows  G_r(v) = q G_{r-1}(v s)                 if v < v s,
           G_r(v) = (q-1) G_{r-1}(v) + G_{r-1}(v s) if v s < v,
  the compactified branch
           F_r(v) = F_{r-1}(v) + q F_{r-1}(v s)    if v < v s,
           F_r(v) = q F_{r-1}(v) + F_{r-1}(v s)    if v s < v,
  with F_0(v) = G_0(v) = [v = e].  Memoized on (prefix length, v) per call.
  A v with nontrivial Omega part yields zero.
*/
FiberResult iwahori_fiber(const RootDatum& rd, const std::vector<int>& letters,
                          const WeylElement& v, Mode mode, bool want_cells = false);

// Full fiber function of the same morphism: endpoint -> value (+ cells),
// computed by forward propagation of the same case table.
struct Distribution {
  std::unordered_map<WeylElement, PavingPolynomial, weyl::WeylHash> values;
  std::unordered_map<WeylElement, std::vector<PavingCell>, weyl::WeylHash> cells;
};
Distribution iwahori_distribution(const RootDatum& rd, const std::vector<int>& letters,
                                  Mode mode, bool want_cells = false);

// Transfer form: start -> value of the fiber over `target` when the
// propagation is seeded at `start` instead of the identity.
std::unordered_map<WeylElement, PavingPolynomial, weyl::WeylHash> iwahori_transfer(
    const RootDatum& rd, const std::vector<int>& letters, const WeylElement& target,
    Mode mode);

// Omega normalization of an element tuple: the common length-zero part and
// the concatenated conjugated reduced words of the W_aff parts.
struct NormalizedTuple {
  WeylElement omega;          // product of the Omega parts
  std::vector<int> letters;   // conjugated letters, one block per element
};
NormalizedTuple normalize_tuple(const RootDatum& rd, const std::vector<WeylElement>& tuple);

/*
  Route A at parahoric level: fiber over x e_P of the r-fold convolution of
  the P-double cosets of w_i (closures where flagged), by the reduction
    Gp_r(x) = sum_y Gp_{r-1}(y) * N(y, x, w_r),
    N(y, x, w) = sum_{eta} sum_{u in W_P} [Iwahori fiber of (y, (eta u)^{-1}) over x],
  where eta runs over right-minimal representatives of W_P w^{-1} W_P and y
  over the right-minimal support of the previous step.  x is normalized to its
  right-minimal coset representative; an Omega mismatch gives the zero fiber.
*/
FiberResult parahoric_fiber(const std::vector<WeylElement>& tuple, const ParabolicData& pd,
                            const WeylElement& x, const std::vector<bool>& closed_flags = {},
                            bool want_cells = false);

// m_{a,b} table accessor (the multiset counts of a PavingPolynomial).
std::map<std::pair<int, int>, BigInt> mab_table(const PavingPolynomial& p);

// Batch evaluation of independent Iwahori fibers (OpenMP when available; the
// serial variant is the reference the tests compare against).
struct FiberJob {
  std::vector<int> letters;
  WeylElement v;
  Mode mode = Mode::Uncompactified;
};
std::vector<PolyQ> batch_fiber_values(const RootDatum& rd, const std::vector<FiberJob>& jobs);
std::vector<PolyQ> batch_fiber_values_serial(const RootDatum& rd,
                                             const std::vector<FiberJob>& jobs);

}  // namespace affpav::paving

#endif
