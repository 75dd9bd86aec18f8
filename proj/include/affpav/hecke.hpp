#ifndef AFFPAV_HECKE_HPP
#define AFFPAV_HECKE_HPP

#include <unordered_map>
#include <vector>

#include "affpav/polyq.hpp"
#include "affpav/weyl.hpp"

namespace affpav::hecke {

using rootdata::RootDatum;
using weyl::ParabolicData;
using weyl::WeylElement;

/*
  Iwahori-Hecke algebra of (W, S_aff) over Z[q] in the T_w basis, with the
  relations  T_x T_s = T_{xs}            if xs > x,
             T_x T_s = q T_{xs} + (q-1) T_x  if xs < x,
             T_x T_tau = T_{x tau}       for tau of length zero.
  Elements are finite sparse sums; zero-valued entries are pruned eagerly.
*/
class HeckeElement {
 public:
  explicit HeckeElement(const RootDatum& rd) : rd_(&rd) {}
  static HeckeElement unit(const RootDatum& rd);
  static HeckeElement basis(const WeylElement& w);

  const RootDatum& datum() const { return *rd_; }
  bool is_zero() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }
  PolyQ coefficient(const WeylElement& w) const;
  const std::unordered_map<WeylElement, PolyQ, weyl::WeylHash>& terms() const {
    return terms_;
  }
  // support sorted by (length, structural order) for deterministic output
  std::vector<WeylElement> sorted_support() const;

  void add_term(const WeylElement& w, const PolyQ& c);
  HeckeElement& operator+=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  HeckeElement scaled(const PolyQ& c) const;
  // exact division of every coefficient by a monic polynomial
  HeckeElement divided_exact_monic(const PolyQ& divisor) const;

  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

 private:
  const RootDatum* rd_;
  std::unordered_map<WeylElement, PolyQ, weyl::WeylHash> terms_;
};

HeckeElement hecke_product(const HeckeElement& a, const HeckeElement& b);
// h * T_w for a single basis element (right multiplication along a word of w)
HeckeElement mul_basis_right(const HeckeElement& h, const WeylElement& w);

// Sum of T_x over the parahoric double coset of w (open), or over the closure
// union of double cosets v <= w (closed).
HeckeElement parahoric_element(const WeylElement& w, const ParabolicData& pd, bool closed);

// Poincare polynomial of W_P: sum of q^{ell(u)}; monic since the longest
// element is unique.
PolyQ poincare(const ParabolicData& pd);

struct StructureConstantTable {
  WeylElement w1, w2;
  std::vector<int> generators;
  // keyed by the maximal double-coset representatives, sorted
  std::vector<std::pair<WeylElement, PolyQ>> constants;

  const PolyQ* find(const WeylElement& max_rep) const;
};

// Route B: c^v tables via Iwahori products of coset sums and exact division
// by the Poincare polynomial.  Coefficients are checked to be constant on
// every W_P double coset.
StructureConstantTable structure_constants(const WeylElement& w1, const WeylElement& w2,
                                           const ParabolicData& pd);

// Coefficient at x of the normalized r-fold convolution
// pi_P^{-(r-1)} * prod_i f_{w_i}; per-factor closed flags select closures.
PolyQ convolution_value(const std::vector<WeylElement>& tuple, const ParabolicData& pd,
                        const WeylElement& x, const std::vector<bool>& closed_flags = {});

}  // namespace affpav::hecke

#endif
