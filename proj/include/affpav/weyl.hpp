#ifndef AFFPAV_WEYL_HPP
#define AFFPAV_WEYL_HPP

#include <optional>
#include <vector>

#include "affpav/rootdata.hpp"

namespace affpav::weyl {

using rootdata::Mat;
using rootdata::RootDatum;
using rootdata::RootDatumPtr;
using rootdata::Vec;

/*
  Element t_lambda * w of the extended affine Weyl group W = X_*(T) x| W_0.
  The finite part is stored as its matrix on X_* together with the inverse
  matrix (every generator is an involution, so inverses come for free along
  any product).  t_lambda acts on V by v -> v + lambda.
*/
struct WeylElement {
  const RootDatum* rd = nullptr;
  Vec lambda;
  Mat w, winv;

  static WeylElement identity(const RootDatum& rd);

  bool is_identity() const;
  Vec act(const Vec& v) const;  // affine action w(v) + lambda

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.lambda == b.lambda && a.w == b.w;
  }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return a.w < b.w;
  }
};

struct WeylHash {
  size_t operator()(const WeylElement& x) const;
};

// --- group arithmetic -------------------------------------------------------

WeylElement multiply(const WeylElement& x, const WeylElement& y);
WeylElement inverse(const WeylElement& x);
WeylElement translation(const RootDatum& rd, const Vec& lambda);
// i in 0..rank; 0 is the extra affine reflection s_0 = t_{theta^vee} s_theta
WeylElement simple_affine(const RootDatum& rd, int i);
int num_affine_generators(const RootDatum& rd);

// --- length, descents, words ------------------------------------------------

long long length(const WeylElement& x);
// ell(x s_i) < ell(x), rsp. ell(s_i x) < ell(x)
bool is_right_descent(const WeylElement& x, int i);
bool is_left_descent(const WeylElement& x, int i);

struct ReducedWord {
  WeylElement omega_part;    // length-zero prefix
  std::vector<int> letters;  // x = omega_part * s_{letters[0]} * ... (ell(x) letters)
};
// Deterministic: least right-descent index peeled at each step.
ReducedWord reduced_word(const WeylElement& x);
WeylElement from_word(const RootDatum& rd, const std::vector<int>& letters);

// --- Omega (length-zero subgroup) --------------------------------------------

bool is_length_zero(const WeylElement& x);
WeylElement omega_part(const WeylElement& x);
// All length-zero elements, identity first, then by lambda lexicographically.
std::vector<WeylElement> omega_elements(const RootDatum& rd);
// tau s_i tau^{-1} = s_j; requires tau length zero.
int omega_conjugate(const WeylElement& tau, int i);
// x and y lie in the same coset of W_aff (equivalently equal Omega parts).
bool same_omega_component(const WeylElement& x, const WeylElement& y);

// --- Bruhat order and the Demazure product ----------------------------------

bool bruhat_leq(const WeylElement& x, const WeylElement& y);
WeylElement demazure(const WeylElement& x, const WeylElement& y);
// All z <= y, by the interval recursion [e,y] = [e,ys] u [e,ys]s.
std::vector<WeylElement> bruhat_interval_below(const WeylElement& y);

// --- parabolic (parahoric) subgroups and cosets -------------------------------

struct ParabolicData {
  std::vector<int> generators;         // sorted S_aff indices
  std::vector<WeylElement> elements;   // all of W_P, sorted by (length, struct)
  WeylElement longest;
  std::vector<long long> length_multiset;  // sorted lengths of the elements
};
// Bounded closure enumeration; throws CapExceeded past element_cap.
ParabolicData parabolic_data(const RootDatum& rd, std::vector<int> generators,
                             size_t element_cap = 1000000);

bool is_right_minimal(const WeylElement& x, const std::vector<int>& gens);
WeylElement right_minimal_rep(WeylElement x, const std::vector<int>& gens);

struct CosetNormalForms {
  WeylElement min_rep;               // unique Bruhat-minimal element of W_P x W_P
  WeylElement max_rep;               // unique Bruhat-maximal element
  std::vector<WeylElement> eta_list; // right-minimal reps: W_P x W_P = |_| eta W_P
};
CosetNormalForms coset_normal_forms(const WeylElement& x, const ParabolicData& pd);

WeylElement double_coset_max(const WeylElement& x, const ParabolicData& pd);
WeylElement double_coset_min(const WeylElement& x, const ParabolicData& pd);
// Order on W_P \ W / W_P: compare the unique maximal representatives.
bool double_coset_leq(const WeylElement& x, const WeylElement& y, const ParabolicData& pd);
// Representatives (max reps) of all double cosets <= that of w.
std::vector<WeylElement> double_cosets_below(const WeylElement& w, const ParabolicData& pd);

}  // namespace affpav::weyl

#endif
