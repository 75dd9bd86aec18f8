#ifndef AFFPAV_ORACLE_HPP
#define AFFPAV_ORACLE_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "affpav/paving.hpp"
#include "affpav/weyl.hpp"

namespace affpav::oracle {

using rootdata::RootDatum;
using weyl::WeylElement;

// Permutation of {0..n-1} as the image list; w sends column j to row w[j].
using Permutation = std::vector<int>;

Permutation perm_identity(int n);
Permutation perm_mul(const Permutation& a, const Permutation& b);
Permutation perm_inverse(const Permutation& a);
int perm_length(const Permutation& a);  // inversions
std::vector<int> perm_to_word(const Permutation& a);  // 1-based simple indices
Permutation word_to_perm(int n, const std::vector<int>& word);
std::vector<Permutation> all_permutations(int n);
// the corresponding element of the finite Weyl group of the A_{n-1} datum
WeylElement perm_to_weyl(const RootDatum& rd, const Permutation& a);

/*
  Square matrix over a prime field F_p, p in {2,3,5}; the SL flag is a
  determinant-1 constraint checked on construction of group elements.
  Fixed storage for n <= 3 keeps the enumeration kernels allocation-free.
*/
struct FFMatrix {
  int n = 0;
  int p = 2;
  std::array<int, 9> e{};  // row-major, entries reduced mod p

  static FFMatrix identity(int n, int p);
  int& at(int i, int j) { return e[i * n + j]; }
  int at(int i, int j) const { return e[i * n + j]; }
  friend FFMatrix operator*(const FFMatrix& a, const FFMatrix& b);
  FFMatrix inverse() const;  // throws on a singular matrix
  int det() const;
  friend bool operator==(const FFMatrix& a, const FFMatrix& b) { return a.e == b.e; }
  friend bool operator<(const FFMatrix& a, const FFMatrix& b) { return a.e < b.e; }
};

// standard lift of the simple reflection s_i (1-based): 2x2 block (0,1;-1,0)
FFMatrix simple_lift(int n, int p, int i);
FFMatrix unipotent(int n, int p, int i, int x);  // u_{alpha_i}(x)
FFMatrix perm_lift(int n, int p, const Permutation& w);

// The unique w with m in B w B for B upper triangular, by the rank pattern of
// lower-left submatrices.  Throws on singular input.
Permutation bruhat_cell(const FFMatrix& m);

enum class BSMode { Uncompactified, Compactified };

/*
  Literal Bott-Samelson fiber count in the finite flag variety of SL_n(F_p):
  enumerate step representatives g_i = g_{i-1} u_{alpha_i}(x) s_i (x in F_p;
  the compactified mode adds the coset representative e) and count the tuples
  whose endpoint lies in B v B.  Word letters are 1-based finite indices.
*/
long long bott_samelson_count(int n, const std::vector<int>& word, const Permutation& v,
                              int p, BSMode mode);
long long bott_samelson_count_serial(int n, const std::vector<int>& word,
                                     const Permutation& v, int p, BSMode mode);

// Exhaustive subword test for x <= y over one reduced word of y (cap 16).
bool subword_bruhat(const WeylElement& x, const WeylElement& y);

/*
  Literal double-coset convolution in SL_n(F_p): for each v in the finite Weyl
  group, #{g P : g in P w1 P, g^{-1} v-dot in P w2 P}, computed by exhaustive
  enumeration of the group and division by |P|.  S_P is a set of 1-based
  finite simple indices.
*/
std::map<Permutation, long long> finite_structure_constants(int n, int p,
                                                            const std::vector<int>& gens,
                                                            const Permutation& w1,
                                                            const Permutation& w2);
std::map<Permutation, long long> finite_structure_constants_serial(
    int n, int p, const std::vector<int>& gens, const Permutation& w1,
    const Permutation& w2);

// All elements of length <= radius (BFS over right multiplication).
std::vector<WeylElement> length_ball(const RootDatum& rd, int radius);

struct SuiteReport {
  std::string name;
  bool passed = true;
  long long checks = 0;
  std::string detail;  // first counterexample when failed
};

// Registered verification suites (CLI `oracle verify`).
SuiteReport suite_bott_samelson(bool full);
SuiteReport suite_finite_constants(bool full);
SuiteReport suite_subword_bruhat(bool full);
std::vector<SuiteReport> run_all_suites(bool full);

}  // namespace affpav::oracle

#endif
