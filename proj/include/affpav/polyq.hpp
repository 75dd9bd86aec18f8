#ifndef AFFPAV_POLYQ_HPP
#define AFFPAV_POLYQ_HPP

#include <string>
#include <vector>

#include "affpav/bigint.hpp"

namespace affpav {

/*
  Integer-coefficient polynomial in the point-count variable q.  Coefficients
  are stored ascending with no trailing zeros; the zero polynomial is the
  empty list.  All arithmetic is exact.
*/
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(long long constant);
  explicit PolyQ(std::vector<BigInt> coeffs);

  static PolyQ monomial(int degree, BigInt coeff = BigInt(1));
  static PolyQ q_pow_times_qm1_pow(int a, int b);  // q^a (q-1)^b

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int k) const;

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }

  PolyQ times_big(const BigInt& k) const;
  PolyQ shifted(int k) const;  // times q^k

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

  BigInt eval(const BigInt& x) const;
  BigInt eval_at_one() const;

  // Coefficients of the same polynomial written in powers of z = q-1.
  std::vector<BigInt> coeffs_in_q_minus_one() const;
  bool nonneg_in_q_minus_one() const;
  bool nonneg_coeffs() const;

  // Exact division by a *monic* divisor; throws InternalCheckError on a
  // nonmonic divisor or nonzero remainder.
  PolyQ divided_exact_monic(const PolyQ& divisor) const;

  std::string to_string() const;  // human form, e.g. "q^5 - q"

 private:
  void trim();
  std::vector<BigInt> c_;
};

}  // namespace affpav

#endif
