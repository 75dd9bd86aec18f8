#ifndef AFFPAV_BIGINT_HPP
#define AFFPAV_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>
#include <iosfwd>

namespace affpav {

/*
  Arbitrary-precision signed integer, sign + little-endian base-2^32 magnitude.

  Only the operations the polynomial layer actually needs are provided:
  add/sub/mul, comparisons, multiplication and exact division by machine
  integers, decimal printing.  Polynomial division higher up is restricted to
  monic divisors, so no general long division is required here.
*/
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit on purpose, mirrors integer literals

  bool is_zero() const { return mag_.empty(); }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  // Exact division by a machine integer; aborts via exception if not exact.
  BigInt divided_exact(long long d) const;

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator<=(const BigInt& a, const BigInt& b) { return a < b || a == b; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return b <= a; }

  bool fits_int64() const;
  long long to_int64() const;  // requires fits_int64()

  std::string to_string() const;
  static BigInt from_string(const std::string& s);

  size_t hash() const;

 private:
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  void trim();

  int sign_ = 0;                 // -1, 0, +1
  std::vector<uint32_t> mag_;    // little-endian, no leading zero limb
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace affpav

#endif
