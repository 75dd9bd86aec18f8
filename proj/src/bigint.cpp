#include "affpav/bigint.hpp"

#include <ostream>
#include <stdexcept>

namespace affpav {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                               : 0ULL - static_cast<unsigned long long>(v);
  while (m != 0) {
    mag_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
    m >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r = a;
  int64_t borrow = 0;
  for (size_t i = 0; i < r.size(); ++i) {
    int64_t s = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
    borrow = 0;
    if (s < 0) {
      s += (1LL << 32);
      borrow = 1;
    }
    r[i] = static_cast<uint32_t>(s);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) return *this = o;
  if (sign_ == o.sign_) {
    mag_ = add_mag(mag_, o.mag_);
    return *this;
  }
  int c = cmp_mag(mag_, o.mag_);
  if (c == 0) {
    sign_ = 0;
    mag_.clear();
  } else if (c > 0) {
    mag_ = sub_mag(mag_, o.mag_);
  } else {
    mag_ = sub_mag(o.mag_, mag_);
    sign_ = o.sign_;
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.sign_ == 0 || b.sign_ == 0) return r;
  r.sign_ = a.sign_ * b.sign_;
  r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
  for (size_t i = 0; i < a.mag_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.mag_.size(); ++j) {
      uint64_t cur = r.mag_[i + j] +
                     static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + carry;
      r.mag_[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + b.mag_.size();
    while (carry) {
      uint64_t cur = r.mag_[k] + carry;
      r.mag_[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  return r;
}

BigInt& BigInt::operator*=(const BigInt& o) { return *this = *this * o; }

BigInt BigInt::divided_exact(long long d) const {
  if (d == 0) throw std::domain_error("BigInt: division by zero");
  BigInt r;
  if (sign_ == 0) return r;
  unsigned long long ad = d > 0 ? static_cast<unsigned long long>(d)
                                : 0ULL - static_cast<unsigned long long>(d);
  // divide limb-wise only when the divisor fits a single limb; otherwise
  // split it (exactness is checked at the end either way)
  BigInt cur = *this;
  cur.sign_ = 1;
  std::vector<uint32_t> q(cur.mag_.size(), 0);
  if (ad >> 32) {
    // two-limb divisor: schoolbook with uint64 remainder is not enough,
    // fall back on repeated single-limb divisions via factorization of d
    // into <=32-bit chunks is not generally possible; use 128-bit arithmetic
    unsigned __int128 rem = 0;
    for (size_t i = cur.mag_.size(); i-- > 0;) {
      unsigned __int128 acc = (rem << 32) | cur.mag_[i];
      q[i] = static_cast<uint32_t>(acc / ad);
      rem = acc % ad;
    }
    if (rem != 0) throw std::domain_error("BigInt: inexact division");
  } else {
    uint64_t rem = 0;
    for (size_t i = cur.mag_.size(); i-- > 0;) {
      uint64_t acc = (rem << 32) | cur.mag_[i];
      q[i] = static_cast<uint32_t>(acc / ad);
      rem = acc % ad;
    }
    if (rem != 0) throw std::domain_error("BigInt: inexact division");
  }
  r.mag_ = std::move(q);
  r.sign_ = sign_ * (d > 0 ? 1 : -1);
  r.trim();
  return r;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

bool BigInt::fits_int64() const {
  if (mag_.size() < 2) return true;
  if (mag_.size() > 2) return false;
  uint64_t m = (static_cast<uint64_t>(mag_[1]) << 32) | mag_[0];
  return sign_ > 0 ? m <= 0x7fffffffffffffffULL : m <= 0x8000000000000000ULL;
}

long long BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
  uint64_t m = 0;
  if (!mag_.empty()) m = mag_[0];
  if (mag_.size() == 2) m |= static_cast<uint64_t>(mag_[1]) << 32;
  if (sign_ < 0) return -static_cast<long long>(m - 1) - 1;
  return static_cast<long long>(m);
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<uint32_t> m = mag_;
  std::string digits;
  while (!m.empty()) {
    uint64_t rem = 0;
    for (size_t i = m.size(); i-- > 0;) {
      uint64_t acc = (rem << 32) | m[i];
      m[i] = static_cast<uint32_t>(acc / 1000000000ULL);
      rem = acc % 1000000000ULL;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

BigInt BigInt::from_string(const std::string& s) {
  BigInt r;
  size_t i = 0;
  int sg = 1;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    if (s[i] == '-') sg = -1;
    ++i;
  }
  if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    r *= BigInt(10);
    r += BigInt(s[i] - '0');
  }
  if (!r.is_zero()) r.sign_ *= sg;
  return r;
}

size_t BigInt::hash() const {
  size_t h = static_cast<size_t>(sign_ + 2);
  for (uint32_t limb : mag_) h = h * 1000003u ^ limb;
  return h;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
  return os << v.to_string();
}

}  // namespace affpav
