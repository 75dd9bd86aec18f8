#include "affpav/polyq.hpp"

#include <sstream>

#include "affpav/errors.hpp"

namespace affpav {

PolyQ::PolyQ(long long constant) {
  if (constant != 0) c_.push_back(BigInt(constant));
}

PolyQ::PolyQ(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void PolyQ::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyQ PolyQ::monomial(int degree, BigInt coeff) {
  PolyQ p;
  if (coeff.is_zero()) return p;
  p.c_.assign(degree + 1, BigInt(0));
  p.c_[degree] = std::move(coeff);
  return p;
}

PolyQ PolyQ::q_pow_times_qm1_pow(int a, int b) {
  PolyQ qm1(std::vector<BigInt>{BigInt(-1), BigInt(1)});
  PolyQ r = monomial(a);
  for (int i = 0; i < b; ++i) r *= qm1;
  return r;
}

BigInt PolyQ::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return BigInt(0);
  return c_[k];
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  PolyQ r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

PolyQ PolyQ::times_big(const BigInt& k) const {
  PolyQ r = *this;
  if (k.is_zero()) return PolyQ();
  for (auto& v : r.c_) v *= k;
  return r;
}

PolyQ PolyQ::shifted(int k) const {
  if (is_zero()) return PolyQ();
  PolyQ r;
  r.c_.assign(c_.size() + k, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

BigInt PolyQ::eval(const BigInt& x) const {
  BigInt r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

BigInt PolyQ::eval_at_one() const {
  BigInt r(0);
  for (const auto& v : c_) r += v;
  return r;
}

std::vector<BigInt> PolyQ::coeffs_in_q_minus_one() const {
  // Horner in q = z + 1: the running value is a polynomial in z.
  std::vector<BigInt> r;
  for (size_t i = c_.size(); i-- > 0;) {
    // r <- r * (z + 1) + c_[i]
    std::vector<BigInt> next(r.size() + 1, BigInt(0));
    for (size_t j = 0; j < r.size(); ++j) {
      next[j] += r[j];
      next[j + 1] += r[j];
    }
    if (next.empty()) next.push_back(BigInt(0));
    next[0] += c_[i];
    while (!next.empty() && next.back().is_zero()) next.pop_back();
    r = std::move(next);
  }
  return r;
}

bool PolyQ::nonneg_in_q_minus_one() const {
  for (const auto& v : coeffs_in_q_minus_one())
    if (v.sign() < 0) return false;
  return true;
}

bool PolyQ::nonneg_coeffs() const {
  for (const auto& v : c_)
    if (v.sign() < 0) return false;
  return true;
}

PolyQ PolyQ::divided_exact_monic(const PolyQ& divisor) const {
  if (divisor.is_zero() || !(divisor.c_.back() == BigInt(1)))
    throw InternalCheckError("PolyQ: divisor is not monic");
  if (is_zero()) return PolyQ();
  if (degree() < divisor.degree())
    throw InternalCheckError("PolyQ: inexact polynomial division (degree)");
  std::vector<BigInt> rem = c_;
  std::vector<BigInt> quo(degree() - divisor.degree() + 1, BigInt(0));
  for (size_t k = quo.size(); k-- > 0;) {
    BigInt lead = rem[k + divisor.degree()];
    quo[k] = lead;
    if (lead.is_zero()) continue;
    for (size_t j = 0; j < divisor.c_.size(); ++j)
      rem[k + j] -= lead * divisor.c_[j];
  }
  for (const auto& v : rem)
    if (!v.is_zero())
      throw InternalCheckError("PolyQ: inexact polynomial division (remainder)");
  return PolyQ(std::move(quo));
}

std::string PolyQ::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    BigInt v = c_[i];
    if (first) {
      if (v.sign() < 0) os << "-";
    } else {
      os << (v.sign() < 0 ? " - " : " + ");
    }
    BigInt a = v.sign() < 0 ? -v : v;
    if (i == 0 || !(a == BigInt(1))) os << a.to_string();
    if (i >= 1) {
      if (!(a == BigInt(1))) os << "*";
      os << "q";
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace affpav
