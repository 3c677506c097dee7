#include "birank/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace birank {

void require_prime_order(int t) {
  if (t < 5) throw std::invalid_argument("cyclotomic order must be >= 5");
  for (int d = 2; d * d <= t; ++d)
    if (t % d == 0) throw std::invalid_argument("cyclotomic order must be prime");
}

CycInt::CycInt(int order) : order_(order), c_(static_cast<size_t>(order - 1)) {
  require_prime_order(order);
}

CycInt CycInt::integer(int order, BigInt n) {
  CycInt x(order);
  x.c_[0] = std::move(n);
  return x;
}

CycInt CycInt::zeta_power(int order, long e, BigInt coeff) {
  CycInt x(order);
  long r = e % order;
  if (r < 0) r += order;
  if (r < order - 1) {
    x.c_[static_cast<size_t>(r)] = std::move(coeff);
  } else {
    // zeta^{t-1} = -(1 + zeta + ... + zeta^{t-2})
    for (auto& ci : x.c_) ci = -coeff;
  }
  return x;
}

CycInt CycInt::make(int order, const std::vector<std::pair<long, BigInt>>& terms) {
  CycInt x(order);
  for (const auto& [e, coeff] : terms) x += zeta_power(order, e, coeff);
  return x;
}

bool CycInt::is_zero() const {
  for (const auto& ci : c_)
    if (!birank::is_zero(ci)) return false;
  return true;
}

bool CycInt::is_integer() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!birank::is_zero(c_[i])) return false;
  return true;
}

const BigInt& CycInt::integer_value() const {
  if (!is_integer()) throw std::logic_error("CycInt is not in the integer subring");
  return c_[0];
}

void CycInt::check_same_order(const CycInt& rhs) const {
  if (order_ != rhs.order_)
    throw std::invalid_argument("cyclotomic order mismatch");
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
  check_same_order(rhs);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  check_same_order(rhs);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt x(order_);
  for (size_t i = 0; i < c_.size(); ++i) x.c_[i] = -c_[i];
  return x;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.check_same_order(b);
  const int t = a.order_;
  const size_t n = static_cast<size_t>(t - 1);
  // Schoolbook convolution with exponents folded mod t, then zeta^{t-1}
  // eliminated against the full vanishing sum.
  std::vector<BigInt> raw(static_cast<size_t>(t));
  for (size_t i = 0; i < n; ++i) {
    if (birank::is_zero(a.c_[i])) continue;
    for (size_t j = 0; j < n; ++j) {
      if (birank::is_zero(b.c_[j])) continue;
      size_t k = i + j;
      if (k >= static_cast<size_t>(t)) k -= static_cast<size_t>(t);
      mpz_addmul(raw[k].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  CycInt x(t);
  const BigInt& top = raw[n];
  for (size_t i = 0; i < n; ++i) x.c_[i] = raw[i] - top;
  return x;
}

bool CycInt::operator==(const CycInt& rhs) const {
  return order_ == rhs.order_ && c_ == rhs.c_;
}

CycInt CycInt::scaled(const BigInt& k) const {
  CycInt x(order_);
  for (size_t i = 0; i < c_.size(); ++i) x.c_[i] = c_[i] * k;
  return x;
}

CycInt CycInt::galois(long k) const {
  CycInt x(order_);
  for (size_t i = 0; i < c_.size(); ++i)
    if (!birank::is_zero(c_[i]))
      x += zeta_power(order_, static_cast<long>(i) * k, c_[i]);
  return x;
}

std::optional<CycInt> CycInt::unit_inverse() const {
  for (int sign : {1, -1}) {
    for (long k = 0; k < order_; ++k) {
      if (*this == zeta_power(order_, k, sign))
        return zeta_power(order_, -k, sign);
    }
  }
  return std::nullopt;
}

std::string CycInt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (birank::is_zero(c_[i])) continue;
    BigInt v = c_[i];
    if (first) {
      if (mpz_sgn(v.get_mpz_t()) < 0) {
        out << '-';
        v = -v;
      }
      first = false;
    } else {
      out << (mpz_sgn(v.get_mpz_t()) < 0 ? " - " : " + ");
      if (mpz_sgn(v.get_mpz_t()) < 0) v = -v;
    }
    if (i == 0) {
      out << v.get_str();
    } else {
      if (v != 1) out << v.get_str() << '*';
      out << 'z';
      if (i > 1) out << '^' << i;
    }
  }
  if (first) return "0";
  return out.str();
}

}  // namespace birank
