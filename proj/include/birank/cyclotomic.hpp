#ifndef BIRANK_CYCLOTOMIC_HPP
#define BIRANK_CYCLOTOMIC_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "birank/bigint.hpp"

namespace birank {

/* An element of Z[zeta_t], t an odd prime >= 5, stored in the power basis
 * {1, zeta, ..., zeta^{t-2}}.  zeta^{t-1} is eliminated eagerly through
 * 1 + zeta + ... + zeta^{t-1} = 0, so the coefficient vector is a canonical
 * form: two values are equal iff their vectors are equal.  Values are
 * immutable in spirit; all operations return fresh values. */
class CycInt {
 public:
  // Zero of Z[zeta_t].
  explicit CycInt(int order);

  static CycInt integer(int order, BigInt n);
  // coeff * zeta^e, e any integer (reduced mod t).
  static CycInt zeta_power(int order, long e, BigInt coeff = 1);
  // Sum of coeff_i * zeta^{e_i}.
  static CycInt make(int order, const std::vector<std::pair<long, BigInt>>& terms);

  int order() const { return order_; }
  // Coefficient of zeta^i, 0 <= i <= t-2.
  const BigInt& coeff(int i) const { return c_[static_cast<size_t>(i)]; }

  bool is_zero() const;
  // True iff the value lies in the integer subring (coeffs 1..t-2 vanish).
  bool is_integer() const;
  // The integer value; caller must check is_integer().
  const BigInt& integer_value() const;

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  CycInt operator-() const;
  CycInt& operator*=(const CycInt& rhs) { return *this = *this * rhs; }

  bool operator==(const CycInt& rhs) const;
  bool operator!=(const CycInt& rhs) const { return !(*this == rhs); }

  CycInt scaled(const BigInt& k) const;

  // Galois map zeta -> zeta^k, k coprime to t.
  CycInt galois(long k) const;

  // Inverse when the value is a unit of the form +-zeta^k; nullopt otherwise.
  std::optional<CycInt> unit_inverse() const;

  // Rendering in the power basis: "a0 + a1*z + a2*z^2 + ...".
  std::string to_string() const;

 private:
  void check_same_order(const CycInt& rhs) const;

  int order_;
  std::vector<BigInt> c_;  // size order_ - 1
};

// Throws std::invalid_argument unless t is a prime >= 5.
void require_prime_order(int t);

}  // namespace birank

#endif
