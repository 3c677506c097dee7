#ifndef BIRANK_QSERIES_HPP
#define BIRANK_QSERIES_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "birank/bigint.hpp"
#include "birank/cyclotomic.hpp"

namespace birank {

// ---- coefficient-ring adaptors ------------------------------------------

inline BigInt ring_zero_like(const BigInt&) { return BigInt(0); }
inline CycInt ring_zero_like(const CycInt& x) { return CycInt(x.order()); }

inline bool ring_is_zero(const BigInt& x) { return is_zero(x); }
inline bool ring_is_zero(const CycInt& x) { return x.is_zero(); }

inline std::optional<BigInt> ring_unit_inverse(const BigInt& x) {
  if (x == 1 || x == -1) return x;
  return std::nullopt;
}
inline std::optional<CycInt> ring_unit_inverse(const CycInt& x) {
  return x.unit_inverse();
}

inline std::string ring_to_string(const BigInt& x) { return to_string(x); }
inline std::string ring_to_string(const CycInt& x) { return x.to_string(); }

inline BigInt ring_one_like(const BigInt&) { return BigInt(1); }
inline CycInt ring_one_like(const CycInt& x) { return CycInt::integer(x.order(), 1); }

// c^n for a unit c, n any integer.
template <class R>
R ring_unit_pow(const R& c, long n) {
  R base = c;
  if (n < 0) {
    auto inv = ring_unit_inverse(c);
    if (!inv) throw std::domain_error("negative power of a non-unit coefficient");
    base = *inv;
    n = -n;
  }
  R acc = ring_one_like(c);
  for (long i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

inline long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// ---- truncated Laurent series in q ---------------------------------------

/* A Laurent series known modulo q^precision, with dense coefficients from
 * the valuation upward.  Every arithmetic result's precision is the minimum
 * of the operands' precisions, adjusted for valuation shifts under
 * multiplication and inversion; comparisons only ever look at the overlap.
 * The valuation coefficient is nonzero unless the series is identically
 * zero up to its precision (then valuation == precision and coeffs empty). */
template <class R>
class Series {
 public:
  Series(R ring_zero, long valuation, long precision, std::vector<R> coeffs)
      : zero_(std::move(ring_zero)), val_(valuation), prec_(precision), c_(std::move(coeffs)) {
    normalize();
  }

  static Series zero(R ring_zero, long precision) {
    return Series(std::move(ring_zero), precision, precision, {});
  }
  static Series monomial(R coeff, long exponent, long precision) {
    R z = ring_zero_like(coeff);
    std::vector<R> c;
    c.push_back(std::move(coeff));
    return Series(std::move(z), exponent, precision, std::move(c));
  }
  static Series one(R ring_zero, long precision) {
    return monomial(ring_one_like(ring_zero), 0, precision);
  }

  long valuation() const { return val_; }
  long precision() const { return prec_; }
  bool is_zero_to_precision() const { return c_.empty(); }
  const R& ring_zero() const { return zero_; }
  size_t term_count() const { return c_.size(); }

  R coeff(long e) const {
    if (e >= prec_) throw std::out_of_range("coefficient beyond series precision");
    if (e < val_ || e >= val_ + static_cast<long>(c_.size())) return zero_;
    return c_[static_cast<size_t>(e - val_)];
  }

  Series truncated(long p) const {
    if (p >= prec_) return *this;
    return Series(zero_, val_, p, std::vector<R>(c_.begin(),
        c_.begin() + std::min<long>(static_cast<long>(c_.size()), std::max<long>(0, p - val_))));
  }

  Series shifted(long k) const {
    return Series(zero_, val_ + k, prec_ + k, c_);
  }

  Series operator-() const {
    std::vector<R> c = c_;
    for (auto& x : c) x = -x;
    return Series(zero_, val_, prec_, std::move(c));
  }

  Series scaled(const R& k) const {
    std::vector<R> c = c_;
    for (auto& x : c) x = x * k;
    return Series(zero_, val_, prec_, std::move(c));
  }

  friend Series operator+(const Series& a, const Series& b) {
    long prec = std::min(a.prec_, b.prec_);
    long val = std::min({a.val_, b.val_, prec});
    std::vector<R> c(static_cast<size_t>(std::max<long>(0, prec - val)), a.zero_);
    for (const Series* s : {&a, &b}) {
      for (size_t i = 0; i < s->c_.size(); ++i) {
        long e = s->val_ + static_cast<long>(i);
        if (e < prec) c[static_cast<size_t>(e - val)] += s->c_[i];
      }
    }
    return Series(a.zero_, val, prec, std::move(c));
  }

  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

  friend Series operator*(const Series& a, const Series& b) {
    long prec = std::min(a.prec_ + b.val_, b.prec_ + a.val_);
    if (a.c_.empty() || b.c_.empty()) return Series::zero(a.zero_, prec);
    long val = a.val_ + b.val_;
    std::vector<R> c(static_cast<size_t>(std::max<long>(0, prec - val)), a.zero_);
    const long n = static_cast<long>(c.size());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (ring_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size() && static_cast<long>(i + j) < n; ++j) {
        if (ring_is_zero(b.c_[j])) continue;
        c[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Series(a.zero_, val, prec, std::move(c));
  }

  /* Two-sided inverse to the available precision.  Requires the valuation
   * coefficient to be a unit (+-1 or +- a root of unity). */
  Series inverse() const {
    if (c_.empty()) throw std::domain_error("cannot invert a zero series");
    auto u = ring_unit_inverse(c_[0]);
    if (!u) throw std::domain_error("leading coefficient is not a unit");
    long m = prec_ - val_;  // known coefficients of the unit part
    std::vector<R> b(static_cast<size_t>(m), zero_);
    b[0] = *u;
    for (long e = 1; e < m; ++e) {
      R s = zero_;
      long top = std::min<long>(e, static_cast<long>(c_.size()) - 1);
      for (long i = 1; i <= top; ++i) s += c_[static_cast<size_t>(i)] * b[static_cast<size_t>(e - i)];
      b[static_cast<size_t>(e)] = -(*u * s);
    }
    return Series(zero_, -val_, prec_ - 2 * val_, std::move(b));
  }

  // q -> q^k; precision becomes k * precision.
  Series substituted_qpower(long k) const {
    if (k < 1) throw std::invalid_argument("substitute_qpower needs k >= 1");
    std::vector<R> c(c_.empty() ? 0 : static_cast<size_t>((c_.size() - 1) * k + 1), zero_);
    for (size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
    return Series(zero_, val_ * k, prec_ * k, std::move(c));
  }

  /* U_{r,t}: picks coefficients on the progression e = t*n + r and reindexes
   * to n.  Output precision floor((prec - r)/t). */
  Series dissected(long r, long t) const {
    if (t < 1 || r < 0 || r >= t) throw std::invalid_argument("dissect needs 0 <= r < t");
    long prec = floor_div(prec_ - r, t);
    std::vector<std::pair<long, R>> terms;
    for (size_t i = 0; i < c_.size(); ++i) {
      long e = val_ + static_cast<long>(i);
      if ((e - r) % t != 0) continue;
      long k = floor_div(e - r, t);
      if (k < prec) terms.emplace_back(k, c_[i]);
    }
    if (terms.empty()) return Series::zero(zero_, prec);
    long val = terms.front().first;
    std::vector<R> c(static_cast<size_t>(std::max<long>(0, prec - val)), zero_);
    for (auto& [k, x] : terms) c[static_cast<size_t>(k - val)] = std::move(x);
    return Series(zero_, val, prec, std::move(c));
  }

  std::string to_string(size_t max_terms = 24) const {
    std::ostringstream out;
    size_t shown = 0;
    for (size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
      if (ring_is_zero(c_[i])) continue;
      if (shown) out << " + ";
      long e = val_ + static_cast<long>(i);
      bool paren = !std::is_same_v<R, BigInt>;
      if (paren) out << '(' << ring_to_string(c_[i]) << ')';
      else out << ring_to_string(c_[i]);
      if (e != 0) out << "*q^" << e;
      ++shown;
    }
    if (!shown) out << "0";
    out << " + O(q^" << prec_ << ")";
    return out.str();
  }

 private:
  void normalize() {
    long keep = std::max<long>(0, prec_ - val_);
    if (static_cast<long>(c_.size()) > keep) c_.resize(static_cast<size_t>(keep));
    size_t lead = 0;
    while (lead < c_.size() && ring_is_zero(c_[lead])) ++lead;
    if (lead) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      val_ += static_cast<long>(lead);
    }
    while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
    if (c_.empty()) val_ = prec_;
  }

  R zero_;
  long val_;
  long prec_;
  std::vector<R> c_;
};

using ZSeries = Series<BigInt>;
using CSeries = Series<CycInt>;

// First coefficient disagreement on the overlap of precisions, if any.
template <class R>
std::optional<std::tuple<long, R, R>> first_mismatch(const Series<R>& a, const Series<R>& b) {
  long prec = std::min(a.precision(), b.precision());
  long lo = std::min(a.valuation(), b.valuation());
  for (long e = lo; e < prec; ++e) {
    R x = a.coeff(e), y = b.coeff(e);
    if (!(ring_is_zero(x - y))) return std::make_tuple(e, x, y);
  }
  return std::nullopt;
}

template <class R>
bool agree_on_overlap(const Series<R>& a, const Series<R>& b) {
  return !first_mismatch(a, b).has_value();
}

// ---- constructors ---------------------------------------------------------

/* E(q) = prod (1-q^n) computed by Euler's pentagonal sum
 * sum_{n in Z} (-1)^n q^{n(3n+1)/2}. */
template <class R>
Series<R> euler_pentagonal(const R& ring_zero, long prec) {
  if (prec < 1) throw std::invalid_argument("precision must be >= 1");
  Series<R> acc = Series<R>::zero(ring_zero, prec);
  for (long n = 0;; ++n) {
    bool any = false;
    for (long m : {n, -n}) {
      if (n == 0 && m != 0) continue;
      long e = m * (3 * m + 1) / 2;
      if (e < prec) {
        any = true;
        R c = ring_one_like(ring_zero);
        if (((m % 2) + 2) % 2 == 1) c = -c;
        acc = acc + Series<R>::monomial(std::move(c), e, prec);
      }
    }
    if (!any && n > 0) break;
  }
  return acc;
}

namespace detail {
// s * (1 - c q^p), linear-time in the length of s.
template <class R>
Series<R> mul_one_minus(const Series<R>& s, const R& c, long p) {
  return s - s.scaled(c).shifted(p);
}
}  // namespace detail

// (c q^a; q^m)_infty, a >= 1 so the product is a unit series.
template <class R>
Series<R> pochhammer_inf(const R& c, long a, long m, long prec) {
  if (a < 1) throw std::invalid_argument("pochhammer_inf needs exponent a >= 1");
  if (m < 1) throw std::invalid_argument("pochhammer_inf needs modulus m >= 1");
  Series<R> acc = Series<R>::one(ring_zero_like(c), prec);
  for (long k = 0; a + k * m < prec; ++k) acc = detail::mul_one_minus(acc, c, a + k * m);
  return acc;
}

// (c q^a; q^m)_n, finite.
template <class R>
Series<R> pochhammer_finite(const R& c, long a, long m, long n, long prec) {
  Series<R> acc = Series<R>::one(ring_zero_like(c), prec);
  for (long k = 0; k < n && a + k * m < prec; ++k) acc = detail::mul_one_minus(acc, c, a + k * m);
  return acc;
}

// J_{a,m}(q) = (q^a;q^m)_inf (q^{m-a};q^m)_inf (q^m;q^m)_inf.
template <class R>
Series<R> jacobi_triple(const R& ring_zero, long a, long m, long prec) {
  if (a < 1 || a >= m) throw std::invalid_argument("jacobi_triple needs 1 <= a < m");
  R u = ring_zero;
  if constexpr (std::is_same_v<R, BigInt>) u = 1;
  else u = CycInt::integer(ring_zero.order(), 1);
  return pochhammer_inf(u, a, m, prec) * pochhammer_inf(u, m - a, m, prec) *
         pochhammer_inf(u, m, m, prec);
}

/* Theta(c q^e, q^m) = sum_{n in Z} c^n q^{en + m n^2}, a Laurent series when
 * e < 0.  The lattice window is solved exactly from the quadratic exponent;
 * c must be a unit if any negative n contributes. */
template <class R>
Series<R> theta_sum(const R& c, long e, long m, long prec) {
  if (m < 1) throw std::invalid_argument("theta_sum needs m >= 1");
  const R zero = ring_zero_like(c);
  std::vector<std::pair<long, R>> terms;
  for (long n = 0;; ++n) {
    bool any = false;
    for (long s : {n, -n}) {
      if (n == 0 && s != 0) continue;
      long ex = e * s + m * s * s;
      if (ex < prec) {
        any = true;
        terms.emplace_back(ex, ring_unit_pow(c, s));
      }
    }
    if (!any && m * n >= std::abs(e) + m) break;  // past the vertex on both sides
  }
  if (terms.empty()) return Series<R>::zero(zero, prec);
  long val = terms[0].first;
  for (auto& [ex, co] : terms) val = std::min(val, ex);
  std::vector<R> cs(static_cast<size_t>(prec - val), zero);
  for (auto& [ex, co] : terms) cs[static_cast<size_t>(ex - val)] += co;
  return Series<R>(zero, val, prec, std::move(cs));
}

inline CSeries to_cyclotomic(const ZSeries& s, int order) {
  CycInt zero(order);
  std::vector<CycInt> c;
  c.reserve(s.term_count());
  for (long e = s.valuation(); e < s.valuation() + static_cast<long>(s.term_count()); ++e)
    c.push_back(CycInt::integer(order, s.coeff(e)));
  return CSeries(zero, s.valuation(), s.precision(), std::move(c));
}

// Coefficient-wise Galois map zeta -> zeta^k.
inline CSeries galois(const CSeries& s, long k) {
  std::vector<CycInt> c;
  c.reserve(s.term_count());
  for (long e = s.valuation(); e < s.valuation() + static_cast<long>(s.term_count()); ++e)
    c.push_back(s.coeff(e).galois(k));
  return CSeries(s.ring_zero(), s.valuation(), s.precision(), std::move(c));
}

}  // namespace birank

#endif
