#ifndef BIRANK_ZLAURENT_HPP
#define BIRANK_ZLAURENT_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "birank/qseries.hpp"

namespace birank {

/* A finite Laurent polynomial in z whose coefficients are truncated Laurent
 * q-series over Z[zeta_t].  Each stored z-term carries its own valuation and
 * precision; `qprec` is the guarantee that every UNSTORED z-term is zero
 * modulo q^qprec.  Multiplication propagates both kinds of knowledge
 * pessimistically. */
class ZLaurent {
 public:
  ZLaurent(int order, long qprec) : order_(order), qprec_(qprec) {}

  static ZLaurent build(int order, long qprec, std::vector<std::pair<long, CSeries>> terms);

  int order() const { return order_; }
  long qprec() const { return qprec_; }
  const std::map<long, CSeries>& terms() const { return terms_; }

  // The z^k coefficient; an unstored term is zero to the object guarantee.
  CSeries coeff_z(long k) const;

  ZLaurent operator+(const ZLaurent& rhs) const;
  ZLaurent operator*(const ZLaurent& rhs) const;
  ZLaurent operator-() const;

  // Multiply by a z-free series.
  ZLaurent scaled(const CSeries& s) const;
  // Multiply by the monomial c * z^dz * q^dq.
  ZLaurent monomial_mul(const CycInt& c, long dz, long dq) const;

  /* z -> z q^k.  The z^m term shifts by k*m in q, so precisions become
   * m-dependent; the object guarantee is only kept over the stored window
   * (callers compare term-by-term afterwards). */
  ZLaurent shift_z_substitution(long k) const;

  ZLaurent truncated(long p) const;

  // Evaluate at z = c q^e (c a unit), collapsing to a univariate series.
  CSeries eval_z(const CycInt& c, long e) const;

 private:
  void insert(long k, CSeries s);

  int order_;
  long qprec_;
  std::map<long, CSeries> terms_;
};

/* First disagreement between two bivariate values, comparing every z-term on
 * the overlap of the two sides' precisions capped at `cap`; missing terms
 * count as zero to the owning object's guarantee. */
std::optional<std::tuple<long, long, CycInt, CycInt>> zl_first_mismatch(
    const ZLaurent& a, const ZLaurent& b, long cap);

// Theta(z c q^e, q^m) = sum_n z^n c^n q^{en + m n^2} truncated at qprec.
ZLaurent zl_theta(const CycInt& c, long e, long m, long qprec);

// 1/(1 - c z^dz q^e) = sum_{k>=0} c^k z^{k dz} q^{k e}; needs e >= 1.
ZLaurent zl_geometric(const CycInt& c, long dz, long e, long qprec);

}  // namespace birank

#endif
