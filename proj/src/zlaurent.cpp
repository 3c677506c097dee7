#include "birank/zlaurent.hpp"

#include <stdexcept>

namespace birank {

void ZLaurent::insert(long k, CSeries s) {
  if (s.is_zero_to_precision() && s.precision() >= qprec_) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) terms_.emplace(k, std::move(s));
  else it->second = it->second + s;
}

ZLaurent ZLaurent::build(int order, long qprec, std::vector<std::pair<long, CSeries>> terms) {
  ZLaurent z(order, qprec);
  for (auto& [k, s] : terms) {
    if (s.precision() < qprec)
      throw std::invalid_argument("zl_build: term precision below the object precision");
    z.insert(k, std::move(s));
  }
  return z;
}

CSeries ZLaurent::coeff_z(long k) const {
  auto it = terms_.find(k);
  if (it != terms_.end()) return it->second;
  return CSeries::zero(CycInt(order_), qprec_);
}

ZLaurent ZLaurent::operator+(const ZLaurent& rhs) const {
  if (order_ != rhs.order_) throw std::invalid_argument("cyclotomic order mismatch");
  ZLaurent out(order_, std::min(qprec_, rhs.qprec_));
  for (const auto& [k, s] : terms_) out.insert(k, s.truncated(std::min(s.precision(), rhs.qprec_)));
  for (const auto& [k, s] : rhs.terms_) {
    auto it = terms_.find(k);
    long cap = it == terms_.end() ? qprec_ : s.precision();
    out.insert(k, s.truncated(std::min(s.precision(), cap)));
  }
  return out;
}

ZLaurent ZLaurent::operator-() const {
  ZLaurent out(order_, qprec_);
  for (const auto& [k, s] : terms_) out.insert(k, -s);
  return out;
}

ZLaurent ZLaurent::operator*(const ZLaurent& rhs) const {
  if (order_ != rhs.order_) throw std::invalid_argument("cyclotomic order mismatch");
  // Unstored terms of one factor against stored terms of the other bound the
  // reachable precision: zero mod q^qprec times a q-valuation v term is only
  // zero mod q^{qprec+v}.
  auto min_val = [](const ZLaurent& z) {
    long v = 0;
    for (const auto& [k, s] : z.terms_) v = std::min(v, s.valuation());
    return v;
  };
  long cross = std::min(qprec_ + min_val(rhs), rhs.qprec_ + min_val(*this));
  ZLaurent out(order_, cross);
  for (const auto& [ka, sa] : terms_) {
    for (const auto& [kb, sb] : rhs.terms_) {
      CSeries prod = sa * sb;
      out.insert(ka + kb, prod.truncated(std::min(prod.precision(), cross)));
    }
  }
  return out;
}

ZLaurent ZLaurent::scaled(const CSeries& s) const {
  ZLaurent out(order_, std::min(qprec_ + std::min(0L, s.valuation()),
                                s.precision() + std::min(0L, min_term_val())));
  for (const auto& [k, term] : terms_) out.insert(k, term * s);
  return out;
}

ZLaurent ZLaurent::monomial_mul(const CycInt& c, long dz, long dq) const {
  ZLaurent out(order_, qprec_ + dq);
  for (const auto& [k, s] : terms_) out.insert(k + dz, s.scaled(c).shifted(dq));
  return out;
}

ZLaurent ZLaurent::shift_z_substitution(long k) const {
  ZLaurent out(order_, qprec_);
  long guarantee = qprec_;
  for (const auto& [m, s] : terms_) {
    CSeries shifted = s.shifted(k * m);
    guarantee = std::min(guarantee, shifted.precision());
    out.insert(m, std::move(shifted));
  }
  out.qprec_ = guarantee;
  return out;
}

ZLaurent ZLaurent::truncated(long p) const {
  ZLaurent out(order_, std::min(qprec_, p));
  for (const auto& [k, s] : terms_) out.insert(k, s.truncated(p));
  return out;
}

CSeries ZLaurent::eval_z(const CycInt& c, long e) const {
  CSeries acc = CSeries::zero(CycInt(order_), qprec_);
  for (const auto& [k, s] : terms_)
    acc = acc + s.scaled(ring_unit_pow(c, k)).shifted(e * k);
  return acc;
}

std::optional<std::tuple<long, long, CycInt, CycInt>> zl_first_mismatch(
    const ZLaurent& a, const ZLaurent& b, long cap) {
  std::vector<long> keys;
  for (const auto& [k, s] : a.terms()) keys.push_back(k);
  for (const auto& [k, s] : b.terms())
    if (!a.terms().count(k)) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  for (long k : keys) {
    CSeries sa = a.coeff_z(k);
    CSeries sb = b.coeff_z(k);
    long prec = std::min({cap, sa.precision(), sb.precision()});
    long lo = std::min(sa.valuation(), sb.valuation());
    for (long e = lo; e < prec; ++e) {
      CycInt x = sa.coeff(e), y = sb.coeff(e);
      if (x != y) return std::make_tuple(k, e, x, y);
    }
  }
  return std::nullopt;
}

ZLaurent zl_theta(const CycInt& c, long e, long m, long qprec) {
  if (m < 1) throw std::invalid_argument("zl_theta needs m >= 1");
  ZLaurent out(c.order(), qprec);
  std::vector<std::pair<long, CSeries>> terms;
  for (long n = 0;; ++n) {
    bool any = false;
    for (long s : {n, -n}) {
      if (n == 0 && s != 0) continue;
      long ex = e * s + m * s * s;
      if (ex < qprec) {
        any = true;
        terms.emplace_back(s, CSeries::monomial(ring_unit_pow(c, s), ex, qprec));
      }
    }
    if (!any && m * n >= std::labs(e) + m) break;
  }
  return ZLaurent::build(c.order(), qprec, std::move(terms));
}

ZLaurent zl_geometric(const CycInt& c, long dz, long e, long qprec) {
  if (e < 1) throw std::invalid_argument("zl_geometric needs a positive q-exponent");
  std::vector<std::pair<long, CSeries>> terms;
  for (long k = 0; k * e < qprec; ++k)
    terms.emplace_back(k * dz, CSeries::monomial(ring_unit_pow(c, k), k * e, qprec));
  return ZLaurent::build(c.order(), qprec, std::move(terms));
}

}  // namespace birank
